#include "crystal_lr/zring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace clr {

// ---- RElem ----

RElem::Monomial monomial_product(const RElem::Monomial& a, const RElem::Monomial& b) {
    std::vector<int> v(a.parts);
    v.insert(v.end(), b.parts.begin(), b.parts.end());
    std::sort(v.rbegin(), v.rend());
    return GenPartition(v);
}

RElem RElem::z(int k) { return monomial(GenPartition{k}); }

RElem RElem::monomial(const Monomial& m, long long c) {
    RElem r;
    r.add_term(m, c);
    return r;
}

void RElem::add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

long long RElem::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
}

int RElem::homogeneous_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) {
        if (d < 0) d = m.length();
        else if (d != m.length()) throw std::invalid_argument("RElem is not homogeneous");
    }
    return d;
}

int RElem::max_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.length());
    return d;
}

RElem& RElem::operator+=(const RElem& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

RElem& RElem::operator-=(const RElem& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

RElem RElem::operator-() const { return scaled(-1); }

RElem RElem::operator*(const RElem& o) const {
    RElem r;
    for (auto& [a, x] : t_)
        for (auto& [b, y] : o.t_) r.add_term(monomial_product(a, b), x * y);
    return r;
}

RElem RElem::scaled(long long c) const {
    RElem r;
    for (auto& [m, x] : t_) r.add_term(m, x * c);
    return r;
}

namespace {

std::string z_monomial_string(const GenPartition& m) {
    std::string s;
    for (int k : m.parts) {
        if (!s.empty()) s += "*";
        s += "z" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    return s;
}

}  // namespace

std::string RElem::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
        std::string mono = z_monomial_string(m);
        long long a = c < 0 ? -c : c;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        if (mono.empty()) s += std::to_string(a);
        else s += (a != 1 ? std::to_string(a) + "*" : "") + mono;
    }
    return s;
}

// ---- determinants ----

namespace {

template <class Entry>
RElem permutation_det(int n, Entry entry) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    RElem r;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (w[a] > w[b]) ++inv;
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = entry(i, w[i]);
        std::sort(idx.rbegin(), idx.rend());
        r.add_term(GenPartition(idx), inv % 2 ? -1 : 1);
    } while (std::next_permutation(w.begin(), w.end()));
    return r;
}

}  // namespace

RElem z_schur(const GenPartition& lam) {
    const int n = lam.length();
    return permutation_det(n, [&](int i, int j) { return lam[i] - i + j; });
}

RElem z_skew_schur(const GenPartition& lam, const GenPartition& mu) {
    if (lam.length() != mu.length()) throw std::invalid_argument("z_skew_schur: length mismatch");
    const int n = lam.length();
    return permutation_det(n, [&](int i, int j) { return lam[i] - mu[j] - i + j; });
}

ZSchurExpansion expand_in_z_schur(const RElem& f, int n, int first_part_cap) {
    if (!f.is_zero() && f.homogeneous_degree() != n)
        throw std::invalid_argument("expand_in_z_schur: input is not homogeneous of the given degree");
    ZSchurExpansion out;
    RElem rest = f;
    for (;;) {
        const GenPartition* lead = nullptr;
        long long c = 0;
        for (auto& [m, x] : rest.terms()) {
            if (n > 0 && m.first() > first_part_cap) continue;
            lead = &m;
            c = x;
            break;  // map order is lexicographic, so the first admissible key is the smallest
        }
        if (!lead) break;
        GenPartition lam = *lead;
        out.coeffs[lam] += c;
        rest -= z_schur(lam).scaled(c);
        if (n == 0) break;
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    out.remainder = rest;
    return out;
}

// ---- derivations ----

RElem p_action(Sign sign, int n, const RElem& f) {
    if (n < 1) throw std::invalid_argument("p_action: n must be positive");
    const long long sgn = n % 2 ? 1 : -1;
    const int shift = sign == Sign::Plus ? -n : n;
    RElem r;
    for (auto& [m, c] : f.terms()) {
        // ∂/∂z_k over distinct k, with multiplicity
        for (int i = 0; i < m.length(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;
            int mult = 0;
            for (int j = i; j < m.length() && m[j] == m[i]; ++j) ++mult;
            std::vector<int> v(m.parts);
            v[i] += shift;
            std::sort(v.rbegin(), v.rend());
            r.add_term(GenPartition(v), c * mult * sgn);
        }
    }
    return r;
}

namespace {

RElem apply_generators(const std::vector<int>& plus, const std::vector<int>& minus, RElem f) {
    for (int n : plus) f = p_action(Sign::Plus, n, f);
    for (int n : minus) f = p_action(Sign::Minus, n, f);
    return f;
}

std::vector<int> merged_desc(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> v(a);
    v.insert(v.end(), b.begin(), b.end());
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

// ---- DElem ----

DElem::DElem(const RElem& f) {
    for (auto& [m, c] : f.terms()) add_term(Key{m, {}, {}}, Rational(c));
}

DElem DElem::s(Sign sign, int n) {
    Key k;
    (sign == Sign::Plus ? k.splus : k.sminus).push_back(n);
    return term(k, 1);
}

DElem DElem::term(const Key& k, Rational c) {
    DElem d;
    d.add_term(k, c);
    return d;
}

void DElem::add_term(const Key& k, Rational c) {
    if (c.numerator() == 0) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.numerator() == 0) t_.erase(it);
    }
}

DElem& DElem::operator+=(const DElem& o) {
    for (auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

DElem& DElem::operator-=(const DElem& o) {
    for (auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

DElem DElem::scaled(Rational c) const {
    DElem r;
    for (auto& [k, x] : t_) r.add_term(k, x * c);
    return r;
}

std::string DElem::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : t_) {
        std::string mono = z_monomial_string(k.z);
        for (int n : k.splus) mono += (mono.empty() ? "" : "*") + std::string("s+") + std::to_string(n);
        for (int n : k.sminus) mono += (mono.empty() ? "" : "*") + std::string("s-") + std::to_string(n);
        Rational a = c.numerator() < 0 ? -c : c;
        if (!s.empty()) s += c.numerator() < 0 ? " - " : " + ";
        else if (c.numerator() < 0) s += "-";
        std::string num = std::to_string(a.numerator());
        if (a.denominator() != 1) num += "/" + std::to_string(a.denominator());
        if (mono.empty()) s += num;
        else s += (a != Rational(1) ? num + "*" : "") + mono;
    }
    return s;
}

DElem d_multiply(const DElem& a, const DElem& b) {
    DElem r;
    for (auto& [ka, ca] : a.terms()) {
        const int np = static_cast<int>(ka.splus.size());
        const int nm = static_cast<int>(ka.sminus.size());
        const int g = np + nm;
        for (auto& [kb, cb] : b.terms()) {
            const RElem zb = RElem::monomial(kb.z);
            // s_1⋯s_g f = Σ_U δ_U(f) Π_{u∉U} s_u, the δ's being commuting derivations
            for (unsigned mask = 0; mask < (1u << g); ++mask) {
                std::vector<int> up, um, rp, rm;
                for (int u = 0; u < g; ++u) {
                    bool in = mask >> u & 1u;
                    if (u < np) (in ? up : rp).push_back(ka.splus[u]);
                    else (in ? um : rm).push_back(ka.sminus[u - np]);
                }
                RElem moved = apply_generators(up, um, zb);
                if (moved.is_zero()) continue;
                std::vector<int> sp = merged_desc(rp, kb.splus);
                std::vector<int> sm = merged_desc(rm, kb.sminus);
                for (auto& [m, c] : moved.terms())
                    r.add_term(DElem::Key{monomial_product(ka.z, m), sp, sm}, ca * cb * Rational(c));
            }
        }
    }
    return r;
}

RElem d_apply(const DElem& d, const RElem& f) {
    std::map<GenPartition, Rational> acc;
    for (auto& [k, c] : d.terms()) {
        RElem g = apply_generators(k.splus, k.sminus, f);
        for (auto& [m, x] : g.terms()) acc[monomial_product(k.z, m)] += c * Rational(x);
    }
    RElem r;
    for (auto& [m, c] : acc) {
        if (c.denominator() != 1) throw std::logic_error("d_apply: non-integral result at " + z_monomial_string(m));
        r.add_term(m, c.numerator());
    }
    return r;
}

// ---- Schur functions in power sums ----

namespace {

using PowerSumPoly = std::map<Partition, Rational>;

PowerSumPoly ps_multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly r;
    for (auto& [x, c] : a)
        for (auto& [y, d] : b) {
            std::vector<int> v(x.parts);
            v.insert(v.end(), y.parts.begin(), y.parts.end());
            std::sort(v.rbegin(), v.rend());
            Rational& slot = r[Partition(v)];
            slot += c * d;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second.numerator() == 0 ? r.erase(it) : std::next(it);
    return r;
}

// h_k = Σ_{ρ ⊢ k} p_ρ / z_ρ
PowerSumPoly complete_in_power_sums(int k) {
    PowerSumPoly r;
    if (k < 0) return r;
    if (k == 0) {
        r[Partition()] = 1;
        return r;
    }
    for (auto& rho : partitions_of(k)) {
        long long z = 1;
        std::map<int, int> mult;
        for (int x : rho.parts) mult[x]++;
        for (auto& [x, m] : mult)
            for (int j = 1; j <= m; ++j) z *= static_cast<long long>(x) * j;
        r[rho] = Rational(1, z);
    }
    return r;
}

std::mutex ps_mutex;
std::map<Partition, PowerSumPoly> ps_cache;

}  // namespace

const std::map<Partition, Rational>& schur_in_power_sums(const Partition& mu) {
    std::lock_guard<std::mutex> lock(ps_mutex);
    auto it = ps_cache.find(mu);
    if (it != ps_cache.end()) return it->second;
    const int n = mu.length();
    PowerSumPoly det;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (w[a] > w[b]) ++inv;
        PowerSumPoly term{{Partition(), Rational(inv % 2 ? -1 : 1)}};
        for (int i = 0; i < n && !term.empty(); ++i) term = ps_multiply(term, complete_in_power_sums(mu[i] - i + w[i]));
        for (auto& [rho, c] : term) det[rho] += c;
    } while (std::next_permutation(w.begin(), w.end()));
    for (auto jt = det.begin(); jt != det.end();) jt = jt->second.numerator() == 0 ? det.erase(jt) : std::next(jt);
    return ps_cache.emplace(mu, std::move(det)).first->second;
}

DElem s_element(Sign sign, const Partition& mu) {
    DElem r;
    for (auto& [rho, c] : schur_in_power_sums(mu)) {
        DElem::Key k;
        std::vector<int> v(rho.parts);
        (sign == Sign::Plus ? k.splus : k.sminus) = v;
        r.add_term(k, c);
    }
    return r;
}

RElem s_operator(Sign sign, const Partition& mu, const RElem& f) { return d_apply(s_element(sign, mu), f); }

// ---- ω ----

RElem omega(const RElem& f) {
    RElem r;
    for (auto& [m, c] : f.terms()) r.add_term(m.star(), c);
    return r;
}

DElem omega(const DElem& d) {
    DElem r;
    for (auto& [k, c] : d.terms()) r.add_term(DElem::Key{k.z.star(), k.sminus, k.splus}, c);
    return r;
}

std::vector<NamedRelation> annihilator_relations(int n, int k_max) {
    std::vector<NamedRelation> out;
    for (int k = n + 1; k <= k_max; ++k) {
        out.push_back({"h+" + std::to_string(k), s_element(Sign::Plus, Partition{k})});
        out.push_back({"h-" + std::to_string(k), s_element(Sign::Minus, Partition{k})});
    }
    auto h = [](Sign s, int k) { return k == 0 ? DElem(1) : s_element(s, Partition{k}); };
    for (int i = 0; i <= n; ++i) {
        out.push_back({"h+" + std::to_string(n) + "*h-" + std::to_string(i) + " - h+" + std::to_string(n - i),
                       h(Sign::Plus, n) * h(Sign::Minus, i) - h(Sign::Plus, n - i)});
        out.push_back({"h-" + std::to_string(n) + "*h+" + std::to_string(i) + " - h-" + std::to_string(n - i),
                       h(Sign::Minus, n) * h(Sign::Plus, i) - h(Sign::Minus, n - i)});
    }
    return out;
}

std::string to_string(Sign s) { return sign_name(s); }

}  // namespace clr
