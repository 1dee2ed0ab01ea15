#include "crystal_lr/hall_littlewood.hpp"

#include <algorithm>
#include <stdexcept>

namespace clr {

bool TRElem::is_zero() const {
    return std::all_of(slices_.begin(), slices_.end(), [](const RElem& r) { return r.is_zero(); });
}

int TRElem::max_degree() const {
    int d = -1;
    for (auto& s : slices_) d = std::max(d, s.max_degree());
    return d;
}

TRElem& TRElem::operator+=(const TRElem& o) {
    if (o.truncation() != truncation()) throw std::invalid_argument("TRElem: truncation mismatch");
    for (size_t j = 0; j < slices_.size(); ++j) slices_[j] += o.slices_[j];
    return *this;
}

TRElem& TRElem::operator-=(const TRElem& o) {
    if (o.truncation() != truncation()) throw std::invalid_argument("TRElem: truncation mismatch");
    for (size_t j = 0; j < slices_.size(); ++j) slices_[j] -= o.slices_[j];
    return *this;
}

TRElem TRElem::times_t(int e, long long c) const {
    TRElem r(truncation());
    for (int j = 0; j + e <= truncation(); ++j) r.slices_[j + e] = slices_[j].scaled(c);
    return r;
}

TRElem TRElem::map(const std::function<RElem(const RElem&)>& op) const {
    TRElem r(truncation());
    for (size_t j = 0; j < slices_.size(); ++j)
        if (!slices_[j].is_zero()) r.slices_[j] = op(slices_[j]);
    return r;
}

std::map<GenPartition, TPoly> TRElem::by_monomial() const {
    std::map<GenPartition, TPoly> out;
    for (int j = 0; j <= truncation(); ++j)
        for (auto& [m, c] : slices_[j].terms()) out[m].add_term(j, c);
    return out;
}

std::string TRElem::to_string() const {
    std::string s;
    for (int j = 0; j <= truncation(); ++j) {
        if (slices_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "t^" + std::to_string(j) + "*(" + slices_[j].to_string() + ")";
    }
    return s.empty() ? "0" : s;
}

namespace {

Partition column(int j) { return Partition(std::vector<int>(j, 1)); }

TRElem vertex_apply(int k, const TRElem& f, Sign sign) {
    const int T = f.truncation();
    const int d = std::max(0, f.max_degree());
    TRElem out(T);
    for (int j = 0; j <= T; ++j) {
        // e^±_j keeps the degree; h^±_r kills degree < r
        TRElem g = f.map([&](const RElem& x) { return s_operator(sign, column(j), x); });
        if (g.is_zero()) continue;
        TRElem past = g.map([&](const RElem& x) { return h_operator(sign, d + 1, x); });
        if (!past.is_zero()) throw std::logic_error("vertex operator: row bound violated");
        for (int r = 0; r <= d; ++r) {
            const int i = r + j;
            const int idx = sign == Sign::Plus ? i + k : -(i + k);
            TRElem h = g.map([&](const RElem& x) { return RElem::z(idx) * h_operator(sign, r, x); });
            out += h.times_t(j, r % 2 ? -1 : 1);
        }
    }
    return out;
}

}  // namespace

TRElem bt_apply(int k, const TRElem& f) { return vertex_apply(k, f, Sign::Plus); }
TRElem bbar_apply(int k, const TRElem& f) { return vertex_apply(k, f, Sign::Minus); }

RElem bt_apply_at_one(int k, const RElem& f, int i_max) {
    RElem out;
    for (int i = 0; i <= i_max; ++i) {
        RElem block;
        for (int j = 0; j <= i; ++j) {
            RElem g = h_operator(Sign::Plus, i - j, s_operator(Sign::Plus, column(j), f));
            block += (i - j) % 2 ? -g : g;
        }
        if (i > 0 && !block.is_zero()) throw std::logic_error("bt_apply_at_one: block does not vanish");
        out += RElem::z(i + k) * block;
    }
    return out;
}

TRElem bt_word(const std::vector<int>& alpha, const TRElem& f) {
    TRElem g = f;
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) g = bt_apply(*it, g);
    return g;
}

TRElem bt_lambda(const std::vector<int>& alpha, const TRElem& f) {
    const int n = static_cast<int>(alpha.size());
    const int T = f.truncation();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    TRElem out(T);
    const unsigned np = static_cast<unsigned>(pairs.size());
    for (unsigned mask = 0; mask < (1u << np); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > T) continue;
        std::vector<int> beta = alpha;
        for (unsigned p = 0; p < np; ++p)
            if (mask >> p & 1u) {
                beta[pairs[p].first]++;
                beta[pairs[p].second]--;
            }
        out += bt_word(beta, f).times_t(size, size % 2 ? -1 : 1);
    }
    return out;
}

TRElem bt_lambda_by_classes(const GenPartition& lam, const TRElem& f) {
    const int n = lam.length();
    const int T = f.truncation();
    const int d = std::max(0, f.max_degree());
    TRElem out(T);
    // s^+_μ kills degree d unless μ_1 ≤ d; only ℓ(μ), ℓ(ν), ℓ(σ) ≤ n contribute
    std::vector<Partition> mus = partitions_up_to(n * d, n);
    std::vector<Partition> nus = partitions_up_to(T, n);
    for (auto& nu : nus) {
        TRElem g = f.map([&](const RElem& x) { return s_operator(Sign::Plus, conjugate(nu), x); });
        if (g.is_zero()) continue;
        for (auto& mu : mus) {
            if (mu[0] > d) continue;
            TRElem h = g.map([&](const RElem& x) { return s_operator(Sign::Plus, mu, x); });
            if (h.is_zero()) continue;
            const int sigma_size = mu.size() + nu.size();
            for (auto& sigma : partitions_of(sigma_size, n, sigma_size)) {
                long long c2 = lr_coefficient(sigma, mu, nu);
                if (!c2) continue;
                GenPartition sstar = GenPartition::pad(sigma, n).star();
                for (auto& eta : gen_partitions_sum(n, lam.last(), lam.first() + sigma[0], lam.sum() + sigma_size)) {
                    long long c1 = gl_lr_coefficient(lam, eta, sstar);
                    if (!c1) continue;
                    RElem zeta = z_schur(eta);
                    TRElem term = h.map([&](const RElem& x) { return zeta * x; });
                    long long sign = mu.size() % 2 ? -1 : 1;
                    out += term.times_t(nu.size(), sign * c1 * c2);
                }
            }
        }
    }
    return out;
}

KostkaWindow bt_word_action(const GenPartition& mu, int T) {
    const int n = mu.length();
    TRElem g = bt_word(mu.parts, TRElem(RElem(1), T));
    KostkaWindow w;
    w.complete = true;
    int top = mu.first();
    for (int j = 0; j <= T; ++j)
        for (auto& [m, c] : g.slice(j).terms()) top = std::max(top, m.first());
    // a zero remainder makes the expansion exact whatever the cap was
    for (int j = 0; j <= T; ++j) {
        ZSchurExpansion e;
        for (int cap = top + n; cap <= top + 4 * n + 8; cap += n + 2) {
            e = expand_in_z_schur(g.slice(j), n, cap);
            if (e.complete()) break;
        }
        if (!e.complete()) w.complete = false;
        for (auto& [lam, c] : e.coeffs) w.coeffs[lam].add_term(j, c);
    }
    for (auto it = w.coeffs.begin(); it != w.coeffs.end();) it = it->second.is_zero() ? w.coeffs.erase(it) : std::next(it);
    return w;
}

bool bt_commutator_check(int m, int n, const TRElem& sample) {
    TRElem a = bt_apply(m, bt_apply(n, sample));
    TRElem b = bt_apply(n, bt_apply(m, sample)).times_t(1);
    TRElem c = bt_apply(m + 1, bt_apply(n - 1, sample)).times_t(1);
    TRElem d = bt_apply(n - 1, bt_apply(m + 1, sample));
    return (a - b - c + d).is_zero();
}

bool bt_bbar_commute_check(int m, int n, const TRElem& sample) {
    return bbar_apply(m, bt_apply(n, sample)) == bt_apply(n, bbar_apply(m, sample));
}

}  // namespace clr
