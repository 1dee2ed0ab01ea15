#include "crystal_lr/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace clr {

template <class C>
LaurentPolyT<C> LaurentPolyT<C>::divided_by_difference(int i, int j) const {
    if (t_.empty()) return *this;
    // slices by the exponent of x_i
    std::map<int, LaurentPolyT> slice;
    for (auto& [e, c] : t_) {
        Exponent f = e;
        f[i] = 0;
        auto it = slice.try_emplace(e[i], LaurentPolyT(n_)).first;
        it->second.add_term(f, c);
    }
    Exponent xj(n_, 0);
    xj[j] = 1;
    const int top = slice.rbegin()->first;
    const int bottom = slice.begin()->first;
    LaurentPolyT q(n_);
    LaurentPolyT cur(n_);  // Q_e, starting from Q_top = 0
    for (int e = top; e >= bottom; --e) {
        LaurentPolyT next = cur.shifted(xj);
        auto it = slice.find(e);
        if (it != slice.end()) next += it->second;
        // next = Q_{e-1}
        if (e - 1 >= bottom) {
            for (auto& [f, c] : next.t_) {
                Exponent g = f;
                g[i] = e - 1;
                q.add_term(g, c);
            }
        } else if (!next.is_zero()) {
            throw std::logic_error("divided_by_difference: not divisible");
        }
        cur = std::move(next);
    }
    return q;
}

template class LaurentPolyT<long long>;
template class LaurentPolyT<TPoly>;

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto& [e, c] = *it;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        std::string mono;
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) s += std::to_string(a);
        else s += (a != 1 ? std::to_string(a) + "*" : "") + mono;
    }
    return s;
}

namespace {

template <class C>
LaurentPolyT<C> antisymmetrize(const LaurentPolyT<C>& g) {
    const int n = g.nvars();
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    LaurentPolyT<C> r(n);
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (w[a] > w[b]) ++inv;
        auto term = g.permuted(w);
        if (inv % 2) r -= term;
        else r += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return r;
}

template <class C>
LaurentPolyT<C> divide_vandermonde(LaurentPolyT<C> p) {
    const int n = p.nvars();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p = p.divided_by_difference(a, b);
    return p;
}

std::mutex schur_mutex;
std::map<GenPartition, LaurentPoly> schur_cache;
std::mutex hl_mutex;
std::map<GenPartition, TLaurentPoly> hl_cache;

}  // namespace

LaurentPoly laurent_schur(const GenPartition& lam) {
    {
        std::lock_guard<std::mutex> lock(schur_mutex);
        auto it = schur_cache.find(lam);
        if (it != schur_cache.end()) return it->second;
    }
    const int n = lam.length();
    LaurentPoly result;
    if (n == 0) {
        result = LaurentPoly::constant(0, 1);
    } else {
        int p = std::max(0, -lam.last());
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = lam[i] + p + (n - 1 - i);
        result = divide_vandermonde(antisymmetrize(LaurentPoly::monomial(e, 1)));
        if (p) result = result.shifted(std::vector<int>(n, -p));
    }
    std::lock_guard<std::mutex> lock(schur_mutex);
    schur_cache.emplace(lam, result);
    return result;
}

LaurentPoly block_schur(const std::vector<GenPartition>& parts) {
    int total = 0;
    for (auto& p : parts) total += p.length();
    LaurentPoly r = LaurentPoly::constant(total, 1);
    int off = 0;
    for (auto& p : parts) {
        r = r * laurent_schur(p).embedded(total, off);
        off += p.length();
    }
    return r;
}

std::map<std::vector<GenPartition>, long long> expand_blocks(const LaurentPoly& p, const std::vector<int>& blocks) {
    std::map<std::vector<GenPartition>, long long> out;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        auto lead = rest.terms().rbegin();
        std::vector<GenPartition> key;
        int off = 0;
        for (int b : blocks) {
            std::vector<int> part(lead->first.begin() + off, lead->first.begin() + off + b);
            if (!std::is_sorted(part.rbegin(), part.rend()))
                throw std::logic_error("expand_blocks: input is not block-symmetric");
            key.emplace_back(part);
            off += b;
        }
        long long c = lead->second;
        out[key] += c;
        rest -= block_schur(key).scaled(c);
    }
    return out;
}

std::map<std::pair<GenPartition, GenPartition>, long long> branch_split(const GenPartition& lam, int m, int n) {
    if (lam.length() != m + n) throw std::invalid_argument("branch_split: length mismatch");
    std::map<std::pair<GenPartition, GenPartition>, long long> out;
    for (auto& [k, c] : expand_blocks(laurent_schur(lam), {m, n})) out[{k[0], k[1]}] = c;
    return out;
}

TLaurentPoly hall_littlewood_P(const Partition& mu, int nvars) {
    if (mu.length() > nvars) throw std::invalid_argument("hall_littlewood_P: too many parts");
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = mu[i];
    TLaurentPoly g = TLaurentPoly::monomial(e, TPoly(1));
    for (int a = 0; a < nvars; ++a)
        for (int b = a + 1; b < nvars; ++b) {
            std::vector<int> xa(nvars, 0), xb(nvars, 0);
            xa[a] = 1;
            xb[b] = 1;
            TLaurentPoly f = TLaurentPoly::monomial(xa, TPoly(1));
            f.add_term(xb, TPoly::monomial(1, -1));
            g = g * f;
        }
    TLaurentPoly q = divide_vandermonde(antisymmetrize(g));
    // v_μ(t) = Π_i Π_{j=1}^{m_i} (1 - t^j)/(1 - t), including m_0 = nvars - ℓ(μ)
    std::map<int, int> mult;
    for (int i = 0; i < nvars; ++i) mult[mu[i]]++;
    TPoly v(1);
    for (auto& [part, m] : mult)
        for (int j = 1; j <= m; ++j) {
            TPoly qj;
            for (int k = 0; k < j; ++k) qj.add_term(k, 1);
            v = v * qj;
        }
    TLaurentPoly r(nvars);
    for (auto& [ex, c] : q.terms()) r.add_term(ex, c.divided_by(v));
    return r;
}

TLaurentPoly hall_littlewood_P(const GenPartition& nu) {
    const int n = nu.length();
    if (n == 0) return TLaurentPoly::constant(0, TPoly(1));
    const int shift = nu.last();
    const GenPartition base = nu.shifted(-shift);
    TLaurentPoly p;
    {
        std::lock_guard<std::mutex> lock(hl_mutex);
        auto it = hl_cache.find(base);
        if (it != hl_cache.end()) p = it->second;
    }
    if (p.nvars() == 0) {
        p = hall_littlewood_P(base.to_partition(), n);
        std::lock_guard<std::mutex> lock(hl_mutex);
        hl_cache.emplace(base, p);
    }
    return shift ? p.shifted(std::vector<int>(n, shift)) : p;
}

std::map<GenPartition, TPoly> schur_in_hall_littlewood(const GenPartition& lam) {
    const int n = lam.length();
    LaurentPoly s = laurent_schur(lam);
    TLaurentPoly rest(n);
    for (auto& [e, c] : s.terms()) rest.add_term(e, TPoly(c));
    std::map<GenPartition, TPoly> out;
    while (!rest.is_zero()) {
        auto lead = rest.terms().rbegin();
        GenPartition nu(lead->first);
        TPoly c = lead->second;
        out[nu] = c;
        rest -= hall_littlewood_P(nu).scaled(c);
    }
    return out;
}

}  // namespace clr
