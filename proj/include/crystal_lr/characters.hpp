#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystal_lr/shapes.hpp"

namespace clr {

inline bool coeff_is_zero(long long c) { return c == 0; }
inline bool coeff_is_zero(const TPoly& c) { return c.is_zero(); }

// Laurent polynomial in x_1..x_n; exponents may be negative.
template <class C>
class LaurentPolyT {
public:
    using Exponent = std::vector<int>;

    LaurentPolyT() = default;
    explicit LaurentPolyT(int nvars) : n_(nvars) {}
    static LaurentPolyT constant(int nvars, const C& c) {
        LaurentPolyT p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static LaurentPolyT monomial(const Exponent& e, const C& c) {
        LaurentPolyT p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return n_; }
    const std::map<Exponent, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    C coeff(const Exponent& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Exponent& e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    LaurentPolyT& operator+=(const LaurentPolyT& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPolyT& operator-=(const LaurentPolyT& o) {
        for (auto& [e, c] : o.t_) add_term(e, C(0) - c);
        return *this;
    }
    LaurentPolyT operator+(const LaurentPolyT& o) const { LaurentPolyT r = *this; r += o; return r; }
    LaurentPolyT operator-(const LaurentPolyT& o) const { LaurentPolyT r = *this; r -= o; return r; }
    LaurentPolyT operator*(const LaurentPolyT& o) const {
        LaurentPolyT r(n_);
        for (auto& [a, x] : t_)
            for (auto& [b, y] : o.t_) {
                Exponent e(n_);
                for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
                r.add_term(e, x * y);
            }
        return r;
    }
    LaurentPolyT scaled(const C& c) const {
        LaurentPolyT r(n_);
        for (auto& [e, x] : t_) r.add_term(e, x * c);
        return r;
    }
    // multiply by x^s
    LaurentPolyT shifted(const Exponent& s) const {
        LaurentPolyT r(n_);
        for (auto& [e, x] : t_) {
            Exponent f = e;
            for (int i = 0; i < n_; ++i) f[i] += s[i];
            r.t_.emplace(std::move(f), x);
        }
        return r;
    }
    LaurentPolyT swapped(int i, int j) const {
        LaurentPolyT r(n_);
        for (auto& [e, x] : t_) {
            Exponent f = e;
            std::swap(f[i], f[j]);
            r.t_.emplace(std::move(f), x);
        }
        return r;
    }
    LaurentPolyT permuted(const std::vector<int>& w) const {  // x_i -> x_{w[i]}
        LaurentPolyT r(n_);
        for (auto& [e, x] : t_) {
            Exponent f(n_);
            for (int i = 0; i < n_; ++i) f[w[i]] = e[i];
            r.t_.emplace(std::move(f), x);
        }
        return r;
    }
    LaurentPolyT inverted_vars() const {  // x_i -> x_i^{-1}
        LaurentPolyT r(n_);
        for (auto& [e, x] : t_) {
            Exponent f = e;
            for (auto& v : f) v = -v;
            r.t_.emplace(std::move(f), x);
        }
        return r;
    }
    // place the variables of this polynomial at positions [offset, offset+nvars) of a larger ring
    LaurentPolyT embedded(int total, int offset) const {
        LaurentPolyT r(total);
        for (auto& [e, x] : t_) {
            Exponent f(total, 0);
            for (int i = 0; i < n_; ++i) f[offset + i] = e[i];
            r.t_.emplace(std::move(f), x);
        }
        return r;
    }
    bool is_symmetric() const {
        for (int i = 0; i + 1 < n_; ++i)
            if (!(swapped(i, i + 1) == *this)) return false;
        return true;
    }

    // exact division by (x_i - x_j); throws if not divisible
    LaurentPolyT divided_by_difference(int i, int j) const;

    bool operator==(const LaurentPolyT& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
    int n_ = 0;
    std::map<Exponent, C> t_;
};

using LaurentPoly = LaurentPolyT<long long>;
using TLaurentPoly = LaurentPolyT<TPoly>;

std::string to_string(const LaurentPoly& p);

// (x_1⋯x_n)^{-p} s_{λ+(p^n)}(x_1,…,x_n), by the bialternant formula.
LaurentPoly laurent_schur(const GenPartition& lam);

// s_λ(x_{[m+n]}) = Σ c s_μ(x_{[m]}) s_ν(x_{[n]+m}).
std::map<std::pair<GenPartition, GenPartition>, long long> branch_split(const GenPartition& lam, int m, int n);

// Expansion of a polynomial symmetric in each consecutive block of variables
// into products of Laurent Schur polynomials, one per block.
std::map<std::vector<GenPartition>, long long> expand_blocks(const LaurentPoly& p, const std::vector<int>& blocks);

// Product of laurent_schur(parts[b]) placed on consecutive blocks.
LaurentPoly block_schur(const std::vector<GenPartition>& parts);

// Hall-Littlewood P_μ(x_1..x_n; t) by symmetrization.
TLaurentPoly hall_littlewood_P(const Partition& mu, int nvars);

// P_ν for ν ∈ Z_+^n: (x_1⋯x_n)^{ν_n} P_{ν-(ν_n^n)}.
TLaurentPoly hall_littlewood_P(const GenPartition& nu);

// Coefficients K_{λν}(t) of s_λ = Σ_ν K_{λν}(t) P_ν in n = ℓ(λ) variables.
std::map<GenPartition, TPoly> schur_in_hall_littlewood(const GenPartition& lam);

}  // namespace clr
