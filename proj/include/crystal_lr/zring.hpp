#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "crystal_lr/shapes.hpp"

namespace clr {

using Rational = boost::rational<long long>;

// Polynomial in the commuting variables z_k, k ∈ Z. A monomial z_{k_1}⋯z_{k_r} is keyed by
// its indices sorted decreasingly.
class RElem {
public:
    using Monomial = GenPartition;

    RElem() = default;
    RElem(long long c) { add_term(Monomial(), c); }
    static RElem z(int k);
    static RElem monomial(const Monomial& m, long long c = 1);

    void add_term(const Monomial& m, long long c);
    const std::map<Monomial, long long>& terms() const { return t_; }
    long long coeff(const Monomial& m) const;
    bool is_zero() const { return t_.empty(); }
    // degree when homogeneous, -1 for zero, throws otherwise
    int homogeneous_degree() const;
    int max_degree() const;

    RElem& operator+=(const RElem& o);
    RElem& operator-=(const RElem& o);
    RElem operator+(const RElem& o) const { RElem r = *this; r += o; return r; }
    RElem operator-(const RElem& o) const { RElem r = *this; r -= o; return r; }
    RElem operator-() const;
    RElem operator*(const RElem& o) const;
    RElem scaled(long long c) const;
    bool operator==(const RElem& o) const { return t_ == o.t_; }
    bool operator<(const RElem& o) const { return t_ < o.t_; }

    std::string to_string() const;

private:
    std::map<Monomial, long long> t_;
};

RElem::Monomial monomial_product(const RElem::Monomial& a, const RElem::Monomial& b);

enum class Sign { Plus, Minus };
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// z_{λ} = det(z_{λ_i-i+j}); z_{λ/μ} = det(z_{λ_i-μ_j-i+j}).
RElem z_schur(const GenPartition& lam);
RElem z_skew_schur(const GenPartition& lam, const GenPartition& mu);

struct ZSchurExpansion {
    std::map<GenPartition, long long> coeffs;
    RElem remainder;  // monomials whose first index exceeds the cap
    bool complete() const { return remainder.is_zero(); }
};

// Triangular expansion f = Σ c_λ z_{λ} over λ with λ_1 ≤ first_part_cap. The expansion
// of a monomial is usually infinite, hence the cap.
ZSchurExpansion expand_in_z_schur(const RElem& f, int n, int first_part_cap);

// γ^±_n(f) = (-1)^{n-1} Σ_k z_{k∓n} ∂f/∂z_k
RElem p_action(Sign sign, int n, const RElem& f);

// Element of the Ore extension R[s^+, s^-] in normal form z⋯z s^+⋯s^+ s^-⋯s^-.
class DElem {
public:
    struct Key {
        GenPartition z;
        std::vector<int> splus;   // sorted decreasingly
        std::vector<int> sminus;  // sorted decreasingly
        auto operator<=>(const Key&) const = default;
        bool operator==(const Key&) const = default;
    };

    DElem() = default;
    DElem(const RElem& f);
    DElem(long long c) : DElem(RElem(c)) {}
    static DElem s(Sign sign, int n);
    static DElem term(const Key& k, Rational c);

    void add_term(const Key& k, Rational c);
    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    DElem& operator+=(const DElem& o);
    DElem& operator-=(const DElem& o);
    DElem operator+(const DElem& o) const { DElem r = *this; r += o; return r; }
    DElem operator-(const DElem& o) const { DElem r = *this; r -= o; return r; }
    DElem scaled(Rational c) const;
    bool operator==(const DElem& o) const { return t_ == o.t_; }

    std::string to_string() const;

private:
    std::map<Key, Rational> t_;
};

DElem d_multiply(const DElem& a, const DElem& b);
inline DElem operator*(const DElem& a, const DElem& b) { return d_multiply(a, b); }

// Action of D on R: z's multiply, s^±_n act by γ^±_n. Throws if the result is not integral.
RElem d_apply(const DElem& d, const RElem& f);

// Symmetric function s_μ in power sums: partition ρ -> coefficient of p_ρ.
const std::map<Partition, Rational>& schur_in_power_sums(const Partition& mu);

// s^±_μ as an element of D (power sums p_n replaced by s^±_n), and its action on R.
DElem s_element(Sign sign, const Partition& mu);
RElem s_operator(Sign sign, const Partition& mu, const RElem& f);
inline RElem h_operator(Sign sign, int n, const RElem& f) {
    return s_operator(sign, n > 0 ? Partition{n} : Partition(), f);
}

// ω(z_k) = z_{-k}, ω(s^±_n) = s^∓_n
RElem omega(const RElem& f);
DElem omega(const DElem& d);

// Relations that kill every z_{λ}, λ ∈ Z_+^n: h^±_k for n < k ≤ k_max, and
// h^+_n h^-_i - h^+_{n-i}, h^-_n h^+_i - h^-_{n-i} for 0 ≤ i ≤ n.
struct NamedRelation {
    std::string name;
    DElem element;
};
std::vector<NamedRelation> annihilator_relations(int n, int k_max);

std::string to_string(Sign s);

}  // namespace clr
