#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crystal_lr/zring.hpp"

namespace clr {

// R ⊗ Z[t] modulo t^{T+1}, stored as one RElem per power of t.
class TRElem {
public:
    explicit TRElem(int T = 0) : slices_(T + 1) {}
    TRElem(const RElem& f, int T) : slices_(T + 1) { slices_[0] = f; }

    int truncation() const { return static_cast<int>(slices_.size()) - 1; }
    const RElem& slice(int j) const { return slices_[j]; }
    RElem& slice(int j) { return slices_[j]; }
    bool is_zero() const;
    int max_degree() const;

    TRElem& operator+=(const TRElem& o);
    TRElem& operator-=(const TRElem& o);
    TRElem operator+(const TRElem& o) const { TRElem r = *this; r += o; return r; }
    TRElem operator-(const TRElem& o) const { TRElem r = *this; r -= o; return r; }
    TRElem times_t(int e, long long c = 1) const;  // c·t^e·(this), truncated
    TRElem map(const std::function<RElem(const RElem&)>& op) const;  // Z[t]-linear extension
    bool operator==(const TRElem& o) const { return slices_ == o.slices_; }

    // z-monomial -> polynomial in t
    std::map<GenPartition, TPoly> by_monomial() const;
    std::string to_string() const;

private:
    std::vector<RElem> slices_;
};

// 𝒷^t_k = Σ_{i,j} (-1)^{i-j} t^j z_{i+k} ∘ h^+_{i-j} ∘ e^+_j, modulo t^{T+1}.
TRElem bt_apply(int k, const TRElem& f);
// ω∘𝒷^t_k∘ω = Σ (-1)^{i-j} t^j z_{-(i+k)} ∘ h^-_{i-j} ∘ e^-_j
TRElem bbar_apply(int k, const TRElem& f);
// 𝒷^1_k computed term by term for i ≤ i_max; each i > 0 block is asserted to vanish.
RElem bt_apply_at_one(int k, const RElem& f, int i_max);

// 𝒷^t_{α_1}∘⋯∘𝒷^t_{α_n}(f)
TRElem bt_word(const std::vector<int>& alpha, const TRElem& f);

// Π_{i<j}(1 - tR_ij) 𝒷^t_{α_1}⋯𝒷^t_{α_n} applied to f.
TRElem bt_lambda(const std::vector<int>& alpha, const TRElem& f);

// Class formula for 𝒷^t_λ, λ ∈ Z_+^n:
// Σ (-1)^{|μ|} t^{|ν|} c^λ_{η σ*} c^σ_{μ ν} z_{η} ∘ s^+_μ ∘ s^+_{ν'}.
TRElem bt_lambda_by_classes(const GenPartition& lam, const TRElem& f);

struct KostkaWindow {
    std::map<GenPartition, TPoly> coeffs;  // z_{λ} coefficients, t-degree ≤ T
    bool complete = false;                 // the z-Schur expansion had no remainder
};

// 𝒷^t_{μ_1}⋯𝒷^t_{μ_n}(1) modulo t^{T+1}, in the z-Schur basis.
KostkaWindow bt_word_action(const GenPartition& mu, int T);

// 𝒷_m𝒷_n - t𝒷_n𝒷_m - t𝒷_{m+1}𝒷_{n-1} + 𝒷_{n-1}𝒷_{m+1} kills the sample.
bool bt_commutator_check(int m, int n, const TRElem& sample);
// B̄_m𝒷_n = 𝒷_nB̄_m on the sample.
bool bt_bbar_commute_check(int m, int n, const TRElem& sample);

}  // namespace clr
