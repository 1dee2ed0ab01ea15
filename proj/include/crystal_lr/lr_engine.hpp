#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystal_lr/crystal.hpp"
#include "crystal_lr/matrix.hpp"
#include "crystal_lr/shapes.hpp"

namespace clr {

// B_{μ,ν} ⊗ B(Λ_hw) when dual is false; B(Λ_hw)^∨ ⊗ B_{μ,ν} when dual is true.
// An absent hw means the level 0 class B_{μ,ν}.
struct ExtremalClass {
    Partition mu;
    Partition nu;
    std::optional<GenPartition> hw;
    bool dual = false;

    int level() const;

    // serialization order: level, hw lex, μ lex, ν lex
    bool operator<(const ExtremalClass& o) const;
    bool operator==(const ExtremalClass& o) const = default;
};

std::string to_string(const ExtremalClass& c);

struct Decomposition {
    std::map<ExtremalClass, long long> terms;

    void add(const ExtremalClass& c, long long m);
    long long mult(const ExtremalClass& c) const;
    bool operator==(const Decomposition& o) const = default;
};

std::string to_string(const Decomposition& d);

// Window on the parts of highest weights, for the infinite decompositions.
struct HwWindow {
    int lo = -3;
    int hi = 3;
    bool contains(const GenPartition& g) const;
};

// [B_{μ,ν}][B_{σ,τ}] = Σ c^η_{μσ} c^θ_{ντ} [B_{η,θ}]
Decomposition level0_product(const Partition& mu, const Partition& nu, const Partition& sigma, const Partition& tau);

// Multiplicities of B(Λ_λ) in B(Λ_μ) ⊗ B(Λ_ν) for λ with parts in the window.
std::map<GenPartition, long long> hw_product(const GenPartition& mu, const GenPartition& nu, const HwWindow& w);

// B(Λ_λ) ⊗ B_{(1^a)} (or ⊗ B_{(1^a)}^∨ when dual) by horizontal strips.
Decomposition pieri_column(const GenPartition& lam, int a, bool dual);

// B(Λ_λ) ⊗ B_{μ,ν} = ⊔ B_{σ,τ} ⊗ B(Λ_ρ)
Decomposition hw_past_level0(const GenPartition& lam, const Partition& mu, const Partition& nu);

// (B_{μ,ν}⊗B(Λ_λ)) ⊗ (B_{σ,τ}⊗B(Λ_ρ)); λ or ρ of length 0 means no highest weight factor.
Decomposition extremal_lr(const GenPartition& lam, const Partition& mu, const Partition& nu, const GenPartition& rho,
                          const Partition& sigma, const Partition& tau, const HwWindow& w);

Decomposition extremal_lr(const ExtremalClass& left, const ExtremalClass& right, const HwWindow& w);

struct level_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (μ, ν) with B(Λ) ≅ B_{μ,ν} for a level 0 weight.
std::pair<Partition, Partition> level0_canonical(const Weight& w);

// Tensor factors: B(λ), Bdual(λ), Bmn(μ;ν), Bmu(μ), Bnu(ν), Bcol(k), Bcoldual(k).
struct Factor {
    enum class Kind { Hw, HwDual, Level0 };
    Kind kind = Kind::Level0;
    GenPartition hw;
    Partition mu;
    Partition nu;

    int level() const;
    ExtremalClass as_class() const;
    bool operator==(const Factor&) const = default;
};

std::vector<Factor> parse_tensor_expression(const std::string& text);
std::string to_string(const Factor& f);

struct mixed_level_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Left-to-right evaluation by the closed formulas. Products whose factors are all
// of level ≤ 0 are handled through duality; mixed signs throw mixed_level_error.
Decomposition decompose(const std::vector<Factor>& factors, const HwWindow& w);

Decomposition dual(const Decomposition& d);

struct VerifyOptions {
    int margin = 2;                  // extra columns on each side for the stability test
    std::optional<HwWindow> hw_filter;  // compare only classes whose hw parts lie here
    bool retry = true;               // widen the window once before giving up
    int threads = 1;
    std::size_t max_elements = 4000000;
};

struct CensusEntry {
    ExtremalClass cls;
    long long observed = 0;
    long long predicted = 0;
};

struct VerifyReport {
    bool match = false;
    Interval window;      // window actually used
    int margin = 0;
    bool retried = false;
    std::vector<CensusEntry> census;  // union of observed and predicted classes
    std::size_t sources = 0;          // highest weight elements of the truncation
    std::size_t unstable = 0;         // sources discarded by the stability test
    std::string discrepancy;          // first mismatch, empty on success
};

struct window_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force check of a predicted decomposition on the window [p,q].
// Only classes whose canonical element fits the window are compared.
VerifyReport verify_truncated(const std::vector<Factor>& lhs, Interval window, const Decomposition& predicted,
                              const VerifyOptions& opt = {});

// Whether the canonical element of the class fits the window.
bool class_fits(const ExtremalClass& c, Interval window);

// Σ μ_i ε_{p+i-1} - Σ ν_i ε_{q-i+1} + Λ_hw
Weight canonical_weight(const ExtremalClass& c, Interval window);

}  // namespace clr
