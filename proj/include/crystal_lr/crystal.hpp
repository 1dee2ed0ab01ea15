#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal_lr/shapes.hpp"

namespace clr {

// Letter of B (dual == false) or of B^∨ (dual == true).
struct Letter {
    int index = 0;
    bool dual = false;

    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
    // crystal order inside one alphabet; i^∨ < j^∨ iff i > j
    bool precedes(const Letter& o) const { return dual ? index > o.index : index < o.index; }
    std::string to_string() const { return std::to_string(index) + (dual ? "*" : ""); }
};

inline Letter L(int i) { return Letter{i, false}; }
inline Letter Ld(int i) { return Letter{i, true}; }

// Element of P = ⊕ Z ε_i ⊕ Z Λ_0.
struct Weight {
    int level = 0;
    std::map<int, int> eps;

    int coeff(int i) const;
    void add_eps(int i, int c);
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight operator+(const Weight& o) const { Weight r = *this; r += o; return r; }
    Weight operator-(const Weight& o) const { Weight r = *this; r -= o; return r; }
    Weight operator-() const;
    // ⟨wt, h_i⟩, with ⟨Λ_0, h_i⟩ = δ_{i0}
    int pairing(int i) const;

    static Weight epsilon(int i, int c = 1);
    static Weight alpha(int i);
    static Weight fundamental(int i);                     // Λ_i
    static Weight dominant(const GenPartition& lam);      // Λ_λ = Σ Λ_{λ_k}

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
    std::string to_string() const;
};

// Recover λ from Λ_λ when the weight has that form.
std::optional<GenPartition> dominant_index(const Weight& w);

using Word = std::vector<Letter>;

// Letter crystal: i →(i) i+1 in B and (i+1)^∨ →(i) i^∨ in B^∨.
int letter_eps(const Letter& b, int i);
int letter_phi(const Letter& b, int i);
Weight letter_weight(const Letter& b);

// Tensor-product crystal on words, first factor wins ties for ẽ.
std::optional<Word> raise(const Word& w, int i);
std::optional<Word> lower(const Word& w, int i);
int eps(const Word& w, int i);
int phi(const Word& w, int i);
Weight weight(const Word& w);
Word weyl_reflect(const Word& w, int i);
Word dual_word(const Word& w);  // (b_1⊗…⊗b_r)^∨ = b_r^∨⊗…⊗b_1^∨

// Semistandard tableau of skew shape outer/inner; rows[r] holds the cells of row r
// from column inner[r] to outer[r]-1.
struct Tableau {
    Partition outer;
    Partition inner;
    bool dual = false;
    std::vector<std::vector<Letter>> rows;

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

bool is_semistandard(const Tableau& t);
Word tableau_word(const Tableau& t);
// Inverse of tableau_word for a fixed shape; nullopt if the word does not fill it.
std::optional<Tableau> tableau_from_word(const Word& w, const Partition& outer, const Partition& inner,
                                         bool dual);
std::vector<Tableau> enumerate_sst(const Partition& lam, int lo, int hi, bool dual = false);
std::vector<Tableau> enumerate_skew_sst(const SkewShape& s, int lo, int hi, bool dual = false);

struct ComponentInfo {
    Weight highest_weight;
    size_t size = 0;
    size_t multiplicity = 0;
    Word source;  // one representative source
};

struct closure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Connected components of a finite set of words under colors [c_lo, c_hi].
// Aggregated by (highest weight, size); sorted by weight then size.
std::vector<ComponentInfo> decompose_components(const std::vector<Word>& S, int c_lo, int c_hi);

// All words b_1⊗…⊗b_r with b_k drawn from sets[k].
std::vector<Word> tensor_words(const std::vector<std::vector<Word>>& sets);

// Colour-preserving isomorphism test of the components of w1 and w2.
bool is_equivalent(const Word& w1, const Word& w2, int c_lo, int c_hi, size_t max_size = 2000000);

}  // namespace clr
