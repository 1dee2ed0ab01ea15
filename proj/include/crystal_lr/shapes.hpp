#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clr {

// Ordinary partition; stored without trailing zeros.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    bool empty() const { return parts.empty(); }
    // part i (0-based), zero past the end
    int operator[](int i) const { return i < length() ? parts[i] : 0; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;
};

// Weakly decreasing integer vector of fixed length n (an element of Z_+^n).
struct GenPartition {
    std::vector<int> parts;

    GenPartition() = default;
    GenPartition(std::initializer_list<int> p);
    explicit GenPartition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const;
    int operator[](int i) const { return parts.at(i); }
    int first() const { return parts.front(); }
    int last() const { return parts.back(); }

    GenPartition shifted(int p) const;  // λ + (p^n)
    GenPartition star() const;          // (−λ_n, …, −λ_1)
    bool is_partition() const;          // all parts ≥ 0
    Partition to_partition() const;     // requires is_partition()
    static GenPartition pad(const Partition& p, int n);

    auto operator<=>(const GenPartition&) const = default;
    bool operator==(const GenPartition&) const = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition o, Partition i);
    int size() const { return outer.size() - inner.size(); }
};

// Polynomial in t with integer coefficients; zero coefficients are never stored.
class TPoly {
public:
    TPoly() = default;
    TPoly(long long c) { add_term(0, c); }
    static TPoly monomial(int e, long long c = 1);

    void add_term(int e, long long c);
    const std::map<int, long long>& terms() const { return c_; }
    long long coeff(int e) const;
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    int low_degree() const { return c_.empty() ? -1 : c_.begin()->first; }
    long long eval1() const;
    long long eval0() const { return coeff(0); }
    TPoly truncated(int T) const;  // drop t^{>T}

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly operator+(const TPoly& o) const { TPoly r = *this; r += o; return r; }
    TPoly operator-(const TPoly& o) const { TPoly r = *this; r -= o; return r; }
    TPoly operator-() const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator<(const TPoly& o) const { return c_ < o.c_; }

    // exact division by a polynomial with constant term ±1
    TPoly divided_by(const TPoly& d) const;

    std::string to_string() const;

private:
    std::map<int, long long> c_;
};

Partition conjugate(const Partition& lam);
bool contains(const Partition& outer, const Partition& inner);
bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

// c^λ_{μν} by counting skew LR tableaux of shape λ/μ and content ν.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// c^λ_{μν} for λ ∈ Z_+^{m+n}, μ ∈ Z_+^m, ν ∈ Z_+^n, reduced by a common shift.
long long gen_lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu);

// c^λ_{μν} with all three in Z_+^n: GL_n tensor multiplicity, shift λ by 2p and μ, ν by p.
long long gl_lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu);

// Charge of a word whose content is a partition.
int charge(const std::vector<int>& word);

// Kostka-Foulkes polynomial K_{λμ}(t), reduced to partitions by a common shift.
TPoly kostka_foulkes(const GenPartition& lam, const GenPartition& mu);
long long kostka_number(const Partition& lam, const std::vector<int>& content);

// SSYT of shape λ and given content, as row lists.
std::vector<std::vector<std::vector<int>>> ssyt_with_content(const Partition& lam,
                                                            const std::vector<int>& content);

// Enumeration helpers.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int max_len, int max_part);
std::vector<Partition> partitions_up_to(int n, int max_len = 1 << 20);
// all λ ∈ Z_+^n with lo ≤ λ_i ≤ hi
std::vector<GenPartition> gen_partitions(int n, int lo, int hi);
// all λ ∈ Z_+^n with lo ≤ λ_i ≤ hi and Σλ = s
std::vector<GenPartition> gen_partitions_sum(int n, int lo, int hi, int s);
long long standard_tableaux_count(const Partition& lam);

// Lexicographic order on Z_+^n: true iff a > b.
bool lex_greater(const GenPartition& a, const GenPartition& b);
// Dominance on equal-sum vectors of equal length.
bool dominates(const GenPartition& a, const GenPartition& b);

// Text syntax: "3,1" (empty string is ∅), "2,0,-1", "3,1/1".
Partition parse_partition(const std::string& s);
GenPartition parse_gen_partition(const std::string& s);
SkewShape parse_skew(const std::string& s);
std::string to_string(const Partition& p);
std::string to_string(const GenPartition& p);

struct parse_error : std::runtime_error {
    std::string token;
    parse_error(const std::string& what, std::string tok)
        : std::runtime_error(what), token(std::move(tok)) {}
};

}  // namespace clr
