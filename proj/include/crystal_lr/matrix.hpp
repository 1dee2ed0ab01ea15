#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal_lr/crystal.hpp"

namespace clr {

struct Interval {
    int lo = 0;
    int hi = -1;

    int size() const { return hi >= lo ? hi - lo + 1 : 0; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    Interval negated() const { return {-hi, -lo}; }
    bool operator==(const Interval&) const = default;
};

// 0/1 vector over an explicit column interval.
struct RowVector {
    Interval cols;
    std::vector<std::uint8_t> bits;

    static RowVector zeros(Interval c) { return {c, std::vector<std::uint8_t>(c.size(), 0)}; }
    int at(int j) const { return bits[j - cols.lo]; }
    void set(int j, int v) { bits[j - cols.lo] = static_cast<std::uint8_t>(v); }
    bool operator==(const RowVector&) const = default;
};

std::optional<RowVector> row_lower(const RowVector& v, int k);
std::optional<RowVector> row_raise(const RowVector& v, int k);

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(Interval rows, Interval cols, int fill = 0);

    const Interval& rows() const { return rows_; }
    const Interval& cols() const { return cols_; }
    int at(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, int v) { a_[index(i, j)] = static_cast<std::uint8_t>(v); }
    RowVector row(int i) const;
    void set_row(int i, const RowVector& r);

    // literal: "rows=1..2 cols=-1..3\n01010\n11000"
    static BinaryMatrix parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const BinaryMatrix&) const = default;
    bool operator<(const BinaryMatrix& o) const { return a_ < o.a_; }
    const std::vector<std::uint8_t>& data() const { return a_; }

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i - rows_.lo) * cols_.size() + static_cast<size_t>(j - cols_.lo);
    }
    Interval rows_;
    Interval cols_;
    std::vector<std::uint8_t> a_;
};

// Always true: all stored matrices have finitely many rows.
bool is_k_admissible(const BinaryMatrix& A, int k);

// gl_J operators: rows are tensor factors read top to bottom.
std::optional<BinaryMatrix> matrix_lower(const BinaryMatrix& A, int k);
std::optional<BinaryMatrix> matrix_raise(const BinaryMatrix& A, int k);
int matrix_eps(const BinaryMatrix& A, int k);
int matrix_phi(const BinaryMatrix& A, int k);

// (a_{i,-j}) in M_{-J,I}, and its inverse.
BinaryMatrix rho_transpose(const BinaryMatrix& A);
BinaryMatrix rho_inverse(const BinaryMatrix& B);

// gl_I operators conjugated through rho.
std::optional<BinaryMatrix> cap_lower(const BinaryMatrix& A, int l);
std::optional<BinaryMatrix> cap_raise(const BinaryMatrix& A, int l);

BinaryMatrix dual(const BinaryMatrix& A);

// Rows are the columns of T from right to left; empty T gives one constant row.
BinaryMatrix embed_sigma(const Tableau& T, Interval window);
BinaryMatrix embed_tau(const Tableau& T, Interval window);

struct window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the E-model (finite support) or F-model (charged Maya diagram).
struct MayaRow {
    enum class Kind { E, F };
    Kind kind = Kind::E;
    int charge = 0;            // F only: vacuum has a_k = 1 iff k <= charge
    std::set<int> delta;       // positions differing from the vacuum (E: the support)

    static MayaRow vacuum(int charge) { return {Kind::F, charge, {}}; }
    int at(int k) const;
    RowVector snapshot(Interval w) const;
    // inverse of snapshot; positions outside w keep the vacuum value
    static MayaRow from_snapshot(Kind kind, int charge, const RowVector& v);
    bool operator==(const MayaRow&) const = default;
};

Weight maya_weight(const MayaRow& v);

}  // namespace clr
