#include "crystal_lr/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace clr {

std::optional<RowVector> row_lower(const RowVector& v, int k) {
    if (!v.cols.contains(k) || !v.cols.contains(k + 1)) return std::nullopt;
    if (v.at(k) != 1 || v.at(k + 1) != 0) return std::nullopt;
    RowVector r = v;
    r.set(k, 0);
    r.set(k + 1, 1);
    return r;
}

std::optional<RowVector> row_raise(const RowVector& v, int k) {
    if (!v.cols.contains(k) || !v.cols.contains(k + 1)) return std::nullopt;
    if (v.at(k) != 0 || v.at(k + 1) != 1) return std::nullopt;
    RowVector r = v;
    r.set(k, 1);
    r.set(k + 1, 0);
    return r;
}

BinaryMatrix::BinaryMatrix(Interval rows, Interval cols, int fill)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows.size()) * cols.size(), static_cast<std::uint8_t>(fill)) {}

RowVector BinaryMatrix::row(int i) const {
    RowVector r = RowVector::zeros(cols_);
    for (int j = cols_.lo; j <= cols_.hi; ++j) r.set(j, at(i, j));
    return r;
}

void BinaryMatrix::set_row(int i, const RowVector& r) {
    for (int j = cols_.lo; j <= cols_.hi; ++j) set(i, j, r.at(j));
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Interval rows, cols;
    bool have_r = false, have_c = false;
    auto interval = [](const std::string& s, const std::string& tok) {
        auto dots = s.find("..");
        if (dots == std::string::npos) throw parse_error("bad interval", tok);
        try {
            return Interval{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        } catch (const std::exception&) {
            throw parse_error("bad interval", tok);
        }
    };
    while (!have_r || !have_c) {
        if (!(in >> tok)) throw parse_error("missing matrix header", text);
        if (tok.rfind("rows=", 0) == 0) {
            rows = interval(tok.substr(5), tok);
            have_r = true;
        } else if (tok.rfind("cols=", 0) == 0) {
            cols = interval(tok.substr(5), tok);
            have_c = true;
        } else {
            throw parse_error("unexpected header token", tok);
        }
    }
    BinaryMatrix A(rows, cols);
    for (int i = rows.lo; i <= rows.hi; ++i) {
        if (!(in >> tok) || static_cast<int>(tok.size()) != cols.size()) throw parse_error("bad matrix row", tok);
        for (int j = cols.lo; j <= cols.hi; ++j) {
            char ch = tok[j - cols.lo];
            if (ch != '0' && ch != '1') throw parse_error("bad matrix entry", tok);
            A.set(i, j, ch - '0');
        }
    }
    return A;
}

std::string BinaryMatrix::to_string() const {
    std::string s = "rows=" + std::to_string(rows_.lo) + ".." + std::to_string(rows_.hi) +
                    " cols=" + std::to_string(cols_.lo) + ".." + std::to_string(cols_.hi);
    for (int i = rows_.lo; i <= rows_.hi; ++i) {
        s += '\n';
        for (int j = cols_.lo; j <= cols_.hi; ++j) s += static_cast<char>('0' + at(i, j));
    }
    return s;
}

bool is_k_admissible(const BinaryMatrix&, int) { return true; }

namespace {

struct RowSignature {
    std::vector<int> minus;  // unmatched, top to bottom
    std::vector<int> plus;
};

RowSignature row_signature(const BinaryMatrix& A, int k) {
    RowSignature s;
    if (!A.cols().contains(k) || !A.cols().contains(k + 1)) return s;
    for (int i = A.rows().lo; i <= A.rows().hi; ++i) {
        int x = A.at(i, k), y = A.at(i, k + 1);
        if (x == 1 && y == 0) {
            s.plus.push_back(i);
        } else if (x == 0 && y == 1) {
            if (!s.plus.empty()) s.plus.pop_back();
            else s.minus.push_back(i);
        }
    }
    return s;
}

}  // namespace

std::optional<BinaryMatrix> matrix_lower(const BinaryMatrix& A, int k) {
    auto s = row_signature(A, k);
    if (s.plus.empty()) return std::nullopt;
    BinaryMatrix B = A;
    int i = s.plus.front();
    B.set(i, k, 0);
    B.set(i, k + 1, 1);
    return B;
}

std::optional<BinaryMatrix> matrix_raise(const BinaryMatrix& A, int k) {
    auto s = row_signature(A, k);
    if (s.minus.empty()) return std::nullopt;
    BinaryMatrix B = A;
    int i = s.minus.back();
    B.set(i, k, 1);
    B.set(i, k + 1, 0);
    return B;
}

int matrix_eps(const BinaryMatrix& A, int k) { return static_cast<int>(row_signature(A, k).minus.size()); }
int matrix_phi(const BinaryMatrix& A, int k) { return static_cast<int>(row_signature(A, k).plus.size()); }

BinaryMatrix rho_transpose(const BinaryMatrix& A) {
    BinaryMatrix B(A.cols().negated(), A.rows());
    for (int i = A.rows().lo; i <= A.rows().hi; ++i)
        for (int j = A.cols().lo; j <= A.cols().hi; ++j) B.set(-j, i, A.at(i, j));
    return B;
}

BinaryMatrix rho_inverse(const BinaryMatrix& B) {
    BinaryMatrix A(B.cols(), B.rows().negated());
    for (int i = A.rows().lo; i <= A.rows().hi; ++i)
        for (int j = A.cols().lo; j <= A.cols().hi; ++j) A.set(i, j, B.at(-j, i));
    return A;
}

std::optional<BinaryMatrix> cap_lower(const BinaryMatrix& A, int l) {
    auto r = matrix_lower(rho_transpose(A), l);
    if (!r) return std::nullopt;
    return rho_inverse(*r);
}

std::optional<BinaryMatrix> cap_raise(const BinaryMatrix& A, int l) {
    auto r = matrix_raise(rho_transpose(A), l);
    if (!r) return std::nullopt;
    return rho_inverse(*r);
}

BinaryMatrix dual(const BinaryMatrix& A) {
    BinaryMatrix B = A;
    for (int i = A.rows().lo; i <= A.rows().hi; ++i)
        for (int j = A.cols().lo; j <= A.cols().hi; ++j) B.set(i, j, 1 - A.at(i, j));
    return B;
}

namespace {

BinaryMatrix embed_columns(const Tableau& T, Interval window, bool complement) {
    if (T.dual != complement) throw std::invalid_argument("embed: tableau alphabet does not match the embedding");
    const int ncols = T.outer[0];
    if (ncols == 0) return BinaryMatrix({1, 1}, window, complement ? 1 : 0);
    BinaryMatrix A({1, ncols}, window, complement ? 1 : 0);
    int r = 1;
    for (int c = ncols - 1; c >= 0; --c, ++r) {
        for (int row = 0; row < T.outer.length(); ++row) {
            if (c < T.inner[row] || c >= T.outer[row]) continue;
            int x = T.rows[row][c - T.inner[row]].index;
            if (!window.contains(x)) throw window_error("embed: entry " + std::to_string(x) + " outside window");
            A.set(r, x, complement ? 0 : 1);
        }
    }
    return A;
}

}  // namespace

BinaryMatrix embed_sigma(const Tableau& T, Interval window) { return embed_columns(T, window, false); }
BinaryMatrix embed_tau(const Tableau& T, Interval window) { return embed_columns(T, window, true); }

int MayaRow::at(int k) const {
    int vac = kind == Kind::F && k <= charge ? 1 : 0;
    return delta.count(k) ? 1 - vac : vac;
}

RowVector MayaRow::snapshot(Interval w) const {
    RowVector r = RowVector::zeros(w);
    for (int k = w.lo; k <= w.hi; ++k) r.set(k, at(k));
    return r;
}

MayaRow MayaRow::from_snapshot(Kind kind, int charge, const RowVector& v) {
    MayaRow m{kind, kind == Kind::F ? charge : 0, {}};
    for (int k = v.cols.lo; k <= v.cols.hi; ++k) {
        int vac = kind == Kind::F && k <= charge ? 1 : 0;
        if (v.at(k) != vac) m.delta.insert(k);
    }
    return m;
}

Weight maya_weight(const MayaRow& v) {
    Weight w;
    if (v.kind == MayaRow::Kind::E) {
        for (int k : v.delta) w.add_eps(k, 1);
        return w;
    }
    w.level = 1;
    int lo = std::min(v.charge, 0), hi = std::max(v.charge, 1);
    if (!v.delta.empty()) {
        lo = std::min(lo, *v.delta.begin());
        hi = std::max(hi, *v.delta.rbegin());
    }
    for (int k = lo; k <= hi; ++k) {
        int a = v.at(k);
        w.add_eps(k, k > 0 ? a : a - 1);
    }
    return w;
}

}  // namespace clr
