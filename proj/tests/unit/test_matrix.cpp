#include <doctest.h>

#include "crystal_lr/matrix.hpp"

using namespace clr;

namespace {
BinaryMatrix M(const std::string& s) { return BinaryMatrix::parse(s); }

// all matrices over rows x cols
std::vector<BinaryMatrix> all_matrices(Interval rows, Interval cols) {
    const int n = rows.size() * cols.size();
    std::vector<BinaryMatrix> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        BinaryMatrix A(rows, cols);
        int b = 0;
        for (int i = rows.lo; i <= rows.hi; ++i)
            for (int j = cols.lo; j <= cols.hi; ++j) A.set(i, j, (mask >> b++) & 1);
        out.push_back(A);
    }
    return out;
}
}  // namespace

TEST_CASE("row operators") {
    RowVector v{{1, 2}, {1, 0}};
    CHECK(row_lower(v, 1) == RowVector{{1, 2}, {0, 1}});
    CHECK_FALSE(row_lower(RowVector{{1, 2}, {1, 1}}, 1).has_value());
    CHECK(row_raise(RowVector{{1, 2}, {0, 1}}, 1) == v);
}

TEST_CASE("admissibility is automatic for finite matrices") {
    CHECK(is_k_admissible(M("rows=1..1 cols=0..2\n010"), 0));
    CHECK(is_k_admissible(M("rows=1..3 cols=0..1\n10\n01\n11"), 0));
}

TEST_CASE("matrix operators follow the row signature") {
    auto A = M("rows=1..2 cols=1..2\n10\n10");
    CHECK(matrix_lower(A, 1) == M("rows=1..2 cols=1..2\n01\n10"));
    CHECK(matrix_phi(A, 1) == 2);

    auto B = M("rows=1..2 cols=1..2\n10\n01");
    CHECK_FALSE(matrix_lower(B, 1).has_value());
    CHECK_FALSE(matrix_raise(B, 1).has_value());

    auto C = M("rows=1..2 cols=1..2\n01\n10");
    CHECK(matrix_raise(C, 1) == M("rows=1..2 cols=1..2\n10\n10"));
    CHECK(matrix_lower(C, 1) == M("rows=1..2 cols=1..2\n01\n01"));
}

TEST_CASE("rho transpose") {
    BinaryMatrix one(Interval{2, 2}, Interval{3, 3}, 1);
    auto r = rho_transpose(one);
    CHECK(r.rows() == Interval{-3, -3});
    CHECK(r.cols() == Interval{2, 2});
    CHECK(r.at(-3, 2) == 1);

    auto id = M("rows=1..2 cols=1..2\n10\n01");
    auto t = rho_transpose(id);
    CHECK(t.rows() == Interval{-2, -1});
    CHECK(t.at(-1, 1) == 1);
    CHECK(t.at(-2, 2) == 1);
    CHECK(t.at(-1, 2) == 0);
    CHECK(rho_inverse(t) == id);

    BinaryMatrix z(Interval{0, 1}, Interval{1, 3});
    auto tz = rho_transpose(z);
    CHECK(tz == BinaryMatrix(Interval{-3, -1}, Interval{0, 1}));
}

TEST_CASE("column operators") {
    auto col = M("rows=1..2 cols=0..0\n1\n0");
    CHECK(cap_lower(col, 1) == M("rows=1..2 cols=0..0\n0\n1"));
    CHECK(cap_raise(M("rows=1..2 cols=0..0\n0\n1"), 1) == col);
    auto eq = M("rows=1..2 cols=0..2\n101\n101");
    CHECK_FALSE(cap_lower(eq, 1).has_value());
    CHECK_FALSE(cap_raise(eq, 1).has_value());
}

TEST_CASE("column operators are inverse on a 3x4 grid") {
    for (auto& A : all_matrices({1, 3}, {1, 4}))
        for (int l = 1; l <= 2; ++l)
            if (auto f = cap_lower(A, l)) REQUIRE(cap_raise(*f, l) == A);
}

TEST_CASE("row and column operators commute") {
    for (auto& A : all_matrices({1, 3}, {1, 4}))
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 2; ++l) {
                auto fa = matrix_lower(A, k);
                auto Fa = cap_lower(A, l);
                if (fa) {
                    auto x = cap_lower(*fa, l);
                    REQUIRE(x.has_value() == Fa.has_value());
                    if (Fa) REQUIRE(*x == *matrix_lower(*Fa, k));
                }
                CHECK(matrix_eps(A, k) == (Fa ? matrix_eps(*Fa, k) : matrix_eps(A, k)));
            }
}

TEST_CASE("matrix dual") {
    BinaryMatrix z(Interval{1, 2}, Interval{1, 3});
    CHECK(dual(z) == BinaryMatrix(Interval{1, 2}, Interval{1, 3}, 1));
    auto r = M("rows=1..1 cols=1..2\n10");
    CHECK(dual(r) == M("rows=1..1 cols=1..2\n01"));
    CHECK(matrix_lower(r, 1) == dual(*matrix_raise(dual(r), 1)));
    for (auto& A : all_matrices({1, 1}, {0, 4}))
        for (int k = 0; k <= 3; ++k) {
            auto f = matrix_lower(A, k);
            auto e = matrix_raise(dual(A), k);
            REQUIRE(f.has_value() == e.has_value());
            if (f) CHECK(*f == dual(*e));
        }
}

TEST_CASE("complementing rows reverses the tensor order") {
    // with several rows the complement alone flips (+,-) into (-,+)
    auto A = M("rows=1..2 cols=1..2\n10\n01");
    CHECK_FALSE(matrix_lower(A, 1).has_value());
    CHECK(matrix_raise(dual(A), 1).has_value());
    auto flip = [](const BinaryMatrix& B) {
        BinaryMatrix R(B.rows(), B.cols());
        for (int i = B.rows().lo; i <= B.rows().hi; ++i) R.set_row(B.rows().lo + B.rows().hi - i, B.row(i));
        return R;
    };
    for (auto& B : all_matrices({1, 3}, {0, 3})) {
        REQUIRE(dual(dual(B)) == B);
        for (int k = 0; k <= 2; ++k) {
            auto f = matrix_lower(B, k);
            auto e = matrix_raise(flip(dual(B)), k);
            REQUIRE(f.has_value() == e.has_value());
            if (f) CHECK(*f == dual(flip(*e)));
        }
    }
}

TEST_CASE("tableau embeddings") {
    Tableau empty{Partition(), Partition(), false, {}};
    CHECK(embed_sigma(empty, {0, 3}) == BinaryMatrix(Interval{1, 1}, Interval{0, 3}, 0));
    Tableau empty_dual{Partition(), Partition(), true, {}};
    CHECK(embed_tau(empty_dual, {0, 3}) == BinaryMatrix(Interval{1, 1}, Interval{0, 3}, 1));
    Tableau col{Partition{1, 1}, Partition(), false, {{L(1)}, {L(3)}}};
    auto s = embed_sigma(col, {0, 4});
    CHECK(s.rows().size() == 1);
    CHECK(s.row(s.rows().lo).bits == std::vector<std::uint8_t>{0, 1, 0, 1, 0});
}

TEST_CASE("embedding intertwines tableau and row operators") {
    for (auto& t : enumerate_sst(Partition{2, 2, 1}, 0, 3)) {
        auto A = embed_sigma(t, {0, 3});
        for (int k = 0; k <= 2; ++k) {
            auto f = lower(tableau_word(t), k);
            auto g = matrix_lower(A, k);
            REQUIRE(f.has_value() == g.has_value());
            if (f) CHECK(embed_sigma(*tableau_from_word(*f, t.outer, t.inner, false), {0, 3}) == *g);
        }
    }
}

TEST_CASE("maya weights") {
    CHECK(maya_weight(MayaRow::vacuum(0)) == Weight::fundamental(0));
    CHECK(maya_weight(MayaRow::vacuum(3)) == Weight::fundamental(3));
    CHECK(maya_weight(MayaRow::vacuum(-2)) == Weight::fundamental(-2));
    MayaRow e{MayaRow::Kind::E, 0, {2, 5}};
    CHECK(maya_weight(e) == Weight::epsilon(2) + Weight::epsilon(5));
    auto v = MayaRow::vacuum(1);
    CHECK(MayaRow::from_snapshot(MayaRow::Kind::F, 1, v.snapshot({-2, 3})) == v);
}
