#include "crystal_lr/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "crystal_lr/characters.hpp"
#include "crystal_lr/crystal.hpp"
#include "crystal_lr/hall_littlewood.hpp"
#include "crystal_lr/lr_engine.hpp"
#include "crystal_lr/matrix.hpp"
#include "crystal_lr/parallel.hpp"
#include "crystal_lr/shapes.hpp"
#include "crystal_lr/zring.hpp"

namespace clr {

namespace {

using Clock = std::chrono::steady_clock;
using CaseFn = std::function<std::optional<std::string>(std::size_t)>;

// Runs body over [0, n); the reported counterexample is the failing case of lowest index.
CheckResult run_cases(std::string name, int criterion, std::size_t n, const SuiteConfig& cfg, const CaseFn& body) {
    CheckResult r;
    r.name = std::move(name);
    r.criterion = criterion;
    const auto t0 = Clock::now();
    std::vector<std::optional<std::string>> bad(n);
    std::atomic<long long> failures{0};
    parallel_for(n, resolve_threads(cfg.threads), [&](std::size_t i) {
        try {
            bad[i] = body(i);
        } catch (const std::exception& e) {
            bad[i] = std::string("exception: ") + e.what();
        }
        if (bad[i]) ++failures;
    });
    r.cases = static_cast<long long>(n);
    r.failures = failures;
    for (auto& b : bad)
        if (b) {
            r.counterexample = *b;
            break;
        }
    r.pass = r.failures == 0;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

Partition column(int k) { return Partition(std::vector<int>(k, 1)); }

std::vector<Partition> shapes_up_to(int size, int max_len) {
    std::vector<Partition> out;
    for (int s = 0; s <= size; ++s)
        for (auto& p : partitions_of(s, max_len, s)) out.push_back(p);
    return out;
}

std::vector<GenPartition> gen_grid(int max_n, int lo, int hi, int min_n = 1) {
    std::vector<GenPartition> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& g : gen_partitions(n, lo, hi)) out.push_back(g);
    return out;
}

GenPartition shift_all(const GenPartition& g, int d) { return g.shifted(d); }

template <class K, class V>
class Memo {
public:
    // references stay valid: map nodes never move
    template <class F>
    const V& get(const K& k, F compute) {
        {
            std::lock_guard<std::mutex> lock(m_);
            auto it = cache_.find(k);
            if (it != cache_.end()) return it->second;
        }
        V v = compute();
        std::lock_guard<std::mutex> lock(m_);
        return cache_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex m_;
    std::map<K, V> cache_;
};

}  // namespace

// ---- 1: LR coefficients against crystal components ----

CheckResult check_lr_oracle(const SuiteConfig& cfg) {
    const int total = cfg.quick ? 5 : 7;
    const int top = 6;
    std::vector<std::pair<Partition, Partition>> pairs;
    for (auto& mu : shapes_up_to(total, 4))
        for (auto& nu : shapes_up_to(total - mu.size(), 4)) pairs.emplace_back(mu, nu);

    Memo<Partition, std::vector<Word>> words;
    auto words_of = [&](const Partition& p) -> const std::vector<Word>& {
        return words.get(p, [&] {
            std::vector<Word> out;
            for (auto& t : enumerate_sst(p, 1, top)) out.push_back(tableau_word(t));
            return out;
        });
    };
    auto r = run_cases("lr-oracle", 1, pairs.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& [mu, nu] = pairs[i];
        std::map<Partition, long long> count;
        for (auto& c : decompose_components(tensor_words({words_of(mu), words_of(nu)}), 1, top - 1)) {
            std::vector<int> parts;
            for (int k = 1; k <= top; ++k) parts.push_back(c.highest_weight.coeff(k));
            if (!std::is_sorted(parts.rbegin(), parts.rend()) || c.highest_weight.level != 0)
                return "non-dominant highest weight " + c.highest_weight.to_string();
            Partition lam(parts);
            if (c.size != words_of(lam).size())
                return "component of highest weight " + to_string(lam) + " has size " + std::to_string(c.size);
            count[lam] += static_cast<long long>(c.multiplicity);
        }
        for (auto& lam : partitions_of(mu.size() + nu.size(), top, mu.size() + nu.size())) {
            long long want = lr_coefficient(lam, mu, nu);
            long long got = count.count(lam) ? count[lam] : 0;
            if (want != got)
                return "c(" + to_string(lam) + "; " + to_string(mu) + ", " + to_string(nu) + ") = " +
                       std::to_string(want) + " but " + std::to_string(got) + " components";
        }
        return std::nullopt;
    });
    r.note = "|mu|+|nu| <= " + std::to_string(total) + ", l <= 4, letters 1.." + std::to_string(top);
    return r;
}

// ---- 2: the two crystal structures on binary matrices commute ----

CheckResult check_bicrystal(const SuiteConfig& cfg) {
    const std::size_t n = cfg.quick ? 1000 : 10000;
    std::vector<BinaryMatrix> mats;
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t it = 0; it < n; ++it) {
        BinaryMatrix A({1, 4}, {1, 7});
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 7; ++j) A.set(i, j, static_cast<int>(rng() & 1));
        mats.push_back(std::move(A));
    }
    auto r = run_cases("bicrystal", 2, n, cfg, [&](std::size_t idx) -> std::optional<std::string> {
        const BinaryMatrix& A = mats[idx];
        for (int k = 1; k <= 6; ++k)
            for (int l = 1; l <= 3; ++l)
                for (int x = 0; x < 2; ++x)
                    for (int X = 0; X < 2; ++X) {
                        auto col = [&](const BinaryMatrix& M) { return x ? matrix_lower(M, k) : matrix_raise(M, k); };
                        auto row = [&](const BinaryMatrix& M) { return X ? cap_lower(M, l) : cap_raise(M, l); };
                        auto a = row(A);
                        auto lhs = a ? col(*a) : std::nullopt;
                        auto b = col(A);
                        auto rhs = b ? row(*b) : std::nullopt;
                        if (lhs != rhs)
                            return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + (x ? "f" : "e") +
                                   " X=" + (X ? "F" : "E") + "\n" + A.to_string();
                    }
        return std::nullopt;
    });
    r.note = std::to_string(n) + " random 4x7 matrices, seed " + std::to_string(cfg.seed);
    return r;
}

// ---- 3: bicrystal components of all binary matrices ----

CheckResult check_duality_en(const SuiteConfig& cfg) {
    const int rows = cfg.quick ? 2 : 3, cols = cfg.quick ? 4 : 5;
    const auto t0 = Clock::now();
    const int bits = rows * cols;
    const std::size_t total = std::size_t(1) << bits;
    auto decode_m = [&](std::size_t code) {
        BinaryMatrix A({1, rows}, {1, cols});
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) A.set(i + 1, j + 1, static_cast<int>((code >> (i * cols + j)) & 1));
        return A;
    };
    auto encode_m = [&](const BinaryMatrix& A) {
        std::size_t code = 0;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (A.at(i + 1, j + 1)) code |= std::size_t(1) << (i * cols + j);
        return code;
    };
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> is_source(total, 1);
    for (std::size_t c = 0; c < total; ++c) {
        BinaryMatrix A = decode_m(c);
        auto link = [&](const std::optional<BinaryMatrix>& B, bool up) {
            if (!B) return;
            if (up) is_source[c] = 0;
            std::size_t a = find(c), b = find(encode_m(*B));
            if (a != b) parent[a] = b;
        };
        for (int k = 1; k < cols; ++k) {
            link(matrix_raise(A, k), true);
            link(matrix_lower(A, k), false);
        }
        for (int l = 1; l < rows; ++l) {
            link(cap_raise(A, l), true);
            link(cap_lower(A, l), false);
        }
    }
    std::map<std::size_t, std::size_t> comp_size;
    std::map<std::size_t, std::vector<std::size_t>> comp_sources;
    for (std::size_t c = 0; c < total; ++c) {
        ++comp_size[find(c)];
        if (is_source[c]) comp_sources[find(c)].push_back(c);
    }
    CheckResult r;
    r.name = "duality-en";
    r.criterion = 3;
    std::map<Partition, std::size_t> seen;
    auto fail = [&](const std::string& why) {
        ++r.failures;
        if (r.counterexample.empty()) r.counterexample = why;
    };
    for (auto& [root, size] : comp_size) {
        ++r.cases;
        auto& src = comp_sources[root];
        if (src.size() != 1) {
            fail("component with " + std::to_string(src.size()) + " sources");
            continue;
        }
        BinaryMatrix A = decode_m(src[0]);
        std::vector<int> colsum(cols, 0), rowsum(rows, 0);
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) {
                colsum[j - 1] += A.at(i, j);
                rowsum[i - 1] += A.at(i, j);
            }
        if (!std::is_sorted(colsum.rbegin(), colsum.rend())) {
            fail("source column weight is not a partition\n" + A.to_string());
            continue;
        }
        Partition mu(colsum);
        if (Partition(rowsum) != conjugate(mu) || !std::is_sorted(rowsum.rbegin(), rowsum.rend())) {
            fail("source row weight is not the conjugate of " + to_string(mu) + "\n" + A.to_string());
            continue;
        }
        std::size_t want = enumerate_sst(mu, 1, cols).size() * enumerate_sst(conjugate(mu), 1, rows).size();
        if (size != want) fail("component " + to_string(mu) + " has size " + std::to_string(size));
        ++seen[mu];
    }
    std::size_t expected_count = 0;
    for (int s = 0; s <= bits; ++s)
        for (auto& mu : partitions_of(s, cols, rows)) {
            ++expected_count;
            if (seen[mu] != 1) fail("shape " + to_string(mu) + " occurs " + std::to_string(seen[mu]) + " times");
        }
    if (seen.size() != expected_count) fail("unexpected shapes among the components");
    r.pass = r.failures == 0;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.note = std::to_string(total) + " matrices " + std::to_string(rows) + "x" + std::to_string(cols) + ", " +
             std::to_string(r.cases) + " components";
    return r;
}

// ---- 4, 5: verifier fixtures ----

CheckResult check_pieri(const SuiteConfig& cfg) {
    const int amax = cfg.quick ? 2 : 3;
    const Interval win = cfg.quick ? Interval{-4, 4} : Interval{-5, 5};
    struct Case {
        GenPartition lam;
        int a;
        bool dual;
    };
    std::vector<Case> cases;
    for (int d = 0; d < 2; ++d)
        for (auto& lam : gen_partitions(2, -2, 2))
            for (int a = 0; a <= amax; ++a) cases.push_back({lam, a, d == 1});
    VerifyOptions opt;
    opt.margin = cfg.margin;
    opt.threads = 1;
    auto r = run_cases("pieri", 4, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& c = cases[i];
        Factor hw{Factor::Kind::Hw, c.lam, {}, {}};
        Factor col;
        (c.dual ? col.nu : col.mu) = column(c.a);
        auto pred = pieri_column(c.lam, c.a, c.dual);
        for (auto& [cls, m] : pred.terms)
            if (m != 1) return "multiplicity " + std::to_string(m) + " at " + to_string(cls);
        auto rep = verify_truncated({hw, col}, win, pred, opt);
        if (!rep.match)
            return to_string(hw) + " * " + to_string(col) + (c.dual ? " (dual)" : "") + ": " + rep.discrepancy;
        return std::nullopt;
    });
    r.note = "lambda in Z+^2 with |parts| <= 2, a <= " + std::to_string(amax) + ", window [" + std::to_string(win.lo) +
             "," + std::to_string(win.hi) + "]";
    return r;
}

CheckResult check_level_one(const SuiteConfig& cfg) {
    const Interval win{-4, 4};
    struct Case {
        std::vector<Factor> lhs;
        Decomposition pred;
        std::string label;
    };
    std::vector<Case> cases;
    // B(Λ_i) ⊗ B(Λ_j)^∨ = ⊔_a B_{(1^a),(1^{a+j-i})}
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            Case c;
            c.lhs = {Factor{Factor::Kind::Hw, GenPartition{i}, {}, {}}, Factor{Factor::Kind::HwDual, GenPartition{j}, {}, {}}};
            for (int a = 0; a <= 10; ++a)
                if (a + j - i >= 0) c.pred.add({column(a), column(a + j - i), std::nullopt, false}, 1);
            c.label = "B(" + std::to_string(i) + ")*Bdual(" + std::to_string(j) + ")";
            cases.push_back(std::move(c));
        }
    // B(Λ_i) ⊗ B_{(1^k)} = ⊔_{a ≤ k} B_{(1^a)} ⊗ B(Λ_{i+k-a})
    for (int i = -2; i <= 2; ++i)
        for (int k = 0; k <= 3; ++k) {
            Case c;
            Factor col;
            col.mu = column(k);
            c.lhs = {Factor{Factor::Kind::Hw, GenPartition{i}, {}, {}}, col};
            for (int a = 0; a <= k; ++a) c.pred.add({column(a), {}, GenPartition{i + k - a}, false}, 1);
            c.label = "B(" + std::to_string(i) + ")*Bcol(" + std::to_string(k) + ")";
            cases.push_back(std::move(c));
        }
    VerifyOptions opt;
    opt.margin = cfg.margin;
    opt.threads = 1;
    auto r = run_cases("level-one", 5, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto rep = verify_truncated(cases[i].lhs, win, cases[i].pred, opt);
        if (!rep.match) return cases[i].label + ": " + rep.discrepancy;
        if (rep.census.empty()) return cases[i].label + ": nothing compared";
        return std::nullopt;
    });
    r.note = "level 1-1 products for i,j in [-1,1] and column products for i in [-2,2], k <= 3, window [-4,4]";
    return r;
}

// ---- 6, 7, 9: operators on z-Schur elements ----

namespace {
const char* kSignNote = "sign convention: s+_1 z_0 = z_0 s+_1 + z_-1, so the +/- labels of the operators are exchanged";
}

CheckResult check_rho_s_lambda(const SuiteConfig& cfg) {
    const int nmax = cfg.quick ? 2 : 3;
    struct Case {
        GenPartition lam;
        Partition mu;
    };
    std::vector<Case> cases;
    for (auto& lam : gen_grid(nmax, -3, 3))
        for (auto& mu : shapes_up_to(4, 8)) cases.push_back({lam, mu});
    auto r = run_cases("s-action", 6, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& [lam, mu] = cases[i];
        const int n = lam.length();
        const Partition mc = conjugate(mu);
        const RElem z = z_schur(lam);
        RElem lowered = s_operator(Sign::Plus, mc, z);
        RElem raised = s_operator(Sign::Minus, mc, z);
        RElem want_lowered, want_raised;
        if (mu.length() <= n) {
            GenPartition g = GenPartition::pad(mu, n);
            want_lowered = z_skew_schur(lam, g);
            want_raised = z_skew_schur(lam, g.star());
        }
        std::string tag = "lambda=" + to_string(lam) + " mu=" + to_string(mu);
        if (!(lowered == want_lowered)) return "s+ " + tag + ": " + lowered.to_string() + " vs " + want_lowered.to_string();
        if (!(raised == want_raised)) return "s- " + tag + ": " + raised.to_string() + " vs " + want_raised.to_string();
        return std::nullopt;
    });
    r.note = std::string("n <= ") + std::to_string(nmax) + ", entries in [-3,3], |mu| <= 4; " + kSignNote;
    return r;
}

CheckResult check_skew_expansion(const SuiteConfig& cfg) {
    const int nmax = cfg.quick ? 2 : 3;
    std::vector<std::pair<GenPartition, GenPartition>> cases;
    for (auto& lam : gen_grid(nmax, -3, 3))
        for (auto& mu : gen_partitions(lam.length(), -3, 3)) cases.emplace_back(lam, mu);
    Memo<GenPartition, RElem> zs;
    auto r = run_cases("skew-expansion", 7, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& [lam, mu] = cases[i];
        const int n = lam.length();
        RElem sum;
        for (auto& nu : gen_partitions_sum(n, lam.last() - mu.first(), lam.first() - mu.last(), lam.sum() - mu.sum())) {
            long long c = gl_lr_coefficient(lam, mu, nu);
            if (c) sum += zs.get(nu, [&] { return z_schur(nu); }).scaled(c);
        }
        RElem skew = z_skew_schur(lam, mu);
        if (!(skew == sum)) return "lambda=" + to_string(lam) + " mu=" + to_string(mu) + ": " + skew.to_string() + " vs " + sum.to_string();
        return std::nullopt;
    });
    r.note = "n <= " + std::to_string(nmax) + ", lambda and mu entries in [-3,3]";
    return r;
}

CheckResult check_h_calculus(const SuiteConfig& cfg) {
    const int nmax = cfg.quick ? 3 : 4;
    auto grid = gen_grid(nmax, -2, 2);
    auto r = run_cases("h-calculus", 9, grid.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        const GenPartition& lam = grid[i];
        const int n = lam.length();
        const RElem z = z_schur(lam);
        const std::string tag = "lambda=" + to_string(lam);
        if (!(h_operator(Sign::Plus, n, z) == z_schur(shift_all(lam, -1)))) return "h+_n " + tag;
        if (!(h_operator(Sign::Minus, n, z) == z_schur(shift_all(lam, 1)))) return "h-_n " + tag;
        for (int k = 0; k <= n; ++k) {
            if (!(h_operator(Sign::Plus, n, h_operator(Sign::Minus, k, z)) == h_operator(Sign::Plus, n - k, z)))
                return "h+_n h-_" + std::to_string(k) + " " + tag;
            if (!(h_operator(Sign::Minus, n, h_operator(Sign::Plus, k, z)) == h_operator(Sign::Minus, n - k, z)))
                return "h-_n h+_" + std::to_string(k) + " " + tag;
        }
        return std::nullopt;
    });
    r.note = std::string("n <= ") + std::to_string(nmax) + ", entries in [-2,2]; " + kSignNote;
    return r;
}

// ---- 8: normal ordering in the Ore extension ----

CheckResult check_ore(const SuiteConfig& cfg) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = "ore";
    r.criterion = 8;
    auto fail = [&](const std::string& why) {
        ++r.failures;
        if (r.counterexample.empty()) r.counterexample = why;
    };
    for (int s = 0; s < 2; ++s) {
        const Sign sign = s ? Sign::Minus : Sign::Plus;
        for (int n = 1; n <= 5; ++n)
            for (int k = -5; k <= 5; ++k) {
                ++r.cases;
                DElem sn = DElem::s(sign, n), zk(RElem::z(k));
                DElem comm = d_multiply(sn, zk) - d_multiply(zk, sn);
                const long long sg = n % 2 ? 1 : -1;
                DElem want(RElem::z(sign == Sign::Plus ? k - n : k + n).scaled(sg));
                if (!(comm == want))
                    fail(std::string("[s") + sign_name(sign) + "_" + std::to_string(n) + ", z_" + std::to_string(k) +
                         "] = " + comm.to_string());
            }
    }
    // random normal-ordered monomials: degree <= 3, |k| <= 4, s-subscripts <= 3
    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto random_monomial = [&]() {
        DElem::Key key;
        std::vector<int> z(uniform(0, 3));
        for (auto& x : z) x = uniform(-4, 4);
        std::sort(z.rbegin(), z.rend());
        key.z = GenPartition(z);
        int ns = uniform(0, 3);
        for (int i = 0; i < ns; ++i) (uniform(0, 1) ? key.splus : key.sminus).push_back(uniform(1, 3));
        std::sort(key.splus.rbegin(), key.splus.rend());
        std::sort(key.sminus.rbegin(), key.sminus.rend());
        return DElem::term(key, Rational(1));
    };
    const int triples = cfg.quick ? 200 : 1000;
    for (int i = 0; i < triples; ++i) {
        ++r.cases;
        DElem a = random_monomial(), b = random_monomial(), c = random_monomial();
        if (!(d_multiply(d_multiply(a, b), c) == d_multiply(a, d_multiply(b, c))))
            fail("(ab)c != a(bc) for a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
    }
    r.pass = r.failures == 0;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.note = "commutators for n <= 5, |k| <= 5; " + std::to_string(triples) + " random triples, seed " + std::to_string(cfg.seed);
    return r;
}

// ---- 10: extremal LR rule against Laurent characters ----

namespace {

using Triple = std::tuple<GenPartition, Partition, Partition>;

struct CharacterOracle {
    Memo<Triple, Decomposition> past;
    Memo<std::pair<Partition, Partition>, std::map<Partition, long long>> products;
    Memo<std::tuple<GenPartition, int, int>, std::map<std::pair<GenPartition, GenPartition>, long long>> splits;

    static LaurentPoly schur_on(const GenPartition& g, int total, int offset) {
        return laurent_schur(g).embedded(total, offset);
    }

    // B(Λ_λ) ⊗ B_{μ,ν}: the multiplicity of B_{σ,τ} ⊗ B(Λ_ρ) is the coefficient of
    // s_λ(x)s_{μ'}(y)s_{ν'}(w) in s_ρ(x)s_{σ'}(y)s_{τ'}(w) Σ_α s_α(x^{-1})s_α(y) Σ_β s_β(x)s_β(w).
    Decomposition hw_past(const GenPartition& lam, const Partition& mu, const Partition& nu) {
        return past.get({lam, mu, nu}, [&] {
            Decomposition d;
            const int m = lam.length();
            if (m == 0) {
                d.add({mu, nu, std::nullopt, false}, 1);
                return d;
            }
            const int ny = std::max(mu[0], 1), nw = std::max(nu[0], 1), N = m + ny + nw;
            const Partition muc = conjugate(mu), nuc = conjugate(nu);
            const std::vector<GenPartition> target{lam, GenPartition::pad(muc, ny), GenPartition::pad(nuc, nw)};
            auto cauchy = [&](int deg, int other, int offset, bool invert) {
                LaurentPoly s(N);
                for (auto& a : partitions_of(deg, std::min(m, other), deg)) {
                    LaurentPoly x = laurent_schur(GenPartition::pad(a, m));
                    if (invert) x = x.inverted_vars();
                    s += x.embedded(N, 0) * schur_on(GenPartition::pad(a, other), N, offset);
                }
                return s;
            };
            for (int ss = 0; ss <= mu.size(); ++ss)
                for (auto& sigma : partitions_of(ss)) {
                    if (!contains(mu, sigma)) continue;
                    LaurentPoly left = cauchy(mu.size() - ss, ny, m, true);
                    for (int ts = 0; ts <= nu.size(); ++ts)
                        for (auto& tau : partitions_of(ts)) {
                            if (!contains(nu, tau)) continue;
                            LaurentPoly rest = left * cauchy(nu.size() - ts, nw, m + ny, false);
                            if (rest.is_zero()) continue;
                            const int rsum = lam.sum() + (mu.size() - ss) - (nu.size() - ts);
                            for (auto& rho : gen_partitions_sum(m, lam.last() - nu.size(), lam.first() + mu.size(), rsum)) {
                                LaurentPoly p = block_schur({rho, GenPartition::pad(conjugate(sigma), ny),
                                                             GenPartition::pad(conjugate(tau), nw)}) *
                                                rest;
                                auto coeffs = expand_blocks(p, {m, ny, nw});
                                auto it = coeffs.find(target);
                                if (it != coeffs.end()) d.add({sigma, tau, rho, false}, it->second);
                            }
                        }
                }
            return d;
        });
    }

    // s_a s_b = Σ c s_η, from Laurent products in enough variables
    std::map<Partition, long long> product(const Partition& a, const Partition& b) {
        return products.get({a, b}, [&] {
            std::map<Partition, long long> out;
            const int n = std::max(1, a.length() + b.length());
            LaurentPoly p = laurent_schur(GenPartition::pad(a, n)) * laurent_schur(GenPartition::pad(b, n));
            for (auto& [k, c] : expand_blocks(p, {n})) out[k[0].to_partition()] += c;
            return out;
        });
    }

    long long split(const GenPartition& zeta, const GenPartition& a, const GenPartition& b) {
        auto& s = splits.get({zeta, a.length(), b.length()}, [&] { return branch_split(zeta, a.length(), b.length()); });
        auto it = s.find({a, b});
        return it == s.end() ? 0 : it->second;
    }

    Decomposition extremal(const GenPartition& lam, const Partition& mu, const Partition& nu, const GenPartition& rho,
                           const Partition& sigma, const Partition& tau, const HwWindow& w) {
        Decomposition d;
        for (auto& [mid, c4] : hw_past(lam, sigma, tau).terms) {
            const GenPartition alpha = mid.hw.value_or(GenPartition());
            std::map<std::optional<GenPartition>, long long> zetas;
            if (alpha.length() == 0 && rho.length() == 0) zetas[std::nullopt] = 1;
            else if (alpha.length() == 0 || rho.length() == 0) {
                const GenPartition& g = alpha.length() ? alpha : rho;
                if (w.contains(g)) zetas[g] = 1;
            } else {
                for (auto& zeta : gen_partitions_sum(alpha.length() + rho.length(), w.lo, w.hi, alpha.sum() + rho.sum())) {
                    long long c = split(zeta, alpha, rho);
                    if (c) zetas[zeta] = c;
                }
            }
            if (zetas.empty()) continue;
            for (auto& [eta, c2] : product(mid.mu, mu))
                for (auto& [theta, c3] : product(mid.nu, nu))
                    for (auto& [zeta, c1] : zetas) d.add({eta, theta, zeta, false}, c1 * c2 * c3 * c4);
        }
        return d;
    }
};

}  // namespace

CheckResult check_extremal_lr(const SuiteConfig& cfg) {
    const int total = cfg.quick ? 2 : 4;
    const HwWindow window{-3, 3};
    auto hws = gen_grid(2, cfg.quick ? 0 : -1, 1, 0);
    auto shapes = shapes_up_to(total, 2);
    struct Case {
        GenPartition lam, rho;
        Partition mu, nu, sigma, tau;
    };
    std::vector<Case> cases;
    for (auto& lam : hws)
        for (auto& rho : hws)
            for (auto& mu : shapes)
                for (auto& nu : shapes)
                    for (auto& sigma : shapes)
                        for (auto& tau : shapes)
                            if (mu.size() + nu.size() + sigma.size() + tau.size() <= total)
                                cases.push_back({lam, rho, mu, nu, sigma, tau});
    CharacterOracle oracle;
    auto r = run_cases("extremal", 10, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& c = cases[i];
        const std::string tag = "(" + to_string(c.lam) + "," + to_string(c.mu) + "," + to_string(c.nu) + ") x (" +
                                to_string(c.rho) + "," + to_string(c.sigma) + "," + to_string(c.tau) + ")";
        auto past = hw_past_level0(c.lam, c.sigma, c.tau);
        auto past_oracle = oracle.hw_past(c.lam, c.sigma, c.tau);
        if (!(past == past_oracle))
            return "hw past level 0 " + tag + ": " + to_string(past) + " vs characters " + to_string(past_oracle);
        auto got = extremal_lr(c.lam, c.mu, c.nu, c.rho, c.sigma, c.tau, window);
        auto want = oracle.extremal(c.lam, c.mu, c.nu, c.rho, c.sigma, c.tau, window);
        if (!(got == want)) return tag + ": " + to_string(got) + " vs characters " + to_string(want);
        return std::nullopt;
    });
    r.note = std::string("m,n <= 2, hw parts in [") + (cfg.quick ? "0" : "-1") + ",1], total shape size <= " +
             std::to_string(total) + ", zeta window [-3,3]";
    return r;
}

// ---- 11: annihilator relations ----

CheckResult check_annihilator(const SuiteConfig& cfg) {
    const int nmax = cfg.quick ? 2 : 3;
    struct Case {
        int n;
        NamedRelation rel;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= nmax; ++n)
        for (auto& rel : annihilator_relations(n, n + 3)) cases.push_back({n, rel});
    auto r = run_cases("annihilator", 11, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& c = cases[i];
        for (auto& lam : gen_partitions(c.n, -3, 3)) {
            RElem out = d_apply(c.rel.element, z_schur(lam));
            if (!out.is_zero()) return c.rel.name + " on z" + to_string(lam) + " gives " + out.to_string();
        }
        return std::nullopt;
    });
    r.note = "n <= " + std::to_string(nmax) + ", k <= n+3, lambda entries in [-3,3]";
    return r;
}

// ---- 12, 13: Hall-Littlewood vertex operators ----

CheckResult check_hall_littlewood(const SuiteConfig& cfg) {
    const int maxsize = cfg.quick ? 4 : 6;
    std::vector<GenPartition> mus;
    for (int s = 0; s <= maxsize; ++s)
        for (auto& p : partitions_of(s, 3, s)) mus.push_back(GenPartition::pad(p, std::max(1, p.length())));
    Memo<GenPartition, std::map<GenPartition, TPoly>> pexp;
    auto r = run_cases("hall-littlewood", 12, mus.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        const GenPartition& mu = mus[i];
        const int n = mu.length();
        int nmu = 0;
        for (int k = 0; k < n; ++k) nmu += k * mu[k];
        const int T = nmu + 2;
        auto w = bt_word_action(mu, T);
        const std::string tag = "mu=" + to_string(mu);
        if (!w.complete) return tag + ": z-Schur expansion left a remainder";
        for (auto& [lam, p] : w.coeffs) {
            TPoly charge = kostka_foulkes(lam, mu);
            if (!(charge.truncated(T) == p)) return tag + " lambda=" + to_string(lam) + ": " + p.to_string() + " vs charge " + charge.to_string();
            auto& hl = pexp.get(lam, [&] { return schur_in_hall_littlewood(lam); });
            auto it = hl.find(mu);
            TPoly viaP = it == hl.end() ? TPoly() : it->second;
            if (!(viaP.truncated(T) == p)) return tag + " lambda=" + to_string(lam) + ": " + p.to_string() + " vs P-expansion " + viaP.to_string();
        }
        // nothing missing near mu
        for (auto& lam : gen_partitions_sum(n, mu.last() - 3, mu.first() + 3, mu.sum())) {
            TPoly want = kostka_foulkes(lam, mu).truncated(T);
            auto it = w.coeffs.find(lam);
            if (!want.is_zero() && it == w.coeffs.end()) return tag + " lambda=" + to_string(lam) + " missing";
        }
        // t = 0 gives z_{μ}; t = 1 gives the monomial z_{μ_1}⋯z_{μ_n}
        TRElem at0 = bt_word(mu.parts, TRElem(RElem(1), 0));
        if (!(at0.slice(0) == z_schur(mu))) return tag + ": t=0 gives " + at0.slice(0).to_string();
        RElem at1(1), mono(1);
        for (int k = n - 1; k >= 0; --k) {
            at1 = bt_apply_at_one(mu[k], at1, n + 2);
            mono = mono * RElem::z(mu[k]);
        }
        if (!(at1 == mono)) return tag + ": t=1 gives " + at1.to_string();
        return std::nullopt;
    });
    r.note = "partitions with |mu| <= " + std::to_string(maxsize) + ", l <= 3, T = n(mu)+2";
    return r;
}

CheckResult check_bt_relations(const SuiteConfig& cfg) {
    const int T = 2;
    std::vector<GenPartition> basis{GenPartition()};
    for (auto& g : gen_grid(2, cfg.quick ? -1 : -2, cfg.quick ? 1 : 2)) basis.push_back(g);
    struct Case {
        int m, n;
        bool bbar;
    };
    std::vector<Case> cases;
    for (int b = 0; b < 2; ++b)
        for (int m = -2; m <= 2; ++m)
            for (int n = -2; n <= 2; ++n) cases.push_back({m, n, b == 1});
    auto r = run_cases("bt-relations", 13, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& c = cases[i];
        for (auto& lam : basis) {
            TRElem sample(lam.length() ? z_schur(lam) : RElem(1), T);
            bool ok = c.bbar ? bt_bbar_commute_check(c.m, c.n, sample) : bt_commutator_check(c.m, c.n, sample);
            if (!ok)
                return std::string(c.bbar ? "Bbar_m b_n = b_n Bbar_m" : "exchange relation") + " fails for m=" +
                       std::to_string(c.m) + " n=" + std::to_string(c.n) + " on z" + to_string(lam);
        }
        return std::nullopt;
    });
    r.note = "m,n in [-2,2], " + std::to_string(basis.size()) + " basis elements of degree <= 2, modulo t^3";
    return r;
}

// ---- extra properties ----

CheckResult check_extremal_associativity(const SuiteConfig& cfg) {
    const HwWindow w{-4, 4};
    std::vector<ExtremalClass> singles{{Partition{1}, {}, std::nullopt, false},
                                       {{}, Partition{1}, std::nullopt, false},
                                       {{}, {}, GenPartition{0}, false},
                                       {{}, {}, GenPartition{1}, false},
                                       {{}, {}, GenPartition{-1}, false}};
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) triples.push_back({a, b, c});
    auto times = [&](const Decomposition& d, const ExtremalClass& x, bool left) {
        Decomposition out;
        for (auto& [c, m] : d.terms)
            for (auto& [c2, m2] : (left ? extremal_lr(c, x, w) : extremal_lr(x, c, w)).terms) out.add(c2, m * m2);
        return out;
    };
    auto inside = [&](const Decomposition& d) {
        Decomposition out;
        for (auto& [c, m] : d.terms)
            if (!c.hw || (c.hw->last() >= -2 && c.hw->first() <= 2)) out.add(c, m);
        return out;
    };
    return run_cases("extremal-associativity", 0, triples.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& [a, b, c] = triples[i];
        Decomposition ab = extremal_lr(singles[a], singles[b], w);
        Decomposition bc = extremal_lr(singles[b], singles[c], w);
        Decomposition left = inside(times(ab, singles[c], true)), right = inside(times(bc, singles[a], false));
        if (!(left == right)) return to_string(left) + " vs " + to_string(right);
        return std::nullopt;
    });
}

CheckResult check_commutativity(const SuiteConfig& cfg) {
    const HwWindow w{-3, 3};
    std::vector<ExtremalClass> classes;
    for (auto& hw : gen_grid(2, -1, 1, 0))
        for (auto& mu : shapes_up_to(2, 2))
            for (auto& nu : shapes_up_to(2 - mu.size(), 2))
                classes.push_back({mu, nu, hw.length() ? std::optional<GenPartition>(hw) : std::nullopt, false});
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    // the ring is not commutative; level 0 classes commute, and so do pure highest weight crystals
    auto pure = [](const ExtremalClass& c) { return c.mu.empty() && c.nu.empty(); };
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b) {
            auto& x = classes[a];
            auto& y = classes[b];
            if ((!x.hw && !y.hw) || (pure(x) && pure(y))) pairs.emplace_back(a, b);
        }
    return run_cases("commutativity", 0, pairs.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& x = classes[pairs[i].first];
        auto& y = classes[pairs[i].second];
        auto xy = extremal_lr(x, y, w), yx = extremal_lr(y, x, w);
        if (!(xy == yx)) return to_string(x) + " * " + to_string(y) + ": " + to_string(xy) + " vs " + to_string(yx);
        return std::nullopt;
    });
}

CheckResult check_derivation_law(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto random_elem = [&]() {
        RElem f;
        for (int t = uniform(1, 3); t > 0; --t) {
            std::vector<int> z(uniform(0, 2));
            for (auto& x : z) x = uniform(-3, 3);
            std::sort(z.rbegin(), z.rend());
            f.add_term(GenPartition(z), uniform(-2, 2));
        }
        return f;
    };
    struct Case {
        RElem f, g;
        int n;
        Sign s;
    };
    std::vector<Case> cases;
    for (int i = 0; i < (cfg.quick ? 50 : 300); ++i) cases.push_back({random_elem(), random_elem(), uniform(1, 3), uniform(0, 1) ? Sign::Plus : Sign::Minus});
    return run_cases("derivation-law", 0, cases.size(), cfg, [&](std::size_t i) -> std::optional<std::string> {
        auto& c = cases[i];
        RElem lhs = p_action(c.s, c.n, c.f * c.g);
        RElem rhs = p_action(c.s, c.n, c.f) * c.g + c.f * p_action(c.s, c.n, c.g);
        if (!(lhs == rhs)) return "f=" + c.f.to_string() + " g=" + c.g.to_string();
        if (!(omega(omega(c.f)) == c.f)) return "omega is not an involution on " + c.f.to_string();
        return std::nullopt;
    });
}

// ---- suite table ----

namespace {

using CheckFn = CheckResult (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, std::vector<CheckFn>>>& suite_table() {
    static const std::vector<std::pair<std::string, std::vector<CheckFn>>> table{
        {"lr-oracle", {check_lr_oracle}},
        {"bicrystal", {check_bicrystal}},
        {"duality-en", {check_duality_en}},
        {"pieri", {check_pieri, check_level_one}},
        {"s-action", {check_rho_s_lambda, check_skew_expansion, check_h_calculus, check_derivation_law}},
        {"ore", {check_ore}},
        {"extremal", {check_extremal_lr, check_extremal_associativity, check_commutativity}},
        {"annihilator", {check_annihilator}},
        {"hl", {check_hall_littlewood, check_bt_relations}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [n, f] : suite_table()) v.push_back(n);
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    bool found = false;
    for (auto& [n, fns] : suite_table())
        if (name == "all" || name == n) {
            found = true;
            for (auto f : fns) out.push_back(f(cfg));
        }
    if (!found) throw unknown_suite("unknown suite '" + name + "'");
    return out;
}

std::vector<CheckResult> acceptance_checks(const SuiteConfig& cfg) {
    const CheckFn order[] = {check_lr_oracle,    check_bicrystal,      check_duality_en, check_pieri,
                             check_level_one,    check_rho_s_lambda,   check_skew_expansion, check_ore,
                             check_h_calculus,   check_extremal_lr,    check_annihilator, check_hall_littlewood,
                             check_bt_relations};
    std::vector<CheckResult> out;
    for (auto f : order) out.push_back(f(cfg));
    return out;
}

}  // namespace clr
