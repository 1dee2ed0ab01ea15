#include "crystal_lr/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace clr {

// ---- Weight ----

int Weight::coeff(int i) const {
    auto it = eps.find(i);
    return it == eps.end() ? 0 : it->second;
}

void Weight::add_eps(int i, int c) {
    if (c == 0) return;
    int& v = eps[i];
    v += c;
    if (v == 0) eps.erase(i);
}

Weight& Weight::operator+=(const Weight& o) {
    level += o.level;
    for (auto& [i, c] : o.eps) add_eps(i, c);
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    level -= o.level;
    for (auto& [i, c] : o.eps) add_eps(i, -c);
    return *this;
}

Weight Weight::operator-() const {
    Weight r;
    r -= *this;
    return r;
}

int Weight::pairing(int i) const { return coeff(i) - coeff(i + 1) + (i == 0 ? level : 0); }

Weight Weight::epsilon(int i, int c) {
    Weight w;
    w.add_eps(i, c);
    return w;
}

Weight Weight::alpha(int i) {
    Weight w;
    w.add_eps(i, 1);
    w.add_eps(i + 1, -1);
    return w;
}

Weight Weight::fundamental(int i) {
    Weight w;
    w.level = 1;
    for (int k = 1; k <= i; ++k) w.add_eps(k, 1);
    for (int k = i + 1; k <= 0; ++k) w.add_eps(k, -1);
    return w;
}

Weight Weight::dominant(const GenPartition& lam) {
    Weight w;
    for (int x : lam.parts) w += fundamental(x);
    return w;
}

std::string Weight::to_string() const {
    std::string s;
    if (level) s += std::to_string(level) + "L0";
    for (auto& [i, c] : eps) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        int a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += "e" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::optional<GenPartition> dominant_index(const Weight& w) {
    const int n = w.level;
    if (n < 0) return std::nullopt;
    if (n == 0) {
        if (w.eps.empty()) return GenPartition();
        return std::nullopt;
    }
    int a = 1, b = 0;
    if (!w.eps.empty()) {
        a = std::min(a, w.eps.begin()->first);
        b = std::max(b, w.eps.rbegin()->first);
    }
    auto nge = [&](int k) { return k >= 1 ? w.coeff(k) : n + w.coeff(k); };
    int prev = n;
    for (int k = a - 1; k <= b + 1; ++k) {
        int v = nge(k);
        if (v < 0 || v > n || v > prev) return std::nullopt;
        prev = v;
    }
    std::vector<int> lam(n);
    for (int t = 1; t <= n; ++t) {
        int best = a - 1;
        for (int k = a - 1; k <= b; ++k)
            if (nge(k) >= t) best = k;
        lam[t - 1] = best;
    }
    GenPartition g(lam);
    if (Weight::dominant(g) != w) return std::nullopt;
    return g;
}

// ---- letters and words ----

int letter_eps(const Letter& b, int i) {
    if (!b.dual) return b.index == i + 1 ? 1 : 0;
    return b.index == i ? 1 : 0;
}

int letter_phi(const Letter& b, int i) {
    if (!b.dual) return b.index == i ? 1 : 0;
    return b.index == i + 1 ? 1 : 0;
}

Weight letter_weight(const Letter& b) { return Weight::epsilon(b.index, b.dual ? -1 : 1); }

namespace {

struct Signature {
    std::vector<int> minus;  // unmatched − positions, left to right
    std::vector<int> plus;   // unmatched + positions, left to right
};

Signature signature(const Word& w, int i) {
    Signature s;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (letter_eps(w[k], i)) {
            if (!s.plus.empty()) s.plus.pop_back();
            else s.minus.push_back(k);
        }
        if (letter_phi(w[k], i)) s.plus.push_back(k);
    }
    return s;
}

Letter letter_raise(Letter b, int i) {
    // caller guarantees letter_eps(b,i) == 1
    b.index = b.dual ? i + 1 : i;
    return b;
}

Letter letter_lower(Letter b, int i) {
    b.index = b.dual ? i : i + 1;
    return b;
}

}  // namespace

std::optional<Word> raise(const Word& w, int i) {
    Signature s = signature(w, i);
    if (s.minus.empty()) return std::nullopt;
    Word r = w;
    int k = s.minus.back();
    r[k] = letter_raise(r[k], i);
    return r;
}

std::optional<Word> lower(const Word& w, int i) {
    Signature s = signature(w, i);
    if (s.plus.empty()) return std::nullopt;
    Word r = w;
    int k = s.plus.front();
    r[k] = letter_lower(r[k], i);
    return r;
}

int eps(const Word& w, int i) { return static_cast<int>(signature(w, i).minus.size()); }
int phi(const Word& w, int i) { return static_cast<int>(signature(w, i).plus.size()); }

Weight weight(const Word& w) {
    Weight r;
    for (auto& b : w) r += letter_weight(b);
    return r;
}

Word weyl_reflect(const Word& w, int i) {
    int k = weight(w).pairing(i);
    Word r = w;
    for (; k > 0; --k) r = *lower(r, i);
    for (; k < 0; ++k) r = *raise(r, i);
    return r;
}

Word dual_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& b : r) b.dual = !b.dual;
    return r;
}

// ---- tableaux ----

bool is_semistandard(const Tableau& t) {
    const int rows = t.outer.length();
    if (static_cast<int>(t.rows.size()) != rows) return false;
    auto at = [&](int r, int c) -> const Letter& { return t.rows[r][c - t.inner[r]]; };
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.outer[r] - t.inner[r]) return false;
        for (auto& b : t.rows[r])
            if (b.dual != t.dual) return false;
        for (int c = t.inner[r] + 1; c < t.outer[r]; ++c)
            if (at(r, c).precedes(at(r, c - 1))) return false;
        if (r > 0)
            for (int c = std::max(t.inner[r], t.inner[r - 1]); c < std::min(t.outer[r], t.outer[r - 1]); ++c)
                if (!at(r - 1, c).precedes(at(r, c))) return false;
    }
    return true;
}

Word tableau_word(const Tableau& t) {
    Word w;
    const int rows = t.outer.length();
    for (int c = t.outer[0] - 1; c >= 0; --c)
        for (int r = 0; r < rows; ++r)
            if (t.inner[r] <= c && c < t.outer[r]) w.push_back(t.rows[r][c - t.inner[r]]);
    return w;
}

std::optional<Tableau> tableau_from_word(const Word& w, const Partition& outer, const Partition& inner,
                                         bool dual) {
    Tableau t;
    t.outer = outer;
    t.inner = inner;
    t.dual = dual;
    const int rows = outer.length();
    t.rows.resize(rows);
    for (int r = 0; r < rows; ++r) t.rows[r].resize(outer[r] - inner[r]);
    size_t k = 0;
    for (int c = outer[0] - 1; c >= 0; --c)
        for (int r = 0; r < rows; ++r)
            if (inner[r] <= c && c < outer[r]) {
                if (k >= w.size()) return std::nullopt;
                t.rows[r][c - inner[r]] = w[k++];
            }
    if (k != w.size()) return std::nullopt;
    return t;
}

std::vector<Tableau> enumerate_skew_sst(const SkewShape& s, int lo, int hi, bool dual) {
    std::vector<Tableau> out;
    const Partition& outer = s.outer;
    const Partition& inner = s.inner;
    const int rows = outer.length();
    // alphabet in crystal order, as positions 0..N-1
    std::vector<Letter> alphabet;
    if (!dual)
        for (int i = lo; i <= hi; ++i) alphabet.push_back(L(i));
    else
        for (int i = hi; i >= lo; --i) alphabet.push_back(Ld(i));
    const int N = static_cast<int>(alphabet.size());
    std::vector<std::vector<int>> f(rows);
    for (int r = 0; r < rows; ++r) f[r].assign(outer[r], -1);

    std::function<void(int, int)> go = [&](int r, int c) {
        if (r == rows) {
            Tableau t;
            t.outer = outer;
            t.inner = inner;
            t.dual = dual;
            t.rows.resize(rows);
            for (int rr = 0; rr < rows; ++rr)
                for (int cc = inner[rr]; cc < outer[rr]; ++cc) t.rows[rr].push_back(alphabet[f[rr][cc]]);
            out.push_back(std::move(t));
            return;
        }
        if (c == outer[r]) {
            go(r + 1, r + 1 < rows ? inner[r + 1] : 0);
            return;
        }
        int v0 = 0;
        if (c > inner[r]) v0 = f[r][c - 1];
        if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) v0 = std::max(v0, f[r - 1][c] + 1);
        for (int v = v0; v < N; ++v) {
            f[r][c] = v;
            go(r, c + 1);
        }
        f[r][c] = -1;
    };
    if (rows == 0) {
        Tableau t;
        t.outer = outer;
        t.inner = inner;
        t.dual = dual;
        out.push_back(t);
        return out;
    }
    go(0, inner[0]);
    return out;
}

std::vector<Tableau> enumerate_sst(const Partition& lam, int lo, int hi, bool dual) {
    return enumerate_skew_sst(SkewShape(lam, Partition()), lo, hi, dual);
}

// ---- components ----

namespace {

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = w.size();
        for (auto& b : w) h = h * 1000003u ^ static_cast<size_t>(b.index * 2 + (b.dual ? 1 : 0) + 0x9e3779b9);
        return h;
    }
};

}  // namespace

std::vector<Word> tensor_words(const std::vector<std::vector<Word>>& sets) {
    std::vector<Word> out{Word{}};
    for (auto& set : sets) {
        std::vector<Word> next;
        next.reserve(out.size() * set.size());
        for (auto& a : out)
            for (auto& b : set) {
                Word w = a;
                w.insert(w.end(), b.begin(), b.end());
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<ComponentInfo> decompose_components(const std::vector<Word>& S, int c_lo, int c_hi) {
    std::unordered_map<Word, int, WordHash> id;
    id.reserve(S.size() * 2);
    for (auto& w : S) id.emplace(w, -1);
    std::map<std::pair<Weight, size_t>, ComponentInfo> agg;
    int comp = 0;
    for (auto& start : S) {
        if (id[start] >= 0) continue;
        std::deque<const Word*> q;
        auto it0 = id.find(start);
        it0->second = comp;
        q.push_back(&it0->first);
        size_t size = 0;
        std::vector<const Word*> sources;
        while (!q.empty()) {
            const Word* w = q.front();
            q.pop_front();
            ++size;
            bool source = true;
            for (int i = c_lo; i <= c_hi; ++i) {
                for (int dir = 0; dir < 2; ++dir) {
                    auto nb = dir == 0 ? raise(*w, i) : lower(*w, i);
                    if (!nb) continue;
                    if (dir == 0) source = false;
                    auto it = id.find(*nb);
                    if (it == id.end()) throw closure_error("decompose_components: operator leaves the set");
                    if (it->second < 0) {
                        it->second = comp;
                        q.push_back(&it->first);
                    }
                }
            }
            if (source) sources.push_back(w);
        }
        if (sources.size() != 1)
            throw std::logic_error("decompose_components: component without a unique source");
        Weight hw = weight(*sources.front());
        auto key = std::make_pair(hw, size);
        auto& info = agg[key];
        if (info.multiplicity == 0) {
            info.highest_weight = hw;
            info.size = size;
            info.source = *sources.front();
        }
        info.multiplicity++;
        ++comp;
    }
    std::vector<ComponentInfo> out;
    for (auto& [k, v] : agg) out.push_back(v);
    return out;
}

bool is_equivalent(const Word& w1, const Word& w2, int c_lo, int c_hi, size_t max_size) {
    std::unordered_map<Word, Word, WordHash> fwd, bwd;
    std::deque<std::pair<Word, Word>> q;
    fwd.emplace(w1, w2);
    bwd.emplace(w2, w1);
    q.emplace_back(w1, w2);
    while (!q.empty()) {
        auto [a, b] = q.front();
        q.pop_front();
        for (int i = c_lo; i <= c_hi; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                auto na = dir == 0 ? raise(a, i) : lower(a, i);
                auto nb = dir == 0 ? raise(b, i) : lower(b, i);
                if (na.has_value() != nb.has_value()) return false;
                if (!na) continue;
                auto fa = fwd.find(*na);
                auto fb = bwd.find(*nb);
                if (fa != fwd.end() || fb != bwd.end()) {
                    if (fa == fwd.end() || fb == bwd.end() || fa->second != *nb || fb->second != *na) return false;
                    continue;
                }
                if (fwd.size() >= max_size) throw std::runtime_error("is_equivalent: component exceeds size bound");
                fwd.emplace(*na, *nb);
                bwd.emplace(*nb, *na);
                q.emplace_back(*na, *nb);
            }
        }
    }
    return true;
}

}  // namespace clr
