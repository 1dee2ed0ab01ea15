#include "crystal_lr/shapes.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace clr {

namespace {

std::vector<int> strip_zeros(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

void check_decreasing(const std::vector<int>& p, const char* what) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::invalid_argument(std::string(what) + ": parts must weakly decrease");
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<size_t>(x + 0x9e3779b9);
        return h;
    }
};

}  // namespace

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) {
    p = strip_zeros(std::move(p));
    check_decreasing(p, "partition");
    for (int x : p)
        if (x < 0) throw std::invalid_argument("partition: negative part");
    parts = std::move(p);
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

GenPartition::GenPartition(std::initializer_list<int> p) : GenPartition(std::vector<int>(p)) {}

GenPartition::GenPartition(std::vector<int> p) {
    check_decreasing(p, "generalized partition");
    parts = std::move(p);
}

int GenPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

GenPartition GenPartition::shifted(int p) const {
    GenPartition r = *this;
    for (int& x : r.parts) x += p;
    return r;
}

GenPartition GenPartition::star() const {
    std::vector<int> r(parts.rbegin(), parts.rend());
    for (int& x : r) x = -x;
    return GenPartition(r);
}

bool GenPartition::is_partition() const { return parts.empty() || parts.back() >= 0; }

Partition GenPartition::to_partition() const { return Partition(parts); }

GenPartition GenPartition::pad(const Partition& p, int n) {
    if (p.length() > n) throw std::invalid_argument("pad: partition longer than target length");
    std::vector<int> r(n, 0);
    for (int i = 0; i < p.length(); ++i) r[i] = p.parts[i];
    return GenPartition(r);
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!contains(outer, inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
}

// ---- TPoly ----

TPoly TPoly::monomial(int e, long long c) {
    TPoly r;
    r.add_term(e, c);
    return r;
}

void TPoly::add_term(int e, long long c) {
    if (c == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

long long TPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

long long TPoly::eval1() const {
    long long s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

TPoly TPoly::truncated(int T) const {
    TPoly r;
    for (auto& [e, c] : c_)
        if (e <= T) r.c_.emplace(e, c);
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r;
    for (auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

TPoly TPoly::divided_by(const TPoly& d) const {
    long long d0 = d.coeff(0);
    if (d0 != 1 && d0 != -1) throw std::invalid_argument("TPoly division: divisor needs constant term ±1");
    TPoly q, r = *this;
    const int bound = degree();
    while (!r.is_zero()) {
        int e = r.low_degree();
        if (e > bound) throw std::runtime_error("TPoly division: not exact");
        long long c = r.coeff(e) * d0;
        q.add_term(e, c);
        r -= d * TPoly::monomial(e, c);
    }
    return q;
}

std::string TPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long a = c < 0 ? -c : c;
        if (e == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

// ---- shapes ----

Partition conjugate(const Partition& lam) {
    std::vector<int> c;
    int first = lam[0];
    for (int j = 1; j <= first; ++j) {
        int cnt = 0;
        for (int x : lam.parts)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(c);
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool is_horizontal_strip(const SkewShape& s) {
    // no two cells in one column: outer_{i+1} ≤ inner_i
    for (int i = 0; i + 1 < s.outer.length(); ++i)
        if (s.outer[i + 1] > s.inner[i]) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    for (int i = 0; i < s.outer.length(); ++i)
        if (s.outer[i] - s.inner[i] > 1) return false;
    return true;
}

namespace {

long long count_lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int rows = lam.length();
    const int L = nu.length();
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(lam[r], 0);
    std::vector<int> cnt(L + 2, 0);
    long long total = 0;

    std::function<void(int, int)> go = [&](int r, int c) {
        if (r == rows) {
            ++total;
            return;
        }
        if (c == lam[r]) {
            // lattice condition on this row, read right to left
            std::vector<int> seen(L + 2, 0);
            for (int cc = lam[r] - 1; cc >= mu[r]; --cc) {
                int v = fill[r][cc];
                seen[v]++;
                (void)v;
            }
            // counts before this row = cnt - seen; check prefix condition while reading
            std::vector<int> run(L + 2, 0);
            for (int v = 1; v <= L; ++v) run[v] = cnt[v] - seen[v];
            for (int cc = lam[r] - 1; cc >= mu[r]; --cc) {
                int v = fill[r][cc];
                run[v]++;
                if (v > 1 && run[v] > run[v - 1]) return;
            }
            go(r + 1, r + 1 < rows ? mu[r + 1] : 0);
            return;
        }
        int lo = 1;
        if (c > mu[r]) lo = fill[r][c - 1];
        if (r > 0 && c >= mu[r - 1] && c < lam[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
        int hi = std::min(L, r + 1);
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v] >= nu[v - 1]) continue;
            fill[r][c] = v;
            cnt[v]++;
            go(r, c + 1);
            cnt[v]--;
        }
        fill[r][c] = 0;
    };
    if (rows == 0) return (nu.empty() && mu.empty()) ? 1 : 0;
    go(0, mu[0]);
    return total;
}

std::mutex lr_mutex;
std::unordered_map<std::vector<int>, long long, VecHash> lr_cache;

}  // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!contains(lam, mu) || !contains(lam, nu)) return 0;
    if (mu.empty()) return lam == nu ? 1 : 0;
    if (nu.empty()) return lam == mu ? 1 : 0;
    std::vector<int> key;
    key.reserve(lam.length() + mu.length() + nu.length() + 3);
    for (const Partition* p : {&lam, &mu, &nu}) {
        key.push_back(-1 - p->length());
        key.insert(key.end(), p->parts.begin(), p->parts.end());
    }
    {
        std::lock_guard<std::mutex> g(lr_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    long long v = count_lr_tableaux(lam, mu, nu);
    std::lock_guard<std::mutex> g(lr_mutex);
    lr_cache.emplace(std::move(key), v);
    return v;
}

long long gen_lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu) {
    if (lam.length() != mu.length() + nu.length())
        throw std::invalid_argument("gen_lr_coefficient: length of λ must equal the sum of lengths");
    if (lam.sum() != mu.sum() + nu.sum()) return 0;
    int lo = 0;
    for (const GenPartition* p : {&lam, &mu, &nu})
        if (p->length() > 0) lo = std::min(lo, p->last());
    int p = -lo;
    if (lam.length() == 0) return 1;
    return lr_coefficient(lam.shifted(p).to_partition(),
                          mu.length() ? mu.shifted(p).to_partition() : Partition(),
                          nu.length() ? nu.shifted(p).to_partition() : Partition());
}

long long gl_lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu) {
    if (lam.length() != mu.length() || lam.length() != nu.length())
        throw std::invalid_argument("gl_lr_coefficient: lengths must agree");
    if (lam.sum() != mu.sum() + nu.sum()) return 0;
    if (lam.length() == 0) return 1;
    int p = std::max({0, -mu.last(), -nu.last(), (-lam.last() + 1) / 2});
    GenPartition l2 = lam.shifted(2 * p);
    if (!l2.is_partition()) return 0;
    return lr_coefficient(l2.to_partition(), mu.shifted(p).to_partition(), nu.shifted(p).to_partition());
}

// ---- Kostka-Foulkes ----

int charge(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<bool> used(n, false);
    int remaining = n;
    int total = 0;
    while (remaining > 0) {
        int m = 0;
        {
            std::vector<int> present;
            for (int i = 0; i < n; ++i)
                if (!used[i]) present.push_back(word[i]);
            std::sort(present.begin(), present.end());
            present.erase(std::unique(present.begin(), present.end()), present.end());
            while (m < static_cast<int>(present.size()) && present[m] == m + 1) ++m;
        }
        if (m == 0) throw std::invalid_argument("charge: content is not a partition");
        int pos = n;  // scanning starts right of the last letter
        int index = 0;
        for (int v = 1; v <= m; ++v) {
            bool wrapped = false;
            int p = pos - 1;
            int found = -1;
            for (int steps = 0; steps < 2 * n + 1; ++steps) {
                if (p < 0) {
                    p = n - 1;
                    wrapped = true;
                }
                if (!used[p] && word[p] == v) {
                    found = p;
                    break;
                }
                --p;
            }
            if (found < 0) throw std::logic_error("charge: letter not found");
            if (v > 1 && wrapped) ++index;
            total += index;
            used[found] = true;
            --remaining;
            pos = found;
        }
    }
    return total;
}

std::vector<std::vector<std::vector<int>>> ssyt_with_content(const Partition& lam,
                                                            const std::vector<int>& content) {
    std::vector<std::vector<std::vector<int>>> out;
    const int rows = lam.length();
    std::vector<std::vector<int>> tab(rows);
    int total = 0;
    for (int c : content) total += c;
    if (total != lam.size()) return out;

    std::function<void(size_t, std::vector<int>)> go = [&](size_t v, std::vector<int> shape) {
        if (v == content.size()) {
            out.push_back(tab);
            return;
        }
        int need = content[v];
        // choose new row lengths: shape_i ≤ new_i ≤ min(lam_i, shape_{i-1})
        std::vector<int> nw = shape;
        std::function<void(int, int)> rows_go = [&](int i, int left) {
            if (i == rows) {
                if (left != 0) return;
                for (int r = 0; r < rows; ++r)
                    for (int k = shape[r]; k < nw[r]; ++k) tab[r].push_back(static_cast<int>(v) + 1);
                go(v + 1, nw);
                for (int r = 0; r < rows; ++r) tab[r].resize(shape[r]);
                return;
            }
            int hi = lam[i];
            if (i > 0) hi = std::min(hi, shape[i - 1]);
            for (int x = shape[i]; x <= hi && x - shape[i] <= left; ++x) {
                nw[i] = x;
                rows_go(i + 1, left - (x - shape[i]));
            }
            nw[i] = shape[i];
        };
        rows_go(0, need);
    };
    go(0, std::vector<int>(rows, 0));
    return out;
}

long long kostka_number(const Partition& lam, const std::vector<int>& content) {
    return static_cast<long long>(ssyt_with_content(lam, content).size());
}

namespace {
std::mutex kf_mutex;
std::unordered_map<std::vector<int>, TPoly, VecHash> kf_cache;
}  // namespace

TPoly kostka_foulkes(const GenPartition& lam, const GenPartition& mu) {
    if (lam.length() != mu.length()) throw std::invalid_argument("kostka_foulkes: length mismatch");
    if (lam.sum() != mu.sum()) throw std::invalid_argument("kostka_foulkes: degree mismatch");
    if (lam.length() == 0) return TPoly(1);
    int p = std::max({0, -lam.last(), -mu.last()});
    GenPartition L = lam.shifted(p), M = mu.shifted(p);
    if (!dominates(L, M)) return TPoly();
    std::vector<int> key = L.parts;
    key.push_back(-1);
    key.insert(key.end(), M.parts.begin(), M.parts.end());
    {
        std::lock_guard<std::mutex> g(kf_mutex);
        auto it = kf_cache.find(key);
        if (it != kf_cache.end()) return it->second;
    }
    Partition Lp = L.to_partition();
    std::vector<int> content = Partition(M.parts).parts;
    TPoly r;
    for (auto& tab : ssyt_with_content(Lp, content)) {
        std::vector<int> word;
        for (int row = static_cast<int>(tab.size()) - 1; row >= 0; --row)
            word.insert(word.end(), tab[row].begin(), tab[row].end());
        r.add_term(charge(word), 1);
    }
    std::lock_guard<std::mutex> g(kf_mutex);
    kf_cache.emplace(std::move(key), r);
    return r;
}

// ---- enumeration ----

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            go(left - x, x);
            cur.pop_back();
        }
    };
    go(n, max_part);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::vector<Partition> partitions_up_to(int n, int max_len) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k, max_len, k)) out.push_back(p);
    return out;
}

std::vector<GenPartition> gen_partitions(int n, int lo, int hi) {
    std::vector<GenPartition> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int cap) {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (int x = cap; x >= lo; --x) {
            cur.push_back(x);
            go(x);
            cur.pop_back();
        }
    };
    if (n == 0) return {GenPartition()};
    go(hi);
    return out;
}

std::vector<GenPartition> gen_partitions_sum(int n, int lo, int hi, int s) {
    std::vector<GenPartition> out;
    for (auto& g : gen_partitions(n, lo, hi))
        if (g.sum() == s) out.push_back(g);
    return out;
}

long long standard_tableaux_count(const Partition& lam) {
    Partition c = conjugate(lam);
    long long num = 1, den = 1;
    int n = lam.size();
    // n! / Π hooks, computed incrementally to stay exact
    std::vector<long long> hooks;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) hooks.push_back(lam[i] - j + c[j] - i - 1);
    for (int k = 2; k <= n; ++k) num *= k;
    for (long long h : hooks) den *= h;
    return num / den;
}

bool lex_greater(const GenPartition& a, const GenPartition& b) {
    for (int i = 0; i < std::min(a.length(), b.length()); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool dominates(const GenPartition& a, const GenPartition& b) {
    if (a.length() != b.length() || a.sum() != b.sum()) return false;
    long long sa = 0, sb = 0;
    for (int i = 0; i < a.length(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

// ---- text syntax ----

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty() || s == "0" || s == "∅") return out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw parse_error("empty entry in shape '" + s + "'", tok);
        tok = tok.substr(a, b - a + 1);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + tok + "' in shape '" + s + "'", tok);
        }
        if (used != tok.size()) throw parse_error("bad integer '" + tok + "' in shape '" + s + "'", tok);
        out.push_back(v);
    }
    return out;
}

}  // namespace

Partition parse_partition(const std::string& s) {
    auto v = parse_ints(s);
    try {
        return Partition(v);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + " in '" + s + "'", s);
    }
}

GenPartition parse_gen_partition(const std::string& s) {
    std::vector<int> v;
    if (s == "0") v = {0};
    else v = parse_ints(s);
    try {
        return GenPartition(v);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + " in '" + s + "'", s);
    }
}

SkewShape parse_skew(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(s), Partition());
    try {
        return SkewShape(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + " in '" + s + "'", s);
    }
}

std::string to_string(const Partition& p) {
    std::string r = "(";
    for (int i = 0; i < p.length(); ++i) r += (i ? "," : "") + std::to_string(p[i]);
    return r + ")";
}

std::string to_string(const GenPartition& p) {
    std::string r = "(";
    for (int i = 0; i < p.length(); ++i) r += (i ? "," : "") + std::to_string(p[i]);
    return r + ")";
}

}  // namespace clr
