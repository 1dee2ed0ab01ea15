#include "crystal_lr/lr_engine.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "crystal_lr/parallel.hpp"

namespace clr {

// ---- classes and decompositions ----

int ExtremalClass::level() const {
    if (!hw) return 0;
    return dual ? -hw->length() : hw->length();
}

bool ExtremalClass::operator<(const ExtremalClass& o) const {
    if (level() != o.level()) return level() < o.level();
    if (hw != o.hw) return hw < o.hw;
    if (mu != o.mu) return mu < o.mu;
    if (nu != o.nu) return nu < o.nu;
    return dual < o.dual;
}

std::string to_string(const ExtremalClass& c) {
    std::string s = "B_{" + to_string(c.mu) + "," + to_string(c.nu) + "}";
    if (!c.hw) return s;
    if (c.dual) return "B(L" + to_string(*c.hw) + ")^v (x) " + s;
    return s + " (x) B(L" + to_string(*c.hw) + ")";
}

void Decomposition::add(const ExtremalClass& c, long long m) {
    if (m == 0) return;
    auto& v = terms[c];
    v += m;
    if (v == 0) terms.erase(c);
}

long long Decomposition::mult(const ExtremalClass& c) const {
    auto it = terms.find(c);
    return it == terms.end() ? 0 : it->second;
}

std::string to_string(const Decomposition& d) {
    std::string s;
    for (auto& [c, m] : d.terms) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += to_string(c);
    }
    return s.empty() ? "0" : s;
}

bool HwWindow::contains(const GenPartition& g) const {
    return g.length() == 0 || (g.last() >= lo && g.first() <= hi);
}

namespace {

ExtremalClass level0_class(Partition mu, Partition nu) { return {std::move(mu), std::move(nu), std::nullopt, false}; }

ExtremalClass hw_class(Partition mu, Partition nu, GenPartition hw) {
    if (hw.length() == 0) return level0_class(std::move(mu), std::move(nu));
    return {std::move(mu), std::move(nu), std::move(hw), false};
}

Partition column(int k) { return Partition(std::vector<int>(k, 1)); }

// partitions α ⊆ outer with ℓ(α) ≤ max_len
std::vector<Partition> sub_partitions(const Partition& outer, int max_len) {
    std::vector<Partition> out;
    for (auto& a : partitions_up_to(outer.size(), max_len))
        if (contains(outer, a)) out.push_back(a);
    return out;
}

}  // namespace

Decomposition level0_product(const Partition& mu, const Partition& nu, const Partition& sigma, const Partition& tau) {
    Decomposition d;
    auto etas = partitions_of(mu.size() + sigma.size());
    auto thetas = partitions_of(nu.size() + tau.size());
    for (auto& eta : etas) {
        long long c1 = lr_coefficient(eta, mu, sigma);
        if (!c1) continue;
        for (auto& theta : thetas) {
            long long c2 = lr_coefficient(theta, nu, tau);
            if (c2) d.add(level0_class(eta, theta), c1 * c2);
        }
    }
    return d;
}

std::map<GenPartition, long long> hw_product(const GenPartition& mu, const GenPartition& nu, const HwWindow& w) {
    std::map<GenPartition, long long> out;
    if (mu.length() == 0 || nu.length() == 0) {
        const GenPartition& g = mu.length() ? mu : nu;
        if (w.contains(g)) out[g] = 1;
        return out;
    }
    const int n = mu.length() + nu.length();
    for (auto& lam : gen_partitions_sum(n, w.lo, w.hi, mu.sum() + nu.sum())) {
        long long c = gen_lr_coefficient(lam, mu, nu);
        if (c) out[lam] = c;
    }
    return out;
}

Decomposition pieri_column(const GenPartition& lam, int a, bool dual) {
    if (a < 0) throw std::invalid_argument("pieri_column: a must be nonnegative");
    Decomposition d;
    const int n = lam.length();
    auto cls = [&](int k, GenPartition g) {
        return dual ? hw_class(Partition(), column(k), std::move(g)) : hw_class(column(k), Partition(), std::move(g));
    };
    if (n == 0) {
        d.add(cls(a, GenPartition()), 1);
        return d;
    }
    std::vector<int> cur(n);
    for (int k = 0; k <= a; ++k) {
        const int len = a - k;
        // box i of the strip goes in row i; rows interlace with λ
        std::function<void(int, int)> go = [&](int i, int left) {
            if (i == n) {
                if (left == 0) d.add(cls(k, GenPartition(cur)), 1);
                return;
            }
            int room;
            if (!dual) room = i == 0 ? left : std::min(left, lam[i - 1] - lam[i]);
            else room = i == n - 1 ? left : std::min(left, lam[i] - lam[i + 1]);
            for (int x = 0; x <= room; ++x) {
                cur[i] = dual ? lam[i] - x : lam[i] + x;
                go(i + 1, left - x);
            }
        };
        go(0, len);
    }
    return d;
}

Decomposition hw_past_level0(const GenPartition& lam, const Partition& mu, const Partition& nu) {
    Decomposition d;
    const int m = lam.length();
    if (m == 0) {
        d.add(level0_class(mu, nu), 1);
        return d;
    }
    const Partition muc = conjugate(mu), nuc = conjugate(nu);
    const auto alphas = sub_partitions(muc, m);
    const auto betas = sub_partitions(nuc, m);
    for (auto& alpha : alphas) {
        const GenPartition astar = GenPartition::pad(alpha, m).star();
        std::vector<std::pair<Partition, long long>> sigmas;
        for (auto& sc : partitions_of(mu.size() - alpha.size())) {
            long long c = lr_coefficient(muc, sc, alpha);
            if (c) sigmas.emplace_back(conjugate(sc), c);
        }
        if (sigmas.empty()) continue;
        for (auto& eta : gen_partitions_sum(m, lam.last(), lam.first() + alpha.size(), lam.sum() + alpha.size())) {
            long long c1 = gl_lr_coefficient(lam, eta, astar);
            if (!c1) continue;
            for (auto& beta : betas) {
                const GenPartition bpad = GenPartition::pad(beta, m);
                std::vector<std::pair<Partition, long long>> taus;
                for (auto& tc : partitions_of(nu.size() - beta.size())) {
                    long long c = lr_coefficient(nuc, tc, beta);
                    if (c) taus.emplace_back(conjugate(tc), c);
                }
                if (taus.empty()) continue;
                for (auto& rho : gen_partitions_sum(m, eta.last() - beta.size(), eta.first(), eta.sum() - beta.size())) {
                    long long c3 = gl_lr_coefficient(eta, rho, bpad);
                    if (!c3) continue;
                    for (auto& [sigma, c2] : sigmas)
                        for (auto& [tau, c4] : taus) d.add(hw_class(sigma, tau, rho), c1 * c2 * c3 * c4);
                }
            }
        }
    }
    return d;
}

Decomposition extremal_lr(const GenPartition& lam, const Partition& mu, const Partition& nu, const GenPartition& rho,
                          const Partition& sigma, const Partition& tau, const HwWindow& w) {
    Decomposition d;
    for (auto& [mid, c4] : hw_past_level0(lam, sigma, tau).terms) {
        const GenPartition alpha = mid.hw ? *mid.hw : GenPartition();
        auto hws = alpha.length() == 0 && rho.length() == 0 ? std::map<GenPartition, long long>{{GenPartition(), 1}}
                                                             : hw_product(alpha, rho, w);
        if (hws.empty()) continue;
        for (auto& [l0, c23] : level0_product(mu, nu, mid.mu, mid.nu).terms)
            for (auto& [zeta, c1] : hws) d.add(hw_class(l0.mu, l0.nu, zeta), c1 * c23 * c4);
    }
    return d;
}

Decomposition extremal_lr(const ExtremalClass& left, const ExtremalClass& right, const HwWindow& w) {
    if (left.dual || right.dual) throw level_error("extremal_lr: negative level classes go through dual()");
    return extremal_lr(left.hw.value_or(GenPartition()), left.mu, left.nu, right.hw.value_or(GenPartition()), right.mu,
                       right.nu, w);
}

std::pair<Partition, Partition> level0_canonical(const Weight& w) {
    if (w.level != 0) throw level_error("level0_canonical: weight has level " + std::to_string(w.level));
    std::vector<int> pos, neg;
    for (auto& [i, c] : w.eps) {
        if (c > 0) pos.push_back(c);
        else if (c < 0) neg.push_back(-c);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {Partition(pos), Partition(neg)};
}

// ---- tensor expressions ----

int Factor::level() const {
    switch (kind) {
        case Kind::Hw: return hw.length();
        case Kind::HwDual: return -hw.length();
        default: return 0;
    }
}

ExtremalClass Factor::as_class() const {
    switch (kind) {
        case Kind::Hw: return hw_class(Partition(), Partition(), hw);
        case Kind::HwDual: return {Partition(), Partition(), hw, true};
        default: return level0_class(mu, nu);
    }
}

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string no_space(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

std::string ints_string(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Factor parse_factor(const std::string& raw) {
    const std::string f = strip(raw);
    auto open = f.find('(');
    if (open == std::string::npos || f.back() != ')') throw parse_error("bad tensor factor '" + f + "'", f);
    const std::string name = strip(f.substr(0, open));
    const std::string args = no_space(f.substr(open + 1, f.size() - open - 2));
    Factor x;
    if (name == "B" || name == "Bdual") {
        if (args.empty()) throw parse_error("empty highest weight in '" + f + "'", f);
        x.kind = name == "B" ? Factor::Kind::Hw : Factor::Kind::HwDual;
        x.hw = parse_gen_partition(args);
    } else if (name == "Bmn") {
        auto semi = args.find(';');
        if (semi == std::string::npos) throw parse_error("Bmn needs 'mu;nu' in '" + f + "'", f);
        x.mu = parse_partition(args.substr(0, semi));
        x.nu = parse_partition(args.substr(semi + 1));
    } else if (name == "Bmu") {
        x.mu = parse_partition(args);
    } else if (name == "Bnu") {
        x.nu = parse_partition(args);
    } else if (name == "Bcol" || name == "Bcoldual") {
        int k;
        try {
            size_t used = 0;
            k = std::stoi(args, &used);
            if (used != args.size() || k < 0) throw std::invalid_argument(args);
        } catch (const std::exception&) {
            throw parse_error("bad column height '" + args + "'", args);
        }
        (name == "Bcol" ? x.mu : x.nu) = column(k);
    } else {
        throw parse_error("unknown tensor factor '" + name + "'", name);
    }
    return x;
}

}  // namespace

std::vector<Factor> parse_tensor_expression(const std::string& text) {
    std::vector<Factor> out;
    if (strip(text).empty()) throw parse_error("empty tensor expression", text);
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '*')) {
        if (strip(part).empty()) throw parse_error("empty tensor factor in '" + text + "'", text);
        out.push_back(parse_factor(part));
    }
    return out;
}

std::string to_string(const Factor& f) {
    switch (f.kind) {
        case Factor::Kind::Hw: return "B(" + ints_string(f.hw.parts) + ")";
        case Factor::Kind::HwDual: return "Bdual(" + ints_string(f.hw.parts) + ")";
        default: return "Bmn(" + ints_string(f.mu.parts) + ";" + ints_string(f.nu.parts) + ")";
    }
}

Decomposition dual(const Decomposition& d) {
    Decomposition r;
    for (auto& [c, m] : d.terms) {
        ExtremalClass x{c.nu, c.mu, c.hw, c.hw ? !c.dual : false};
        r.add(x, m);
    }
    return r;
}

Decomposition decompose(const std::vector<Factor>& factors, const HwWindow& w) {
    Decomposition d;
    if (factors.empty()) {
        d.add(level0_class(Partition(), Partition()), 1);
        return d;
    }
    bool pos = false, neg = false;
    for (auto& f : factors) {
        pos |= f.level() > 0;
        neg |= f.level() < 0;
    }
    if (pos && neg) throw mixed_level_error("tensor expression mixes positive and negative levels");
    if (neg) {
        std::vector<Factor> flipped;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            Factor g = *it;
            if (g.kind == Factor::Kind::Hw) g.kind = Factor::Kind::HwDual;
            else if (g.kind == Factor::Kind::HwDual) g.kind = Factor::Kind::Hw;
            else std::swap(g.mu, g.nu);
            flipped.push_back(g);
        }
        return dual(decompose(flipped, w));
    }
    d.add(factors[0].as_class(), 1);
    for (size_t i = 1; i < factors.size(); ++i) {
        Decomposition next;
        const ExtremalClass right = factors[i].as_class();
        for (auto& [c, m] : d.terms)
            for (auto& [c2, m2] : extremal_lr(c, right, w).terms) next.add(c2, m * m2);
        d = std::move(next);
    }
    return d;
}

// ---- truncation verifier ----

bool class_fits(const ExtremalClass& c, Interval win) {
    if (c.dual) return false;
    const int p = win.lo, q = win.hi;
    int lo_edge = 0, hi_edge = 0;
    if (c.hw) {
        if (c.hw->last() < p - 1 || c.hw->first() > q) return false;
        lo_edge = std::min(c.hw->last(), 0);
        hi_edge = std::max(c.hw->first(), 0);
    }
    return p + c.mu.length() - 1 <= lo_edge && q - c.nu.length() + 1 >= hi_edge + 1;
}

Weight canonical_weight(const ExtremalClass& c, Interval win) {
    Weight w = c.hw ? Weight::dominant(*c.hw) : Weight();
    if (c.dual) w = -w;
    for (int i = 0; i < c.mu.length(); ++i) w.add_eps(win.lo + i, c.mu[i]);
    for (int i = 0; i < c.nu.length(); ++i) w.add_eps(win.hi - i, -c.nu[i]);
    return w;
}

namespace {

using Elem = std::vector<std::uint64_t>;

struct ElemHash {
    size_t operator()(const Elem& e) const {
        size_t h = 1469598103934665603ull;
        for (auto x : e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

enum class RowKind { E, Tau, F, FDual };

// Columns P..Q are stored as bits 0..Q-P; outside them each row keeps its default.
struct Geometry {
    int P = 0, Q = 0;  // stored range
    int p = 0, q = 0;  // window of the truncation
    int width() const { return Q - P + 1; }
    std::uint64_t bit(int pos) const { return std::uint64_t(1) << (pos - P); }
    std::uint64_t full() const { return width() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width()) - 1; }
    std::uint64_t range(int a, int b) const {  // bits for positions a..b, clipped
        std::uint64_t r = 0;
        for (int k = std::max(a, P); k <= std::min(b, Q); ++k) r |= bit(k);
        return r;
    }
};

struct Sig {
    int eps = 0;
    int phi = 0;
    int raise_row = -1;  // rightmost unmatched −
    int lower_row = -1;  // leftmost unmatched +
};

Sig signature(const Geometry& g, const std::uint64_t* rows, size_t nrows, int k) {
    Sig s;
    const std::uint64_t a = g.bit(k), b = g.bit(k + 1);
    std::vector<int> plus;
    plus.reserve(nrows);
    for (size_t i = 0; i < nrows; ++i) {
        const bool x = rows[i] & a, y = rows[i] & b;
        if (x && !y) {
            plus.push_back(static_cast<int>(i));
        } else if (!x && y) {
            if (!plus.empty()) plus.pop_back();
            else {
                ++s.eps;
                s.raise_row = static_cast<int>(i);
            }
        }
    }
    s.phi = static_cast<int>(plus.size());
    if (!plus.empty()) s.lower_row = plus.front();
    return s;
}

bool raise(const Geometry& g, Elem& e, int k) {
    Sig s = signature(g, e.data(), e.size(), k);
    if (s.raise_row < 0) return false;
    e[s.raise_row] ^= g.bit(k) | g.bit(k + 1);
    return true;
}

bool lower(const Geometry& g, Elem& e, int k) {
    Sig s = signature(g, e.data(), e.size(), k);
    if (s.lower_row < 0) return false;
    e[s.lower_row] ^= g.bit(k) | g.bit(k + 1);
    return true;
}

void greedy_hw(const Geometry& g, Elem& e, int klo, int khi) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = klo; k <= khi; ++k)
            while (raise(g, e, k)) changed = true;
    }
}

Weight elem_weight(const Geometry& g, const Elem& e, const std::vector<RowKind>& kinds) {
    Weight w;
    for (size_t r = 0; r < e.size(); ++r) {
        switch (kinds[r]) {
            case RowKind::F: w.level += 1; break;
            case RowKind::FDual: w.level -= 1; break;
            default: break;
        }
        for (int k = g.P; k <= g.Q; ++k) {
            const int a = (e[r] & g.bit(k)) ? 1 : 0;
            int c = 0;
            switch (kinds[r]) {
                case RowKind::E: c = a; break;
                case RowKind::Tau: c = a - 1; break;
                case RowKind::F: c = k > 0 ? a : a - 1; break;
                case RowKind::FDual: c = k > 0 ? a - 1 : a; break;
            }
            if (c) w.add_eps(k, c);
        }
    }
    return w;
}

struct Atom {
    std::vector<RowKind> kinds;
    std::vector<Elem> elems;                 // the truncated factor
    std::vector<std::vector<int>> eps, phi;  // per element, per color p..q-1
};

Elem dualize(const Geometry& g, const Elem& e) {
    Elem r(e.rbegin(), e.rend());
    for (auto& x : r) x = ~x & g.full();
    return r;
}

std::vector<Elem> component(const Geometry& g, const Elem& seed, std::size_t cap) {
    std::unordered_set<Elem, ElemHash> seen{seed};
    std::deque<Elem> queue{seed};
    std::vector<Elem> out;
    while (!queue.empty()) {
        Elem x = std::move(queue.front());
        queue.pop_front();
        out.push_back(x);
        if (out.size() > cap) throw window_too_small("truncated factor exceeds the element cap");
        for (int k = g.p; k < g.q; ++k) {
            for (int dir = 0; dir < 2; ++dir) {
                Elem y = x;
                if (!(dir ? raise(g, y, k) : lower(g, y, k))) continue;
                if (seen.insert(y).second) queue.push_back(std::move(y));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// columns of μ from right to left, filled from p
Elem shape_seed(const Geometry& g, const Partition& mu) {
    Partition c = conjugate(mu);
    Elem e;
    for (int j = c.length() - 1; j >= 0; --j) e.push_back(g.range(g.p, g.p + c[j] - 1));
    return e;
}

// F-rows with charges λ_n, …, λ_1 from top to bottom
Elem hw_seed(const Geometry& g, const GenPartition& lam) {
    Elem e;
    for (int i = lam.length() - 1; i >= 0; --i) e.push_back(g.range(g.P, lam[i]));
    return e;
}

void fill_strings(const Geometry& g, Atom& a) {
    for (auto& x : a.elems) {
        std::vector<int> ep, ph;
        for (int k = g.p; k < g.q; ++k) {
            Sig s = signature(g, x.data(), x.size(), k);
            ep.push_back(s.eps);
            ph.push_back(s.phi);
        }
        a.eps.push_back(std::move(ep));
        a.phi.push_back(std::move(ph));
    }
}

std::vector<Atom> build_atoms(const Geometry& g, const std::vector<Factor>& lhs, std::size_t cap) {
    std::vector<Atom> atoms;
    auto push = [&](std::vector<RowKind> kinds, std::vector<Elem> elems) {
        if (kinds.empty()) return;
        Atom a;
        a.kinds = std::move(kinds);
        a.elems = std::move(elems);
        fill_strings(g, a);
        atoms.push_back(std::move(a));
    };
    for (auto& f : lhs) {
        if (f.kind == Factor::Kind::Level0) {
            if (!f.mu.empty())
                push(std::vector<RowKind>(f.mu[0], RowKind::E), component(g, shape_seed(g, f.mu), cap));
            if (!f.nu.empty()) {
                auto es = component(g, shape_seed(g, f.nu), cap);
                for (auto& x : es) x = dualize(g, x);
                std::sort(es.begin(), es.end());
                push(std::vector<RowKind>(f.nu[0], RowKind::Tau), std::move(es));
            }
            continue;
        }
        const GenPartition& lam = f.hw;
        if (lam.last() < g.p - 1 || lam.first() > g.q)
            throw window_too_small("highest weight " + to_string(lam) + " does not fit the window");
        auto es = component(g, hw_seed(g, lam), cap);
        if (f.kind == Factor::Kind::HwDual) {
            for (auto& x : es) x = dualize(g, x);
            std::sort(es.begin(), es.end());
            push(std::vector<RowKind>(lam.length(), RowKind::FDual), std::move(es));
        } else {
            push(std::vector<RowKind>(lam.length(), RowKind::F), std::move(es));
        }
    }
    return atoms;
}

// highest weight elements of the tensor product of the atoms, for colors p..q-1
std::vector<Elem> sources(const std::vector<Atom>& atoms, std::size_t cap) {
    struct Partial {
        Elem e;
        std::vector<int> phi;
    };
    std::vector<Partial> cur{{Elem{}, {}}};
    bool first = true;
    for (auto& a : atoms) {
        std::vector<Partial> next;
        for (auto& x : cur) {
            for (size_t j = 0; j < a.elems.size(); ++j) {
                const auto& ey = a.eps[j];
                const auto& py = a.phi[j];
                bool ok = true;
                for (size_t k = 0; k < ey.size() && ok; ++k) ok = ey[k] <= (first ? 0 : x.phi[k]);
                if (!ok) continue;
                Partial y;
                y.e = x.e;
                y.e.insert(y.e.end(), a.elems[j].begin(), a.elems[j].end());
                y.phi.resize(py.size());
                for (size_t k = 0; k < py.size(); ++k)
                    y.phi[k] = py[k] + std::max(0, (first ? 0 : x.phi[k]) - ey[k]);
                next.push_back(std::move(y));
                if (next.size() > cap) throw window_too_small("too many highest weight elements");
            }
        }
        cur = std::move(next);
        first = false;
    }
    std::vector<Elem> out;
    for (auto& x : cur) out.push_back(std::move(x.e));
    return out;
}

std::optional<ExtremalClass> decode(const Weight& w, Interval win) {
    if (w.level < 0) return std::nullopt;
    std::vector<int> mu, nu;
    Weight rest = w;
    for (auto& [i, c] : w.eps) {
        if (i <= 0 && c > 0) {
            if (i != win.lo + static_cast<int>(mu.size())) return std::nullopt;
            if (!mu.empty() && c > mu.back()) return std::nullopt;
            mu.push_back(c);
            rest.add_eps(i, -c);
        }
    }
    for (auto it = w.eps.rbegin(); it != w.eps.rend(); ++it) {
        auto [i, c] = *it;
        if (i >= 1 && c < 0) {
            if (i != win.hi - static_cast<int>(nu.size())) return std::nullopt;
            if (!nu.empty() && -c > nu.back()) return std::nullopt;
            nu.push_back(-c);
            rest.add_eps(i, -c);
        }
    }
    ExtremalClass cls{Partition(mu), Partition(nu), std::nullopt, false};
    if (w.level > 0) {
        auto lam = dominant_index(rest);
        if (!lam) return std::nullopt;
        cls.hw = *lam;
    } else if (!rest.eps.empty()) {
        return std::nullopt;
    }
    if (canonical_weight(cls, win) != w) return std::nullopt;
    return cls;
}

VerifyReport verify_once(const std::vector<Factor>& lhs, Interval win, const Decomposition& predicted,
                         const VerifyOptions& opt) {
    VerifyReport rep;
    rep.window = win;
    rep.margin = opt.margin;
    if (win.lo > 0 || win.hi < 1) throw std::invalid_argument("verify_truncated: window must contain 0 and 1");
    Geometry g{win.lo - opt.margin, win.hi + opt.margin, win.lo, win.hi};
    if (g.width() > 64) throw window_too_small("window plus margin wider than 64 columns");

    int level = 0;
    for (auto& f : lhs) level += f.level();
    if (level < 0) throw std::invalid_argument("verify_truncated: negative total level; verify the dual instead");

    auto atoms = build_atoms(g, lhs, opt.max_elements);
    std::vector<RowKind> kinds;
    for (auto& a : atoms) kinds.insert(kinds.end(), a.kinds.begin(), a.kinds.end());
    auto srcs = sources(atoms, opt.max_elements);
    rep.sources = srcs.size();

    // canonical elements must also clear the charges of the input factors
    int lhs_lo = 0, lhs_hi = 0;
    for (auto& f : lhs)
        if (f.kind != Factor::Kind::Level0 && f.hw.length()) {
            lhs_lo = std::min(lhs_lo, f.hw.last());
            lhs_hi = std::max(lhs_hi, f.hw.first());
        }
    auto keep = [&](const ExtremalClass& c) {
        return class_fits(c, win) && win.lo + c.mu.length() - 1 <= lhs_lo && win.hi - c.nu.length() >= lhs_hi &&
               (!opt.hw_filter || !c.hw || opt.hw_filter->contains(*c.hw));
    };

    std::vector<std::optional<std::pair<ExtremalClass, Elem>>> found(srcs.size());
    parallel_for(srcs.size(), resolve_threads(opt.threads), [&](size_t i) {
        auto cls = decode(elem_weight(g, srcs[i], kinds), win);
        if (!cls || !keep(*cls)) return;
        Elem e = srcs[i];
        for (int s = 1; s <= opt.margin; ++s) {
            greedy_hw(g, e, win.lo - s, win.hi + s - 1);
            if (elem_weight(g, e, kinds) != canonical_weight(*cls, {win.lo - s, win.hi + s})) return;
        }
        found[i] = std::make_pair(*cls, std::move(e));
    });

    std::map<ExtremalClass, std::set<Elem>> observed;
    for (auto& f : found)
        if (f) observed[f->first].insert(f->second);
    size_t stable = 0;
    for (auto& [c, s] : observed) stable += s.size();
    rep.unstable = srcs.size() - stable;

    std::map<ExtremalClass, CensusEntry> census;
    for (auto& [c, s] : observed) census[c] = {c, static_cast<long long>(s.size()), 0};
    for (auto& [c, m] : predicted.terms) {
        if (c.dual) throw std::invalid_argument("verify_truncated: negative level predictions are not supported");
        if (!keep(c)) continue;
        auto& e = census[c];
        e.cls = c;
        e.predicted = m;
    }
    rep.match = true;
    for (auto& [c, e] : census) {
        rep.census.push_back(e);
        if (rep.match && e.observed != e.predicted) {
            rep.match = false;
            rep.discrepancy = to_string(c) + ": observed " + std::to_string(e.observed) + ", predicted " +
                              std::to_string(e.predicted);
        }
    }
    return rep;
}

}  // namespace

VerifyReport verify_truncated(const std::vector<Factor>& lhs, Interval window, const Decomposition& predicted,
                              const VerifyOptions& opt) {
    VerifyReport rep = verify_once(lhs, window, predicted, opt);
    if (rep.match || !opt.retry) return rep;
    VerifyOptions again = opt;
    again.retry = false;
    VerifyReport wide;
    try {
        wide = verify_once(lhs, {window.lo - 1, window.hi + 1}, predicted, again);
    } catch (const window_too_small&) {
        return rep;
    }
    wide.retried = true;
    if (!wide.match) wide.discrepancy = "window [" + std::to_string(window.lo) + "," +
                                        std::to_string(window.hi) + "]: " + rep.discrepancy + "; widened: " +
                                        wide.discrepancy;
    return wide;
}

}  // namespace clr
