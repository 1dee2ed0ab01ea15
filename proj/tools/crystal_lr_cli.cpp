// Command-line front end: coefficients, decompositions, operator actions and the verification suites.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "crystal_lr/hall_littlewood.hpp"
#include "crystal_lr/json_io.hpp"
#include "crystal_lr/lr_engine.hpp"
#include "crystal_lr/shapes.hpp"
#include "crystal_lr/suites.hpp"

using namespace clr;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kMixedLevel = 3 };

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 7;
    int threads = 0;
    int margin = 2;
    int T = -1;
    bool timings = false;
};

void emit(const Globals& g, const json& j, const std::string& table) {
    if (g.format == "table") std::cout << table;
    else std::cout << j.dump() << "\n";
}

std::string table_of(const Decomposition& d) {
    std::ostringstream os;
    for (auto& [c, m] : d.terms) os << m << "  " << to_string(c) << "\n";
    if (d.terms.empty()) os << "(empty)\n";
    return os.str();
}

// "hw;mu;nu" with an empty hw meaning level 0, e.g. "0;1;" or ";2,1;1"
ExtremalClass parse_class(const std::string& s) {
    auto a = s.find(';');
    auto b = a == std::string::npos ? a : s.find(';', a + 1);
    if (b == std::string::npos) throw parse_error("class spec must be 'hw;mu;nu': '" + s + "'", s);
    ExtremalClass c;
    std::string hw = s.substr(0, a);
    if (!hw.empty()) c.hw = parse_gen_partition(hw);
    c.mu = parse_partition(s.substr(a + 1, b - a - 1));
    c.nu = parse_partition(s.substr(b + 1));
    return c;
}

std::pair<int, int> parse_window_text(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw parse_error("window must be 'lo,hi': '" + s + "'", s);
    try {
        size_t u1 = 0, u2 = 0;
        std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
        if (u1 != a.size() || u2 != b.size() || lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw parse_error("window must be 'lo,hi' with lo <= hi: '" + s + "'", s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal decompositions, Littlewood-Richardson rules and operator calculus for type A_infinity"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware; CRYSTAL_LR_THREADS overrides)");
    app.add_option("--margin", g.margin, "verifier margin")->check(CLI::NonNegativeNumber);
    app.add_option("--T", g.T, "t-truncation order")->check(CLI::NonNegativeNumber);
    app.add_flag("--timings", g.timings, "include timings in verify reports");

    std::vector<std::string> lr_args;
    auto* lr = app.add_subcommand("lr", "c^lambda_{mu,nu} for partitions: lr LAMBDA MU NU");
    lr->add_option("shapes", lr_args)->expected(3)->required();

    std::vector<std::string> genlr_args;
    auto* genlr = app.add_subcommand("genlr", "LR coefficient for generalized partitions: genlr LAMBDA MU NU");
    genlr->add_option("shapes", genlr_args)->expected(3)->required();

    std::vector<std::string> kf_args;
    auto* kf = app.add_subcommand("kostka-foulkes", "K_{lambda,mu}(t): kostka-foulkes LAMBDA MU");
    kf->add_option("shapes", kf_args)->expected(2)->required();

    std::string expr, window_text = "-3,3";
    auto* dec = app.add_subcommand("decompose", "decompose a tensor expression, e.g. \"B(0) * Bcol(2)\"");
    dec->add_option("expression", expr)->required();
    dec->add_option("--window", window_text, "bounds on highest weight parts, lo,hi");

    std::string pieri_lam;
    int pieri_a = 0;
    bool pieri_dual = false;
    auto* pieri = app.add_subcommand("pieri", "B(Lambda_lambda) times a column crystal: pieri LAMBDA A [--dual]");
    pieri->add_option("lambda", pieri_lam)->required();
    pieri->add_option("a", pieri_a)->required();
    pieri->add_flag("--dual", pieri_dual, "use the dual column");

    std::string left_spec, right_spec;
    auto* ext = app.add_subcommand("extremal-lr", "product of two classes 'hw;mu;nu', e.g. extremal-lr \"0;1;\" \"0;;\"");
    ext->add_option("left", left_spec)->required();
    ext->add_option("right", right_spec)->required();
    ext->add_option("--window", window_text, "bounds on highest weight parts, lo,hi");

    std::string hl_mu;
    auto* hl = app.add_subcommand("hl-act", "vertex operators on 1 in the z-Schur basis: hl-act --mu 2,1 --T 3");
    hl->add_option("--mu", hl_mu)->required();

    std::string trunc_expr, trunc_window = "-4,4", trunc_hw;
    auto* trunc = app.add_subcommand("truncate", "compare decompose against brute force on a window");
    trunc->add_option("expression", trunc_expr)->required();
    trunc->add_option("--window", trunc_window, "column window p,q with p <= 0 < q");
    trunc->add_option("--hw-window", trunc_hw, "compare only classes with hw parts in lo,hi (default -3,3)");

    std::string suite;
    bool quick = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite)->required();
    ver->add_flag("--quick", quick, "smaller grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*lr) {
            long long c = lr_coefficient(parse_partition(lr_args[0]), parse_partition(lr_args[1]), parse_partition(lr_args[2]));
            emit(g, {{"c", c}}, std::to_string(c) + "\n");
        } else if (*genlr) {
            GenPartition lam = parse_gen_partition(genlr_args[0]), mu = parse_gen_partition(genlr_args[1]),
                         nu = parse_gen_partition(genlr_args[2]);
            if (lam.length() != mu.length() + nu.length())
                throw parse_error("lengths must satisfy len(lambda) = len(mu) + len(nu)", genlr_args[0]);
            long long c = gen_lr_coefficient(lam, mu, nu);
            emit(g, {{"c", c}}, std::to_string(c) + "\n");
        } else if (*kf) {
            GenPartition lam = parse_gen_partition(kf_args[0]), mu = parse_gen_partition(kf_args[1]);
            if (lam.length() != mu.length()) throw parse_error("lambda and mu must have the same length", kf_args[1]);
            TPoly p = kostka_foulkes(lam, mu);
            emit(g, {{"tpoly", to_json(p)}}, p.to_string() + "\n");
        } else if (*dec) {
            auto [lo, hi] = parse_window_text(window_text);
            Decomposition d = decompose(parse_tensor_expression(expr), HwWindow{lo, hi});
            emit(g, to_json(d), table_of(d));
        } else if (*pieri) {
            if (pieri_a < 0) throw parse_error("column height must be nonnegative", std::to_string(pieri_a));
            Decomposition d = pieri_column(parse_gen_partition(pieri_lam), pieri_a, pieri_dual);
            emit(g, to_json(d), table_of(d));
        } else if (*ext) {
            auto [lo, hi] = parse_window_text(window_text);
            Decomposition d = extremal_lr(parse_class(left_spec), parse_class(right_spec), HwWindow{lo, hi});
            emit(g, to_json(d), table_of(d));
        } else if (*hl) {
            GenPartition mu = parse_gen_partition(hl_mu);
            int nmu = 0;
            for (int k = 0; k < mu.length(); ++k) nmu += k * mu[k];
            const int T = g.T >= 0 ? g.T : std::max(0, nmu);
            auto w = bt_word_action(mu, T);
            std::ostringstream os;
            for (auto& [lam, p] : w.coeffs) os << to_string(lam) << "  " << p.to_string() << "\n";
            emit(g, to_json(w, T), os.str());
        } else if (*trunc) {
            auto [p, q] = parse_window_text(trunc_window);
            HwWindow hw{-3, 3};
            if (!trunc_hw.empty()) {
                auto [lo, hi] = parse_window_text(trunc_hw);
                hw = {lo, hi};
            }
            auto fs = parse_tensor_expression(trunc_expr);
            VerifyOptions opt;
            opt.margin = g.margin;
            opt.threads = g.threads;
            opt.hw_filter = hw;
            Decomposition pred = decompose(fs, hw);
            auto rep = verify_truncated(fs, {p, q}, pred, opt);
            std::ostringstream os;
            for (auto& e : rep.census) os << e.observed << "/" << e.predicted << "  " << to_string(e.cls) << "\n";
            os << (rep.match ? "match" : "MISMATCH: " + rep.discrepancy) << "\n";
            emit(g, to_json(rep), os.str());
            return rep.match ? kOk : kFailed;
        } else if (*ver) {
            SuiteConfig cfg;
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            cfg.quick = quick;
            cfg.margin = g.margin;
            auto results = run_suite(suite, cfg);
            bool ok = true;
            json checks = json::array();
            std::ostringstream os;
            for (auto& r : results) {
                ok = ok && r.pass;
                checks.push_back(to_json(r, g.timings));
                os << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  " << r.cases << " cases, " << r.failures
                   << " failures  (" << r.note << ")\n";
                if (!r.pass) os << "      " << r.counterexample << "\n";
            }
            emit(g, {{"suite", suite}, {"seed", g.seed}, {"quick", quick}, {"margin", g.margin}, {"pass", ok}, {"checks", checks}},
                 os.str());
            return ok ? kOk : kFailed;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << " (bad token '" << e.token << "')\n";
        return kUsage;
    } catch (const unknown_suite& e) {
        std::cerr << "error: " << e.what() << "; known suites:";
        for (auto& n : suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kUsage;
    } catch (const mixed_level_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMixedLevel;
    } catch (const window_too_small& e) {
        std::cerr << "error: window too small: " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
