// Command-line surface for the erasing-substitution laboratory: exact
// evaluation of R, orbits, fibers and dimensions, graph geometry exports,
// special points and the one-shot verification suite.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "rhomap/fibers.hpp"
#include "rhomap/geometry.hpp"
#include "rhomap/points.hpp"
#include "rhomap/verify.hpp"

using nlohmann::json;
using namespace rhomap;

namespace {

// Accepts p/q or a word literal PREFIX(PERIOD).
Rational parse_value(const std::string& s) {
    Rational x = s.find('(') != std::string::npos ? xi(EPWord::parse(s)) : parse_rational(s);
    if (x < 0 || x > 1) throw std::invalid_argument("value out of [0,1]: " + s);
    return x;
}

std::vector<unsigned> parse_uint_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

std::string expansion_str(const Rational& x) {
    if (x == 0) return "(0)";
    return beta(x).str();
}

json runlength_json(const FiniteWord& w) {
    json runs = json::array();
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        runs.push_back({w[i], j - i});
        i = j;
    }
    return runs;
}

const char* label_name(CycleLabel l) {
    switch (l) {
        case CycleLabel::C0: return "C0";
        case CycleLabel::C1: return "C1";
        case CycleLabel::other: return "other";
        default: return "undecided";
    }
}

LazyWord named_stream(const std::string& name) {
    if (name == "b0") return b0_stream();
    if (name == "tm") return thue_morse(0);
    if (name == "x1") return x_ell_stream(1);
    if (name == "x2") return x_ell_stream(2);
    if (name.find('(') != std::string::npos) return LazyWord::from_ep(EPWord::parse(name));
    throw std::invalid_argument("unknown stream '" + name + "' (b0, tm, x1, x2 or a word literal)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rhomap: the interval map generated by the simplest erasing substitution"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string x_arg, out_path, rects_path, word_arg, alpha_arg = "0,1", a_arg, choice_arg;
    std::string suite = "all", budget_str = "small", stream_name = "b0";
    int max_steps = 10000, level = 14, comp_n = 16, depth = 3, digits = 64;
    std::size_t prefix_len = 100000;
    bool want_dim = false;

    auto* eval = app.add_subcommand("eval", "evaluate R at an exact rational");
    eval->add_option("x", x_arg, "rational p/q or word literal PREFIX(PERIOD)")->required();

    auto* orbit = app.add_subcommand("orbit", "iterate R until a cycle repeats");
    orbit->add_option("x", x_arg)->required();
    orbit->add_option("--max-steps", max_steps);

    auto* fiber = app.add_subcommand("fiber", "fiber structure of R over y");
    fiber->add_option("y", x_arg)->required();
    fiber->add_flag("--dim", want_dim, "print the Hausdorff dimension of the fiber");
    fiber->add_option("--sample", a_arg, "comma list a_1,a_2,... for a fiber point <a>sigma");

    auto* graph = app.add_subcommand("graph", "export the level-n step function as CSV");
    graph->add_option("--level", level);
    graph->add_option("--out", out_path, "step-function CSV path")->required();
    graph->add_option("--rects", rects_path, "also export the K_n rectangles here");

    auto* integral = app.add_subcommand("integral", "staircase integrals A_n converging to 3/7");
    integral->add_option("--level", level)->required();
    integral->add_option("--out", out_path, "CSV path for the partials");

    auto* fixed = app.add_subcommand("fixed", "fixed points of R via phi");
    fixed->add_option("--a", a_arg, "insertion counts a_1,a_2,... (empty = b0)");
    fixed->add_option("--digits", digits);

    auto* periodic = app.add_subcommand("periodic", "periodic point in the cylinder of w");
    periodic->add_option("--w", word_arg)->required();
    periodic->add_option("--choice", choice_arg, "preimage choice per stage");
    periodic->add_option("--digits", digits);

    auto* complexity = app.add_subcommand("complexity", "distinct factors of a stream prefix");
    complexity->add_option("--n", comp_n);
    complexity->add_option("--prefix-len", prefix_len);
    complexity->add_option("--word", stream_name, "b0, tm, x1, x2 or a word literal");

    auto* scrambled = app.add_subcommand("scrambled", "DC1 scrambled family");
    scrambled->add_option("--depth", depth);
    scrambled->add_option("--alpha-bits", alpha_arg, "comma list of source bit words");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "words", "map", "fibers", "graph", "chaos"}));
    verify->add_option("--budget", budget_str)->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            Rational x = parse_value(x_arg);
            Rational r = R_rational(x);
            if (as_json) {
                json j{{"x", rational_str(x)},
                       {"R", rational_str(r)},
                       {"beta_x", x == 0 ? "(0)" : beta(x).str()},
                       {"beta_R", expansion_str(r)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "R = " << rational_str(r) << "\n"
                          << "beta(x) = " << (x == 0 ? std::string("undefined (x = 0)") : beta(x).str())
                          << "\n"
                          << "beta(R(x)) = " << expansion_str(r) << "\n";
            }
        } else if (*orbit) {
            OrbitRecord rec = iterate_orbit(parse_value(x_arg), max_steps);
            if (as_json) {
                json pts = json::array();
                for (const auto& p : rec.points) pts.push_back(rational_str(p));
                json j{{"points", pts},
                       {"cycle", label_name(rec.tail)},
                       {"steps_to_cycle", rec.steps_to_cycle}};
                std::cout << j.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < rec.points.size(); ++i)
                    std::cout << i << ": " << rational_str(rec.points[i]) << "\n";
                std::cout << "cycle: " << label_name(rec.tail)
                          << ", steps to cycle: " << rec.steps_to_cycle << "\n";
            }
            if (rec.tail == CycleLabel::undecided) return 1;
        } else if (*fiber) {
            Rational y = parse_value(x_arg);
            FiberSpec spec = fiber_spec(y);
            json j{{"y", rational_str(y)}, {"includes_zero", spec.includes_zero}};
            if (spec.sigma_beta) j["sigma_beta"] = spec.sigma_beta->str();
            if (spec.sigma_beta_prime) j["sigma_beta_prime"] = spec.sigma_beta_prime->str();
            j["S"] = rational_str(S_section(y));
            j["density"] = rational_str(density_d(y));
            if (want_dim) j["dim"] = fiber_dimension(y);
            if (!a_arg.empty()) {
                NatSeqPrefix a{parse_uint_list(a_arg)};
                Branch br = spec.sigma_beta ? Branch::beta : Branch::beta_prime;
                j["sample_point"] = rational_str(fiber_point(y, a, br));
            }
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                if (spec.sigma_beta) std::cout << "sigma(beta(y))  = " << spec.sigma_beta->str() << "\n";
                if (spec.sigma_beta_prime)
                    std::cout << "sigma(beta'(y)) = " << spec.sigma_beta_prime->str() << "\n";
                std::cout << "S(y) = " << j["S"].get<std::string>() << "\n";
                if (spec.includes_zero) std::cout << "fiber additionally contains 0\n";
                std::cout << "density d = " << j["density"].get<std::string>() << "\n";
                if (want_dim) {
                    std::cout.precision(15);
                    std::cout << "dim_H = " << j["dim"].get<double>() << "\n";
                }
                if (j.contains("sample_point"))
                    std::cout << "fiber point <a>sigma = " << j["sample_point"].get<std::string>()
                              << "\n";
            }
        } else if (*graph) {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot open " + out_path);
            export_graph_csv(level, os);
            if (!rects_path.empty()) {
                std::ofstream ros(rects_path);
                if (!ros) throw std::runtime_error("cannot open " + rects_path);
                export_rects_csv(K_level(level), ros);
            }
            if (as_json)
                std::cout << json{{"level", level}, {"out", out_path}}.dump() << "\n";
            else
                std::cout << "wrote level-" << level << " step function to " << out_path << "\n";
        } else if (*integral) {
            if (!out_path.empty()) {
                std::ofstream os(out_path);
                if (!os) throw std::runtime_error("cannot open " + out_path);
                export_integral_csv(level, os);
            }
            Rational A = integral_staircase(level % 2 == 0 ? level : level - 1);
            if (as_json) {
                json j{{"level", level - level % 2},
                       {"A", rational_str(A)},
                       {"A_decimal", dyadic_decimal_str(A)},
                       {"target", "3/7"}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "A_" << level - level % 2 << " = " << rational_str(A) << " = "
                          << dyadic_decimal_str(A) << "  (target 3/7 = 0.428571...)\n";
            }
        } else if (*fixed) {
            NatSeqPrefix a{parse_uint_list(a_arg)};
            LazyWord b = a.size() == 0 ? b0_stream() : phi_fixed_point(a);
            FiniteWord prefix = b.prefix(static_cast<std::size_t>(digits));
            if (as_json) {
                json j{{"a", a.entries}, {"digits", prefix.str()}, {"runs", runlength_json(prefix)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << prefix.str() << "\n";
            }
        } else if (*periodic) {
            FiniteWord w(word_arg);
            std::vector<long> choice;
            for (unsigned c : parse_uint_list(choice_arg)) choice.push_back(c);
            LazyWord b = periodic_point(w, choice);
            const int period = vanishing_order(w);
            FiniteWord prefix = b.prefix(static_cast<std::size_t>(digits));
            if (as_json) {
                json j{{"w", w.str()},
                       {"period", period},
                       {"digits", prefix.str()},
                       {"runs", runlength_json(prefix)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "period " << period << "\n" << prefix.str() << "\n";
            }
        } else if (*complexity) {
            LazyWord b = named_stream(stream_name);
            const std::size_t count =
                subword_complexity(b, static_cast<std::size_t>(comp_n), prefix_len);
            if (as_json) {
                json j{{"word", stream_name},
                       {"n", comp_n},
                       {"prefix_len", prefix_len},
                       {"count", count},
                       {"linear_bound_8n_3", 8 * comp_n + 3}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "p(" << comp_n << ") >= " << count << " on a prefix of "
                          << prefix_len << " digits\n";
            }
        } else if (*scrambled) {
            ScrambledParams p;
            p.depth = depth;
            std::stringstream ss(alpha_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) p.alpha_sources.push_back(FiniteWord(item));
            ScrambledFamily fam = scrambled_family(p);
            json members = json::array();
            for (std::size_t i = 0; i < fam.members.size(); ++i) {
                const auto& m = fam.members[i];
                json blocks = json::array();
                for (int stage = 1; stage <= p.depth; ++stage)
                    blocks.push_back(
                        {{"k", fam.checkpoints[static_cast<std::size_t>(stage - 1)]},
                         {"block",
                          scrambled_target_prefix(
                              stage, m.alpha[static_cast<std::size_t>(stage - 1)], 16)
                              .str()}});
                members.push_back({{"id", i},
                                   {"source", m.source.str()},
                                   {"alpha", m.alpha},
                                   {"prefix_runs", runlength_json(m.stream.prefix(256))},
                                   {"checkpoints", blocks}});
            }
            json j{{"w0", p.w0.str()}, {"depth", p.depth}, {"members", members}};
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "checkpoints:";
                for (long k : fam.checkpoints) std::cout << " " << k;
                std::cout << "\n";
                for (const auto& m : members)
                    std::cout << "member " << m["id"] << " source " << m["source"]
                              << " alpha " << m["alpha"].dump() << "\n";
            }
        } else if (*verify) {
            const Budget b = budget_str == "full" ? Budget::full : Budget::small;
            std::vector<CheckResult> results;
            if (suite == "all") results = verify_all(b);
            else if (suite == "words") results = verify_words(b);
            else if (suite == "map") results = verify_map(b);
            else if (suite == "fibers") results = verify_fibers(b);
            else if (suite == "graph") results = verify_graph(b);
            else results = verify_chaos(b);
            bool ok = true;
            json checks = json::array();
            for (const auto& r : results) {
                ok = ok && r.pass;
                checks.push_back({{"name", r.name},
                                  {"status", r.pass ? "pass" : "fail"},
                                  {"detail", r.detail}});
                if (!as_json) {
                    std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL");
                    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
                    std::cout << "\n";
                }
            }
            if (as_json)
                std::cout << json{{"suite", suite}, {"ok", ok}, {"checks", checks}}.dump() << "\n";
            else
                std::cout << (ok ? "all checks passed" : "FAILURES PRESENT") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
