#include "dra/cli.hpp"

#include "dra/json_io.hpp"
#include "dra/monogenic.hpp"
#include "dra/polymodule.hpp"
#include "dra/verify.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace dra::cli {

namespace {

struct RunConfig {
    int n = 3;
    std::string metric = "euclidean";
    int degree = 4;
    std::string output = "text";
    std::uint64_t seed = 1;
    int jobs = 0;
    int max_m = 4;
};

int degree_cap() {
    if (const char* env = std::getenv("DRA_DEGREE_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return 12;
}

Metric load_metric(const RunConfig& cfg) {
    try {
        // a path to a JSON matrix is accepted alongside the shorthands
        if (cfg.metric.size() > 5 && cfg.metric.substr(cfg.metric.size() - 5) == ".json") {
            std::ifstream in(cfg.metric);
            if (!in) throw std::domain_error("cannot open " + cfg.metric);
            Json j;
            in >> j;
            Metric g = metric_from_json(j);
            if (g.n() != cfg.n) throw std::domain_error("matrix size does not match --n");
            return g;
        }
        return Metric::parse(cfg.metric, cfg.n);
    } catch (const std::domain_error& e) {
        throw CLI::ValidationError("--metric", e.what());
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.n < 1) throw CLI::ValidationError("--n", "n must be >= 1");
    if (cfg.degree < 0) throw CLI::ValidationError("--degree", "degree must be >= 0");
    if (cfg.degree > degree_cap())
        throw CLI::ValidationError("--degree", "degree exceeds cap (DRA_DEGREE_CAP=" +
                                                    std::to_string(degree_cap()) + ")");
    if (cfg.jobs < 0) throw CLI::ValidationError("--jobs", "jobs must be >= 0");
#ifdef _OPENMP
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string latex(const CliffordPolynomial& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : v.terms()) {
        std::string cs;
        if (c.is_rational()) {
            Rational r = c.re();
            std::string mag = (r.sign() < 0 ? -r : r).den() == 1
                                  ? (r.sign() < 0 ? -r : r).str()
                                  : "\\tfrac{" + (r.sign() < 0 ? -r : r).num().str() + "}{" +
                                        r.den().str() + "}";
            cs = (r.sign() < 0 ? "-" : "") + mag;
        } else {
            cs = "(" + c.str() + ")";
        }
        if (!out.empty() && cs[0] != '-') out += " + ";
        else if (!out.empty()) {
            out += " - ";
            cs = cs.substr(1);
        }
        std::string mono;
        for (size_t i = 0; i < key.first.size(); ++i) {
            if (key.first[i] == 0) continue;
            mono += "x^{" + std::to_string(i + 1) + "}";
            if (key.first[i] > 1) {
                mono.pop_back();
                mono += std::to_string(i + 1) + "\\,}^{" + std::to_string(key.first[i]) + "}";
            }
        }
        for (int i = 0; i < 32; ++i)
            if (key.second & (GammaSet(1) << i)) mono += "\\gamma^{" + std::to_string(i + 1) + "}";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "\\," + mono;
    }
    return out;
}

int cmd_solve(const RunConfig& cfg, const std::string& indices_text,
              const std::string& gamma_text) {
    validate(cfg);
    Algebra alg(load_metric(cfg));
    std::vector<int> indices = parse_index_list(indices_text);
    for (int i : indices)
        if (i < 1 || i > cfg.n) throw CLI::ValidationError("--indices", "index out of range");
    if (static_cast<int>(indices.size()) > degree_cap())
        throw CLI::ValidationError("--indices", "word length exceeds degree cap");

    CliffordElement p(Scalar(1));
    for (int gi : parse_index_list(gamma_text)) {
        if (gi < 1 || gi > cfg.n) throw CLI::ValidationError("--gamma", "index out of range");
        p = clifford_mul(p, CliffordElement::generator(gi), alg.metric());
    }

    CliffordPolynomial sol = solution_from_indices(indices, p, alg);
    CliffordPolynomial residual = act(alg.osp().X, sol, alg);
    bool ok = residual.is_zero();

    if (cfg.output == "json") {
        Json out{{"n", cfg.n},
                 {"metric", to_json(alg.metric())},
                 {"provenance", Json{{"indices", indices}, {"clifford_factor", to_json(p)}}},
                 {"solution", to_json(sol)},
                 {"dirac_check", ok ? "0" : residual.str()}};
        std::cout << out.dump(2) << "\n";
    } else if (cfg.output == "latex") {
        std::cout << latex(sol) << "\n";
        std::cout << "dirac_check: " << (ok ? "0" : residual.str()) << "\n";
    } else {
        std::cout << sol.str() << "\n";
        std::cout << "dirac_check: " << (ok ? "0" : residual.str()) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_basis(const RunConfig& cfg) {
    validate(cfg);
    Algebra alg(load_metric(cfg));
    const int d = cfg.degree;
    std::vector<CliffordPolynomial> oracle = dirac_kernel(d, alg);

    std::vector<std::vector<int>> words;
    {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(cur.size()) == d) {
                words.push_back(cur);
                return;
            }
            for (int v = lo; v <= cfg.n; ++v) {
                cur.push_back(v);
                rec(v);
                cur.pop_back();
            }
        };
        rec(1);
    }
    std::vector<CliffordPolynomial> generated;
    const GammaSet gmax = GammaSet(1) << cfg.n;
    for (const auto& w : words)
        for (GammaSet s = 0; s < gmax; ++s)
            generated.push_back(solution_from_indices(w, CliffordElement::monomial(s), alg));

    int rank_gen = span_rank(generated);
    bool equal = rank_gen == static_cast<int>(oracle.size());
    if (equal) {
        std::vector<CliffordPolynomial> both = oracle;
        both.insert(both.end(), generated.begin(), generated.end());
        equal = span_rank(both) == static_cast<int>(oracle.size());
    }

    if (cfg.output == "json") {
        Json out{{"n", cfg.n},
                 {"metric", to_json(alg.metric())},
                 {"degree", d},
                 {"kernel_dimension", oracle.size()},
                 {"oracle_basis", basis_to_json(d, oracle)},
                 {"generated_count", generated.size()},
                 {"generated_rank", rank_gen},
                 {"spans_equal", equal}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "kernel dimension at degree " << d << ": " << oracle.size() << "\n";
        std::cout << "oracle basis:\n";
        for (const auto& v : oracle) std::cout << "  " << v.str() << "\n";
        std::cout << "generated spanning set: " << generated.size() << " vectors, rank "
                  << rank_gen << "\n";
        std::cout << "spans_equal: " << (equal ? "true" : "false") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    validate(cfg);
    verify::SuiteReport rep;
    if (suite == "projector") {
        // coefficient identities are metric-independent; module checks follow
        verify::SuiteReport coeff = verify::projector_coeff_suite(20);
        Algebra alg(load_metric(cfg));
        rep = verify::projector_module_suite(alg, cfg.degree);
        rep.entries.insert(rep.entries.begin(), coeff.entries.begin(), coeff.entries.end());
        rep.suite = "projector";
    } else {
        Algebra alg(load_metric(cfg));
        if (suite == "osp") rep = verify::osp_suite(alg);
        else if (suite == "adjoint") rep = verify::adjoint_suite(alg);
        else if (suite == "diamond") rep = verify::diamond_suite(alg);
        else if (suite == "presentation") rep = verify::presentation_suite(alg, cfg.degree);
        else if (suite == "brackets") rep = verify::brackets_suite(alg, cfg.max_m);
        else if (suite == "product") rep = verify::product_suite(alg, cfg.max_m);
        else if (suite == "solutions") rep = verify::solutions_suite(alg, cfg.max_m);
        else if (suite == "cyclicity") rep = verify::cyclicity_suite(alg, cfg.degree, cfg.seed, 50);
        else throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }
    if (cfg.output == "json") {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        std::cout << rep.summary() << "\n";
    }
    return rep.passed() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Dirac reduction algebra toolkit: exact generation and verification of "
                 "Clifford-valued polynomial solutions of the massless Dirac equation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string indices_text, gamma_text, suite;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "rank (number of spacetime dimensions)");
        cmd->add_option("--metric", cfg.metric,
                        "euclidean | lorentzian | offdiag | diag:1,1,-1 | path/to/matrix.json");
        cmd->add_option("--output", cfg.output, "text | json | latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = library default)");
        cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
    };

    CLI::App* solve = app.add_subcommand("solve", "generate one closed-form solution");
    add_common(solve);
    solve->add_option("--indices", indices_text, "comma-separated raising indices, e.g. 1,2,2");
    solve->add_option("--gamma", gamma_text, "right Clifford factor as gamma indices, e.g. 1,3");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd);
    verify_cmd->add_option("suite", suite,
                           "osp | adjoint | projector | diamond | presentation | brackets | "
                           "product | solutions | cyclicity")
        ->required();
    verify_cmd->add_option("--degree", cfg.degree, "degree bound for module checks");
    verify_cmd->add_option("--max-m", cfg.max_m, "maximum word length for sweeps");

    CLI::App* basis = app.add_subcommand("basis", "kernel basis and generated span at a degree");
    add_common(basis);
    basis->add_option("--degree", cfg.degree, "polynomial degree");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg, indices_text, gamma_text);
        if (verify_cmd->parsed()) return cmd_verify(cfg, suite);
        if (basis->parsed()) return cmd_basis(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace dra::cli
