#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minimalnets/bounds.hpp"
#include "minimalnets/enumerator.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/io.hpp"
#include "minimalnets/minimality.hpp"
#include "minimalnets/quad_builder.hpp"
#include "minimalnets/relax.hpp"

namespace minimalnets::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kGalleryMax = 30;

// A failure that maps straight onto an exit code.
struct Failure {
    ExitCode code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInvalidInput, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kInvalidInput, "cannot write " + path.string()};
    out << content;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Failure{kInvalidInput, "cannot create directory " + dir.string()};
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("MINIMALNETS_SEED");
    if (env == nullptr || *env == '\0') return kDefaultQuadSeed;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw Failure{kInvalidInput, std::string("MINIMALNETS_SEED is not an unsigned integer: ") + env};
    }
}

std::string bounds_table(int degree, int to, const std::string& format) {
    const auto rows = bound_table(degree, to);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row = {{"n", r.n}, {"f", r.value}};
            if (degree == 3) {
                row["upper"] = to_string(r.upper);
                row["witness_branch"] = r.witness;
            }
            arr.push_back(row);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "n\tf\tupper\twitness\n";
    for (const auto& r : rows) {
        os << r.n << "\t" << r.value << "\t";
        if (degree == 3) {
            os << to_string(r.upper) << "\t" << r.witness << "\n";
        } else {
            os << "-\t-\n";
        }
    }
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal minimal plane graphs: constructions, bounds and certificates", "minimalnets"};
    app.require_subcommand(1);

    int hn_n = 0;
    bool hn_json = false, hn_svg = false;
    auto* hn = app.add_subcommand("hn", "Build the extremal 3-regular graph on n attaching points");
    hn->add_option("n", hn_n, "number of attaching points")->required();
    hn->add_flag("--json", hn_json, "emit the graph as JSON (default)");
    hn->add_flag("--svg", hn_svg, "emit an SVG drawing");

    int b_degree = 3, b_to = 0;
    std::string b_format = "tsv";
    auto* bounds = app.add_subcommand("bounds", "Tabulate extremal vertex counts");
    bounds->add_option("--degree", b_degree, "3 or 4")->check(CLI::IsMember({3, 4}));
    bounds->add_option("--to", b_to, "largest n")->required()->check(CLI::Range(2, 100000));
    bounds->add_option("--format", b_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    std::string v_file;
    double v_tol = kDefaultResidualTol;
    auto* validate = app.add_subcommand("validate", "Check a graph document");
    validate->add_option("file", v_file, "graph JSON")->required();
    validate->add_option("--tol", v_tol, "float-mode residual tolerance")->check(CLI::PositiveNumber);

    int q_n = 0;
    std::optional<std::uint64_t> q_seed;
    bool q_svg = false;
    auto* quad = app.add_subcommand("quad", "Build an extremal 4-regular graph from a segment arrangement");
    quad->add_option("n", q_n, "number of attaching points")->required();
    quad->add_option("--seed", q_seed, "perturbation seed (else MINIMALNETS_SEED, else 1)");
    quad->add_flag("--svg", q_svg, "emit an SVG drawing");

    int e_n = 0;
    std::string e_dir = ".";
    auto* enumerate = app.add_subcommand("enumerate", "Brute-force census of small 3-regular types");
    enumerate->add_option("n", e_n, "number of attaching points")->required();
    enumerate->add_option("--out-dir", e_dir, "directory for witness JSON files");

    std::string r_file;
    RelaxOptions r_opt;
    auto* relax = app.add_subcommand("relax", "Minimise total length with attaching points pinned");
    relax->add_option("file", r_file, "pinned topology JSON")->required();
    relax->add_option("--tol", r_opt.tolerance, "residual tolerance")->check(CLI::PositiveNumber);
    relax->add_option("--max-iter", r_opt.max_iterations, "iteration cap")->check(CLI::PositiveNumber);
    relax->add_option("--collapse-eps", r_opt.collapse_epsilon, "edge merge threshold")->check(CLI::PositiveNumber);

    int g_nmax = 0;
    std::string g_dir = ".";
    auto* gallery = app.add_subcommand("gallery", "Write one SVG per H_n, n = 2..nmax");
    gallery->add_option("nmax", g_nmax, "largest n")->required();
    gallery->add_option("--out-dir", g_dir, "output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*hn) {
            if (hn_json && hn_svg) throw Failure{kInvalidInput, "choose one of --json and --svg"};
            const auto g = build_hn(hn_n);
            out << (hn_svg ? graph_to_svg(g) : graph_to_json(g));
        } else if (*bounds) {
            out << bounds_table(b_degree, b_to, b_format);
        } else if (*validate) {
            const auto g = graph_from_json(read_file(v_file));
            out << validation_report_json(g, v_tol);
        } else if (*quad) {
            const auto g = build_quad(q_n, q_seed ? *q_seed : seed_from_env());
            out << (q_svg ? graph_to_svg(g) : graph_to_json(g));
        } else if (*enumerate) {
            const auto census = run_census(e_n);
            ensure_dir(e_dir);
            for (std::size_t k = 0; k < census.witnesses.size(); ++k) {
                const auto& entry = census.entries[census.witnesses[k]];
                write_file(fs::path(e_dir) / ("witness_n" + std::to_string(e_n) + "_" + std::to_string(k) + ".json"),
                           graph_to_json(*entry.witness.graph));
            }
            out << census_text(census);
        } else if (*relax) {
            auto doc = pinned_topology_from_json(read_file(r_file));
            const auto problem = make_relax_problem(doc.graph, std::move(doc.pinned), r_opt);
            out << relax_result_json(minimize_length(problem));
        } else if (*gallery) {
            if (g_nmax < 2 || g_nmax > kGalleryMax) {
                throw Failure{kDomainError, "gallery needs 2 <= nmax <= " + std::to_string(kGalleryMax)};
            }
            ensure_dir(g_dir);
            for (int n = 2; n <= g_nmax; ++n) {
                const std::string name = "h" + std::to_string(n) + ".svg";
                write_file(fs::path(g_dir) / name, graph_to_svg(build_hn(n)));
                out << name << "\n";
            }
        }
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const GraphValidationError& e) {
        err << "error: invalid graph: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ParityError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}

}  // namespace minimalnets::cli
