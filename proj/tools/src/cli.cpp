#include "chroma_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/builtins.hpp"
#include "chroma/chromatic.hpp"
#include "chroma/criticality.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/harness.hpp"
#include "chroma/overprediction.hpp"
#include "chroma/proof_bounds.hpp"

namespace chroma::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kCertifiedSlack = 1e-9;
constexpr int kK4SweepMax = 1000;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string graph6;
    std::string edges;
    std::string builtin;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* b = cmd->add_option("--edges", edges, "edge-list file (\"n m\" then m lines \"u v\")");
        auto* c = cmd->add_option("--builtin", builtin, "named graph, e.g. moser, complete:4, cycle:5");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    Graph load() const {
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!builtin.empty()) return builtin_graph(builtin);
        if (!edges.empty()) {
            std::ifstream f(edges);
            if (!f) throw InputError("cannot open edge list '" + edges + "'");
            return parse_edge_list(f);
        }
        throw InputError("no graph given; use --graph6, --edges or --builtin");
    }
};

struct Options {
    GraphSource source;
    int k = 0;
    std::uint64_t samples = 1000;
    std::optional<std::uint64_t> seed;
    std::string mode = "fixed";
    int jobs = 1;
    std::uint64_t guard = kDefaultEnumerationGuard;
    int max_order = kDefaultPolynomialGuard;
    int pi_samples = 4;
    std::string corpus;
    std::optional<int> x_min;
    std::optional<int> x_max;
    bool criticality = false;
    int kmax = 100;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("CHROMA_SEED"); env && *env) {
        std::uint64_t v = 0;
        std::istringstream is(env);
        if (!(is >> v) || !is.eof()) throw InputError(std::string("CHROMA_SEED is not an unsigned integer: ") + env);
        return v;
    }
    return 0;
}

/// Writes one JSON line to `out`.
void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

/// Appends the fields of a serialized record after `head`.
Json merge(Json head, const std::string& body) {
    const Json tail = Json::parse(body);
    for (const auto& [key, value] : tail.items()) head[key] = value;
    return head;
}

int require_k(const Options& o) {
    if (o.k <= 0) throw InputError("-k must be a positive number of colors");
    return o.k;
}

int cmd_count(const Options& o, std::ostream& out) {
    const Graph g = o.source.load();
    const int k = require_k(o);
    const BigCount count = count_colorings(g, k, o.max_order);
    emit(out, {{"id", encode_graph6(g)}, {"n", g.order()}, {"k", k}, {"count", count.to_string()}});
    return 0;
}

int cmd_poly(const Options& o, std::ostream& out) {
    const Graph g = o.source.load();
    const auto p = chromatic_polynomial(g, o.max_order);
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    emit(out, {{"id", encode_graph6(g)}, {"n", g.order()}, {"polynomial", p.to_string()}, {"coefficients", coeffs}});
    return 0;
}

int cmd_chi(const Options& o, std::ostream& out) {
    const Graph g = o.source.load();
    emit(out, {{"id", encode_graph6(g)}, {"n", g.order()}, {"chi", chromatic_number(g)}});
    return 0;
}

int cmd_estimate(const Options& o, std::ostream& out) {
    const Graph g = o.source.load();
    const int k = require_k(o);
    if (o.samples == 0) throw InputError("--samples must be positive");
    SisOptions so;
    so.samples = o.samples;
    so.seed = resolve_seed(o);
    so.jobs = o.jobs;
    so.mode = o.mode == "random" ? OrderingMode::FreshRandom : OrderingMode::Fixed;
    const SisEstimate e = sis_estimate(g, k, so);
    emit(out, {{"id", encode_graph6(g)},
               {"n", g.order()},
               {"k", k},
               {"mean", e.mean},
               {"stderr", e.stderr_},
               {"samples", e.samples},
               {"completed", e.completed},
               {"seed", so.seed},
               {"mode", o.mode}});
    return 0;
}

BoundChainOptions chain_options(const Options& o) {
    BoundChainOptions bo;
    bo.pi_samples = o.pi_samples;
    bo.seed = resolve_seed(o);
    bo.guard = o.guard;
    return bo;
}

/// True when every certified stage is at least the exact count.
bool certified_stages_hold(const BoundChainReport& r) {
    const double exact = r.exact.to_double();
    for (const auto& s : r.stages)
        if (s.certified && s.value < exact * (1.0 - kCertifiedSlack)) return false;
    return true;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = o.source.load();
    const int k = o.k > 0 ? o.k : chromatic_number(g);
    const auto report = bound_chain(g, k, chain_options(o), encode_graph6(g));
    out << to_json(report) << '\n';
    if (!certified_stages_hold(report)) {
        err << "certified bound below the exact count\n";
        return 1;
    }
    return 0;
}

int cmd_critical(const Options& o, std::ostream& out) {
    const Graph g = o.source.load();
    const int k = o.k > 0 ? o.k : chromatic_number(g);
    const auto report = is_k_critical(g, k);
    emit(out, merge({{"id", encode_graph6(g)}, {"n", g.order()}, {"m", g.size()}}, to_json(report)));
    return 0;
}

std::istream& open_corpus(const Options& o, std::istream& in, std::ifstream& file) {
    if (o.corpus.empty()) throw InputError("--corpus is required (a file, or '-' for stdin)");
    if (o.corpus == "-") return in;
    file.open(o.corpus);
    if (!file) throw InputError("cannot open corpus '" + o.corpus + "'");
    return file;
}

/// Parses a corpus line, returning nullopt (with a warning) for disconnected graphs.
std::optional<Graph> corpus_graph(const CorpusLine& line, LineResult& result) {
    Graph g = parse_graph6(line.text);
    if (!is_connected(g)) {
        result.diagnostic = "warning: line " + std::to_string(line.number) + ": graph is disconnected, skipped";
        return std::nullopt;
    }
    return g;
}

int cmd_verify_tomescu(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    if (o.x_min.has_value() != o.x_max.has_value()) throw InputError("--x-min and --x-max go together");
    std::optional<std::pair<int, int>> range;
    if (o.x_min) {
        if (*o.x_min < 1 || *o.x_max < *o.x_min) throw InputError("need 1 <= --x-min <= --x-max");
        range = std::pair{*o.x_min, *o.x_max};
    }
    std::ifstream file;
    std::istream& src = open_corpus(o, in, file);
    const int k_filter = o.k;
    auto work = [&](const CorpusLine& line) {
        LineResult result;
        const auto g = corpus_graph(line, result);
        if (!g) return result;
        const int chi = chromatic_number(*g);
        if (k_filter > 0 ? chi != k_filter : chi < 4) return result;
        const auto rec = verify_tomescu(*g, line.text, range);
        Json j = Json::parse(to_json(rec));
        if (o.criticality) j["critical"] = is_k_critical(*g, chi).is_critical;
        result.output = j.dump();
        if (!rec.consistent()) {
            result.status = ExitCode::AssertionFailed;
            result.diagnostic = "line " + std::to_string(line.number) + ": Tomescu check failed for " + line.text;
        }
        return result;
    };
    return static_cast<int>(run_corpus(src, o.jobs, work, out, err));
}

int cmd_bound_chain(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    std::ifstream file;
    std::istream& src = open_corpus(o, in, file);
    const BoundChainOptions bo = chain_options(o);
    auto work = [&](const CorpusLine& line) {
        LineResult result;
        const auto g = corpus_graph(line, result);
        if (!g) return result;
        const int chi = chromatic_number(*g);
        if (o.k > 0 && chi != o.k) return result;
        const auto report = bound_chain(*g, chi, bo, line.text);
        result.output = to_json(report);
        if (!certified_stages_hold(report)) {
            result.status = ExitCode::AssertionFailed;
            result.diagnostic = "line " + std::to_string(line.number) + ": certified bound below exact count";
        }
        return result;
    };
    return static_cast<int>(run_corpus(src, o.jobs, work, out, err));
}

/// Smallest n0 in [nmin, nmax] such that the k=4 bound is strict for every n in [n0, nmax].
int k4_strict_from(int nmin, int nmax) {
    int n0 = nmax + 1;
    for (int n = nmax; n >= nmin && k4_final_below_tomescu(n); --n) n0 = n;
    return n0;
}

int cmd_lemma_sweep(const Options& o, std::ostream& out) {
    if (o.kmax < 5) throw InputError("--kmax must be at least 5");
    std::vector<SweepReport> reports;
    reports.push_back(sweep_large_order(o.kmax));
    reports.push_back(sweep_edge_count(o.kmax));
    reports.push_back(sweep_k4_final(6, kK4SweepMax));
    reports.push_back(sweep_lp_equivalence(4, std::min(o.kmax, 10)));
    bool ok = true;
    for (const auto& r : reports) {
        Json j = Json::parse(to_json(r));
        if (r.name == "k4_final") j["strict_from"] = k4_strict_from(6, kK4SweepMax);
        emit(out, j);
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and estimated chromatic counts, and checks of the k!(k-1)^(n-k) bound", "chroma"};
    app.require_subcommand(1);
    Options o;

    auto add_k = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("-k", o.k, "number of colors")->check(CLI::Range(1, 63));
        if (required) opt->required();
    };
    auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "RNG seed (falls back to $CHROMA_SEED, then 0)");
    };
    auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256)); };
    auto add_guard = [&](CLI::App* c) {
        c->add_option("--guard", o.guard, "maximum number of colorings to enumerate");
    };
    auto add_max_order = [&](CLI::App* c) {
        c->add_option("--max-order", o.max_order, "largest 2-core component handled by deletion-contraction");
    };
    auto add_corpus = [&](CLI::App* c) {
        c->add_option("--corpus", o.corpus, "graph6 file, one graph per line, or '-' for stdin")->required();
    };

    auto* count = app.add_subcommand("count", "exact number of proper k-colorings");
    o.source.attach(count);
    add_k(count, true);
    add_max_order(count);

    auto* poly = app.add_subcommand("poly", "chromatic polynomial");
    o.source.attach(poly);
    add_max_order(poly);

    auto* chi = app.add_subcommand("chi", "chromatic number");
    o.source.attach(chi);

    auto* estimate = app.add_subcommand("estimate", "sequential importance sampling estimate of P(k)");
    o.source.attach(estimate);
    add_k(estimate, true);
    estimate->add_option("--samples", o.samples, "number of greedy runs");
    estimate->add_option("--mode", o.mode, "ordering per run: fixed or random")
        ->check(CLI::IsMember({"fixed", "random"}));
    add_seed(estimate);
    add_jobs(estimate);

    auto* bound = app.add_subcommand("bound", "chain of upper bounds for one graph");
    o.source.attach(bound);
    add_k(bound, false);
    bound->add_option("--pi-samples", o.pi_samples, "random orderings for the per-ordering bound");
    add_seed(bound);
    add_guard(bound);

    auto* critical = app.add_subcommand("critical", "k-criticality test");
    o.source.attach(critical);
    add_k(critical, false);

    auto* verify = app.add_subcommand("verify-tomescu", "check P(k) <= k!(k-1)^(n-k) over a corpus");
    add_corpus(verify);
    add_k(verify, false);
    verify->add_option("--x-min", o.x_min, "first x of the general-x check");
    verify->add_option("--x-max", o.x_max, "last x of the general-x check");
    verify->add_flag("--criticality", o.criticality, "also report whether each graph is chi-critical");
    add_jobs(verify);

    auto* sweep = app.add_subcommand("lemma-sweep", "closed-form inequality sweeps");
    sweep->add_option("--kmax", o.kmax, "largest k swept");

    auto* chain = app.add_subcommand("bound-chain", "bound chain for every graph of a corpus");
    add_corpus(chain);
    add_k(chain, false);
    chain->add_option("--pi-samples", o.pi_samples, "random orderings for the per-ordering bound");
    add_seed(chain);
    add_guard(chain);
    add_jobs(chain);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;
        err << "chroma: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (poly->parsed()) return cmd_poly(o, out);
        if (chi->parsed()) return cmd_chi(o, out);
        if (estimate->parsed()) return cmd_estimate(o, out);
        if (bound->parsed()) return cmd_bound(o, out, err);
        if (critical->parsed()) return cmd_critical(o, out);
        if (verify->parsed()) return cmd_verify_tomescu(o, in, out, err);
        if (sweep->parsed()) return cmd_lemma_sweep(o, out);
        if (chain->parsed()) return cmd_bound_chain(o, in, out, err);
    } catch (const std::exception& e) {
        err << "chroma: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InputError);
    }
    return static_cast<int>(ExitCode::InputError);
}

}  // namespace chroma::cli
