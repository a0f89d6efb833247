// negpath command-line front end.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negpath/generators.hpp"
#include "negpath/io.hpp"
#include "negpath/ldd.hpp"
#include "negpath/oracle.hpp"
#include "negpath/sssp.hpp"
#include "report.hpp"

namespace {

using negpath::report::json;

constexpr int kExitCycle = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char *env = std::getenv("NEGPATH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError("NEGPATH_SEED is not an unsigned integer");
        }
    }
    return 1;
}

void check_format(const std::string &format) {
    if (format != "text" && format != "json")
        throw UsageError("--format must be text or json");
}

negpath::Graph load(const std::string &path) { return negpath::to_graph(negpath::read_gr(path)); }

void require_nonneg(const negpath::Graph &g) {
    if (g.m() > 0 && g.min_weight() < 0)
        throw UsageError("low-diameter decomposition needs non-negative weights");
}

struct GenArgs {
    std::string family;
    std::int64_t n = 0, m = 0, rows = 0, cols = 0, W = 1;
    double p = 0;
    std::string output;
};

int cmd_gen(const GenArgs &a, std::uint64_t seed) {
    negpath::GrFile f;
    const auto n = static_cast<negpath::VertexId>(a.n);
    if (a.family == "potential")
        f = negpath::gen::potential(n, a.m, a.W, seed);
    else if (a.family == "cycle-planted")
        f = negpath::gen::cycle_planted(n, a.m, a.W, seed);
    else if (a.family == "er")
        f = negpath::gen::erdos_renyi(n, a.p, a.W, seed);
    else if (a.family == "dicycle")
        f = negpath::gen::dicycle(n);
    else if (a.family == "grid")
        f = negpath::gen::grid(static_cast<negpath::VertexId>(a.rows), static_cast<negpath::VertexId>(a.cols), a.W,
                               seed);
    else
        throw UsageError("unknown family " + a.family);
    if (a.output.empty() || a.output == "-") {
        negpath::write_gr(std::cout, f);
    } else {
        std::ofstream out(a.output);
        if (!out)
            throw UsageError("cannot write " + a.output);
        negpath::write_gr(out, f);
    }
    return 0;
}

struct SsspArgs {
    std::string input;
    std::int64_t source = 1;
    bool reachable_only = false;
    std::string format = "text";
};

int cmd_sssp(const SsspArgs &a, std::uint64_t seed) {
    check_format(a.format);
    const negpath::Graph g = load(a.input);
    if (a.source < 1 || a.source > g.n())
        throw UsageError("source out of range");
    negpath::SsspOptions opt;
    opt.seed = seed;
    opt.reachable_only = a.reachable_only;
    const negpath::SsspResult r = negpath::sssp(g, static_cast<negpath::VertexId>(a.source - 1), opt);
    if (a.format == "json") {
        json params = {{"input", a.input}, {"source", a.source}, {"reachable_only", a.reachable_only}};
        std::vector<std::string> flags;
        if (r.stats.zero_weight_cuts > 0)
            flags.emplace_back("zero_weight_edge_cut");
        std::cout << negpath::report::envelope("sssp", seed, params, negpath::report::sssp_results(g, r), flags).dump(2)
                  << '\n';
    } else if (r.is_cycle()) {
        std::cout << "NEGATIVE CYCLE\n";
        const auto verts = negpath::report::cycle_vertices(g, r.cycle());
        for (std::size_t k = 0; k < verts.size(); ++k)
            std::cout << (k ? " " : "") << verts[k];
        std::cout << "\nweight " << negpath::to_string(r.cycle().total_weight) << '\n';
    } else {
        const auto &dist = r.distances().dist;
        for (std::size_t v = 0; v < dist.size(); ++v)
            std::cout << v + 1 << ' ' << (dist[v] ? negpath::to_string(*dist[v]) : "INF") << '\n';
    }
    return r.is_cycle() ? kExitCycle : 0;
}

struct LddArgs {
    std::string input;
    std::int64_t delta = 0;
    bool validate = false;
    std::string format = "text";
};

int cmd_ldd(const LddArgs &a, std::uint64_t seed) {
    check_format(a.format);
    if (a.delta < 1)
        throw UsageError("--delta must be positive");
    const negpath::Graph g = load(a.input);
    require_nonneg(g);
    negpath::Rng rng(seed);
    const negpath::CutSet cut = negpath::ldd(g, a.delta, {}, rng);
    json results = negpath::report::ldd_results(g, cut);
    std::vector<std::string> flags;
    for (negpath::EdgeId e : cut)
        if (g.edge(e).w == 0) {
            flags.emplace_back("zero_weight_edge_cut");
            break;
        }
    if (a.validate) {
        std::int64_t violations = 0;
        negpath::Wide worst = 0;
        for (const auto &comp : negpath::oracle::components_without(g, cut)) {
            const auto d = negpath::oracle::weak_diameter_bounded(g, comp, a.delta);
            if (!d)
                ++violations;
            else
                worst = std::max(worst, *d);
        }
        results["validation"] = {{"diameter_violations", violations}, {"max_diameter", negpath::report::wide(worst)}};
        if (violations > 0)
            flags.emplace_back("diameter_violation");
    }
    if (a.format == "json") {
        json params = {{"input", a.input}, {"delta", a.delta}, {"validate", a.validate}};
        std::cout << negpath::report::envelope("ldd", seed, params, results, flags).dump(2) << '\n';
    } else {
        std::cout << "cut " << cut.size() << '\n';
        for (negpath::EdgeId e : cut) {
            const auto &edge = g.edge(e);
            std::cout << "a " << e + 1 << ' ' << edge.src + 1 << ' ' << edge.dst + 1 << ' '
                      << negpath::to_string(edge.w) << '\n';
        }
        std::cout << "scc " << results["scc_count"].get<std::size_t>() << '\n';
        for (const auto &s : results["scc_sizes"])
            std::cout << "size " << s.get<std::size_t>() << '\n';
        if (a.validate)
            std::cout << "validation " << (flags.empty() ? "ok" : "FAILED") << '\n';
        for (const auto &f : flags)
            std::cout << "flag " << f << '\n';
    }
    return flags.empty() ? 0 : 1;
}

struct ValidateArgs {
    std::string input;
    std::int64_t delta = 0;
    std::int64_t trials = 100;
    bool serial = false;
};

int cmd_validate(const ValidateArgs &a, std::uint64_t seed) {
    if (a.delta < 1 || a.trials < 1)
        throw UsageError("--delta and --trials must be positive");
    const negpath::Graph g = load(a.input);
    require_nonneg(g);
    const auto report = a.serial ? negpath::oracle::estimate_cut_prob(g, a.delta, a.trials, seed)
                                 : negpath::oracle::estimate_cut_prob_parallel(g, a.delta, a.trials, seed);
    const auto flags = negpath::report::validation_flags(report);
    json params = {{"input", a.input}, {"delta", a.delta}, {"trials", a.trials}};
    std::cout << negpath::report::envelope("validate", seed, params, negpath::report::validation_results(report), flags)
                     .dump(2)
              << '\n';
    return flags.empty() ? 0 : 1;
}

struct BenchArgs {
    std::string family = "potential";
    std::vector<std::int64_t> sizes{4096, 8192, 16384};
    std::int64_t degree = 4;
    std::int64_t W = 64;
    int repeats = 3;
    std::string format = "csv";
};

int cmd_bench(const BenchArgs &a, std::uint64_t seed) {
    if (a.family != "potential" && a.family != "cycle-planted")
        throw UsageError("bench supports the potential and cycle-planted families");
    if (a.format != "csv" && a.format != "json")
        throw UsageError("--format must be csv or json");
    if (a.repeats < 1)
        throw UsageError("--repeats must be positive");
    json rows = json::array();
    if (a.format == "csv")
        std::cout << "n,m,median_ms,halving_steps,restarts\n";
    for (std::int64_t n : a.sizes) {
        const auto nn = static_cast<negpath::VertexId>(n);
        const std::int64_t m = n * a.degree;
        const auto file = a.family == "potential" ? negpath::gen::potential(nn, m, a.W, seed)
                                                  : negpath::gen::cycle_planted(nn, m, a.W, seed);
        const negpath::Graph g = negpath::to_graph(file);
        std::vector<double> ms;
        std::int64_t steps = 0, restarts = 0;
        for (int r = 0; r < a.repeats; ++r) {
            negpath::SsspOptions opt;
            opt.seed = negpath::mix_seed(seed, static_cast<std::uint64_t>(r));
            const auto t0 = std::chrono::steady_clock::now();
            const auto result = negpath::sssp(g, 0, opt);
            const auto t1 = std::chrono::steady_clock::now();
            ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            steps = result.stats.halving_steps;
            restarts += result.stats.restarts;
        }
        std::sort(ms.begin(), ms.end());
        const double median = ms[ms.size() / 2];
        if (a.format == "csv")
            std::cout << n << ',' << m << ',' << median << ',' << steps << ',' << restarts << '\n';
        rows.push_back({{"n", n}, {"m", m}, {"median_ms", median}, {"halving_steps", steps}, {"restarts", restarts}});
    }
    if (a.format == "json") {
        json params = {{"family", a.family}, {"sizes", a.sizes}, {"degree", a.degree}, {"W", a.W},
                       {"repeats", a.repeats}};
        std::cout << negpath::report::envelope("bench", seed, params, {{"rows", rows}}, {}).dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Negative-weight shortest paths and directed low-diameter decompositions"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> seed_flag;

    GenArgs gen;
    auto *g = app.add_subcommand("gen", "Write a generated graph in DIMACS .gr format");
    g->add_option("family", gen.family, "potential | cycle-planted | er | dicycle | grid")->required();
    g->add_option("-n", gen.n, "Vertex count");
    g->add_option("-m", gen.m, "Arc count (potential, cycle-planted)");
    g->add_option("-p", gen.p, "Arc probability (er)");
    g->add_option("-W", gen.W, "Weight scale");
    g->add_option("--rows", gen.rows, "Grid rows");
    g->add_option("--cols", gen.cols, "Grid columns");
    g->add_option("-o,--output", gen.output, "Output file (default stdout)");
    g->add_option("--seed", seed_flag, "Random seed (default $NEGPATH_SEED or 1)");

    SsspArgs sp;
    auto *s = app.add_subcommand("sssp", "Shortest paths from a source, or a negative cycle");
    s->add_option("input", sp.input, "Graph in .gr format")->required();
    s->add_option("-s,--source", sp.source, "Source vertex, 1-indexed");
    s->add_option("--seed", seed_flag, "Random seed (default $NEGPATH_SEED or 1)");
    s->add_flag("--reachable-only", sp.reachable_only, "Ignore the part of the graph the source cannot reach");
    s->add_option("--format", sp.format, "text | json");

    LddArgs ld;
    auto *l = app.add_subcommand("ldd", "Directed low-diameter decomposition");
    l->add_option("input", ld.input, "Graph in .gr format, non-negative weights")->required();
    l->add_option("--delta", ld.delta, "Diameter bound")->required();
    l->add_option("--seed", seed_flag, "Random seed (default $NEGPATH_SEED or 1)");
    l->add_flag("--validate", ld.validate, "Check every SCC's weak diameter");
    l->add_option("--format", ld.format, "text | json");

    ValidateArgs va;
    auto *v = app.add_subcommand("validate", "Monte-Carlo cut frequencies and diameter checks (JSON)");
    v->add_option("input", va.input, "Graph in .gr format, non-negative weights")->required();
    v->add_option("--delta", va.delta, "Diameter bound")->required();
    v->add_option("--trials", va.trials, "Number of decompositions");
    v->add_option("--seed", seed_flag, "Random seed (default $NEGPATH_SEED or 1)");
    v->add_flag("--serial", va.serial, "Run trials on one thread");

    BenchArgs be;
    auto *b = app.add_subcommand("bench", "Time sssp over a size sweep");
    b->add_option("family", be.family, "potential | cycle-planted");
    b->add_option("--sizes", be.sizes, "Vertex counts")->delimiter(',');
    b->add_option("--degree", be.degree, "Arcs per vertex");
    b->add_option("-W", be.W, "Weight scale");
    b->add_option("--repeats", be.repeats, "Runs per size");
    b->add_option("--format", be.format, "csv | json");
    b->add_option("--seed", seed_flag, "Random seed (default $NEGPATH_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
        if (g->parsed())
            return cmd_gen(gen, seed);
        if (s->parsed())
            return cmd_sssp(sp, seed);
        if (l->parsed())
            return cmd_ldd(ld, seed);
        if (v->parsed())
            return cmd_validate(va, seed);
        return cmd_bench(be, seed);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const negpath::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
