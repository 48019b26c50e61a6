#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "monotile/error.hpp"
#include "monotile/exact_solver.hpp"
#include "monotile/experiments.hpp"
#include "monotile/io.hpp"
#include "monotile/regularity.hpp"
#include "monotile/rng.hpp"
#include "monotile/stars.hpp"
#include "monotile/weak_partition.hpp"

using namespace monotile;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string config;
    std::string seed;
    std::string out_dir;
    std::string budget_ms;
    std::string workers;
};

// Flag values land in the config only when given, so they override file values.
void apply(Config& c, const CLI::App& app, const std::string& flag, const std::string& key, const std::string& value) {
    const CLI::Option* opt = app.get_option_no_throw(flag);
    if (opt != nullptr && opt->count() > 0) {
        c.set(key, value);
    }
}

Config load_config(const CLI::App& app, const Common& common) {
    Config c = common.config.empty() ? Config{} : Config::load(common.config);
    apply(c, app, "--seed", "seed", common.seed);
    apply(c, app, "--out-dir", "out_dir", common.out_dir);
    apply(c, app, "--budget-ms", "budget_ms", common.budget_ms);
    apply(c, app, "--workers", "workers", common.workers);
    return c;
}

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--config", common.config, "key = value file with schema_version = 1");
    sub->add_option("--seed", common.seed, "seed for every random choice");
    sub->add_option("--out-dir", common.out_dir, "directory for reports and witness files");
    sub->add_option("--budget-ms", common.budget_ms, "wall-clock budget, 0 = unlimited");
    sub->add_option("--workers", common.workers, "worker threads");
}

std::filesystem::path out_path(const Config& c, const std::string& file) {
    const std::string dir = c.get_string("out_dir", "");
    if (dir.empty()) {
        return {};
    }
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir) / file;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path.string());
    }
    out << text;
}

ColouredCompleteGraph input_graph(const Config& c) {
    const std::string input = c.get_string("input", "");
    if (!input.empty()) {
        return load_colouring(input);
    }
    Rng rng(c.get_uint("seed", 1));
    return ColouredCompleteGraph::random(c.get_uint("n", 20), static_cast<Colour>(c.get_uint("r", 2)), rng);
}

// "0-4;5,7,9" -> {{0..4}, {5, 7, 9}}
std::vector<VertexList> parse_parts(const std::string& text) {
    std::vector<VertexList> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        VertexList vs;
        std::stringstream ps(part);
        std::string item;
        while (std::getline(ps, item, ',')) {
            if (item.empty()) {
                continue;
            }
            const auto dash = item.find('-');
            try {
                if (dash == std::string::npos) {
                    vs.push_back(static_cast<Vertex>(std::stoul(item)));
                } else {
                    const auto lo = std::stoul(item.substr(0, dash));
                    const auto hi = std::stoul(item.substr(dash + 1));
                    for (auto v = lo; v <= hi; ++v) {
                        vs.push_back(static_cast<Vertex>(v));
                    }
                }
            } catch (const std::exception&) {
                throw InvalidInput("bad part list '" + text + "'");
            }
        }
        std::sort(vs.begin(), vs.end());
        parts.push_back(vs);
    }
    return parts;
}

int cmd_pipeline(const Config& c) {
    const auto family = FamilySpec::parse(c.get_string("family", "cycles"));
    const auto g = input_graph(c);
    const auto cfg = PipelineConfig::from(c);
    const auto rep = run_pipeline_demo(g, family, cfg);
    const std::string text = c.header() + rep.format();
    std::cout << text;
    write_file(out_path(c, "pipeline.txt"), text);
    return rep.success ? exit_ok : exit_violation;
}

int cmd_stars(const Config& c) {
    StarsOptions opts;
    opts.cap = c.get_uint("stars.cap", opts.cap);
    opts.workers = static_cast<unsigned>(c.get_uint("workers", 1));
    opts.budget_ms = c.get_uint("budget_ms", 0);
    opts.scan_limit = c.get_uint("stars.scan_limit", opts.scan_limit);
    const auto r = static_cast<Colour>(c.get_uint("r", 2));
    const auto ns = c.get_list("stars.n", {16, 32, 64, 128});
    const auto samples = c.get_uint("stars.samples", 50);
    const auto seed = c.get_uint("seed", 1);
    const auto res = run_stars_experiment(r, ns, samples, seed, opts);
    const std::string csv = c.header() + res.csv();
    std::cout << csv;
    write_file(out_path(c, "stars.csv"), csv);
    write_file(out_path(c, "stars.dat"), c.header() + res.plot_data());
    bool partial = false;
    for (const auto& row : res.rows) {
        partial = partial || row.partial;
    }
    return res.median_nondecreasing() && !partial ? exit_ok : exit_violation;
}

int cmd_suites(const Config& c, const std::vector<std::string>& requested, bool corrupt, const std::string& replay) {
    if (!replay.empty()) {
        const auto v = replay_instance(replay);
        std::cout << replay << ": " << v.detail << "\n";
        return v.passes ? exit_ok : exit_violation;
    }
    SuiteSizes sizes;
    if (requested.empty()) {
        sizes = default_suite_sizes();
    }
    for (const auto& item : requested) {
        const auto eq = item.find('=');
        const std::string name = item.substr(0, eq);
        const auto defaults = default_suite_sizes();
        auto it = defaults.find(name);
        if (it == defaults.end()) {
            throw InvalidInput("unknown suite '" + name + "'");
        }
        sizes[name] = eq == std::string::npos ? it->second : static_cast<std::size_t>(std::stoul(item.substr(eq + 1)));
    }
    for (auto& [name, count] : sizes) {
        count = c.get_uint("suites." + name, count);
    }
    SuiteOptions opts;
    opts.corrupt_slicing = corrupt;
    opts.budget_ms = c.get_uint("budget_ms", 0);
    opts.out_dir = c.get_string("out_dir", "");
    const auto report = run_lemma_suites(c.get_uint("seed", 1), sizes, opts);
    const std::string text = report.to_json(c.header("")) + "\n";
    std::cout << text;
    write_file(out_path(c, "suites.json"), text);
    return report.passed() ? exit_ok : exit_violation;
}

int cmd_solve(const Config& c, const std::string& what) {
    const auto family = FamilySpec::parse(c.get_string("family", "cycles"));
    const unsigned workers = static_cast<unsigned>(c.get_uint("workers", 1));
    std::cout << c.header();
    if (what == "lehel") {
        const auto rep = lehel_check(c.get_uint("n", 6), workers);
        std::cout << "colourings " << rep.colourings << ", min above two " << rep.min_above_two
                  << ", no two-colour split " << rep.no_two_colour_split << ", worst " << rep.worst << "\n";
        return rep.ok() ? exit_ok : exit_violation;
    }
    if (what == "tau") {
        TilingNumberOptions opts;
        opts.workers = workers;
        const auto res = tiling_number(c.get_uint("n", 5), static_cast<Colour>(c.get_uint("r", 2)), family, opts);
        std::cout << "n,r,family,tau,complete,optimal,colourings,extremal\n"
                  << c.get_uint("n", 5) << ',' << c.get_uint("r", 2) << ',' << family.name() << ',' << res.value << ','
                  << res.complete << ',' << res.optimal << ',' << res.colourings << ",extremal.txt\n";
        if (res.extremal) {
            write_file(out_path(c, "extremal.txt"), format_colouring(*res.extremal));
        }
        return res.complete && res.optimal ? exit_ok : exit_violation;
    }
    const auto g = input_graph(c);
    if (what == "stars") {
        StarCoverOptions opts;
        opts.cap = c.get_uint("stars.cap", 128);
        const auto res = min_star_cover(g, opts);
        std::cout << "min star cover " << res.size << (res.optimal ? " (optimal)" : " (heuristic)") << ", lower bound "
                  << res.lower_bound << "\n";
        for (const auto& [v, col] : res.centres) {
            std::cout << "  centre " << v << " colour " << col << "\n";
        }
        return res.optimal ? exit_ok : exit_violation;
    }
    if (what != "tiling") {
        throw InvalidInput("unknown solve target '" + what + "'");
    }
    MinTilingOptions opts;
    opts.cap = c.get_uint("solve.cap", opts.cap);
    const auto res = min_tiling(g, family, opts);
    std::cout << "min tiling " << res.size << (res.optimal ? " (optimal)" : " (budget hit)") << "\n";
    for (const auto& p : res.tiling.pieces) {
        std::cout << "  colour " << p.colour << ":";
        for (Vertex v : p.map) {
            std::cout << ' ' << v;
        }
        std::cout << "\n";
    }
    const bool verified = verify_tiling(g, family, res.tiling, all_vertices(g.n())).ok();
    std::cout << "verify_tiling: " << (verified ? "accepted" : "rejected") << "\n";
    return verified && res.optimal ? exit_ok : exit_violation;
}

int cmd_regcheck(const Config& c, bool partition) {
    const auto g = input_graph(c);
    const auto parts = parse_parts(c.get_string("parts", ""));
    const Rational eps = c.get_rational("eps", ratio(1, 4));
    std::cout << c.header();
    if (partition) {
        const auto p = weak_regular_partition(g, parts, eps);
        const std::string dump = format_partition(p);
        std::cout << dump << "irregular mass " << to_string(p.irregular_mass) << (p.uncertain ? " (uncertain)" : "")
                  << "\n";
        write_file(out_path(c, "partition.txt"), dump);
        return product_partition_identity(p) && !p.uncertain ? exit_ok : exit_violation;
    }
    if (parts.size() != 2) {
        throw InvalidInput("regcheck needs exactly two parts, e.g. --parts '0-4;5-9'");
    }
    RegularityOptions opts;
    opts.mode = c.get_string("mode", "exact") == "sampled" ? CheckMode::sampled : CheckMode::exact;
    opts.seed = c.get_uint("seed", 1);
    const auto colour = static_cast<Colour>(c.get_uint("colour", 1));
    const auto v = is_super_regular(g.adjacency(), colour, parts[0], parts[1], eps, c.get_rational("d", 0),
                                     c.get_rational("delta", 0), opts);
    std::cout << "density " << to_string(v.density) << "\n";
    std::cout << "verdict " << (v.ok() ? "super-regular" : to_string(v.fault)) << "\n";
    if (v.regularity.witness) {
        std::cout << "witness deviation " << to_string(v.regularity.deviation) << "\n";
    }
    return v.ok() ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic tiling experiments"};
    app.require_subcommand(1);
    Common common;
    std::string family;
    std::string input;
    std::string n;
    std::string r;

    auto* pipeline = app.add_subcommand("pipeline", "cylinder / greedy / absorption demo on one colouring");
    auto* stars = app.add_subcommand("stars", "exact minimum star covers of random colourings");
    auto* suites = app.add_subcommand("suites", "lemma property suites");
    auto* solve = app.add_subcommand("solve", "exact solvers");
    auto* regcheck = app.add_subcommand("regcheck", "exact or sampled regularity check");
    for (auto* sub : {pipeline, stars, suites, solve, regcheck}) {
        add_common(sub, common);
    }
    for (auto* sub : {pipeline, solve, regcheck}) {
        sub->add_option("--input", input, "colouring file");
        sub->add_option("--n", n, "vertices of the random colouring");
        sub->add_option("--r", r, "colours");
    }
    pipeline->add_option("--family", family, "cycles, paths, stars, cycle-power:K or custom:DIR");
    solve->add_option("--family", family, "cycles, paths, stars, cycle-power:K or custom:DIR");
    stars->add_option("--r", r, "colours");
    std::string stars_n;
    std::string samples;
    std::string cap;
    stars->add_option("--ns", stars_n, "comma-separated vertex counts");
    stars->add_option("--samples", samples, "colourings per n, 0 = monochromatic control row");
    stars->add_option("--cap", cap, "largest n solved exactly");
    std::vector<std::string> requested;
    bool corrupt = false;
    std::string replay;
    suites->add_option("--suite", requested, "NAME or NAME=COUNT, repeatable; default runs every suite");
    suites->add_flag("--corrupt-slicing", corrupt, "halve eps' in the slicing check");
    suites->add_option("--replay", replay, "re-run the check stored in a witness file");
    std::string what = "tiling";
    solve->add_option("what", what, "tiling, stars, tau or lehel")->check(CLI::IsMember({"tiling", "stars", "tau", "lehel"}));
    std::string parts;
    std::string eps;
    std::string d;
    std::string delta;
    std::string mode;
    std::string colour;
    bool partition = false;
    regcheck->add_option("--parts", parts, "parts such as '0-4;5-9'");
    regcheck->add_option("--eps", eps, "epsilon");
    regcheck->add_option("--d", d, "density floor");
    regcheck->add_option("--delta", delta, "minimum degree fraction");
    regcheck->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    regcheck->add_option("--colour", colour, "colour to check");
    regcheck->add_flag("--partition", partition, "weak regular partition of the given parts instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        Config c = load_config(*sub, common);
        apply(c, *sub, "--family", "family", family);
        apply(c, *sub, "--input", "input", input);
        apply(c, *sub, "--n", "n", n);
        apply(c, *sub, "--r", "r", r);
        if (sub == stars) {
            apply(c, *sub, "--ns", "stars.n", stars_n);
            apply(c, *sub, "--samples", "stars.samples", samples);
            apply(c, *sub, "--cap", "stars.cap", cap);
            return cmd_stars(c);
        }
        if (sub == pipeline) {
            return cmd_pipeline(c);
        }
        if (sub == suites) {
            return cmd_suites(c, requested, corrupt, replay);
        }
        if (sub == solve) {
            return cmd_solve(c, what);
        }
        apply(c, *sub, "--parts", "parts", parts);
        apply(c, *sub, "--eps", "eps", eps);
        apply(c, *sub, "--d", "d", d);
        apply(c, *sub, "--delta", "delta", delta);
        apply(c, *sub, "--mode", "mode", mode);
        apply(c, *sub, "--colour", "colour", colour);
        return cmd_regcheck(c, partition);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_violation;
    }
}
