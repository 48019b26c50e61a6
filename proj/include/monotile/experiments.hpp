#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotile/absorption.hpp"
#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"
#include "monotile/rational.hpp"
#include "monotile/regularity.hpp"
#include "monotile/tiling.hpp"

namespace monotile {

// Flat "key = value" settings. Every lookup records the value actually used, defaults included,
// so that report headers can echo the effective configuration.
class Config {
public:
    static constexpr int schema_version = 1;

    // Blank lines and '#' comments are skipped. A file must declare schema_version = 1.
    static Config parse(std::istream& in);
    static Config load(const std::filesystem::path& path);

    void set(const std::string& key, const std::string& value);
    bool contains(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    Rational get_rational(const std::string& key, const Rational& fallback) const;
    // Comma-separated unsigned integers.
    std::vector<std::size_t> get_list(const std::string& key, const std::vector<std::size_t>& fallback) const;

    // "<prefix>key = value" per effective setting, sorted by key, schema_version first.
    std::string header(const std::string& prefix = "# ") const;

private:
    const std::string* find(const std::string& key) const;
    void record(const std::string& key, const std::string& value) const;

    std::map<std::string, std::string> values_;
    mutable std::map<std::string, std::string> effective_;
};

// Wall-clock budget; zero means unlimited.
class Deadline {
public:
    explicit Deadline(std::uint64_t budget_ms = 0);
    bool expired() const;

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

struct PipelineConfig {
    std::size_t k = 0;                   // cylinder width, 0 = max degree of the family + 2
    Rational eps = ratio(1, 4);          // cylinder search
    Rational delta = ratio(1, 10);       // routing threshold on dd_[r]
    Rational alpha = ratio(1, 20);       // greedy leftover fraction
    Rational t = ratio(1, 2);            // greedy shrink factor
    std::size_t small_threshold = 16;    // |V_i| below this is covered greedily
    std::size_t max_iterations = 8;
    std::uint64_t node_budget = 200000;
    std::uint64_t budget_ms = 0;
    AbsorptionConfig absorption;

    static PipelineConfig from(const Config& config);
};

struct PipelineEvent {
    std::string stage;
    std::size_t iteration = 0;
    std::string detail;
};

// One routed set R'_{i,I}: leftover vertices of round i with dd_[r](u, Z_I) >= delta.
struct RoutedSet {
    std::size_t round = 0;
    std::vector<std::size_t> cylinders;  // indices into PipelineReport::cylinders
    VertexList vertices;
};

struct PipelineReport {
    bool success = false;
    std::string failed_stage;  // empty on success
    std::string message;
    std::size_t k = 0;
    std::size_t iterations = 0;
    std::string ramsey_bound;           // N = r^(rk)
    std::vector<Cylinder> cylinders;    // Z_i
    std::vector<VertexList> greedy;     // S_i, including small-set greedy covers
    std::vector<RoutedSet> routed;      // R'_{i,I}
    VertexList unrouted;                // V_{N+1}; nonempty only when the loop stopped early
    Tiling tiling;
    VertexList uncovered;
    bool partition_identity = false;    // Z, S, R' and V_{N+1} partition V(G)
    bool cover_identity = false;        // pieces disjoint and covered + uncovered = V(G)
    std::string final_verdict;          // verify_tiling on V(G)
    std::vector<PipelineEvent> events;

    std::string format() const;
};

// Desk-scale run of the cylinder / greedy / routing / absorption loop. Stage failures are
// recorded in the report; success requires verify_tiling to accept the tiling on V(G).
PipelineReport run_pipeline_demo(const ColouredCompleteGraph& g, const FamilySpec& family,
                                 const PipelineConfig& config);

struct StarsOptions {
    std::size_t cap = 128;          // exact min_star_cover up to this n
    std::uint64_t node_budget = 0;  // per instance, 0 = unlimited
    unsigned workers = 1;
    std::uint64_t budget_ms = 0;
    std::size_t scan_limit = 256;   // certification scan runs over n in [1, scan_limit]
};

struct StarsRow {
    std::size_t n = 0;
    std::size_t samples = 0;      // 0 marks the monochromatic control row
    std::size_t completed = 0;    // samples finished within the time budget
    std::size_t min = 0;
    std::size_t max = 0;
    double median = 0;
    double reference = 0;         // r ln(n/8)
    bool partial = false;         // some value came from the heuristic or the budget ran out
};

struct StarsExperiment {
    Colour r = 2;
    std::uint64_t seed = 1;
    std::vector<StarsRow> rows;
    std::optional<std::size_t> first_certified;
    std::optional<std::size_t> last_certified;
    std::size_t scan_limit = 0;

    bool median_nondecreasing() const;
    std::string csv() const;
    // Whitespace-separated "n min median max reference" for gnuplot.
    std::string plot_data() const;
};

// Each (n, sample) cell draws its colouring from its own stream derived from (seed, n, sample),
// so the table does not depend on the worker count.
StarsExperiment run_stars_experiment(Colour r, std::span<const std::size_t> ns, std::size_t samples,
                                     std::uint64_t seed, const StarsOptions& options = {});

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;                // generator gave up on an instance
    std::vector<std::string> witness_files;
    std::string note;
    double seconds = 0;
    bool passed() const noexcept { return violations == 0 && skipped == 0; }
};

struct SuiteReport {
    std::uint64_t seed = 1;
    std::vector<SuiteResult> suites;
    bool passed() const;
    std::string to_json(const std::string& header = "") const;
};

struct SuiteOptions {
    std::filesystem::path out_dir;  // witness files; empty = do not write
    bool corrupt_slicing = false;   // halve eps' in the slicing check
    std::uint64_t budget_ms = 0;
};

// Suite name -> instance count. Known suites: slicing, robust, trim, ladder, split, transversal,
// weakreg.
using SuiteSizes = std::map<std::string, std::size_t>;
SuiteSizes default_suite_sizes();
std::vector<std::string> known_suites();

// Runs the requested suites in key order. Unknown names throw InvalidInput.
SuiteReport run_lemma_suites(std::uint64_t seed, const SuiteSizes& sizes, const SuiteOptions& options = {});

// Re-runs the exact check recorded in a witness file.
struct ReplayVerdict {
    bool passes = false;
    std::string detail;
};
ReplayVerdict replay_instance(const std::filesystem::path& path);

} // namespace monotile
