#include <charconv>
#include <fstream>
#include <sstream>

#include "monotile/error.hpp"
#include "monotile/experiments.hpp"

namespace monotile {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidInput("config key " + key + ": expected an unsigned integer, got '" + text + "'");
    }
    return value;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
}

} // namespace

Config Config::parse(std::istream& in) {
    Config config;
    std::string line;
    std::size_t number = 0;
    bool versioned = false;
    while (std::getline(in, line)) {
        ++number;
        const std::string body = trim(line.substr(0, line.find('#')));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("config line " + std::to_string(number) + ": expected key = value");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) {
            throw InvalidInput("config line " + std::to_string(number) + ": empty key");
        }
        if (key == "schema_version") {
            if (parse_uint(key, value) != static_cast<std::uint64_t>(schema_version)) {
                throw InvalidInput("config schema_version " + value + " is not supported (expected " +
                                   std::to_string(schema_version) + ")");
            }
            versioned = true;
            continue;
        }
        config.values_[key] = value;
    }
    if (!versioned) {
        throw InvalidInput("config has no schema_version line");
    }
    return config;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open config " + path.string());
    }
    return parse(in);
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

bool Config::contains(const std::string& key) const { return values_.count(key) != 0; }

const std::string* Config::find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

void Config::record(const std::string& key, const std::string& value) const { effective_[key] = value; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const std::string* v = find(key);
    const std::string out = v ? *v : fallback;
    record(key, out);
    return out;
}

std::uint64_t Config::get_uint(const std::string& key, std::uint64_t fallback) const {
    const std::string* v = find(key);
    const std::uint64_t out = v ? parse_uint(key, *v) : fallback;
    record(key, std::to_string(out));
    return out;
}

Rational Config::get_rational(const std::string& key, const Rational& fallback) const {
    const std::string* v = find(key);
    Rational out = fallback;
    if (v) {
        try {
            out = parse_rational(*v);
        } catch (const std::exception& e) {
            throw InvalidInput("config key " + key + ": " + e.what());
        }
    }
    record(key, to_string(out));
    return out;
}

std::vector<std::size_t> Config::get_list(const std::string& key, const std::vector<std::size_t>& fallback) const {
    const std::string* v = find(key);
    std::vector<std::size_t> out = fallback;
    if (v) {
        out.clear();
        std::stringstream ss(*v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) {
                out.push_back(static_cast<std::size_t>(parse_uint(key, item)));
            }
        }
    }
    record(key, join(out));
    return out;
}

std::string Config::header(const std::string& prefix) const {
    std::string out = prefix + "schema_version = " + std::to_string(schema_version) + "\n";
    for (const auto& [key, value] : effective_) {
        out += prefix + key + " = " + value + "\n";
    }
    return out;
}

Deadline::Deadline(std::uint64_t budget_ms) {
    if (budget_ms > 0) {
        end_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    }
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

PipelineConfig PipelineConfig::from(const Config& c) {
    PipelineConfig p;
    p.k = c.get_uint("pipeline.k", p.k);
    p.eps = c.get_rational("pipeline.eps", p.eps);
    p.delta = c.get_rational("pipeline.delta", p.delta);
    p.alpha = c.get_rational("pipeline.alpha", p.alpha);
    p.t = c.get_rational("pipeline.t", p.t);
    p.small_threshold = c.get_uint("pipeline.small_threshold", p.small_threshold);
    p.max_iterations = c.get_uint("pipeline.max_iterations", p.max_iterations);
    p.node_budget = c.get_uint("node_budget", p.node_budget);
    p.budget_ms = c.get_uint("budget_ms", p.budget_ms);
    auto& a = p.absorption;
    a.eps = c.get_rational("absorption.eps", a.eps);
    a.gamma = c.get_rational("absorption.gamma", a.gamma);
    if (c.contains("absorption.eta")) {
        a.eta = c.get_rational("absorption.eta", 0);
    }
    a.max_depth = c.get_uint("absorption.max_depth", a.max_depth);
    a.t = c.get_rational("absorption.t", a.t);
    a.seed = c.get_uint("seed", a.seed);
    a.node_budget = p.node_budget;
    return p;
}

} // namespace monotile
