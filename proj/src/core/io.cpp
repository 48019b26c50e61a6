#include "monotile/io.hpp"

#include <fstream>
#include <sstream>

#include "monotile/error.hpp"

namespace monotile {

namespace {

std::vector<long long> read_numbers(const std::string& line, std::size_t line_no) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw InvalidInput("line " + std::to_string(line_no) + ": not an integer: " + token);
        }
        out.push_back(value);
    }
    return out;
}

bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) {
        return false;
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return true;
}

} // namespace

ColouredCompleteGraph read_colouring(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
        throw InvalidInput("colouring file is empty");
    }
    auto header = read_numbers(line, 1);
    if (header.size() != 2 || header[0] < 1 || header[1] < 1 || header[1] > 65535) {
        throw InvalidInput("colouring header must be \"n r\" with n, r >= 1");
    }
    const auto n = static_cast<std::size_t>(header[0]);
    const auto r = static_cast<Colour>(header[1]);
    std::vector<Colour> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!next_line(in, line)) {
            throw InvalidInput("colouring file ends after " + std::to_string(i + 1) + " lines");
        }
        auto row = read_numbers(line, i + 2);
        if (row.size() != n - 1 - i) {
            throw InvalidInput("line " + std::to_string(i + 2) + ": expected " +
                               std::to_string(n - 1 - i) + " colours");
        }
        for (long long c : row) {
            if (c < 1 || c > r) {
                throw InvalidInput("line " + std::to_string(i + 2) + ": colour " +
                                   std::to_string(c) + " outside [1, r]");
            }
            upper.push_back(static_cast<Colour>(c));
        }
    }
    while (next_line(in, line)) {
        if (line.find_first_not_of(" \t") != std::string::npos) {
            throw InvalidInput("trailing content after colouring rows");
        }
    }
    return ColouredCompleteGraph(n, r, upper);
}

void write_colouring(std::ostream& out, const ColouredCompleteGraph& g) {
    out << g.n() << ' ' << g.r() << '\n';
    for (Vertex i = 0; i + 1 < g.n(); ++i) {
        for (Vertex j = i + 1; j < g.n(); ++j) {
            if (j > i + 1) {
                out << ' ';
            }
            out << g.colour(i, j);
        }
        out << '\n';
    }
}

ColouredCompleteGraph load_colouring(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path.string());
    }
    return read_colouring(in);
}

void save_colouring(const std::filesystem::path& path, const ColouredCompleteGraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path.string());
    }
    write_colouring(out, g);
}

std::string format_colouring(const ColouredCompleteGraph& g) {
    std::ostringstream out;
    write_colouring(out, g);
    return out.str();
}

Graph read_family_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
        throw InvalidInput("family file is empty");
    }
    auto header = read_numbers(line, 1);
    if (header.size() != 1 || header[0] < 1) {
        throw InvalidInput("family header must be the order m >= 1");
    }
    Graph g(static_cast<std::size_t>(header[0]));
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        auto edge = read_numbers(line, line_no);
        if (edge.empty()) {
            continue;
        }
        if (edge.size() != 2 || edge[0] < 0 || edge[1] < 0) {
            throw InvalidInput("line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        g.add_edge(static_cast<Vertex>(edge[0]), static_cast<Vertex>(edge[1]));
    }
    return g;
}

void write_family_graph(std::ostream& out, const Graph& f) {
    out << f.order() << '\n';
    for (auto [u, v] : f.edges()) {
        out << u << ' ' << v << '\n';
    }
}

std::string format_family_graph(const Graph& f) {
    std::ostringstream out;
    write_family_graph(out, f);
    return out.str();
}

} // namespace monotile
