#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "monotile/coloured_graph.hpp"
#include "monotile/family.hpp"

namespace monotile {

// Colouring file: "n r", then n-1 lines; line i holds the colours of {i, j}, j > i.
ColouredCompleteGraph read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const ColouredCompleteGraph& g);
ColouredCompleteGraph load_colouring(const std::filesystem::path& path);
void save_colouring(const std::filesystem::path& path, const ColouredCompleteGraph& g);
std::string format_colouring(const ColouredCompleteGraph& g);

// Family file: "m", then one "u v" edge per line, 0-based.
Graph read_family_graph(std::istream& in);
void write_family_graph(std::ostream& out, const Graph& f);
std::string format_family_graph(const Graph& f);

} // namespace monotile
