#pragma once

#include <string>

#include "happy/graph.hpp"

namespace happy {

/// Text format, one record per line, fields separated by single spaces:
///   # comment
///   p happy <n> <m> <ell>
///   e <u> <v>          1 <= u < v <= n, exactly m of them
///   c <v> <color>      1 <= color <= ell
///   o vertices|edges   optional, defaults to vertices
///   k <int>            optional threshold
/// Vertices are 1-based in the file. Errors are ParseError with a line number.
Instance parse_instance(const std::string &text);

/// Canonical form: header, sorted edges, sorted precolors, objective, threshold.
std::string write_instance(const Instance &inst);

/// Witness file: "v <vertex> <color>" per vertex, comments allowed.
FullColoring parse_coloring(const std::string &text, int n);
std::string write_coloring(const FullColoring &c);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

} // namespace happy
