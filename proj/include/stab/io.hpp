#pragma once

#include "stab/balls.hpp"
#include "stab/geometry.hpp"
#include "stab/squares.hpp"

#include <string>
#include <string_view>
#include <variant>

// Line-oriented text formats. Blank lines and lines starting with '#' are ignored.
//
//   stab2d 1                     stabballs 1
//   k <int>                      dim <2k>
//   c <int>                      n <int>
//   directions <r>               k <int>
//   <dx> <dy>          (r lines) radius <decimal>
//   objects <m>                  balls <m>
//   poly <open|closed> <v> x1 y1 ... xv yv   (m lines)   <x1> ... <x_dim> <tag>  (m lines)
//
//   digraph 1 / graph 1, then "n <int>", "arcs <m>" / "edges <m>", and m lines "<u> <v>".

namespace stab::io {

using ParsedInstance = std::variant<Instance2D, balls::BallInstance>;

/// Errors carry the 1-based line and column of the offending token.
ParsedInstance parse_instance(std::string_view text);
Instance2D parse_instance2d(std::string_view text);
balls::BallInstance parse_ball_instance(std::string_view text);

std::string serialize(const Instance2D &instance);
/// Doubles are written with 17 significant digits, so parsing restores them exactly.
std::string serialize(const balls::BallInstance &instance);
/// One "line <dx> <dy> <offset>" per line.
std::string serialize(const Solution &solution);
/// Reads "line" records; a leading YES line is skipped.
Solution parse_solution(std::string_view text);

squares::Digraph parse_digraph(std::string_view text);
balls::Graph parse_graph(std::string_view text);
std::string serialize(const squares::Digraph &g);
std::string serialize(const balls::Graph &g);

/// Throws std::runtime_error when the file cannot be read or written.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

} // namespace stab::io
