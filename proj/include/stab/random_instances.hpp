#pragma once

#include "stab/balls.hpp"
#include "stab/geometry.hpp"
#include "stab/squares.hpp"

#include <cstddef>
#include <random>

// Seeded generators for tests, benchmarks and the gen-random command.

namespace stab::gen {

struct TranslateParams {
	std::size_t count = 10;
	/// Fraction of the square field covered by object bounding boxes; sets the field size.
	double density = 0.25;
	/// Corner coordinates are multiples of 1 / grid.
	long grid = 4;
	std::size_t k = 2;
	std::size_t c = 1;
};

/**
 * Pairwise-disjoint translates of `shape` with axis-parallel directions. Placement
 * is rejection sampling; after a bounded number of failed draws fewer than
 * `count` objects are returned.
 */
Instance2D random_translates(std::mt19937_64 &rng, const ConvexObject &shape, const TranslateParams &params);

/// random_translates of the closed unit square.
Instance2D random_unit_squares(std::mt19937_64 &rng, const TranslateParams &params);

/// Each ordered pair is an arc with probability p.
squares::Digraph random_digraph(std::mt19937_64 &rng, std::size_t n, double p = 0.5);
/// Each unordered pair is an edge with probability p.
balls::Graph random_graph(std::mt19937_64 &rng, std::size_t n, double p = 0.5);

} // namespace stab::gen
