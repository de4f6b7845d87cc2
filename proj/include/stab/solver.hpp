#pragma once

#include "stab/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stab::fpt {

enum class Decision { no, yes };

/// Bounds derived from an instance; nothing here is user-tunable.
struct SolverConfig {
	std::size_t max_kernel_objects; // c * k^2

	static SolverConfig for_instance(const Instance2D &instance);
};

/// One arrival at the kernel step.
struct KernelEntry {
	std::size_t objects;   // m
	std::size_t k;
	std::size_t c;
	std::size_t directions; // r
	bool rejected;          // m > c k^2
	std::size_t min_lines = 0; // |L(o)| of the branching object, 0 when rejected or empty
	Decision decision = Decision::no;
};

struct SolveStats {
	std::size_t nodes = 0;
	std::size_t max_depth = 0;
	std::size_t max_branch_width = 0;
	std::vector<KernelEntry> kernels;
};

struct SolveResult {
	Decision decision = Decision::no;
	std::optional<Solution> witness;
	SolveStats stats;

	bool yes() const { return decision == Decision::yes; }
};

/**
 * For every direction, groups objects whose projection ranges are equal and
 * keeps only the first c*k + 1 of each group (input order). Directions are
 * processed in index order on the progressively reduced set.
 */
Instance2D data_reduce(const Instance2D &instance);

/// First canonical line, by (direction index, offset), stabbing between ck+1 and 2ck+1 objects.
std::optional<Line> find_branch_line(const Instance2D &instance);

/**
 * The extreme lines parallel to `line` that still meet each object it stabs,
 * deduplicated and ascending by offset. For open objects the extremes are the
 * outermost canonical class representatives inside the object.
 */
std::vector<Line> candidate_lines(const Instance2D &instance, const Line &line);

/**
 * Decides whether the objects can be stabbed by at most k lines from the
 * direction set. instance.c must bound the true shallowness; objects must be
 * translates of one shape for the branching bounds to hold. The witness is
 * checked for coverage before returning.
 */
SolveResult stab_fpt(const Instance2D &instance);

/// Kernel step alone: rejects m > c k^2, else branches on the object with fewest relevant lines.
SolveResult solve_kernel(const Instance2D &instance);

/**
 * max |I(l) & I(l')| over canonical lines of different directions, floored at 1.
 * Throws parameter_error for a single direction.
 */
std::size_t check_shallowness(const Instance2D &instance);

} // namespace stab::fpt
