#pragma once

#include "stab/geometry.hpp"
#include "stab/solver.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stab::oracle {

/// Hard cap on C(L, k) subsets the brute force may enumerate.
inline constexpr std::uint64_t combination_guard = 100'000'000;

struct DominanceReport {
	std::vector<Line> kept;
	/// (removed line, a kept line whose stab set contains it)
	std::vector<std::pair<Line, Line>> removed;
};

struct OracleOptions {
	bool filter_dominated = true;
};

/**
 * Exhaustive search over k-subsets of canonical lines in lexicographic order,
 * stopping at the first cover. Throws guard_exceeded("instance too large for
 * oracle") when C(L, k) exceeds combination_guard.
 */
fpt::SolveResult brute_force_stab(const Instance2D &instance, OracleOptions options = {});

/// Drops canonical lines whose stab set is contained in another's; equal sets keep the earliest.
DominanceReport dominance_filter(const Instance2D &instance);

bool verify_solution(const Instance2D &instance, const Solution &solution);

} // namespace stab::oracle
