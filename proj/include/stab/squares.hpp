#pragma once

#include "stab/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

// Generators for the clique -> axis-parallel square stabbing constructions.
// Coordinates are exact. Every generated square is open.

namespace stab::squares {

/// Loopless simple digraph on vertices 1..n.
class Digraph {
public:
	using Arc = std::pair<std::size_t, std::size_t>;

	Digraph(std::size_t n, const std::vector<Arc> &arcs);

	static Digraph complete(std::size_t n);
	/// Bit t of `mask` selects the t-th arc in lexicographic order (1,2), (1,3), ..., (n,n-1).
	static Digraph from_mask(std::size_t n, std::uint64_t mask);

	std::size_t n() const { return n_; }
	const std::set<Arc> &arcs() const { return arcs_; }
	bool has_arc(std::size_t i, std::size_t j) const { return arcs_.count({i, j}) != 0; }

private:
	std::size_t n_;
	std::set<Arc> arcs_;
};

enum class GadgetKind { forcing_h, forcing_v, adjacency, diagonal, consistency_h, consistency_v };

struct GadgetSpec {
	GadgetKind kind;
	Point offset;
	std::vector<ConvexObject> squares;
	/// Wobble index (i, j) per square; empty for forcing gadgets.
	std::vector<std::pair<std::size_t, std::size_t>> wobble;
};

/// The forced line regions: each strip is the common open projection of one forcing gadget.
struct StripLayout {
	std::vector<Interval> horizontal_strips;
	std::vector<Interval> vertical_strips;
	std::size_t classes_per_strip = 0;
	std::size_t forcing_squares = 0;
};

struct SquareReduction {
	Instance2D instance; // objects are the gadgets' squares, concatenated in gadget order
	StripLayout layout;
	std::vector<GadgetSpec> gadgets;
};

struct ShearedReduction {
	Instance2D instance;
	Direction first;  // image of e1
	Direction second; // image of e2
};

// Standalone gadgets at `offset`, in unscaled coordinates.
GadgetSpec forcing_gadget(bool horizontal, std::size_t n, std::size_t count, const Point &offset,
                          bool unit_side);
GadgetSpec adjacency_gadget(const Digraph &g, const Point &offset);
GadgetSpec diagonal_gadget(std::size_t n, const Point &offset);
GadgetSpec consistency_gadget(bool horizontal, std::size_t n, const Point &offset);

/// Mixed side lengths n and n-1; budget 6k.
SquareReduction build_s_prime(const Digraph &g, std::size_t k);
/// As build_s_prime with forcing squares shrunk to side n-1.
SquareReduction build_s(const Digraph &g, std::size_t k);
/// Scaled by 1/n, forcing gadgets of n^2 squares, everything shrunk by 1/(6n).
SquareReduction build_s_star(const Digraph &g, std::size_t k);

/// The wobbled squares W*(G, k) before rectangle replacement.
std::vector<ConvexObject> wobbled_squares(const Digraph &g, std::size_t k);
/// Disjoint translates of the thin diagonal rectangle.
Instance2D build_r_star(const Digraph &g, std::size_t k);
/// M applied to R*; objects are disjoint axis-parallel unit squares.
ShearedReduction build_u_star(const Digraph &g, std::size_t k);

// Construction constants for a graph on n vertices.
Rational scale_factor(std::size_t n);    // s = 1/n
Rational shrink_amount(std::size_t n);   // epsilon = s/6
Rational shrunk_side(std::size_t n);     // u* = 1 - 1/n - 2 epsilon
Rational wobble_unit(std::size_t n);     // W = n^-4
Rational wobbled_side(std::size_t n);    // u_w = u* - 2 W n^2
/// Thin rectangle with lower-left bounding-box corner (x, y).
ConvexObject thin_rectangle(const Rational &x, const Rational &y, std::size_t n);
/// (1/2) [[1/W, -1/W], [1/(u_w - W), 1/(u_w - W)]]
LinearMap2 shear_map(std::size_t n);

/// Whether n is large enough for the arbitrary-direction arguments (n >= 6k + 4).
bool asymptotic_regime(std::size_t n, std::size_t k);

/**
 * Rational map sending lines parallel to d to horizontal lines, lines parallel
 * to d2 to vertical ones, and the object's bounding box to a unit square.
 */
LinearMap2 quasi_square_map(const ConvexObject &object, const Direction &d, const Direction &d2);

/// Bounding box of an object with the same closedness.
ConvexObject bounding_box(const ConvexObject &object);

/// Exactly four edges, each (+-1, 0) or (0, +-1).
bool is_axis_parallel_unit_square(const ConvexObject &object);

/**
 * Among pairs of squares whose open bounding boxes overlap, the squared
 * distance between their diagonal lines (slope 1) is at least 2 W^2.
 */
bool diagonal_gaps_hold(std::span<const ConvexObject> squares, const Rational &w);

/**
 * Exact decision of stabbability by instance.k axis-parallel lines, using one
 * line class per forced strip. Returns the lines of a solution if one exists.
 * Throws parameter_error when the layout does not match the instance.
 */
std::optional<Solution> strip_solve(const Instance2D &instance, const StripLayout &layout);
bool strip_verify(const Instance2D &instance, const StripLayout &layout);

/// Exhaustive: k vertices with arcs in both directions between every pair.
bool has_clique(const Digraph &g, std::size_t k);

// Gadget lemma checks on standalone gadgets, using class-midpoint lines.
/// Antipodal pairs representing i (vertical) and j (horizontal) stab all of A iff (i, j) is an arc.
bool adjacency_lemma_holds(const Digraph &g);
/// Same for D: all stabbed iff both pairs represent the same vertex.
bool diagonal_lemma_holds(std::size_t n);
/// A completing perpendicular line exists iff rep(positive) >= rep(negative); both orientations.
bool consistency_lemma_holds(std::size_t n);

} // namespace stab::squares
