#pragma once

#include "stab/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace stab {

struct Point {
	Rational x;
	Rational y;

	friend bool operator==(const Point &a, const Point &b) { return a.x == b.x && a.y == b.y; }
};

/// Closed range [lo, hi] of a projection; open objects interpret it as (lo, hi).
struct Interval {
	Rational lo;
	Rational hi;

	friend bool operator==(const Interval &a, const Interval &b) { return a.lo == b.lo && a.hi == b.hi; }
};

/**
 * A line direction. Compared through its normal, scaled so that the first
 * nonzero coordinate is 1; any nonzero multiple of a vector gives the same
 * Direction. The vector passed in is kept verbatim for output.
 */
class Direction {
public:
	Direction(Rational dx, Rational dy);

	static Direction horizontal();
	static Direction vertical();

	const Point &vector() const { return vector_; }
	const Point &normal() const { return normal_; }

	/// normal . p; lines in this direction are level sets of this value.
	Rational project(const Point &p) const;

	bool is_horizontal() const { return normal_.x == 0; }
	bool is_vertical() const { return normal_.y == 0; }

	friend bool operator==(const Direction &a, const Direction &b) { return a.normal_ == b.normal_; }

private:
	Point vector_;
	Point normal_;
};

/// The point set {p : direction.normal() . p == offset}.
struct Line {
	Direction direction;
	Rational offset;

	static Line horizontal(Rational y) { return {Direction::horizontal(), std::move(y)}; }
	static Line vertical(Rational x) { return {Direction::vertical(), std::move(x)}; }

	friend bool operator==(const Line &a, const Line &b) {
		return a.direction == b.direction && a.offset == b.offset;
	}
};

/**
 * Strictly convex polygon with at least three vertices, stored counterclockwise
 * from the lowest (then leftmost) vertex.
 * Clockwise input is reversed; collinear or repeated vertices and
 * self-intersecting outlines are rejected with geometry_error.
 */
class ConvexObject {
public:
	ConvexObject(std::vector<Point> vertices, bool closed);

	/// Axis-parallel square with lower-left corner (x, y).
	static ConvexObject square(const Rational &x, const Rational &y, const Rational &side, bool closed);
	static ConvexObject rectangle(const Rational &x, const Rational &y, const Rational &width,
	                              const Rational &height, bool closed);

	const std::vector<Point> &vertices() const { return vertices_; }
	bool closed() const { return closed_; }

	Interval projection(const Direction &d) const;
	Interval x_range() const;
	Interval y_range() const;

	friend bool operator==(const ConvexObject &a, const ConvexObject &b) {
		return a.closed_ == b.closed_ && a.vertices_ == b.vertices_;
	}

private:
	std::vector<Point> vertices_;
	bool closed_;
};

struct Instance2D {
	std::vector<ConvexObject> objects;
	std::vector<Direction> directions;
	std::size_t k = 0;
	std::size_t c = 1;

	/// Throws geometry_error on duplicate directions, an empty direction set or c == 0.
	void validate() const;

	std::optional<std::size_t> direction_index(const Direction &d) const;

	friend bool operator==(const Instance2D &, const Instance2D &) = default;
};

struct Solution {
	std::vector<Line> lines;
};

/// Row-major 2x2 matrix [[a11, a12], [a21, a22]].
struct LinearMap2 {
	Rational a11, a12, a21, a22;

	static LinearMap2 identity();
	static LinearMap2 scaling(const Rational &sx, const Rational &sy);

	Rational determinant() const;
	/// Throws geometry_error when singular.
	LinearMap2 inverse() const;
	LinearMap2 operator*(const LinearMap2 &rhs) const;

	Point apply(const Point &p) const;
	Direction apply(const Direction &d) const;
	/// Image line {M p : p on line}.
	Line apply(const Line &l) const;
	ConvexObject apply(const ConvexObject &o) const;
};

bool stabs(const Line &line, const ConvexObject &object);

/// Whether a line at `offset` meets an object with projection `range`.
inline bool stabs_range(const Rational &offset, const Interval &range, bool closed) {
	return closed ? (range.lo <= offset && offset <= range.hi) : (range.lo < offset && offset < range.hi);
}

/**
 * Offsets of one representative per maximal combinatorial line class,
 * ascending. Closed ranges give every distinct endpoint (the supporting
 * lines); open ranges give the midpoints between consecutive distinct
 * endpoints that meet at least one range.
 */
std::vector<Rational> canonical_offsets(std::span<const Interval> ranges, bool closed);

/// For each (ascending) offset, how many of the ranges it meets. O((m + q) log m).
std::vector<std::size_t> stab_counts(std::span<const Interval> ranges, std::span<const Rational> offsets,
                                     bool closed);

/// Throws geometry_error("heterogeneous closedness") on mixed open/closed input.
std::vector<Line> canonical_lines(std::span<const ConvexObject> objects, const Direction &direction);

/// Indices of the objects stabbed by `line`, ascending. The direction must belong to the instance.
std::vector<std::size_t> stab_set(const Line &line, const Instance2D &instance);

/// Largest delta for which the set is delta-robust w.r.t. axis-parallel projections.
Rational robustness_delta(std::span<const ConvexObject> objects);

Instance2D apply_map(const LinearMap2 &map, const Instance2D &instance);

/// No common point; open objects may touch along their boundary.
bool objects_disjoint(const ConvexObject &a, const ConvexObject &b);

/// objects_disjoint for every pair, with an x-sweep over bounding boxes.
bool pairwise_disjoint(std::span<const ConvexObject> objects);

/// Every object is met by at least one of the lines.
bool covers_all(std::span<const ConvexObject> objects, std::span<const Line> lines);

} // namespace stab
