#pragma once

// Small helpers shared by the unit tests. Nothing here calls the code under test
// except constructors.

#include "stab/geometry.hpp"

#include <random>

namespace test_support {

inline stab::Rational rational(std::mt19937_64 &rng, long max_num, long max_den) {
	std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
	return stab::make_rational(num(rng), den(rng));
}

/// Random lattice convex polygon: a triangle or quadrilateral, retried until non-degenerate.
inline stab::ConvexObject random_polygon(std::mt19937_64 &rng, bool closed) {
	std::uniform_int_distribution<long> c(-6, 6);
	std::uniform_int_distribution<int> shape(0, 2);
	for (;;) {
		long x = c(rng), y = c(rng);
		std::uniform_int_distribution<long> s(1, 4);
		try {
			switch (shape(rng)) {
			case 0:
				return stab::ConvexObject::rectangle(x, y, s(rng), s(rng), closed);
			case 1:
				return stab::ConvexObject({{x, y}, {x + s(rng), y + c(rng) / 3}, {x + c(rng) / 2, y + s(rng)}}, closed);
			default:
				return stab::ConvexObject(
				    {{x, y}, {x + s(rng), y}, {x + s(rng) + 1, y + s(rng)}, {x, y + s(rng) + 1}}, closed);
			}
		} catch (const std::exception &) {
		}
	}
}

/// Direct definition: projections of all vertices onto the normal.
inline bool stabs_by_definition(const stab::Line &l, const stab::ConvexObject &o) {
	stab::Rational lo, hi;
	bool first = true;
	for (const auto &v : o.vertices()) {
		stab::Rational p = l.direction.normal().x * v.x + l.direction.normal().y * v.y;
		if (first || p < lo) lo = p;
		if (first || p > hi) hi = p;
		first = false;
	}
	return o.closed() ? lo <= l.offset && l.offset <= hi : lo < l.offset && l.offset < hi;
}

} // namespace test_support
