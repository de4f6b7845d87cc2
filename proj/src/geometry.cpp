#include "stab/geometry.hpp"

#include "stab/errors.hpp"

#include <algorithm>

namespace stab {

namespace {

Rational cross(const Point &o, const Point &a, const Point &b) {
	return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point &a, const Point &b) { return a.x * b.x + a.y * b.y; }

Interval project_onto(const std::vector<Point> &vertices, const Point &axis) {
	Interval out{dot(axis, vertices.front()), dot(axis, vertices.front())};
	for (const auto &v : vertices) {
		Rational p = dot(axis, v);
		if (p < out.lo) out.lo = p;
		if (p > out.hi) out.hi = p;
	}
	return out;
}

} // namespace

Direction::Direction(Rational dx, Rational dy) : vector_{std::move(dx), std::move(dy)} {
	if (vector_.x == 0 && vector_.y == 0) throw geometry_error("direction vector is zero");
	normal_ = {-vector_.y, vector_.x};
	Rational scale = normal_.x != 0 ? normal_.x : normal_.y;
	normal_.x /= scale;
	normal_.y /= scale;
}

Direction Direction::horizontal() { return Direction(1, 0); }
Direction Direction::vertical() { return Direction(0, 1); }

Rational Direction::project(const Point &p) const { return dot(normal_, p); }

ConvexObject::ConvexObject(std::vector<Point> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
	const std::size_t n = vertices_.size();
	if (n < 3) throw geometry_error("object needs at least 3 vertices, got " + std::to_string(n));

	int sign = sgn(cross(vertices_[0], vertices_[1], vertices_[2]));
	if (sign == 0) throw geometry_error("collinear or repeated vertices");
	if (sign < 0) std::reverse(vertices_.begin(), vertices_.end());
	// canonical start: lowest vertex, leftmost among ties
	auto first = std::min_element(vertices_.begin(), vertices_.end(), [](const Point &a, const Point &b) {
		return a.y != b.y ? a.y < b.y : a.x < b.x;
	});
	std::rotate(vertices_.begin(), first, vertices_.end());

	// Strict convexity and simplicity: every other vertex lies strictly left of each edge.
	for (std::size_t i = 0; i < n; ++i) {
		const Point &a = vertices_[i];
		const Point &b = vertices_[(i + 1) % n];
		for (std::size_t j = 0; j < n; ++j) {
			if (j == i || j == (i + 1) % n) continue;
			if (sgn(cross(a, b, vertices_[j])) <= 0)
				throw geometry_error("vertices do not form a strictly convex polygon");
		}
	}
}

ConvexObject ConvexObject::square(const Rational &x, const Rational &y, const Rational &side, bool closed) {
	return rectangle(x, y, side, side, closed);
}

ConvexObject ConvexObject::rectangle(const Rational &x, const Rational &y, const Rational &width,
                                     const Rational &height, bool closed) {
	Rational x1 = x + width, y1 = y + height;
	return ConvexObject({{x, y}, {x1, y}, {x1, y1}, {x, y1}}, closed);
}

Interval ConvexObject::projection(const Direction &d) const { return project_onto(vertices_, d.normal()); }

Interval ConvexObject::x_range() const { return project_onto(vertices_, {1, 0}); }
Interval ConvexObject::y_range() const { return project_onto(vertices_, {0, 1}); }

void Instance2D::validate() const {
	if (directions.empty()) throw geometry_error("direction set is empty");
	if (c == 0) throw geometry_error("shallowness bound c must be positive");
	for (std::size_t i = 0; i < directions.size(); ++i)
		for (std::size_t j = i + 1; j < directions.size(); ++j)
			if (directions[i] == directions[j])
				throw geometry_error("duplicate direction at index " + std::to_string(j));
}

std::optional<std::size_t> Instance2D::direction_index(const Direction &d) const {
	for (std::size_t i = 0; i < directions.size(); ++i)
		if (directions[i] == d) return i;
	return std::nullopt;
}

LinearMap2 LinearMap2::identity() { return {1, 0, 0, 1}; }

LinearMap2 LinearMap2::scaling(const Rational &sx, const Rational &sy) { return {sx, 0, 0, sy}; }

Rational LinearMap2::determinant() const { return a11 * a22 - a12 * a21; }

LinearMap2 LinearMap2::inverse() const {
	Rational det = determinant();
	if (det == 0) throw geometry_error("linear map is singular");
	return {a22 / det, -a12 / det, -a21 / det, a11 / det};
}

LinearMap2 LinearMap2::operator*(const LinearMap2 &r) const {
	return {a11 * r.a11 + a12 * r.a21, a11 * r.a12 + a12 * r.a22, a21 * r.a11 + a22 * r.a21,
	        a21 * r.a12 + a22 * r.a22};
}

Point LinearMap2::apply(const Point &p) const { return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y}; }

Direction LinearMap2::apply(const Direction &d) const {
	Point v = apply(d.vector());
	return Direction(v.x, v.y);
}

Line LinearMap2::apply(const Line &l) const {
	// n . p = c  <=>  (M^-T n) . (M p) = c, then rescale to the canonical normal.
	LinearMap2 inv = inverse();
	const Point &n = l.direction.normal();
	Point image_normal{inv.a11 * n.x + inv.a21 * n.y, inv.a12 * n.x + inv.a22 * n.y};
	Direction d = apply(l.direction);
	Rational lambda = image_normal.x != 0 ? d.normal().x / image_normal.x : d.normal().y / image_normal.y;
	return {d, lambda * l.offset};
}

ConvexObject LinearMap2::apply(const ConvexObject &o) const {
	if (determinant() == 0) throw geometry_error("linear map is singular");
	std::vector<Point> out;
	out.reserve(o.vertices().size());
	for (const auto &v : o.vertices()) out.push_back(apply(v));
	return ConvexObject(std::move(out), o.closed());
}

bool stabs(const Line &line, const ConvexObject &object) {
	return stabs_range(line.offset, object.projection(line.direction), object.closed());
}

std::vector<Rational> canonical_offsets(std::span<const Interval> ranges, bool closed) {
	std::vector<Rational> ends;
	ends.reserve(2 * ranges.size());
	for (const auto &r : ranges) {
		ends.push_back(r.lo);
		ends.push_back(r.hi);
	}
	std::sort(ends.begin(), ends.end());
	ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
	if (closed) return ends;

	std::vector<Rational> mids;
	for (std::size_t i = 0; i + 1 < ends.size(); ++i) mids.push_back((ends[i] + ends[i + 1]) / 2);
	auto counts = stab_counts(ranges, mids, false);
	std::vector<Rational> out;
	for (std::size_t i = 0; i < mids.size(); ++i)
		if (counts[i] > 0) out.push_back(std::move(mids[i]));
	return out;
}

std::vector<std::size_t> stab_counts(std::span<const Interval> ranges, std::span<const Rational> offsets,
                                     bool closed) {
	std::vector<Rational> lo, hi;
	lo.reserve(ranges.size());
	hi.reserve(ranges.size());
	for (const auto &r : ranges) {
		lo.push_back(r.lo);
		hi.push_back(r.hi);
	}
	std::sort(lo.begin(), lo.end());
	std::sort(hi.begin(), hi.end());

	// closed: #(lo <= t) - #(hi < t); open: #(lo < t) - #(hi <= t).
	std::vector<std::size_t> out;
	out.reserve(offsets.size());
	for (const auto &t : offsets) {
		std::size_t started, finished;
		if (closed) {
			started = std::upper_bound(lo.begin(), lo.end(), t) - lo.begin();
			finished = std::lower_bound(hi.begin(), hi.end(), t) - hi.begin();
		} else {
			started = std::lower_bound(lo.begin(), lo.end(), t) - lo.begin();
			finished = std::upper_bound(hi.begin(), hi.end(), t) - hi.begin();
		}
		out.push_back(started - finished);
	}
	return out;
}

std::vector<Line> canonical_lines(std::span<const ConvexObject> objects, const Direction &direction) {
	if (objects.empty()) return {};
	const bool closed = objects.front().closed();
	std::vector<Interval> ranges;
	ranges.reserve(objects.size());
	for (const auto &o : objects) {
		if (o.closed() != closed) throw geometry_error("heterogeneous closedness");
		ranges.push_back(o.projection(direction));
	}
	std::vector<Line> out;
	for (auto &offset : canonical_offsets(ranges, closed)) out.push_back({direction, std::move(offset)});
	return out;
}

std::vector<std::size_t> stab_set(const Line &line, const Instance2D &instance) {
	if (!instance.direction_index(line.direction))
		throw geometry_error("line direction is not in the instance's direction set");
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < instance.objects.size(); ++i)
		if (stabs(line, instance.objects[i])) out.push_back(i);
	return out;
}

Rational robustness_delta(std::span<const ConvexObject> objects) {
	if (objects.empty()) throw geometry_error("robustness of an empty set is undefined");

	// The intersection of ranges is [max lo, min hi]; its diameter is already
	// attained by the pair holding the max lo and the min hi.
	std::optional<Rational> best;
	for (int axis = 0; axis < 2; ++axis) {
		std::vector<Interval> ranges;
		for (const auto &o : objects) ranges.push_back(axis == 0 ? o.x_range() : o.y_range());
		for (std::size_t i = 0; i < ranges.size(); ++i) {
			for (std::size_t j = i; j < ranges.size(); ++j) {
				const Rational &lo = std::max(ranges[i].lo, ranges[j].lo);
				const Rational &hi = std::min(ranges[i].hi, ranges[j].hi);
				bool both_closed = objects[i].closed() && objects[j].closed();
				bool nonempty = both_closed ? lo <= hi : lo < hi;
				if (!nonempty) continue;
				Rational diam = hi - lo;
				if (!best || diam < *best) best = diam;
			}
		}
	}
	return *best / 2;
}

Instance2D apply_map(const LinearMap2 &map, const Instance2D &instance) {
	if (map.determinant() == 0) throw geometry_error("linear map is singular");
	Instance2D out;
	out.k = instance.k;
	out.c = instance.c;
	out.objects.reserve(instance.objects.size());
	for (const auto &o : instance.objects) out.objects.push_back(map.apply(o));
	for (const auto &d : instance.directions) out.directions.push_back(map.apply(d));
	return out;
}

bool objects_disjoint(const ConvexObject &a, const ConvexObject &b) {
	const bool touching_ok = !a.closed() || !b.closed();
	auto separated_by_edges_of = [&](const ConvexObject &p) {
		const auto &v = p.vertices();
		for (std::size_t i = 0; i < v.size(); ++i) {
			const Point &s = v[i];
			const Point &t = v[(i + 1) % v.size()];
			Point axis{s.y - t.y, t.x - s.x};
			Interval ia = project_onto(a.vertices(), axis);
			Interval ib = project_onto(b.vertices(), axis);
			if (touching_ok ? (ia.hi <= ib.lo || ib.hi <= ia.lo) : (ia.hi < ib.lo || ib.hi < ia.lo))
				return true;
		}
		return false;
	};
	return separated_by_edges_of(a) || separated_by_edges_of(b);
}

bool pairwise_disjoint(std::span<const ConvexObject> objects) {
	std::vector<Interval> xs, ys;
	for (const auto &o : objects) {
		xs.push_back(o.x_range());
		ys.push_back(o.y_range());
	}
	std::vector<std::size_t> order(objects.size());
	for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a].lo < xs[b].lo; });
	for (std::size_t p = 0; p < order.size(); ++p) {
		std::size_t i = order[p];
		for (std::size_t q = p + 1; q < order.size() && xs[order[q]].lo <= xs[i].hi; ++q) {
			std::size_t j = order[q];
			if (ys[j].hi < ys[i].lo || ys[i].hi < ys[j].lo) continue;
			if (!objects_disjoint(objects[i], objects[j])) return false;
		}
	}
	return true;
}

bool covers_all(std::span<const ConvexObject> objects, std::span<const Line> lines) {
	return std::all_of(objects.begin(), objects.end(), [&](const ConvexObject &o) {
		return std::any_of(lines.begin(), lines.end(), [&](const Line &l) { return stabs(l, o); });
	});
}

} // namespace stab
