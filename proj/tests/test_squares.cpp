#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stab/errors.hpp"
#include "stab/random_instances.hpp"
#include "stab/squares.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace stab;
using namespace stab::squares;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Rational side_of(const ConvexObject &o) { return o.x_range().hi - o.x_range().lo; }

std::size_t count_kind(const SquareReduction &r, GadgetKind kind) {
	std::size_t total = 0;
	for (const auto &g : r.gadgets)
		if (g.kind == kind) total += g.squares.size();
	return total;
}

/// Independent clique check over vertex bitmasks.
bool clique_by_mask(const Digraph &g, std::size_t k) {
	for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
		if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
		bool ok = true;
		for (std::size_t i = 1; i <= g.n() && ok; ++i)
			for (std::size_t j = 1; j <= g.n() && ok; ++j)
				if (i != j && ((mask >> (i - 1)) & 1) && ((mask >> (j - 1)) & 1)) ok = g.has_arc(i, j);
		if (ok) return true;
	}
	return false;
}

} // namespace

TEST_CASE("digraphs") {
	CHECK(Digraph::complete(3).arcs().size() == 6);
	auto g = Digraph::from_mask(3, 0b000001);
	CHECK(g.has_arc(1, 2));
	CHECK_FALSE(g.has_arc(2, 1));
	CHECK(Digraph::from_mask(3, 0b100000).has_arc(3, 2));
	CHECK_THROWS_AS(Digraph(3, {{1, 1}}), parameter_error);
	CHECK_THROWS_AS(Digraph(3, {{1, 2}, {1, 2}}), parameter_error);
	CHECK_THROWS_AS(Digraph(1, {}), parameter_error);
}

TEST_CASE("build_s_prime: spec examples") {
	auto r = build_s_prime(Digraph::complete(3), 2);
	CHECK(count_kind(r, GadgetKind::forcing_h) + count_kind(r, GadgetKind::forcing_v) == 12 * 13);
	CHECK(count_kind(r, GadgetKind::adjacency) == 2 * (9 - 6));
	CHECK(count_kind(r, GadgetKind::diagonal) == 2 * 6);
	CHECK(count_kind(r, GadgetKind::consistency_h) + count_kind(r, GadgetKind::consistency_v) == 16);
	CHECK(r.instance.objects.size() == 190);
	CHECK(r.instance.k == 12);
	for (const auto &g : r.gadgets)
		if (g.kind == GadgetKind::forcing_h || g.kind == GadgetKind::forcing_v) CHECK(g.squares.size() == 13);
	CHECK(r.layout.horizontal_strips.size() == 6);
	CHECK(r.layout.vertical_strips.size() == 6);
	CHECK(std::all_of(r.instance.objects.begin(), r.instance.objects.end(), [](const ConvexObject &o) { return !o.closed(); }));
	CHECK_THROWS_AS(build_s_prime(Digraph::complete(3), 1), parameter_error);
	CHECK_THROWS_AS(build_s_prime(Digraph::complete(3), 4), parameter_error);
}

TEST_CASE("adjacency gadget squares sit exactly at the non-arcs") {
	std::mt19937_64 rng(301);
	for (int t = 0; t < 20; ++t) {
		auto g = gen::random_digraph(rng, 4);
		auto a = adjacency_gadget(g, {q(7), q(-2)});
		CHECK(a.squares.size() == 16 - g.arcs().size());
		for (std::size_t i = 1; i <= 4; ++i)
			for (std::size_t j = 1; j <= 4; ++j) {
				bool present = std::find(a.squares.begin(), a.squares.end(),
				                         ConvexObject::square(7 + static_cast<long>(i), -2 + static_cast<long>(j), 3,
				                                              false)) != a.squares.end();
				CHECK(present == !g.has_arc(i, j));
			}
	}
}

TEST_CASE("gadget shapes") {
	auto f = forcing_gadget(true, 3, 13, {0, 0}, false);
	CHECK(f.squares.size() == 13);
	CHECK(f.squares[0] == ConvexObject::square(-3, 0, 3, false));
	auto fu = forcing_gadget(true, 3, 13, {0, 0}, true);
	CHECK(fu.squares[1] == ConvexObject::square(q(-6) + q(1, 2), q(1, 2), 2, false));
	auto fv = forcing_gadget(false, 3, 13, {0, 0}, true);
	CHECK(fv.squares[1] == ConvexObject::square(q(1, 2), q(-6) + q(1, 2), 2, false));
	CHECK(diagonal_gadget(4, {0, 0}).squares.size() == 12);
	auto c = consistency_gadget(true, 4, {0, 0});
	REQUIRE(c.squares.size() == 6);
	CHECK(c.squares[0] == ConvexObject::square(1, -2, 3, false)); // R_1^-
	CHECK(c.squares[3] == ConvexObject::square(-2, 5, 3, false)); // R_2^+
	CHECK(c.wobble[0] == std::make_pair<std::size_t, std::size_t>(0, 1));
	CHECK(c.wobble[5] == std::make_pair<std::size_t, std::size_t>(1, 2));
}

TEST_CASE("build_s: spec examples") {
	std::mt19937_64 rng(302);
	auto r = build_s(Digraph::complete(3), 2);
	for (const auto &o : r.instance.objects) CHECK(side_of(o) == 2);
	const auto &f = r.gadgets.back(); // the last forcing gadget is horizontal
	REQUIRE(f.kind == GadgetKind::forcing_h);
	CHECK(f.squares[0] == ConvexObject::square(f.offset.x - 3 + q(1, 2), f.offset.y + q(1, 2), 2, false));
	for (int t = 0; t < 20; ++t) {
		auto g = gen::random_digraph(rng, 3);
		auto s = build_s(g, 2), sp = build_s_prime(g, 2);
		CHECK(strip_verify(s.instance, s.layout) == strip_verify(sp.instance, sp.layout));
	}
}

TEST_CASE("build_s_star: spec examples") {
	CHECK(shrunk_side(6) == q(7, 9));
	auto g = Digraph::complete(3);
	auto r = build_s_star(g, 2);
	for (const auto &gd : r.gadgets)
		if (gd.kind == GadgetKind::forcing_h || gd.kind == GadgetKind::forcing_v) CHECK(gd.squares.size() == 9);
	for (const auto &o : r.instance.objects) CHECK(side_of(o) == shrunk_side(3));
	CHECK(robustness_delta(r.instance.objects) >= scale_factor(3) / 12);
}

TEST_CASE("build_r_star: spec examples") {
	std::mt19937_64 rng(303);
	const std::size_t n = 3;
	ConvexObject rho = thin_rectangle(0, 0, n);
	const Rational w = wobble_unit(n), u = wobbled_side(n);
	CHECK(rho.vertices() == std::vector<Point>{{w, 0}, {u, u - w}, {u - w, u}, {0, w}});
	for (int t = 0; t < 20; ++t) {
		auto g = gen::random_digraph(rng, n);
		auto r = build_r_star(g, 2);
		CHECK(pairwise_disjoint(r.objects));
		for (const auto &o : r.objects) {
			const auto &v = o.vertices();
			REQUIRE(v.size() == 4);
			for (std::size_t i = 0; i < 4; ++i) {
				const Point &a = v[i], &b = v[(i + 1) % 4], &c = v[(i + 2) % 4];
				CHECK((b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) == 0);
			}
		}
		CHECK(diagonal_gaps_hold(wobbled_squares(g, 2), w));
	}
}

TEST_CASE("build_u_star: spec examples") {
	auto g = Digraph::from_mask(3, 0b110011);
	auto r = build_r_star(g, 2);
	auto u = build_u_star(g, 2);
	CHECK(u.instance.objects.size() == r.objects.size());
	CHECK(std::all_of(u.instance.objects.begin(), u.instance.objects.end(), is_axis_parallel_unit_square));
	CHECK(pairwise_disjoint(u.instance.objects));
	const LinearMap2 m = shear_map(3);
	CHECK(u.first == m.apply(Direction::horizontal()));
	CHECK(u.second == m.apply(Direction::vertical()));
	CHECK(u.instance.directions == std::vector<Direction>{u.first, u.second});
}

TEST_CASE("quasi_square_map: spec examples") {
	auto unit = ConvexObject::square(0, 0, 1, true);
	auto id = quasi_square_map(unit, Direction::horizontal(), Direction::vertical());
	CHECK(id.apply(unit) == unit);

	auto wide = ConvexObject::rectangle(0, 0, 2, 1, true);
	auto m = quasi_square_map(wide, Direction::horizontal(), Direction::vertical());
	CHECK(m.a11 == q(1, 2));
	CHECK(m.a22 == 1);
	CHECK(is_axis_parallel_unit_square(m.apply(wide)));

	CHECK_THROWS_AS(quasi_square_map(unit, Direction(1, 1), Direction(2, 2)), geometry_error);
}

TEST_CASE("quasi_square_map keeps stabbing against the bounding box") {
	std::mt19937_64 rng(304);
	std::vector<std::pair<Direction, Direction>> pairs = {{Direction(1, 1), Direction(1, -2)},
	                                                      {Direction(2, 1), Direction(0, 1)},
	                                                      {Direction(1, 0), Direction(1, 3)}};
	for (int t = 0; t < 100; ++t) {
		auto o = test_support::random_polygon(rng, t % 2 == 0);
		const auto &[d, d2] = pairs[static_cast<std::size_t>(t) % pairs.size()];
		auto a = quasi_square_map(o, d, d2);
		ConvexObject box = bounding_box(a.apply(o));
		CHECK(box.x_range().hi - box.x_range().lo == 1);
		CHECK(box.y_range().hi - box.y_range().lo == 1);
		for (const auto &dir : {d, d2}) {
			Line l{dir, test_support::rational(rng, 20, 3)};
			Line image = a.apply(l);
			CHECK((image.direction.is_horizontal() || image.direction.is_vertical()));
			CHECK(stabs(l, o) == stabs(image, box));
		}
	}
}

TEST_CASE("strip_verify: spec examples") {
	auto k3 = build_s(Digraph::complete(3), 2);
	CHECK(strip_verify(k3.instance, k3.layout));
	auto empty = build_s(Digraph(3, {}), 2);
	CHECK_FALSE(strip_verify(empty.instance, empty.layout));

	auto sol = strip_solve(k3.instance, k3.layout);
	REQUIRE(sol.has_value());
	CHECK(sol->lines.size() == 12);
	CHECK(covers_all(k3.instance.objects, sol->lines));

	StripLayout bad = k3.layout;
	bad.vertical_strips.pop_back();
	CHECK_THROWS_AS(strip_verify(k3.instance, bad), parameter_error);
}

TEST_CASE("strip_verify matches the clique oracle") {
	std::mt19937_64 rng(305);
	for (unsigned mask = 0; mask < 64; mask += 5) {
		auto g = Digraph::from_mask(3, mask);
		auto s = build_s(g, 2);
		CHECK(strip_verify(s.instance, s.layout) == clique_by_mask(g, 2));
	}
	for (int t = 0; t < 4; ++t) {
		auto g = gen::random_digraph(rng, 4, 0.4);
		auto s = build_s(g, 3);
		CHECK(strip_verify(s.instance, s.layout) == clique_by_mask(g, 3));
	}
}

TEST_CASE("has_clique: spec examples") {
	CHECK(has_clique(Digraph::complete(3), 3));
	CHECK_FALSE(has_clique(Digraph(3, {{1, 2}}), 2));
	CHECK(has_clique(Digraph(3, {}), 1));
	std::mt19937_64 rng(306);
	for (int t = 0; t < 50; ++t) {
		auto g = gen::random_digraph(rng, 5, 0.6);
		for (std::size_t k = 1; k <= 5; ++k) CHECK(has_clique(g, k) == clique_by_mask(g, k));
	}
}

TEST_CASE("gadget lemmas") {
	for (unsigned mask = 0; mask < 64; ++mask) CHECK(adjacency_lemma_holds(Digraph::from_mask(3, mask)));
	std::mt19937_64 rng(307);
	for (int t = 0; t < 30; ++t) CHECK(adjacency_lemma_holds(gen::random_digraph(rng, 4)));
	CHECK(diagonal_lemma_holds(3));
	CHECK(diagonal_lemma_holds(4));
	for (std::size_t n : {3, 4, 5}) CHECK(consistency_lemma_holds(n));
}

TEST_CASE("robustness of the scaled constructions") {
	for (unsigned mask : {0u, 9u, 63u}) {
		auto g = Digraph::from_mask(3, mask);
		auto s = build_s(g, 2);
		auto scaled = apply_map(LinearMap2::scaling(scale_factor(3), scale_factor(3)), s.instance);
		CHECK(robustness_delta(scaled.objects) >= scale_factor(3) / 4);
		CHECK(robustness_delta(build_s_star(g, 2).instance.objects) >= scale_factor(3) / 12);
	}
}

TEST_CASE("a slanted line meets few squares of a forcing row") {
	// lines of slope q cross a row of unit-spaced squares of side < 1 at most ceil(1/q) + 1 times
	std::mt19937_64 rng(308);
	const std::size_t n = 6;
	auto row = build_s_star(Digraph::complete(n), 2);
	std::vector<ConvexObject> fh;
	for (const auto &g : row.gadgets)
		if (g.kind == GadgetKind::forcing_h) {
			fh = g.squares;
			break;
		}
	std::uniform_int_distribution<long> num(1, 12), den(1, 12);
	for (int t = 0; t < 100; ++t) {
		Rational slope = make_rational(num(rng), den(rng));
		if (t % 2) slope = -slope;
		Direction d(1, slope);
		Interval span = fh.front().projection(d);
		for (const auto &o : fh) {
			Interval p = o.projection(d);
			span = {std::min(span.lo, p.lo), std::max(span.hi, p.hi)};
		}
		Line l{d, span.lo + (span.hi - span.lo) * make_rational(num(rng), 13)};
		std::size_t hit = 0;
		for (const auto &o : fh) hit += stabs(l, o);
		Rational inv = 1 / abs(slope);
		mpz_class ceil_inv;
		mpz_cdiv_q(ceil_inv.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
		CHECK(hit <= ceil_inv.get_ui() + 1);
	}
}
