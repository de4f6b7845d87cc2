#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stab/errors.hpp"
#include "stab/oracle.hpp"
#include "stab/random_instances.hpp"
#include "stab/solver.hpp"

using namespace stab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Instance2D axis_instance(std::vector<ConvexObject> objects, std::size_t k, std::size_t c = 1) {
	Instance2D inst;
	inst.objects = std::move(objects);
	inst.directions = {Direction::horizontal(), Direction::vertical()};
	inst.k = k;
	inst.c = c;
	return inst;
}

ConvexObject unit(long x, long y) { return ConvexObject::square(x, y, 1, true); }

Instance2D random_squares(std::mt19937_64 &rng) {
	std::uniform_int_distribution<std::size_t> m(1, 12), k(1, 3);
	gen::TranslateParams p;
	p.count = m(rng);
	p.k = k(rng);
	p.density = 0.3;
	return gen::random_unit_squares(rng, p);
}

} // namespace

TEST_CASE("data_reduce: spec examples") {
	auto column = axis_instance({unit(0, 0), unit(0, 2), unit(0, 4), unit(0, 6), unit(0, 8)}, 2);
	auto reduced = fpt::data_reduce(column);
	CHECK(reduced.objects.size() == 3);
	CHECK(reduced.objects[0] == unit(0, 0));
	CHECK(reduced.objects[2] == unit(0, 4));

	auto spread = axis_instance({unit(0, 0), unit(2, 2), unit(4, 4)}, 1);
	CHECK(fpt::data_reduce(spread) == spread);

	auto two_groups = axis_instance({unit(0, 0), unit(0, 2), unit(0, 4), unit(10, 10), unit(12, 10), unit(14, 10)}, 1);
	auto r = fpt::data_reduce(two_groups);
	CHECK(r.objects == std::vector<ConvexObject>{unit(0, 0), unit(0, 2), unit(10, 10), unit(12, 10)});
}

TEST_CASE("find_branch_line: spec examples") {
	CHECK_FALSE(fpt::find_branch_line(axis_instance({}, 1)).has_value());
	auto row = axis_instance({unit(0, 0), unit(2, 0), unit(4, 0)}, 1);
	auto l = fpt::find_branch_line(row);
	REQUIRE(l.has_value());
	CHECK(*l == Line::horizontal(0));
	CHECK_FALSE(fpt::find_branch_line(axis_instance({unit(0, 0), unit(2, 0)}, 2)).has_value());
}

TEST_CASE("candidate_lines: spec examples") {
	auto one = axis_instance({unit(0, 0)}, 1);
	CHECK(fpt::candidate_lines(one, Line::horizontal(q(1, 2))) ==
	      std::vector<Line>{Line::horizontal(0), Line::horizontal(1)});

	auto two = axis_instance({unit(0, 0), ConvexObject::square(0, q(1, 2), 1, true)}, 1);
	CHECK(fpt::candidate_lines(two, Line::horizontal(q(3, 4))) ==
	      std::vector<Line>{Line::horizontal(0), Line::horizontal(q(1, 2)), Line::horizontal(1),
	                        Line::horizontal(q(3, 2))});

	auto dup = axis_instance({unit(0, 0), unit(0, 0)}, 1);
	CHECK(fpt::candidate_lines(dup, Line::horizontal(q(1, 2))).size() == 2);

	// open objects use the outermost class representatives inside each object
	auto open = axis_instance({ConvexObject::square(0, 0, 2, false), ConvexObject::square(3, 1, 2, false)}, 1);
	CHECK(fpt::candidate_lines(open, Line::horizontal(q(3, 2))) ==
	      std::vector<Line>{Line::horizontal(q(1, 2)), Line::horizontal(q(3, 2)), Line::horizontal(q(5, 2))});
}

TEST_CASE("stab_fpt: spec examples") {
	auto empty = fpt::stab_fpt(axis_instance({}, 0));
	CHECK(empty.yes());
	CHECK(empty.witness->lines.empty());

	CHECK_FALSE(fpt::stab_fpt(axis_instance({unit(0, 0)}, 0)).yes());

	std::mt19937_64 rng(1);
	gen::TranslateParams p;
	p.count = 12;
	p.k = 3;
	auto twelve = gen::random_unit_squares(rng, p);
	CHECK(twelve.objects.size() == 12);
	CHECK(fpt::stab_fpt(twelve).decision == oracle::brute_force_stab(twelve).decision);
}

TEST_CASE("solve_kernel: spec examples") {
	CHECK(fpt::solve_kernel(axis_instance({}, 1)).yes());

	// c k^2 = 1 for k = 1
	auto over = fpt::solve_kernel(axis_instance({unit(0, 0), unit(5, 5)}, 1));
	CHECK_FALSE(over.yes());
	REQUIRE(over.stats.kernels.size() == 1);
	CHECK(over.stats.kernels[0].rejected);

	auto apart = fpt::solve_kernel(axis_instance({unit(0, 0), unit(5, 5)}, 2));
	REQUIRE(apart.yes());
	CHECK(apart.witness->lines.size() == 2);
	CHECK(oracle::verify_solution(axis_instance({unit(0, 0), unit(5, 5)}, 2), *apart.witness));
}

TEST_CASE("check_shallowness: spec examples") {
	CHECK(fpt::check_shallowness(axis_instance({unit(0, 0), unit(2, 2)}, 1)) == 1);
	auto overlap = axis_instance({unit(0, 0), ConvexObject::square(q(1, 2), q(1, 2), 1, true)}, 1);
	CHECK(fpt::check_shallowness(overlap) == 2);
	CHECK(fpt::check_shallowness(axis_instance({}, 1)) == 1);
	Instance2D single = axis_instance({unit(0, 0)}, 1);
	single.directions = {Direction::horizontal()};
	CHECK_THROWS_AS(fpt::check_shallowness(single), parameter_error);
}

TEST_CASE("data_reduce is sound") {
	std::mt19937_64 rng(101);
	for (int t = 0; t < 500; ++t) {
		auto inst = random_squares(rng);
		auto reduced = fpt::data_reduce(inst);
		CHECK(reduced.objects.size() <= inst.objects.size());
		CHECK(oracle::brute_force_stab(inst).decision == oracle::brute_force_stab(reduced).decision);
	}
}

TEST_CASE("stab_fpt matches the oracle and respects its bounds") {
	std::mt19937_64 rng(102);
	for (int t = 0; t < 500; ++t) {
		auto inst = random_squares(rng);
		auto fast = fpt::stab_fpt(inst);
		auto slow = oracle::brute_force_stab(inst);
		CHECK(fast.decision == slow.decision);
		CHECK(fast.witness.has_value() == fast.yes());
		if (fast.witness) CHECK(oracle::verify_solution(inst, *fast.witness));
		CHECK(fast.stats.max_depth <= inst.k);
		CHECK(fast.stats.max_branch_width <= 2 * (2 * inst.c * inst.k + 1));
		for (const auto &e : fast.stats.kernels) {
			CHECK((e.objects <= e.c * e.k * e.k || e.decision == fpt::Decision::no));
			CHECK(e.min_lines <= 2 * e.directions * e.c * e.k);
		}
	}
}

TEST_CASE("stab_fpt handles open objects, other shapes and extra directions") {
	std::mt19937_64 rng(103);
	std::vector<ConvexObject> shapes = {ConvexObject::square(0, 0, 1, false), ConvexObject({{0, 0}, {2, 0}, {1, 1}}, true),
	                                    ConvexObject({{0, 0}, {3, 1}, {1, 2}}, false)};
	for (int t = 0; t < 300; ++t) {
		std::uniform_int_distribution<std::size_t> m(1, 10), k(1, 3);
		gen::TranslateParams p;
		p.count = m(rng);
		p.k = k(rng);
		p.grid = 2;
		auto inst = gen::random_translates(rng, shapes[static_cast<std::size_t>(t) % shapes.size()], p);
		if (t % 2) inst.directions.push_back(Direction(1, 1));
		inst.c = fpt::check_shallowness(inst);
		auto fast = fpt::stab_fpt(inst);
		CHECK(fast.decision == oracle::brute_force_stab(inst).decision);
		if (fast.witness) CHECK(oracle::verify_solution(inst, *fast.witness));
	}
}
