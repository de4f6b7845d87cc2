#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stab/errors.hpp"
#include "stab/oracle.hpp"
#include "stab/random_instances.hpp"

#include <algorithm>
#include <functional>

using namespace stab;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Instance2D axis_instance(std::vector<ConvexObject> objects, std::size_t k) {
	Instance2D inst;
	inst.objects = std::move(objects);
	inst.directions = {Direction::horizontal(), Direction::vertical()};
	inst.k = k;
	return inst;
}

ConvexObject unit(const Rational &x, const Rational &y) { return ConvexObject::square(x, y, 1, true); }

/// Reference decision: every subset of at most k lines out of all pairwise endpoint offsets.
bool exhaustive(const Instance2D &inst) {
	std::vector<Line> lines;
	for (const auto &d : inst.directions)
		for (const auto &o : inst.objects) {
			auto r = o.projection(d);
			lines.push_back({d, r.lo});
			lines.push_back({d, r.hi});
		}
	const std::size_t L = lines.size();
	std::vector<std::size_t> pick;
	auto covers = [&] {
		return std::all_of(inst.objects.begin(), inst.objects.end(), [&](const ConvexObject &o) {
			return std::any_of(pick.begin(), pick.end(), [&](std::size_t i) { return stabs(lines[i], o); });
		});
	};
	std::function<bool(std::size_t)> go = [&](std::size_t from) {
		if (covers()) return true;
		if (pick.size() == inst.k) return false;
		for (std::size_t i = from; i < L; ++i) {
			pick.push_back(i);
			if (go(i + 1)) return true;
			pick.pop_back();
		}
		return false;
	};
	return go(0);
}

Instance2D random_squares(std::mt19937_64 &rng, std::size_t max_count = 10) {
	std::uniform_int_distribution<std::size_t> m(1, max_count), k(1, 3);
	gen::TranslateParams p;
	p.count = m(rng);
	p.k = k(rng);
	p.density = 0.3;
	return gen::random_unit_squares(rng, p);
}

} // namespace

TEST_CASE("brute_force_stab: spec examples") {
	CHECK(oracle::brute_force_stab(axis_instance({}, 0)).yes());
	CHECK_FALSE(oracle::brute_force_stab(axis_instance({unit(0, 0), unit(2, 2)}, 1)).yes());
	auto three = axis_instance({unit(0, 0), unit(2, q(1, 2)), unit(4, 0)}, 1);
	auto r = oracle::brute_force_stab(three);
	REQUIRE(r.yes());
	CHECK(r.witness->lines.size() == 1);
	CHECK(r.witness->lines[0].direction == Direction::horizontal());
	CHECK(oracle::verify_solution(three, *r.witness));
}

TEST_CASE("brute_force_stab guard") {
	Instance2D inst = axis_instance({}, 30);
	for (long i = 0; i < 40; ++i) inst.objects.push_back(unit(3 * i, 5 * i));
	CHECK_THROWS_WITH_AS(oracle::brute_force_stab(inst), "instance too large for oracle", guard_exceeded);
}

TEST_CASE("brute_force_stab agrees with an unfiltered enumeration") {
	std::mt19937_64 rng(201);
	for (int t = 0; t < 150; ++t) {
		auto inst = random_squares(rng, 7);
		CHECK(oracle::brute_force_stab(inst).yes() == exhaustive(inst));
	}
}

TEST_CASE("dominance_filter: spec examples") {
	auto twins = axis_instance({unit(0, 0), unit(0, 0)}, 1);
	auto rep = oracle::dominance_filter(twins);
	// y = 0 and y = 1 stab both; x = 0 and x = 1 too: one survivor overall
	CHECK(rep.kept.size() == 1);
	CHECK(rep.kept[0] == Line::horizontal(0));

	// nested stab sets: y = 1 meets all three, y = 0 only the first two
	auto stacked = axis_instance({unit(0, 0), unit(2, 0), unit(4, 1)}, 1);
	auto r = oracle::dominance_filter(stacked);
	CHECK(std::find(r.kept.begin(), r.kept.end(), Line::horizontal(1)) != r.kept.end());
	CHECK(std::find(r.kept.begin(), r.kept.end(), Line::horizontal(0)) == r.kept.end());
	bool removed_y0 = false;
	for (const auto &[gone, by] : r.removed) {
		const auto wide = stab_set(by, stacked), narrow = stab_set(gone, stacked);
		CHECK(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end()));
		removed_y0 = removed_y0 || gone == Line::horizontal(0);
	}
	CHECK(removed_y0);
}

TEST_CASE("dominance report is consistent") {
	std::mt19937_64 rng(202);
	for (int t = 0; t < 100; ++t) {
		auto inst = random_squares(rng);
		auto rep = oracle::dominance_filter(inst);
		for (const auto &[gone, by] : rep.removed) {
			auto a = stab_set(gone, inst), b = stab_set(by, inst);
			CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
		}
	}
}

TEST_CASE("oracle is monotone in k") {
	std::mt19937_64 rng(203);
	for (int t = 0; t < 100; ++t) {
		auto inst = random_squares(rng);
		bool prev = false;
		for (std::size_t k = 0; k <= 4; ++k) {
			inst.k = k;
			bool now = oracle::brute_force_stab(inst).yes();
			CHECK((!prev || now));
			prev = now;
		}
	}
}

TEST_CASE("dominance filtering preserves the decision") {
	std::mt19937_64 rng(204);
	for (int t = 0; t < 200; ++t) {
		auto inst = random_squares(rng);
		auto filtered = oracle::brute_force_stab(inst);
		auto plain = oracle::brute_force_stab(inst, {.filter_dominated = false});
		CHECK(filtered.decision == plain.decision);
		if (filtered.witness) CHECK(oracle::verify_solution(inst, *filtered.witness));
		if (plain.witness) CHECK(oracle::verify_solution(inst, *plain.witness));
	}
}

TEST_CASE("verify_solution: spec examples") {
	CHECK(oracle::verify_solution(axis_instance({}, 0), Solution{}));
	CHECK_FALSE(oracle::verify_solution(axis_instance({unit(0, 0)}, 1), Solution{}));
	CHECK(oracle::verify_solution(axis_instance({unit(0, 0)}, 1), Solution{{Line::vertical(1)}}));
	// too many lines, or a foreign direction
	CHECK_FALSE(oracle::verify_solution(axis_instance({unit(0, 0)}, 0), Solution{{Line::vertical(1)}}));
	CHECK_FALSE(oracle::verify_solution(axis_instance({unit(0, 0)}, 1), Solution{{Line{Direction(1, 1), 0}}}));
}
