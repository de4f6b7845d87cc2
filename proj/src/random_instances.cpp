#include "stab/random_instances.hpp"

#include <cmath>
#include <unordered_map>

namespace stab::gen {

namespace {

struct CellHash {
	std::size_t operator()(const std::pair<long, long> &c) const {
		return std::hash<long>()(c.first) * 1000003u ^ std::hash<long>()(c.second);
	}
};

} // namespace

Instance2D random_translates(std::mt19937_64 &rng, const ConvexObject &shape, const TranslateParams &params) {
	Instance2D inst;
	inst.directions = {Direction::horizontal(), Direction::vertical()};
	inst.k = params.k;
	inst.c = params.c;

	const Interval xr = shape.x_range(), yr = shape.y_range();
	const double w = to_double(xr.hi - xr.lo), h = to_double(yr.hi - yr.lo);
	const double area = static_cast<double>(params.count) * w * h / params.density;
	const long extent = static_cast<long>(std::ceil(std::sqrt(area) * static_cast<double>(params.grid)));
	std::uniform_int_distribution<long> coord(0, std::max<long>(extent, 1));

	// buckets of size w x h: overlapping bounding boxes lie in adjacent cells
	std::unordered_map<std::pair<long, long>, std::vector<std::size_t>, CellHash> cells;
	auto cell_of = [&](const Point &p) {
		return std::make_pair(static_cast<long>(std::floor(to_double(p.x) / w)),
		                      static_cast<long>(std::floor(to_double(p.y) / h)));
	};

	std::size_t failures = 0;
	while (inst.objects.size() < params.count && failures < 1000 + 100 * params.count) {
		const Point shift{make_rational(coord(rng), params.grid), make_rational(coord(rng), params.grid)};
		std::vector<Point> pts;
		for (const auto &p : shape.vertices()) pts.push_back({p.x + shift.x, p.y + shift.y});
		ConvexObject candidate(std::move(pts), shape.closed());
		const auto cell = cell_of(candidate.vertices().front());
		bool clear = true;
		for (long dx = -1; dx <= 1 && clear; ++dx) {
			for (long dy = -1; dy <= 1 && clear; ++dy) {
				auto it = cells.find({cell.first + dx, cell.second + dy});
				if (it == cells.end()) continue;
				for (auto idx : it->second)
					if (!objects_disjoint(candidate, inst.objects[idx])) {
						clear = false;
						break;
					}
			}
		}
		if (!clear) {
			++failures;
			continue;
		}
		cells[cell].push_back(inst.objects.size());
		inst.objects.push_back(std::move(candidate));
	}
	return inst;
}

Instance2D random_unit_squares(std::mt19937_64 &rng, const TranslateParams &params) {
	return random_translates(rng, ConvexObject::square(0, 0, 1, true), params);
}

squares::Digraph random_digraph(std::mt19937_64 &rng, std::size_t n, double p) {
	std::bernoulli_distribution coin(p);
	std::vector<squares::Digraph::Arc> arcs;
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j)
			if (i != j && coin(rng)) arcs.emplace_back(i, j);
	return squares::Digraph(n, arcs);
}

balls::Graph random_graph(std::mt19937_64 &rng, std::size_t n, double p) {
	std::bernoulli_distribution coin(p);
	std::vector<balls::Graph::Edge> edges;
	for (std::size_t u = 1; u <= n; ++u)
		for (std::size_t v = u + 1; v <= n; ++v)
			if (coin(rng)) edges.emplace_back(u, v);
	return balls::Graph(n, edges);
}

} // namespace stab::gen
