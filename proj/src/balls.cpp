#include "stab/balls.hpp"

#include "stab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace stab::balls {

namespace {

constexpr double pi = std::numbers::pi;

double dot(std::span<const double> a, std::span<const double> b) {
	double s = 0;
	for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
	return s;
}

/// Angle of the apex / line projection for u in [2n].
double apex_angle(std::size_t u, std::size_t n) {
	return static_cast<double>(2 * u - 1) * pi / static_cast<double>(2 * n);
}

/**
 * Scaffold center angle. The printed placement (u - 1) pi / n puts the wedge
 * apices at the class angles only for even n; odd n needs a pi / (2n) turn.
 */
double scaffold_angle(std::size_t u, std::size_t n) {
	return static_cast<double>(2 * (u - 1) + n % 2) * pi / static_cast<double>(2 * n);
}

/**
 * Center of B_ij^{uv}: on the line z in E_i x E_j orthogonal to l with u_i = u, u_j = v.
 * Planes are 0-based here.
 */
std::vector<double> constraint_center(std::size_t dim, std::size_t i, std::size_t j, std::size_t u,
                                      std::size_t v, std::size_t n, double mu, double norm) {
	const double ti = apex_angle(u, n), tj = apex_angle(v, n);
	const double dn = static_cast<double>(n);
	std::vector<double> z(dim, 0.0);
	z[2 * i] = mu * (std::cos(ti) - 3 * dn * std::sin(ti));
	z[2 * i + 1] = mu * (std::sin(ti) + 3 * dn * std::cos(ti));
	z[2 * j] = mu * (-std::cos(tj) - 6 * dn * dn * std::sin(tj));
	z[2 * j + 1] = mu * (-std::sin(tj) + 6 * dn * dn * std::cos(tj));
	const double len = std::sqrt(dot(z, z));
	for (auto &x : z) x *= norm / len;
	return z;
}

std::vector<double> negated(std::vector<double> v) {
	for (auto &x : v) x = -x;
	return v;
}

/// Calls f on every tuple in [n]^k (1-based) in lexicographic order.
template <class F> void for_each_tuple(std::size_t n, std::size_t k, F &&f) {
	std::vector<std::size_t> t(k, 1);
	while (true) {
		f(std::span<const std::size_t>(t));
		std::size_t p = k;
		while (p > 0 && t[p - 1] == n) t[--p] = 1;
		if (p == 0) return;
		++t[p - 1];
	}
}

void check_guard(std::size_t n, std::size_t k) {
	double total = std::pow(static_cast<double>(n), static_cast<double>(k));
	if (total > 1e6) throw guard_exceeded("n^k exceeds 1e6 line classes");
}

} // namespace

Graph::Graph(std::size_t n, const std::vector<Edge> &edges) : n_(n) {
	for (auto [u, v] : edges) {
		if (u < 1 || u > n || v < 1 || v > n) throw parameter_error("edge endpoint out of range");
		if (u == v) throw parameter_error("graph must be loopless");
		if (!edges_.insert({std::min(u, v), std::max(u, v)}).second) throw parameter_error("duplicate edge");
	}
}

Graph Graph::from_mask(std::size_t n, std::uint64_t mask) {
	std::vector<Edge> edges;
	std::size_t t = 0;
	for (std::size_t u = 1; u <= n; ++u)
		for (std::size_t v = u + 1; v <= n; ++v)
			if ((mask >> t++) & 1) edges.emplace_back(u, v);
	return Graph(n, edges);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
	return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

std::string BallTag::str() const {
	std::ostringstream out;
	if (kind == Kind::scaffold)
		out << "scaffold/" << i << '/' << u;
	else
		out << "constraint/" << i << '/' << j << '/' << u << '/' << v << '/' << (sign > 0 ? '+' : '-');
	return out.str();
}

BallTag BallTag::parse(const std::string &text) {
	std::vector<std::string> parts;
	std::stringstream in(text);
	for (std::string part; std::getline(in, part, '/');) parts.push_back(part);
	auto number = [&](const std::string &s) -> std::size_t {
		if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
			throw parameter_error("bad ball tag: " + text);
		return std::stoul(s);
	};
	BallTag tag;
	if (parts.size() == 3 && parts[0] == "scaffold") {
		tag.i = number(parts[1]);
		tag.u = number(parts[2]);
		return tag;
	}
	if (parts.size() == 6 && parts[0] == "constraint" && (parts[5] == "+" || parts[5] == "-")) {
		tag.kind = Kind::constraint;
		tag.i = number(parts[1]);
		tag.j = number(parts[2]);
		tag.u = number(parts[3]);
		tag.v = number(parts[4]);
		tag.sign = parts[5] == "+" ? 1 : -1;
		return tag;
	}
	throw parameter_error("bad ball tag: " + text);
}

double scaffold_radius(std::size_t n, std::size_t k) {
	return std::sqrt(1 - (1 - std::cos(pi / static_cast<double>(n))) / (2 * static_cast<double>(k)));
}

double constraint_mu(std::size_t n) {
	const double dn = static_cast<double>(n);
	return 1 / (9 * dn * dn + 36 * dn * dn * dn * dn + 2);
}

double constraint_norm_sq(std::size_t n, std::size_t k) {
	const double r = scaffold_radius(n, k), mu = constraint_mu(n), dk = static_cast<double>(k);
	return (r * r + dk * r * r / (dk - mu * mu)) / 2;
}

std::size_t expected_ball_count(std::size_t n, std::size_t k, std::size_t edges) {
	return 2 * n * k + 4 * (k * (k - 1) / 2) * (n + 2 * edges);
}

BallInstance build_ball_instance(const Graph &g, std::size_t k) {
	const std::size_t n = g.n();
	if (n < 4) throw parameter_error("ball reduction needs n >= 4");
	if (k < 2 || k > n) throw parameter_error("ball reduction needs 2 <= k <= n");

	BallInstance inst;
	inst.dim = 2 * k;
	inst.n = n;
	inst.k = k;
	inst.radius = scaffold_radius(n, k);
	inst.mu = constraint_mu(n);
	inst.lambda = 1 / std::sqrt(static_cast<double>(k));

	for (std::size_t i = 1; i <= k; ++i) {
		for (std::size_t u = 1; u <= 2 * n; ++u) {
			std::vector<double> c(inst.dim, 0.0);
			const double a = scaffold_angle(u, n);
			c[2 * (i - 1)] = std::cos(a);
			c[2 * (i - 1) + 1] = std::sin(a);
			inst.balls.push_back({std::move(c), inst.radius, {BallTag::Kind::scaffold, i, 0, u, 0, 1}});
		}
	}

	const double norm = std::sqrt(constraint_norm_sq(n, k));
	auto add_set = [&](std::size_t i, std::size_t j, std::size_t u, std::size_t v) {
		for (std::size_t vv : {v, v + n}) {
			auto c = constraint_center(inst.dim, i - 1, j - 1, u, vv, n, inst.mu, norm);
			inst.balls.push_back({c, inst.radius, {BallTag::Kind::constraint, i, j, u, vv, 1}});
			inst.balls.push_back({negated(c), inst.radius, {BallTag::Kind::constraint, i, j, u, vv, -1}});
		}
	};
	for (std::size_t u = 1; u <= n; ++u)
		for (std::size_t i = 1; i <= k; ++i)
			for (std::size_t j = i + 1; j <= k; ++j) add_set(i, j, u, u);
	for (auto [u, v] : g.edges())
		for (std::size_t i = 1; i <= k; ++i)
			for (std::size_t j = 1; j <= k; ++j)
				if (i != j) add_set(i, j, u, v);
	return inst;
}

std::vector<double> line_direction(std::span<const std::size_t> tuple, std::size_t n) {
	const double scale = 1 / std::sqrt(static_cast<double>(tuple.size()));
	std::vector<double> l;
	for (auto u : tuple) {
		if (u < 1 || u > 2 * n) throw parameter_error("tuple entry outside [2n]");
		l.push_back(scale * std::cos(apex_angle(u, n)));
		l.push_back(scale * std::sin(apex_angle(u, n)));
	}
	return l;
}

StabTest ball_stabbed(std::span<const double> direction, const Ball &ball, double tol) {
	const double cl = dot(ball.center, direction);
	const double margin = cl * cl - (dot(ball.center, ball.center) - ball.radius * ball.radius);
	return {margin >= -tol, margin};
}

ClassAudit audit_stabbing_classes(const BallInstance &instance, double tol) {
	const std::size_t n = instance.n, k = instance.k;
	check_guard(n, k);
	ClassAudit audit;
	audit.min_abs_margin = std::numeric_limits<double>::infinity();
	audit.scaffold_min_margin = std::numeric_limits<double>::infinity();
	for_each_tuple(n, k, [&](std::span<const std::size_t> tuple) {
		bool verdict = true;
		// first entry fixed: l and -l are the same line
		for (std::size_t flips = 0; flips < (std::size_t{1} << (k - 1)); ++flips) {
			std::vector<std::size_t> rep(tuple.begin(), tuple.end());
			for (std::size_t p = 1; p < k; ++p)
				if ((flips >> (p - 1)) & 1) rep[p] += n;
			const auto l = line_direction(rep, n);
			bool all = true;
			for (const auto &b : instance.balls) {
				auto t = ball_stabbed(l, b, tol);
				if (b.tag.kind == BallTag::Kind::scaffold)
					audit.scaffold_min_margin = std::min(audit.scaffold_min_margin, t.margin);
				else
					audit.min_abs_margin = std::min(audit.min_abs_margin, std::abs(t.margin));
				all = all && t.stabbed;
			}
			if (flips == 0)
				verdict = all;
			else if (all != verdict)
				audit.representatives_agree = false;
		}
		if (!verdict) return;
		std::vector<std::size_t> set(tuple.begin(), tuple.end());
		std::sort(set.begin(), set.end());
		if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
			audit.repeated_vertex = true;
			return;
		}
		audit.classes.insert(std::move(set));
	});
	return audit;
}

std::set<std::vector<std::size_t>> enumerate_stabbing_classes(const BallInstance &instance, double tol) {
	const std::size_t n = instance.n, k = instance.k;
	check_guard(n, k);
	std::set<std::vector<std::size_t>> out;
	for_each_tuple(n, k, [&](std::span<const std::size_t> tuple) {
		const auto l = line_direction(tuple, n);
		for (const auto &b : instance.balls)
			if (!ball_stabbed(l, b, tol).stabbed) return;
		std::vector<std::size_t> set(tuple.begin(), tuple.end());
		std::sort(set.begin(), set.end());
		out.insert(std::move(set));
	});
	return out;
}

std::set<std::vector<std::size_t>> independent_sets(const Graph &g, std::size_t k) {
	const std::size_t n = g.n();
	if (k < 1 || k > n) throw parameter_error("need 1 <= k <= n");
	std::set<std::vector<std::size_t>> out;
	std::vector<bool> pick(n, false);
	std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
	do {
		std::vector<std::size_t> s;
		for (std::size_t v = 0; v < n; ++v)
			if (pick[v]) s.push_back(v + 1);
		bool independent = true;
		for (std::size_t a = 0; a < s.size() && independent; ++a)
			for (std::size_t b = a + 1; b < s.size() && independent; ++b) independent = !g.has_edge(s[a], s[b]);
		if (independent) out.insert(std::move(s));
	} while (std::prev_permutation(pick.begin(), pick.end()));
	return out;
}

bool has_independent_set(const Graph &g, std::size_t k) { return !independent_sets(g, k).empty(); }

} // namespace stab::balls
