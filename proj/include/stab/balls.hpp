#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Independent set -> stabbing unit balls in R^2k by one line through the origin.
// Floating arithmetic; every stabbing test reports its margin.

namespace stab::balls {

/// Classification tolerance on the stabbing margin.
inline constexpr double default_tolerance = 1e-12;

/// Simple loopless undirected graph on vertices 1..n.
class Graph {
public:
	using Edge = std::pair<std::size_t, std::size_t>;

	/// Edges are stored as (min, max). Throws parameter_error on loops, duplicates or bad endpoints.
	Graph(std::size_t n, const std::vector<Edge> &edges);

	/// Bit t of `mask` selects the t-th pair in lexicographic order {1,2}, {1,3}, ..., {n-1,n}.
	static Graph from_mask(std::size_t n, std::uint64_t mask);

	std::size_t n() const { return n_; }
	const std::set<Edge> &edges() const { return edges_; }
	bool has_edge(std::size_t u, std::size_t v) const;

private:
	std::size_t n_;
	std::set<Edge> edges_;
};

struct BallTag {
	enum class Kind { scaffold, constraint };

	Kind kind = Kind::scaffold;
	std::size_t i = 0; // plane of a scaffold ball, first plane of a constraint ball
	std::size_t j = 0;
	std::size_t u = 0; // scaffold position in [2n], or vertex for plane i
	std::size_t v = 0; // vertex for plane j in [2n] (v or v + n)
	int sign = 1;

	/// "scaffold/i/u" or "constraint/i/j/u/v/+" (or "-").
	std::string str() const;
	/// Inverse of str(); throws parameter_error.
	static BallTag parse(const std::string &text);

	friend bool operator==(const BallTag &, const BallTag &) = default;
};

struct Ball {
	std::vector<double> center;
	double radius = 0;
	BallTag tag;

	friend bool operator==(const Ball &, const Ball &) = default;
};

struct BallInstance {
	std::size_t dim = 0;
	std::size_t n = 0;
	std::size_t k = 0;
	double radius = 0;
	double mu = 0;
	double lambda = 0;
	std::vector<Ball> balls;
};

double scaffold_radius(std::size_t n, std::size_t k); // sqrt(1 - (1 - cos(pi/n)) / (2k))
double constraint_mu(std::size_t n);                  // 1 / (9n^2 + 36n^4 + 2)
/// Squared center norm of constraint balls: midpoint of (r^2, k r^2 / (k - mu^2)).
double constraint_norm_sq(std::size_t n, std::size_t k);
/// 2nk + 4 C(k,2) (n + 2|E|)
std::size_t expected_ball_count(std::size_t n, std::size_t k, std::size_t edges);

/// Requires n >= 4 and 2 <= k <= n.
BallInstance build_ball_instance(const Graph &g, std::size_t k);

/// Unit direction l(u_1, ..., u_k) for a tuple in [2n]^k.
std::vector<double> line_direction(std::span<const std::size_t> tuple, std::size_t n);

struct StabTest {
	bool stabbed;
	double margin; // (c.l)^2 - (|c|^2 - r^2)
};

StabTest ball_stabbed(std::span<const double> direction, const Ball &ball, double tol = default_tolerance);

/// Sorted vertex sets of the classes in [n]^k whose line stabs every ball. Guard: n^k <= 1e6.
std::set<std::vector<std::size_t>> enumerate_stabbing_classes(const BallInstance &instance,
                                                              double tol = default_tolerance);

struct ClassAudit {
	std::set<std::vector<std::size_t>> classes;
	/// Smallest |margin| over every (class representative, constraint ball) pair.
	double min_abs_margin = 0;
	/// Smallest signed scaffold margin; class lines touch scaffold balls, so this is ~0.
	double scaffold_min_margin = 0;
	/// Every one of the 2^(k-1) lines of each class gave the same verdict.
	bool representatives_agree = true;
	/// Some surviving tuple repeated a vertex.
	bool repeated_vertex = false;
};

ClassAudit audit_stabbing_classes(const BallInstance &instance, double tol = default_tolerance);

/// All k-subsets spanning no edge, sorted.
std::set<std::vector<std::size_t>> independent_sets(const Graph &g, std::size_t k);
bool has_independent_set(const Graph &g, std::size_t k);

} // namespace stab::balls
