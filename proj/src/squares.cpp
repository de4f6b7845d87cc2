#include "stab/squares.hpp"

#include "stab/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace stab::squares {

namespace {

struct RawSquare {
	Rational x, y, side;
};

struct RawGadget {
	GadgetKind kind;
	Point offset;
	std::vector<RawSquare> squares;
	std::vector<std::pair<std::size_t, std::size_t>> wobble;
};

Rational q(long v) { return Rational(v); }

bool is_forcing(GadgetKind kind) { return kind == GadgetKind::forcing_h || kind == GadgetKind::forcing_v; }

RawGadget raw_forcing(bool horizontal, std::size_t n, std::size_t count, const Point &at, bool unit_side) {
	RawGadget g{horizontal ? GadgetKind::forcing_h : GadgetKind::forcing_v, at, {}, {}};
	const Rational half = make_rational(1, 2);
	for (std::size_t i = 1; i <= count; ++i) {
		Rational along = -Rational(i * n);
		Rational across = 0;
		Rational side = n;
		if (unit_side) {
			along += half;
			across = half;
			side = n - 1;
		}
		if (horizontal)
			g.squares.push_back({at.x + along, at.y + across, side});
		else
			g.squares.push_back({at.x + across, at.y + along, side});
	}
	return g;
}

RawGadget raw_adjacency(const Digraph &graph, const Point &at, bool diagonal) {
	const std::size_t n = graph.n();
	RawGadget g{diagonal ? GadgetKind::diagonal : GadgetKind::adjacency, at, {}, {}};
	for (std::size_t i = 1; i <= n; ++i) {
		for (std::size_t j = 1; j <= n; ++j) {
			bool present = diagonal ? i != j : !graph.has_arc(i, j);
			if (!present) continue;
			g.squares.push_back({at.x + q(i), at.y + q(j), q(n - 1)});
			g.wobble.emplace_back(i, j);
		}
	}
	return g;
}

RawGadget raw_consistency(bool horizontal, std::size_t n, const Point &at) {
	RawGadget g{horizontal ? GadgetKind::consistency_h : GadgetKind::consistency_v, at, {}, {}};
	const long ln = static_cast<long>(n);
	std::vector<std::pair<long, long>> rel;
	for (long i = 1; i <= ln - 1; ++i) rel.emplace_back(i, i - ln + 1);
	for (long i = 2; i <= ln; ++i) rel.emplace_back(i - ln, ln + i - 1);
	std::size_t t = 0;
	for (auto [a, b] : rel) {
		if (!horizontal) std::swap(a, b);
		g.squares.push_back({at.x + q(a), at.y + q(b), q(ln - 1)});
		++t;
		g.wobble.emplace_back(t / n, t % n);
	}
	return g;
}

void check_parameters(const Digraph &g, std::size_t k) {
	if (k < 2 || k > g.n())
		throw parameter_error("need 2 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(g.n()));
}

std::vector<RawGadget> raw_construction(const Digraph &graph, std::size_t k, std::size_t forcing_count,
                                        bool unit_side) {
	check_parameters(graph, k);
	const long n = static_cast<long>(graph.n());
	const long step = 3 * n;
	const long far = -3 * n * (static_cast<long>(k) + 1);
	const long lk = static_cast<long>(k);
	std::vector<RawGadget> out;

	for (long i = 1; i <= lk; ++i)
		for (long j = 1; j <= lk; ++j)
			if (i != j) out.push_back(raw_adjacency(graph, {q(i * step), q(j * step)}, false));
	for (long i = 1; i <= lk; ++i) out.push_back(raw_adjacency(graph, {q(i * step), q(i * step)}, true));
	for (long i = 1; i <= lk; ++i) out.push_back(raw_consistency(true, graph.n(), {q(-i * step), q(i * step)}));
	for (long i = 1; i <= lk; ++i) out.push_back(raw_consistency(false, graph.n(), {q(i * step), q(-i * step)}));

	auto forcing = [&](bool horizontal, long x, long y) {
		out.push_back(raw_forcing(horizontal, graph.n(), forcing_count, {q(x), q(y)}, unit_side));
	};
	for (long i = 1; i <= lk; ++i) forcing(true, far, i * step);      // S_h^-
	for (long i = 1; i <= lk; ++i) forcing(true, far, i * step + n);  // S_h^+
	for (long i = 1; i <= lk; ++i) forcing(false, i * step, far);     // S_v^-
	for (long i = 1; i <= lk; ++i) forcing(false, i * step + n, far); // S_v^+
	for (long i = 1; i <= lk; ++i) forcing(false, -i * step, far);    // S_{C_h}
	for (long i = 1; i <= lk; ++i) forcing(true, far, -i * step);     // S_{C_v}
	return out;
}

/// Scale by s = 1/n, then shrink every square by epsilon.
void scale_and_shrink(std::vector<RawGadget> &gadgets, std::size_t n) {
	const Rational s = scale_factor(n), eps = shrink_amount(n);
	for (auto &g : gadgets) {
		g.offset = {g.offset.x * s, g.offset.y * s};
		for (auto &sq : g.squares) {
			sq.x = sq.x * s + eps;
			sq.y = sq.y * s + eps;
			sq.side = sq.side * s - 2 * eps;
		}
	}
}

GadgetSpec to_spec(const RawGadget &raw) {
	GadgetSpec spec{raw.kind, raw.offset, {}, raw.wobble};
	for (const auto &sq : raw.squares) spec.squares.push_back(ConvexObject::square(sq.x, sq.y, sq.side, false));
	return spec;
}

SquareReduction assemble(const std::vector<RawGadget> &raw, std::size_t n, std::size_t k,
                         std::size_t forcing_count) {
	SquareReduction out;
	out.instance.directions = {Direction::horizontal(), Direction::vertical()};
	out.instance.k = 6 * k;
	out.layout.classes_per_strip = n;
	out.layout.forcing_squares = forcing_count;
	for (const auto &g : raw) {
		out.gadgets.push_back(to_spec(g));
		for (const auto &sq : out.gadgets.back().squares) out.instance.objects.push_back(sq);
		if (!is_forcing(g.kind)) continue;
		const RawSquare &first = g.squares.front();
		if (g.kind == GadgetKind::forcing_h)
			out.layout.horizontal_strips.push_back({first.y, first.y + first.side});
		else
			out.layout.vertical_strips.push_back({first.x, first.x + first.side});
	}
	// Trivially valid shallowness bound; the FPT solver is not meant for these sets.
	out.instance.c = std::max<std::size_t>(1, out.instance.objects.size());
	return out;
}

std::vector<RawGadget> raw_wobbled(const Digraph &graph, std::size_t k) {
	const std::size_t n = graph.n();
	auto raw = raw_construction(graph, k, n * n, true);
	scale_and_shrink(raw, n);
	const Rational w = wobble_unit(n);
	const Rational lift = w * static_cast<long>(n * n);
	const Rational side = wobbled_side(n);
	for (auto &g : raw) {
		for (std::size_t t = 0; t < g.squares.size(); ++t) {
			auto &sq = g.squares[t];
			sq.x += lift;
			sq.y += lift;
			if (!is_forcing(g.kind)) {
				auto [i, j] = g.wobble[t];
				sq.y += 2 * w * static_cast<long>(i * n + j);
			}
			sq.side = side;
		}
	}
	return raw;
}

Instance2D axis_parallel_instance(std::vector<ConvexObject> objects, std::size_t k) {
	Instance2D inst;
	inst.directions = {Direction::horizontal(), Direction::vertical()};
	inst.k = 6 * k;
	inst.objects = std::move(objects);
	inst.c = std::max<std::size_t>(1, inst.objects.size());
	return inst;
}

bool includes(const std::vector<std::size_t> &big, const std::vector<std::size_t> &small) {
	return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// One forced strip: its surviving line classes.
struct StripVar {
	bool horizontal;
	std::vector<Rational> offsets;
	std::vector<std::vector<std::size_t>> hits;
};

class StripSearch {
public:
	struct Literal {
		std::size_t var;
		std::uint64_t mask;
	};

	StripSearch(std::vector<std::uint64_t> domains, std::vector<std::vector<Literal>> clauses)
	    : start_(std::move(domains)), clauses_(std::move(clauses)) {}

	std::optional<std::vector<std::size_t>> run() {
		auto found = dfs(start_);
		if (!found) return std::nullopt;
		std::vector<std::size_t> choice;
		for (auto d : *found) choice.push_back(static_cast<std::size_t>(std::countr_zero(d)));
		return choice;
	}

private:
	bool propagate(std::vector<std::uint64_t> &dom) const {
		bool changed = true;
		while (changed) {
			changed = false;
			for (const auto &clause : clauses_) {
				std::size_t alive = 0;
				const Literal *last = nullptr;
				bool entailed = false;
				for (const auto &lit : clause) {
					std::uint64_t d = dom[lit.var] & lit.mask;
					if (d == dom[lit.var]) {
						entailed = true;
						break;
					}
					if (d) {
						++alive;
						last = &lit;
					}
				}
				if (entailed) continue;
				if (alive == 0) return false;
				if (alive == 1) {
					dom[last->var] &= last->mask;
					changed = true;
				}
			}
		}
		return true;
	}

	std::optional<std::vector<std::uint64_t>> dfs(std::vector<std::uint64_t> dom) const {
		if (!propagate(dom)) return std::nullopt;
		std::size_t pick = dom.size();
		int best = 65;
		for (std::size_t v = 0; v < dom.size(); ++v) {
			int c = std::popcount(dom[v]);
			if (c > 1 && c < best) {
				best = c;
				pick = v;
			}
		}
		if (pick == dom.size()) return dom;
		for (std::uint64_t rest = dom[pick]; rest; rest &= rest - 1) {
			auto next = dom;
			next[pick] = rest & (~rest + 1);
			if (auto r = dfs(std::move(next))) return r;
		}
		return std::nullopt;
	}

	std::vector<std::uint64_t> start_;
	std::vector<std::vector<Literal>> clauses_;
};

} // namespace

Digraph::Digraph(std::size_t n, const std::vector<Arc> &arcs) : n_(n) {
	if (n < 2) throw parameter_error("digraph needs at least 2 vertices");
	for (const auto &[i, j] : arcs) {
		if (i < 1 || i > n || j < 1 || j > n) throw parameter_error("arc endpoint out of range");
		if (i == j) throw parameter_error("digraph must be loopless");
		if (!arcs_.insert({i, j}).second) throw parameter_error("duplicate arc");
	}
}

Digraph Digraph::complete(std::size_t n) {
	std::vector<Arc> arcs;
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j)
			if (i != j) arcs.emplace_back(i, j);
	return Digraph(n, arcs);
}

Digraph Digraph::from_mask(std::size_t n, std::uint64_t mask) {
	std::vector<Arc> arcs;
	std::size_t t = 0;
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j)
			if (i != j && ((mask >> t++) & 1)) arcs.emplace_back(i, j);
	return Digraph(n, arcs);
}

GadgetSpec forcing_gadget(bool horizontal, std::size_t n, std::size_t count, const Point &offset, bool unit_side) {
	return to_spec(raw_forcing(horizontal, n, count, offset, unit_side));
}

GadgetSpec adjacency_gadget(const Digraph &g, const Point &offset) { return to_spec(raw_adjacency(g, offset, false)); }

GadgetSpec diagonal_gadget(std::size_t n, const Point &offset) {
	return to_spec(raw_adjacency(Digraph(n, {}), offset, true));
}

GadgetSpec consistency_gadget(bool horizontal, std::size_t n, const Point &offset) {
	return to_spec(raw_consistency(horizontal, n, offset));
}

SquareReduction build_s_prime(const Digraph &g, std::size_t k) {
	return assemble(raw_construction(g, k, 6 * k + 1, false), g.n(), k, 6 * k + 1);
}

SquareReduction build_s(const Digraph &g, std::size_t k) {
	return assemble(raw_construction(g, k, 6 * k + 1, true), g.n(), k, 6 * k + 1);
}

SquareReduction build_s_star(const Digraph &g, std::size_t k) {
	const std::size_t n = g.n();
	auto raw = raw_construction(g, k, n * n, true);
	scale_and_shrink(raw, n);
	return assemble(raw, n, k, n * n);
}

std::vector<ConvexObject> wobbled_squares(const Digraph &g, std::size_t k) {
	std::vector<ConvexObject> out;
	for (const auto &gadget : raw_wobbled(g, k))
		for (const auto &sq : gadget.squares) out.push_back(ConvexObject::square(sq.x, sq.y, sq.side, false));
	return out;
}

Instance2D build_r_star(const Digraph &g, std::size_t k) {
	std::vector<ConvexObject> rects;
	for (const auto &gadget : raw_wobbled(g, k))
		for (const auto &sq : gadget.squares) rects.push_back(thin_rectangle(sq.x, sq.y, g.n()));
	return axis_parallel_instance(std::move(rects), k);
}

ShearedReduction build_u_star(const Digraph &g, std::size_t k) {
	Instance2D sheared = apply_map(shear_map(g.n()), build_r_star(g, k));
	Direction first = sheared.directions[0], second = sheared.directions[1];
	return {std::move(sheared), std::move(first), std::move(second)};
}

Rational scale_factor(std::size_t n) { return make_rational(1, static_cast<long>(n)); }

Rational shrink_amount(std::size_t n) { return make_rational(1, 6 * static_cast<long>(n)); }

Rational shrunk_side(std::size_t n) { return Rational(1) - scale_factor(n) - 2 * shrink_amount(n); }

Rational wobble_unit(std::size_t n) {
	long n4 = static_cast<long>(n * n * n * n);
	return make_rational(1, n4);
}

Rational wobbled_side(std::size_t n) { return shrunk_side(n) - 2 * wobble_unit(n) * static_cast<long>(n * n); }

ConvexObject thin_rectangle(const Rational &x, const Rational &y, std::size_t n) {
	const Rational w = wobble_unit(n), u = wobbled_side(n);
	return ConvexObject({{x + w, y}, {x + u, y + u - w}, {x + u - w, y + u}, {x, y + w}}, false);
}

LinearMap2 shear_map(std::size_t n) {
	const Rational w = wobble_unit(n), u = wobbled_side(n);
	const Rational a = 1 / (2 * w), b = 1 / (2 * (u - w));
	return {a, -a, b, b};
}

bool asymptotic_regime(std::size_t n, std::size_t k) { return n >= 6 * k + 4; }

LinearMap2 quasi_square_map(const ConvexObject &object, const Direction &d, const Direction &d2) {
	LinearMap2 basis{d.vector().x, d2.vector().x, d.vector().y, d2.vector().y};
	if (basis.determinant() == 0) throw geometry_error("quasi-square directions are parallel");
	LinearMap2 to_axes = basis.inverse();
	ConvexObject image = to_axes.apply(object);
	Interval xr = image.x_range(), yr = image.y_range();
	return LinearMap2::scaling(1 / (xr.hi - xr.lo), 1 / (yr.hi - yr.lo)) * to_axes;
}

ConvexObject bounding_box(const ConvexObject &object) {
	Interval xr = object.x_range(), yr = object.y_range();
	return ConvexObject::rectangle(xr.lo, yr.lo, xr.hi - xr.lo, yr.hi - yr.lo, object.closed());
}

bool is_axis_parallel_unit_square(const ConvexObject &object) {
	const auto &v = object.vertices();
	if (v.size() != 4) return false;
	for (std::size_t i = 0; i < 4; ++i) {
		Rational dx = v[(i + 1) % 4].x - v[i].x, dy = v[(i + 1) % 4].y - v[i].y;
		bool unit_x = dy == 0 && (dx == 1 || dx == -1);
		bool unit_y = dx == 0 && (dy == 1 || dy == -1);
		if (!unit_x && !unit_y) return false;
	}
	return true;
}

bool diagonal_gaps_hold(std::span<const ConvexObject> squares, const Rational &w) {
	struct Box {
		Interval x, y;
	};
	std::vector<Box> boxes;
	for (const auto &s : squares) boxes.push_back({s.x_range(), s.y_range()});
	std::vector<std::size_t> order(boxes.size());
	for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
	std::sort(order.begin(), order.end(), [&](auto a, auto b) { return boxes[a].x.lo < boxes[b].x.lo; });

	const Rational min_sq = 4 * w * w; // (delta / sqrt 2)^2 >= 2 W^2
	for (std::size_t p = 0; p < order.size(); ++p) {
		const Box &a = boxes[order[p]];
		for (std::size_t t = p + 1; t < order.size() && boxes[order[t]].x.lo < a.x.hi; ++t) {
			const Box &b = boxes[order[t]];
			if (b.y.hi <= a.y.lo || a.y.hi <= b.y.lo) continue;
			Rational delta = (a.y.lo - a.x.lo) - (b.y.lo - b.x.lo);
			if (delta * delta < min_sq) return false;
		}
	}
	return true;
}

std::optional<Solution> strip_solve(const Instance2D &instance, const StripLayout &layout) {
	const auto h_index = instance.direction_index(Direction::horizontal());
	const auto v_index = instance.direction_index(Direction::vertical());
	if (!h_index || !v_index) throw parameter_error("layout/instance mismatch: instance is not axis-parallel");
	const std::size_t strips = layout.horizontal_strips.size() + layout.vertical_strips.size();
	if (strips != instance.k)
		throw parameter_error("layout/instance mismatch: " + std::to_string(strips) + " strips for budget " +
		                      std::to_string(instance.k));
	if (layout.forcing_squares <= std::max(layout.horizontal_strips.size(), layout.vertical_strips.size()))
		throw parameter_error("forcing gadgets too small to force one line per strip");
	if (instance.objects.empty()) return Solution{};

	const bool closed = instance.objects.front().closed();
	const std::size_t m = instance.objects.size();
	std::vector<Interval> ys, xs;
	for (const auto &o : instance.objects) {
		if (o.closed() != closed) throw geometry_error("heterogeneous closedness");
		ys.push_back(o.y_range());
		xs.push_back(o.x_range());
	}
	const auto h_offsets = canonical_offsets(ys, closed);
	const auto v_offsets = canonical_offsets(xs, closed);

	std::vector<StripVar> vars;
	auto add_strips = [&](const std::vector<Interval> &strips_of, bool horizontal) {
		const auto &offsets = horizontal ? h_offsets : v_offsets;
		const auto &ranges = horizontal ? ys : xs;
		for (const auto &strip : strips_of) {
			StripVar var{horizontal, {}, {}};
			std::vector<Rational> cand;
			std::vector<std::vector<std::size_t>> cand_hits;
			for (const auto &t : offsets) {
				if (!stabs_range(t, strip, closed)) continue;
				std::vector<std::size_t> hit;
				for (std::size_t i = 0; i < m; ++i)
					if (stabs_range(t, ranges[i], closed)) hit.push_back(i);
				cand.push_back(t);
				cand_hits.push_back(std::move(hit));
			}
			// a dominated class can always be swapped for its dominator inside the strip
			for (std::size_t a = 0; a < cand.size(); ++a) {
				bool dominated = false;
				for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
					if (a == b || !includes(cand_hits[b], cand_hits[a])) continue;
					dominated = cand_hits[a].size() < cand_hits[b].size() || b < a;
				}
				if (!dominated) {
					var.offsets.push_back(cand[a]);
					var.hits.push_back(cand_hits[a]);
				}
			}
			if (var.offsets.size() > 64) throw parameter_error("more than 64 line classes in one strip");
			vars.push_back(std::move(var));
		}
	};
	add_strips(layout.horizontal_strips, true);
	add_strips(layout.vertical_strips, false);

	std::vector<std::uint64_t> domains;
	for (const auto &v : vars) {
		if (v.offsets.empty()) return std::nullopt;
		domains.push_back(v.offsets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v.offsets.size()) - 1);
	}

	std::vector<std::vector<std::uint64_t>> masks(m, std::vector<std::uint64_t>(vars.size(), 0));
	for (std::size_t v = 0; v < vars.size(); ++v)
		for (std::size_t c = 0; c < vars[v].hits.size(); ++c)
			for (auto i : vars[v].hits[c]) masks[i][v] |= std::uint64_t{1} << c;

	std::vector<std::vector<StripSearch::Literal>> clauses;
	for (std::size_t i = 0; i < m; ++i) {
		std::vector<StripSearch::Literal> clause;
		bool always = false;
		for (std::size_t v = 0; v < vars.size(); ++v) {
			if (!masks[i][v]) continue;
			if (masks[i][v] == domains[v]) always = true;
			clause.push_back({v, masks[i][v]});
		}
		if (clause.empty()) return std::nullopt;
		if (!always) clauses.push_back(std::move(clause));
	}

	auto choice = StripSearch(domains, std::move(clauses)).run();
	if (!choice) return std::nullopt;
	Solution s;
	for (std::size_t v = 0; v < vars.size(); ++v) {
		const Rational &t = vars[v].offsets[(*choice)[v]];
		s.lines.push_back(vars[v].horizontal ? Line::horizontal(t) : Line::vertical(t));
	}
	if (!covers_all(instance.objects, s.lines))
		throw invariant_violation("strip search returned lines that miss a square");
	return s;
}

bool strip_verify(const Instance2D &instance, const StripLayout &layout) {
	return strip_solve(instance, layout).has_value();
}

bool has_clique(const Digraph &g, std::size_t k) {
	const std::size_t n = g.n();
	if (k < 1 || k > n) throw parameter_error("need 1 <= k <= n");
	std::vector<std::size_t> chosen;
	std::function<bool(std::size_t)> extend = [&](std::size_t next) {
		if (chosen.size() == k) return true;
		for (std::size_t v = next; v <= n; ++v) {
			bool ok = std::all_of(chosen.begin(), chosen.end(),
			                      [&](std::size_t u) { return g.has_arc(u, v) && g.has_arc(v, u); });
			if (!ok) continue;
			chosen.push_back(v);
			if (extend(v + 1)) return true;
			chosen.pop_back();
		}
		return false;
	};
	return extend(1);
}

namespace {

/// Midpoint of the open class (v - 1, v) shifted by `base`.
Rational class_line(std::size_t v, long base) { return Rational(base + static_cast<long>(v)) - make_rational(1, 2); }

bool stabbed_by_antipodal(const GadgetSpec &gadget, std::size_t n, std::size_t vertical_rep,
                          std::size_t horizontal_rep) {
	const long ln = static_cast<long>(n);
	std::vector<Line> lines = {Line::vertical(class_line(vertical_rep, 0)),
	                           Line::vertical(class_line(vertical_rep, ln)),
	                           Line::horizontal(class_line(horizontal_rep, 0)),
	                           Line::horizontal(class_line(horizontal_rep, ln))};
	return covers_all(gadget.squares, lines);
}

} // namespace

bool adjacency_lemma_holds(const Digraph &g) {
	const std::size_t n = g.n();
	GadgetSpec a = adjacency_gadget(g, {0, 0});
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j)
			if (stabbed_by_antipodal(a, n, i, j) != g.has_arc(i, j)) return false;
	return true;
}

bool diagonal_lemma_holds(std::size_t n) {
	GadgetSpec d = diagonal_gadget(n, {0, 0});
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j)
			if (stabbed_by_antipodal(d, n, i, j) != (i == j)) return false;
	return true;
}

bool consistency_lemma_holds(std::size_t n) {
	const long ln = static_cast<long>(n);
	for (bool horizontal : {true, false}) {
		GadgetSpec c = consistency_gadget(horizontal, n, {0, 0});
		const Direction across = horizontal ? Direction::vertical() : Direction::horizontal();
		for (std::size_t neg = 1; neg <= n; ++neg) {
			for (std::size_t pos = 1; pos <= n; ++pos) {
				Rational lo = class_line(neg, 0), hi = class_line(pos, ln);
				std::vector<Line> pair = horizontal
				                             ? std::vector<Line>{Line::horizontal(lo), Line::horizontal(hi)}
				                             : std::vector<Line>{Line::vertical(lo), Line::vertical(hi)};
				std::vector<ConvexObject> left;
				for (const auto &sq : c.squares)
					if (!stabs(pair[0], sq) && !stabs(pair[1], sq)) left.push_back(sq);
				bool completes = left.empty();
				for (const auto &l : canonical_lines(left, across))
					completes = completes || std::all_of(left.begin(), left.end(),
					                                     [&](const ConvexObject &o) { return stabs(l, o); });
				if (completes != (pos >= neg)) return false;
			}
		}
	}
	return true;
}

} // namespace stab::squares
