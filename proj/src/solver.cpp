#include "stab/solver.hpp"

#include "stab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace stab::fpt {

namespace {

using Index = std::size_t;
using Active = std::vector<Index>;

bool homogeneous_closed(const Instance2D &instance) {
	if (instance.objects.empty()) return true;
	bool closed = instance.objects.front().closed();
	for (const auto &o : instance.objects)
		if (o.closed() != closed) throw geometry_error("heterogeneous closedness");
	return closed;
}

struct CanonicalLine {
	std::size_t direction;
	Rational offset;
};

/// Recursive search over index subsets of one instance with cached projections.
class Search {
public:
	explicit Search(const Instance2D &instance)
	    : instance_(instance), closed_(homogeneous_closed(instance)), r_(instance.directions.size()),
	      c_(instance.c) {
		ranges_.resize(instance.objects.size());
		for (Index i = 0; i < instance.objects.size(); ++i)
			for (const auto &d : instance.directions) ranges_[i].push_back(instance.objects[i].projection(d));
	}

	Active all() const {
		Active a(instance_.objects.size());
		std::iota(a.begin(), a.end(), Index{0});
		return a;
	}

	const SolveStats &stats() const { return stats_; }

	Active reduce(Active active, std::size_t k) const {
		const std::size_t keep = c_ * k + 1;
		for (std::size_t d = 0; d < r_; ++d) {
			Active order = active;
			std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
				const auto &ra = ranges_[a][d], &rb = ranges_[b][d];
				return ra.lo != rb.lo ? ra.lo < rb.lo : ra.hi < rb.hi;
			});
			std::vector<bool> dropped(instance_.objects.size(), false);
			bool any = false;
			for (std::size_t i = 0; i < order.size();) {
				std::size_t j = i;
				while (j < order.size() && ranges_[order[j]][d] == ranges_[order[i]][d]) ++j;
				// stable_sort over an ascending list keeps input order inside the group
				for (std::size_t t = i + keep; t < j; ++t) {
					dropped[order[t]] = true;
					any = true;
				}
				i = j;
			}
			if (any) std::erase_if(active, [&](Index i) { return dropped[i]; });
		}
		return active;
	}

	std::vector<Interval> ranges_of(const Active &active, std::size_t d) const {
		std::vector<Interval> out;
		out.reserve(active.size());
		for (Index i : active) out.push_back(ranges_[i][d]);
		return out;
	}

	std::optional<CanonicalLine> branch_line(const Active &active, std::size_t k) const {
		const std::size_t low = c_ * k + 1, high = 2 * c_ * k + 1;
		for (std::size_t d = 0; d < r_; ++d) {
			auto ranges = ranges_of(active, d);
			auto offsets = canonical_offsets(ranges, closed_);
			auto counts = stab_counts(ranges, offsets, closed_);
			for (std::size_t i = 0; i < offsets.size(); ++i)
				if (counts[i] >= low && counts[i] <= high) return CanonicalLine{d, offsets[i]};
		}
		return std::nullopt;
	}

	Active stabbed(const Active &active, const CanonicalLine &l) const {
		Active out;
		for (Index i : active)
			if (stabs_range(l.offset, ranges_[i][l.direction], closed_)) out.push_back(i);
		return out;
	}

	Active unstabbed(const Active &active, const CanonicalLine &l) const {
		Active out;
		for (Index i : active)
			if (!stabs_range(l.offset, ranges_[i][l.direction], closed_)) out.push_back(i);
		return out;
	}

	std::vector<CanonicalLine> candidates(const Active &active, const CanonicalLine &l) const {
		const std::size_t d = l.direction;
		std::vector<Rational> offsets;
		Active hit = stabbed(active, l);
		if (closed_) {
			for (Index i : hit) {
				offsets.push_back(ranges_[i][d].lo);
				offsets.push_back(ranges_[i][d].hi);
			}
		} else {
			auto reps = canonical_offsets(ranges_of(active, d), false);
			for (Index i : hit) {
				const auto &range = ranges_[i][d];
				auto first = std::upper_bound(reps.begin(), reps.end(), range.lo);
				auto last = std::lower_bound(reps.begin(), reps.end(), range.hi);
				// l itself is a representative inside the range, so [first, last) is nonempty
				offsets.push_back(*first);
				offsets.push_back(*(last - 1));
			}
		}
		std::sort(offsets.begin(), offsets.end());
		offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
		std::vector<CanonicalLine> out;
		for (auto &o : offsets) out.push_back({d, std::move(o)});
		return out;
	}

	std::optional<std::vector<CanonicalLine>> solve(const Active &input, std::size_t k, std::size_t depth) {
		++stats_.nodes;
		stats_.max_depth = std::max(stats_.max_depth, depth);
		if (input.empty()) return std::vector<CanonicalLine>{};
		if (k == 0) return std::nullopt;

		Active active = reduce(input, k);
		auto line = branch_line(active, k);
		if (!line) return kernel(active, k, depth);

		auto branches = candidates(active, *line);
		stats_.max_branch_width = std::max(stats_.max_branch_width, branches.size());
		for (auto &b : branches) {
			auto sub = solve(unstabbed(active, b), k - 1, depth + 1);
			if (sub) {
				sub->insert(sub->begin(), std::move(b));
				return sub;
			}
		}
		return std::nullopt;
	}

	std::optional<std::vector<CanonicalLine>> kernel(const Active &active, std::size_t k, std::size_t depth) {
		KernelEntry entry{active.size(), k, c_, r_, active.size() > c_ * k * k};
		if (active.empty()) {
			entry.decision = Decision::yes;
			stats_.kernels.push_back(entry);
			return std::vector<CanonicalLine>{};
		}
		if (entry.rejected || k == 0) {
			stats_.kernels.push_back(entry);
			return std::nullopt;
		}

		// L(o): canonical lines of the kernel through o, in (direction, offset) order.
		std::vector<std::vector<CanonicalLine>> relevant(active.size());
		for (std::size_t d = 0; d < r_; ++d) {
			auto ranges = ranges_of(active, d);
			for (auto &offset : canonical_offsets(ranges, closed_))
				for (std::size_t i = 0; i < active.size(); ++i)
					if (stabs_range(offset, ranges[i], closed_)) relevant[i].push_back({d, offset});
		}
		std::size_t best = 0;
		for (std::size_t i = 1; i < active.size(); ++i)
			if (relevant[i].size() < relevant[best].size()) best = i;

		entry.min_lines = relevant[best].size();
		if (entry.min_lines > 2 * r_ * c_ * k) {
			stats_.kernels.push_back(entry);
			throw invariant_violation("kernel object has " + std::to_string(entry.min_lines) +
			                          " relevant lines, above 2rck = " + std::to_string(2 * r_ * c_ * k) +
			                          " (m = " + std::to_string(active.size()) +
			                          "); the shallowness bound or translate precondition is violated");
		}
		std::size_t slot = stats_.kernels.size();
		stats_.kernels.push_back(entry);

		for (auto &l : relevant[best]) {
			auto sub = solve(unstabbed(active, l), k - 1, depth + 1);
			if (sub) {
				sub->insert(sub->begin(), std::move(l));
				stats_.kernels[slot].decision = Decision::yes;
				return sub;
			}
		}
		return std::nullopt;
	}

	Line to_line(const CanonicalLine &l) const { return {instance_.directions[l.direction], l.offset}; }

	SolveResult finish(std::optional<std::vector<CanonicalLine>> found) const {
		SolveResult result;
		result.stats = stats_;
		if (!found) return result;
		Solution s;
		for (const auto &l : *found) s.lines.push_back(to_line(l));
		if (s.lines.size() > instance_.k || !covers_all(instance_.objects, s.lines))
			throw invariant_violation("solver produced a witness that does not cover the instance");
		result.decision = Decision::yes;
		result.witness = std::move(s);
		return result;
	}

	CanonicalLine locate(const Line &line) const {
		auto d = instance_.direction_index(line.direction);
		if (!d) throw geometry_error("line direction is not in the instance's direction set");
		return {*d, line.offset};
	}

private:
	const Instance2D &instance_;
	bool closed_;
	std::size_t r_;
	std::size_t c_;
	std::vector<std::vector<Interval>> ranges_;
	SolveStats stats_;
};

} // namespace

SolverConfig SolverConfig::for_instance(const Instance2D &instance) {
	return {instance.c * instance.k * instance.k};
}

Instance2D data_reduce(const Instance2D &instance) {
	Search search(instance);
	Instance2D out = instance;
	out.objects.clear();
	for (Index i : search.reduce(search.all(), instance.k)) out.objects.push_back(instance.objects[i]);
	return out;
}

std::optional<Line> find_branch_line(const Instance2D &instance) {
	Search search(instance);
	auto l = search.branch_line(search.all(), instance.k);
	if (!l) return std::nullopt;
	return search.to_line(*l);
}

std::vector<Line> candidate_lines(const Instance2D &instance, const Line &line) {
	Search search(instance);
	std::vector<Line> out;
	for (const auto &l : search.candidates(search.all(), search.locate(line))) out.push_back(search.to_line(l));
	return out;
}

SolveResult stab_fpt(const Instance2D &instance) {
	instance.validate();
	Search search(instance);
	auto found = search.solve(search.all(), instance.k, 0);
	return search.finish(std::move(found));
}

SolveResult solve_kernel(const Instance2D &instance) {
	instance.validate();
	Search search(instance);
	auto found = search.kernel(search.all(), instance.k, 0);
	return search.finish(std::move(found));
}

std::size_t check_shallowness(const Instance2D &instance) {
	const std::size_t r = instance.directions.size();
	if (r < 2) throw parameter_error("shallowness undefined for r=1");
	const bool closed = homogeneous_closed(instance);

	std::vector<std::vector<Interval>> ranges(r);
	for (std::size_t d = 0; d < r; ++d)
		for (const auto &o : instance.objects) ranges[d].push_back(o.projection(instance.directions[d]));

	std::size_t best = 1;
	for (std::size_t a = 0; a < r; ++a) {
		auto offsets = canonical_offsets(ranges[a], closed);
		for (const auto &t : offsets) {
			std::vector<std::size_t> hit;
			for (std::size_t i = 0; i < instance.objects.size(); ++i)
				if (stabs_range(t, ranges[a][i], closed)) hit.push_back(i);
			if (hit.size() <= best) continue;
			for (std::size_t b = 0; b < r; ++b) {
				if (b == a) continue;
				std::vector<Interval> sub;
				for (auto i : hit) sub.push_back(ranges[b][i]);
				// the best line of direction b restricted to `hit` sits at one of hit's canonical offsets
				auto sub_offsets = canonical_offsets(sub, closed);
				for (auto cnt : stab_counts(sub, sub_offsets, closed)) best = std::max(best, cnt);
			}
		}
	}
	return best;
}

} // namespace stab::fpt
