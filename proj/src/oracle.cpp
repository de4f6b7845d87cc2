#include "stab/oracle.hpp"

#include "stab/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace stab::oracle {

namespace {

class Bits {
public:
	explicit Bits(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

	void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

	Bits &operator|=(const Bits &o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
		return *this;
	}

	bool subset_of(const Bits &o) const {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & ~o.words_[i]) return false;
		return true;
	}

	bool none() const {
		return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
	}

	bool full() const {
		for (std::size_t i = 0; i < words_.size(); ++i) {
			std::size_t bits = std::min<std::size_t>(64, n_ - 64 * i);
			std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
			if ((words_[i] & mask) != mask) return false;
		}
		return true;
	}

	friend bool operator==(const Bits &, const Bits &) = default;

private:
	std::size_t n_;
	std::vector<std::uint64_t> words_;
};

struct StabbedLine {
	Line line;
	Bits hits;
};

std::vector<StabbedLine> all_canonical(const Instance2D &instance) {
	std::vector<StabbedLine> out;
	for (const auto &d : instance.directions) {
		for (auto &l : canonical_lines(instance.objects, d)) {
			Bits b(instance.objects.size());
			for (std::size_t i = 0; i < instance.objects.size(); ++i)
				if (stabs(l, instance.objects[i])) b.set(i);
			out.push_back({std::move(l), std::move(b)});
		}
	}
	return out;
}

/// Index of a line that dominates `i`, or `i` itself when none does.
std::size_t dominator(const std::vector<StabbedLine> &lines, std::size_t i) {
	for (std::size_t j = 0; j < lines.size(); ++j) {
		if (j == i || !lines[i].hits.subset_of(lines[j].hits)) continue;
		if (lines[i].hits == lines[j].hits && j > i) continue;
		return j;
	}
	return i;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
	if (k > n) return 0;
	k = std::min(k, n - k);
	unsigned __int128 acc = 1;
	for (std::uint64_t i = 1; i <= k; ++i) {
		acc = acc * (n - k + i) / i;
		if (acc > cap) return cap + 1;
	}
	return static_cast<std::uint64_t>(acc);
}

bool search(const std::vector<StabbedLine> &lines, std::size_t start, std::size_t budget, const Bits &covered,
            std::vector<std::size_t> &chosen) {
	if (covered.full()) return true;
	if (budget == 0) return false;
	for (std::size_t i = start; i < lines.size(); ++i) {
		Bits next = covered;
		next |= lines[i].hits;
		chosen.push_back(i);
		if (search(lines, i + 1, budget - 1, next, chosen)) return true;
		chosen.pop_back();
	}
	return false;
}

} // namespace

DominanceReport dominance_filter(const Instance2D &instance) {
	auto lines = all_canonical(instance);
	DominanceReport report;
	std::vector<bool> kept(lines.size());
	for (std::size_t i = 0; i < lines.size(); ++i) kept[i] = !lines[i].hits.none() && dominator(lines, i) == i;
	for (std::size_t i = 0; i < lines.size(); ++i) {
		if (kept[i]) {
			report.kept.push_back(lines[i].line);
			continue;
		}
		// containment is transitive, so some kept line contains every removed one
		for (std::size_t j = 0; j < lines.size(); ++j) {
			if (kept[j] && lines[i].hits.subset_of(lines[j].hits)) {
				report.removed.emplace_back(lines[i].line, lines[j].line);
				break;
			}
		}
	}
	return report;
}

fpt::SolveResult brute_force_stab(const Instance2D &instance, OracleOptions options) {
	instance.validate();
	fpt::SolveResult result;
	if (instance.objects.empty()) {
		result.decision = fpt::Decision::yes;
		result.witness = Solution{};
		return result;
	}

	auto lines = all_canonical(instance);
	if (options.filter_dominated) {
		std::vector<StabbedLine> filtered;
		for (std::size_t i = 0; i < lines.size(); ++i)
			if (!lines[i].hits.none() && dominator(lines, i) == i) filtered.push_back(lines[i]);
		lines = std::move(filtered);
	}

	std::uint64_t subsets = binomial_capped(lines.size(), std::min<std::uint64_t>(instance.k, lines.size()),
	                                        combination_guard);
	if (subsets > combination_guard) throw guard_exceeded("instance too large for oracle");

	std::vector<std::size_t> chosen;
	if (search(lines, 0, instance.k, Bits(instance.objects.size()), chosen)) {
		Solution s;
		for (auto i : chosen) s.lines.push_back(lines[i].line);
		result.decision = fpt::Decision::yes;
		result.witness = std::move(s);
	}
	return result;
}

bool verify_solution(const Instance2D &instance, const Solution &solution) {
	if (solution.lines.size() > instance.k) return false;
	for (const auto &l : solution.lines)
		if (!instance.direction_index(l.direction)) return false;
	return covers_all(instance.objects, solution.lines);
}

} // namespace stab::oracle
