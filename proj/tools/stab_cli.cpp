// Command-line front end: solving, generators, verifiers and rendering.

#include "stab/balls.hpp"
#include "stab/errors.hpp"
#include "stab/io.hpp"
#include "stab/oracle.hpp"
#include "stab/random_instances.hpp"
#include "stab/solver.hpp"
#include "stab/squares.hpp"
#include "stab/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

using namespace stab;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;

/// A failure that maps to the usage/parse exit code.
struct usage_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
	if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
	return io::read_file(path);
}

void write_output(const std::string &path, const std::string &text) {
	if (path == "-")
		std::cout << text;
	else
		io::write_file(path, text);
}

struct Options {
	std::string input = "-";
	std::string output = "-";
	std::string solution;
	std::optional<std::size_t> k;
	std::optional<std::size_t> c;
	std::optional<std::size_t> n;
	std::uint64_t seed = 1;
	std::string variant;
	double tolerance = balls::default_tolerance;
	double density = 0.25;
	bool solve = false;
};

Instance2D load_instance(const Options &opt) {
	Instance2D inst = io::parse_instance2d(read_input(opt.input));
	if (opt.k) inst.k = *opt.k;
	if (opt.c) {
		if (*opt.c == 0) throw usage_error("--c must be positive");
		inst.c = *opt.c;
	}
	return inst;
}

std::string decision_text(const fpt::SolveResult &r) {
	std::string out = r.yes() ? "YES\n" : "NO\n";
	if (r.witness) out += io::serialize(*r.witness);
	return out;
}

std::size_t need_k(const Options &opt) {
	if (!opt.k) throw usage_error("--k is required");
	return *opt.k;
}

int cmd_solve(const Options &opt) {
	Instance2D inst = load_instance(opt);
	if (inst.directions.size() > 1) {
		const std::size_t measured = fpt::check_shallowness(inst);
		if (measured > inst.c)
			throw usage_error("instance is " + std::to_string(measured) + "-shallow but declares c = " +
			                  std::to_string(inst.c));
	}
	auto result = fpt::stab_fpt(inst);
	write_output(opt.output, decision_text(result));
	std::cerr << "nodes " << result.stats.nodes << ", depth " << result.stats.max_depth << ", kernels "
	          << result.stats.kernels.size() << '\n';
	return exit_ok;
}

int cmd_oracle(const Options &opt) {
	write_output(opt.output, decision_text(oracle::brute_force_stab(load_instance(opt))));
	return exit_ok;
}

int cmd_shallow(const Options &opt) {
	write_output(opt.output, std::to_string(fpt::check_shallowness(load_instance(opt))) + "\n");
	return exit_ok;
}

int cmd_robust(const Options &opt) {
	Instance2D inst = load_instance(opt);
	write_output(opt.output, to_string(robustness_delta(inst.objects)) + "\n");
	return exit_ok;
}

int cmd_gen_squares(const Options &opt) {
	const auto g = io::parse_digraph(read_input(opt.input));
	const std::size_t k = need_k(opt);
	const std::string variant = opt.variant.empty() ? "s" : opt.variant;
	if ((variant == "s-star" || variant == "r-star" || variant == "u-star") && !squares::asymptotic_regime(g.n(), k))
		std::cerr << "note: n < 6k + 4, outside the asymptotic regime\n";
	Instance2D inst;
	if (variant == "s-prime")
		inst = squares::build_s_prime(g, k).instance;
	else if (variant == "s")
		inst = squares::build_s(g, k).instance;
	else if (variant == "s-star")
		inst = squares::build_s_star(g, k).instance;
	else if (variant == "r-star")
		inst = squares::build_r_star(g, k);
	else if (variant == "u-star")
		inst = squares::build_u_star(g, k).instance;
	else
		throw usage_error("unknown variant '" + variant + "'");
	write_output(opt.output, io::serialize(inst));
	return exit_ok;
}

int cmd_gen_balls(const Options &opt) {
	const auto g = io::parse_graph(read_input(opt.input));
	write_output(opt.output, io::serialize(balls::build_ball_instance(g, need_k(opt))));
	return exit_ok;
}

int cmd_verify_squares(const Options &opt) {
	const auto g = io::parse_digraph(read_input(opt.input));
	const std::size_t k = need_k(opt);
	const std::string variant = opt.variant.empty() ? "s" : opt.variant;
	squares::SquareReduction red;
	if (variant == "s-prime")
		red = squares::build_s_prime(g, k);
	else if (variant == "s")
		red = squares::build_s(g, k);
	else if (variant == "s-star")
		red = squares::build_s_star(g, k);
	else
		throw usage_error("verify-squares supports s-prime, s and s-star");
	auto lines = squares::strip_solve(red.instance, red.layout);
	const bool clique = squares::has_clique(g, k);
	std::ostringstream out;
	out << (lines ? "YES\n" : "NO\n");
	if (lines) out << io::serialize(*lines);
	out << "clique " << (clique ? "yes" : "no") << '\n';
	write_output(opt.output, out.str());
	return lines.has_value() == clique ? exit_ok : exit_mismatch;
}

int cmd_verify_balls(const Options &opt) {
	const auto g = io::parse_graph(read_input(opt.input));
	const std::size_t k = need_k(opt);
	const auto inst = balls::build_ball_instance(g, k);
	const auto audit = balls::audit_stabbing_classes(inst, opt.tolerance);
	const auto expected = balls::independent_sets(g, k);
	std::ostringstream out;
	out << (audit.classes.empty() ? "NO\n" : "YES\n");
	for (const auto &cls : audit.classes) {
		out << "class";
		for (auto v : cls) out << ' ' << v;
		out << '\n';
	}
	out << "balls " << inst.balls.size() << "\nmin-margin " << audit.min_abs_margin << '\n';
	const bool agree = audit.classes == expected && audit.representatives_agree;
	out << "independent-sets " << (agree ? "match" : "differ") << '\n';
	write_output(opt.output, out.str());
	return agree ? exit_ok : exit_mismatch;
}

int cmd_render(const Options &opt) {
	Instance2D inst = load_instance(opt);
	std::optional<Solution> sol;
	if (!opt.solution.empty())
		sol = io::parse_solution(io::read_file(opt.solution));
	else if (opt.solve)
		sol = fpt::stab_fpt(inst).witness;
	write_output(opt.output, io::render_svg(inst, sol));
	return exit_ok;
}

int cmd_gen_random(const Options &opt) {
	std::mt19937_64 rng(opt.seed);
	const std::string variant = opt.variant.empty() ? "squares" : opt.variant;
	if (variant == "digraph" || variant == "graph") {
		if (!opt.n) throw usage_error("--n is required");
		write_output(opt.output, variant == "digraph" ? io::serialize(gen::random_digraph(rng, *opt.n))
		                                              : io::serialize(gen::random_graph(rng, *opt.n)));
		return exit_ok;
	}
	gen::TranslateParams params;
	params.count = opt.n.value_or(10);
	params.k = opt.k.value_or(2);
	params.c = opt.c.value_or(1);
	params.density = opt.density;
	ConvexObject shape = ConvexObject::square(0, 0, 1, true);
	if (variant == "rectangles")
		shape = ConvexObject::rectangle(0, 0, 2, 1, true);
	else if (variant != "squares")
		throw usage_error("unknown variant '" + variant + "'");
	Instance2D inst = gen::random_translates(rng, shape, params);
	if (!opt.c && variant == "rectangles") inst.c = fpt::check_shallowness(inst);
	write_output(opt.output, io::serialize(inst));
	return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Line stabbing of object translates: FPT solver, oracle, reductions"};
	app.require_subcommand(1);
	Options opt;

	auto io_flags = [&](CLI::App *cmd) {
		cmd->add_option("--input,-i", opt.input, "input file, '-' for stdin");
		cmd->add_option("--output,-o", opt.output, "output file, '-' for stdout");
	};
	auto budget_flags = [&](CLI::App *cmd) {
		cmd->add_option("--k", opt.k, "override the budget k");
		cmd->add_option("--c", opt.c, "override the shallowness bound c");
	};

	struct Entry {
		CLI::App *cmd;
		int (*run)(const Options &);
	};
	std::vector<Entry> commands;
	auto add = [&](const char *name, const char *help, int (*run)(const Options &)) {
		CLI::App *cmd = app.add_subcommand(name, help);
		io_flags(cmd);
		commands.push_back({cmd, run});
		return cmd;
	};

	budget_flags(add("solve", "decide with the FPT algorithm", cmd_solve));
	budget_flags(add("oracle", "decide by brute force over canonical lines", cmd_oracle));
	add("shallow", "measure the shallowness c", cmd_shallow);
	add("robust", "largest delta for which the objects are delta-robust", cmd_robust);
	auto *gs = add("gen-squares", "clique reduction from a digraph file", cmd_gen_squares);
	gs->add_option("--k", opt.k, "clique size")->required();
	gs->add_option("--variant", opt.variant, "s-prime | s | s-star | r-star | u-star");
	add("gen-balls", "independent-set reduction from a graph file", cmd_gen_balls)
	    ->add_option("--k", opt.k, "independent set size")
	    ->required();
	auto *vs = add("verify-squares", "strip decision versus exhaustive clique search", cmd_verify_squares);
	vs->add_option("--k", opt.k, "clique size")->required();
	vs->add_option("--variant", opt.variant, "s-prime | s | s-star");
	auto *vb = add("verify-balls", "class enumeration versus exhaustive independent sets", cmd_verify_balls);
	vb->add_option("--k", opt.k, "independent set size")->required();
	vb->add_option("--tolerance", opt.tolerance, "stabbing margin tolerance");
	auto *render = add("render", "SVG picture of an instance", cmd_render);
	budget_flags(render);
	render->add_option("--solution", opt.solution, "solution file with 'line' records");
	render->add_flag("--solve", opt.solve, "draw the FPT solver's witness");
	auto *gr = add("gen-random", "seeded random instance or graph", cmd_gen_random);
	gr->add_option("--seed", opt.seed, "64-bit seed");
	gr->add_option("--variant", opt.variant, "squares | rectangles | digraph | graph");
	gr->add_option("--n", opt.n, "object or vertex count");
	gr->add_option("--density", opt.density, "bounding-box area over field area");
	budget_flags(gr);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		for (const auto &entry : commands)
			if (entry.cmd->parsed()) return entry.run(opt);
	} catch (const guard_exceeded &e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_guard;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}
	return exit_usage;
}
