#include "stab/io.hpp"

#include "stab/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stab::io {

namespace {

struct Token {
	std::string_view text;
	std::size_t column;
};

struct SourceLine {
	std::size_t number;
	std::vector<Token> tokens;
};

/// Tokenized non-blank, non-comment lines with their positions.
class Reader {
public:
	explicit Reader(std::string_view text) {
		std::size_t number = 0;
		while (!text.empty()) {
			++number;
			std::size_t end = text.find('\n');
			std::string_view raw = text.substr(0, end);
			text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
			if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
			SourceLine line{number, {}};
			std::size_t i = 0;
			while (i < raw.size()) {
				if (raw[i] == ' ' || raw[i] == '\t') {
					++i;
					continue;
				}
				std::size_t start = i;
				while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
				line.tokens.push_back({raw.substr(start, i - start), start + 1});
			}
			if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
			lines_.push_back(std::move(line));
		}
		last_line_ = number;
	}

	bool done() const { return next_ == lines_.size(); }

	const SourceLine &next(const char *expected) {
		if (done()) throw parse_error(last_line_ + 1, 1, std::string("unexpected end of input, expected ") + expected);
		return lines_[next_++];
	}

	/// Reads "<keyword> <value>" and returns the value token.
	Token keyed(const char *keyword) {
		const auto &line = next(keyword);
		if (line.tokens[0].text != keyword)
			throw parse_error(line.number, line.tokens[0].column, std::string("expected '") + keyword + "'");
		expect_count(line, 2);
		current_line_ = line.number;
		return line.tokens[1];
	}

	void finish() const {
		if (!done()) {
			const auto &line = lines_[next_];
			throw parse_error(line.number, line.tokens[0].column, "unexpected trailing content");
		}
	}

	std::size_t current_line() const { return current_line_; }

	static void expect_count(const SourceLine &line, std::size_t count) {
		if (line.tokens.size() < count)
			throw parse_error(line.number, line.tokens.back().column + line.tokens.back().text.size(),
			                  "expected " + std::to_string(count) + " fields");
		if (line.tokens.size() > count)
			throw parse_error(line.number, line.tokens[count].column, "unexpected extra field");
	}

private:
	std::vector<SourceLine> lines_;
	std::size_t next_ = 0;
	std::size_t last_line_ = 0;
	std::size_t current_line_ = 0;
};

std::size_t to_size(const Token &t, std::size_t line) {
	std::size_t value = 0;
	auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
	if (ec != std::errc{} || end != t.text.data() + t.text.size())
		throw parse_error(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
	return value;
}

Rational to_rational(const Token &t, std::size_t line) {
	auto q = parse_rational(t.text);
	if (!q) throw parse_error(line, t.column, "expected a rational, got '" + std::string(t.text) + "'");
	return *q;
}

double to_real(const Token &t, std::size_t line) {
	std::string s(t.text);
	char *end = nullptr;
	double v = std::strtod(s.c_str(), &end);
	if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
		throw parse_error(line, t.column, "expected a decimal number, got '" + s + "'");
	return v;
}

std::size_t keyed_size(Reader &in, const char *keyword) {
	Token t = in.keyed(keyword);
	return to_size(t, in.current_line());
}

/// Reads the "<tag> <version>" header; returns the tag.
std::string_view header(Reader &in) {
	const auto &line = in.next("a header");
	Reader::expect_count(line, 2);
	if (line.tokens[1].text != "1") throw parse_error(line.number, line.tokens[1].column, "unsupported version");
	return line.tokens[0].text;
}

Instance2D parse_2d_body(Reader &in) {
	Instance2D inst;
	inst.k = keyed_size(in, "k");
	inst.c = keyed_size(in, "c");
	if (inst.c == 0) throw parse_error(in.current_line(), 3, "c must be positive");

	const std::size_t r = keyed_size(in, "directions");
	for (std::size_t i = 0; i < r; ++i) {
		const auto &line = in.next("a direction");
		Reader::expect_count(line, 2);
		Rational dx = to_rational(line.tokens[0], line.number), dy = to_rational(line.tokens[1], line.number);
		if (dx == 0 && dy == 0) throw parse_error(line.number, 1, "zero direction vector");
		Direction d(dx, dy);
		if (inst.direction_index(d)) throw parse_error(line.number, 1, "duplicate direction");
		inst.directions.push_back(std::move(d));
	}
	if (inst.directions.empty()) throw parse_error(in.current_line(), 1, "direction set is empty");

	const std::size_t m = keyed_size(in, "objects");
	for (std::size_t i = 0; i < m; ++i) {
		const auto &line = in.next("an object");
		if (line.tokens[0].text != "poly") throw parse_error(line.number, line.tokens[0].column, "expected 'poly'");
		if (line.tokens.size() < 3) throw parse_error(line.number, 1, "truncated object");
		const Token &flag = line.tokens[1];
		if (flag.text != "open" && flag.text != "closed")
			throw parse_error(line.number, flag.column, "expected 'open' or 'closed'");
		const std::size_t v = to_size(line.tokens[2], line.number);
		Reader::expect_count(line, 3 + 2 * v);
		std::vector<Point> pts;
		for (std::size_t p = 0; p < v; ++p)
			pts.push_back({to_rational(line.tokens[3 + 2 * p], line.number),
			               to_rational(line.tokens[4 + 2 * p], line.number)});
		try {
			inst.objects.emplace_back(std::move(pts), flag.text == "closed");
		} catch (const geometry_error &e) {
			throw parse_error(line.number, line.tokens[0].column, e.what());
		}
	}
	in.finish();
	return inst;
}

balls::BallInstance parse_ball_body(Reader &in) {
	balls::BallInstance inst;
	inst.dim = keyed_size(in, "dim");
	inst.n = keyed_size(in, "n");
	inst.k = keyed_size(in, "k");
	if (inst.dim != 2 * inst.k) throw parse_error(in.current_line(), 1, "dim must equal 2k");
	if (inst.n == 0 || inst.k == 0) throw parse_error(in.current_line(), 1, "n and k must be positive");
	inst.radius = to_real(in.keyed("radius"), in.current_line());
	inst.mu = balls::constraint_mu(inst.n);
	inst.lambda = 1 / std::sqrt(static_cast<double>(inst.k));

	const std::size_t m = keyed_size(in, "balls");
	for (std::size_t i = 0; i < m; ++i) {
		const auto &line = in.next("a ball");
		Reader::expect_count(line, inst.dim + 1);
		balls::Ball b;
		b.radius = inst.radius;
		for (std::size_t c = 0; c < inst.dim; ++c) b.center.push_back(to_real(line.tokens[c], line.number));
		const Token &tag = line.tokens[inst.dim];
		try {
			b.tag = balls::BallTag::parse(std::string(tag.text));
		} catch (const parameter_error &e) {
			throw parse_error(line.number, tag.column, e.what());
		}
		inst.balls.push_back(std::move(b));
	}
	in.finish();
	return inst;
}

std::string real(double v) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(Reader &in, const char *kind, std::size_t &n) {
	n = keyed_size(in, "n");
	const std::size_t m = keyed_size(in, kind);
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t i = 0; i < m; ++i) {
		const auto &line = in.next("a vertex pair");
		Reader::expect_count(line, 2);
		out.emplace_back(to_size(line.tokens[0], line.number), to_size(line.tokens[1], line.number));
	}
	in.finish();
	return out;
}

template <class G> G build_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
	try {
		return G(n, pairs);
	} catch (const parameter_error &e) {
		throw parse_error(1, 1, e.what());
	}
}

} // namespace

ParsedInstance parse_instance(std::string_view text) {
	Reader in(text);
	if (in.done()) throw parse_error(1, 1, "empty input");
	std::string_view tag = header(in);
	if (tag == "stab2d") return parse_2d_body(in);
	if (tag == "stabballs") return parse_ball_body(in);
	throw parse_error(1, 1, "unknown format '" + std::string(tag) + "'");
}

Instance2D parse_instance2d(std::string_view text) {
	auto parsed = parse_instance(text);
	if (auto *inst = std::get_if<Instance2D>(&parsed)) return std::move(*inst);
	throw parse_error(1, 1, "expected a stab2d file");
}

balls::BallInstance parse_ball_instance(std::string_view text) {
	auto parsed = parse_instance(text);
	if (auto *inst = std::get_if<balls::BallInstance>(&parsed)) return std::move(*inst);
	throw parse_error(1, 1, "expected a stabballs file");
}

std::string serialize(const Instance2D &instance) {
	std::ostringstream out;
	out << "stab2d 1\nk " << instance.k << "\nc " << instance.c << "\ndirections " << instance.directions.size()
	    << '\n';
	for (const auto &d : instance.directions) out << to_string(d.vector().x) << ' ' << to_string(d.vector().y) << '\n';
	out << "objects " << instance.objects.size() << '\n';
	for (const auto &o : instance.objects) {
		out << "poly " << (o.closed() ? "closed" : "open") << ' ' << o.vertices().size();
		for (const auto &p : o.vertices()) out << ' ' << to_string(p.x) << ' ' << to_string(p.y);
		out << '\n';
	}
	return out.str();
}

std::string serialize(const balls::BallInstance &instance) {
	std::ostringstream out;
	out << "stabballs 1\ndim " << instance.dim << "\nn " << instance.n << "\nk " << instance.k << "\nradius "
	    << real(instance.radius) << "\nballs " << instance.balls.size() << '\n';
	for (const auto &b : instance.balls) {
		for (double x : b.center) out << real(x) << ' ';
		out << b.tag.str() << '\n';
	}
	return out.str();
}

std::string serialize(const Solution &solution) {
	std::ostringstream out;
	for (const auto &l : solution.lines)
		out << "line " << to_string(l.direction.vector().x) << ' ' << to_string(l.direction.vector().y) << ' '
		    << to_string(l.offset) << '\n';
	return out.str();
}

Solution parse_solution(std::string_view text) {
	Reader in(text);
	Solution s;
	while (!in.done()) {
		const auto &line = in.next("a line");
		if (line.tokens[0].text == "YES" && line.tokens.size() == 1) continue;
		if (line.tokens[0].text != "line") throw parse_error(line.number, line.tokens[0].column, "expected 'line'");
		Reader::expect_count(line, 4);
		Rational dx = to_rational(line.tokens[1], line.number), dy = to_rational(line.tokens[2], line.number);
		if (dx == 0 && dy == 0) throw parse_error(line.number, line.tokens[1].column, "zero direction vector");
		s.lines.push_back({Direction(dx, dy), to_rational(line.tokens[3], line.number)});
	}
	return s;
}

squares::Digraph parse_digraph(std::string_view text) {
	Reader in(text);
	if (in.done()) throw parse_error(1, 1, "empty input");
	if (header(in) != "digraph") throw parse_error(1, 1, "expected a digraph file");
	std::size_t n = 0;
	auto pairs = parse_pairs(in, "arcs", n);
	return build_graph<squares::Digraph>(n, pairs);
}

balls::Graph parse_graph(std::string_view text) {
	Reader in(text);
	if (in.done()) throw parse_error(1, 1, "empty input");
	if (header(in) != "graph") throw parse_error(1, 1, "expected a graph file");
	std::size_t n = 0;
	auto pairs = parse_pairs(in, "edges", n);
	return build_graph<balls::Graph>(n, pairs);
}

std::string serialize(const squares::Digraph &g) {
	std::ostringstream out;
	out << "digraph 1\nn " << g.n() << "\narcs " << g.arcs().size() << '\n';
	for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
	return out.str();
}

std::string serialize(const balls::Graph &g) {
	std::ostringstream out;
	out << "graph 1\nn " << g.n() << "\nedges " << g.edges().size() << '\n';
	for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
	return out.str();
}

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::runtime_error("cannot read " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void write_file(const std::string &path, std::string_view contents) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot write " + path);
	out << contents;
	if (!out) throw std::runtime_error("cannot write " + path);
}

} // namespace stab::io
