#include "stab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace stab::io {

namespace {

std::string num(double v) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
	return buf;
}

struct Box {
	double x0, y0, x1, y1;
};

/// Segment of {p : n . p = c} inside the box, if any.
std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip(const Line &line, const Box &b) {
	const double nx = to_double(line.direction.normal().x), ny = to_double(line.direction.normal().y);
	const double c = to_double(line.offset);
	const double len2 = nx * nx + ny * ny;
	const double px = nx * c / len2, py = ny * c / len2; // point on the line
	const double dx = -ny, dy = nx;
	double lo = -1e300, hi = 1e300;
	auto slab = [&](double p, double d, double a, double z) {
		if (d == 0) return a <= p && p <= z;
		double t0 = (a - p) / d, t1 = (z - p) / d;
		if (t0 > t1) std::swap(t0, t1);
		lo = std::max(lo, t0);
		hi = std::min(hi, t1);
		return lo <= hi;
	};
	if (!slab(px, dx, b.x0, b.x1) || !slab(py, dy, b.y0, b.y1)) return std::nullopt;
	return std::make_pair(std::make_pair(px + lo * dx, py + lo * dy), std::make_pair(px + hi * dx, py + hi * dy));
}

} // namespace

std::string render_svg(const Instance2D &instance, const std::optional<Solution> &solution) {
	Box box{0, 0, 1, 1};
	bool first = true;
	for (const auto &o : instance.objects) {
		for (const auto &p : o.vertices()) {
			const double x = to_double(p.x), y = to_double(p.y);
			if (first) {
				box = {x, y, x, y};
				first = false;
			}
			box = {std::min(box.x0, x), std::min(box.y0, y), std::max(box.x1, x), std::max(box.y1, y)};
		}
	}
	const double pad = 0.05 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
	box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
	const double w = box.x1 - box.x0, h = box.y1 - box.y0;
	const double stroke = 0.004 * std::max(w, h);

	// y grows downwards in SVG; the group flips it back.
	std::ostringstream out;
	out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
	    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
	    << num(800 * h / w) << "\" viewBox=\"" << num(box.x0) << ' ' << num(-box.y1) << ' ' << num(w) << ' '
	    << num(h) << "\">\n"
	    << "<g transform=\"scale(1,-1)\" stroke-width=\"" << num(stroke) << "\">\n";
	for (const auto &o : instance.objects) {
		out << "<polygon points=\"";
		bool sep = false;
		for (const auto &p : o.vertices()) {
			out << (sep ? " " : "") << num(to_double(p.x)) << ',' << num(to_double(p.y));
			sep = true;
		}
		out << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#08519c\"";
		if (!o.closed()) out << " stroke-dasharray=\"" << num(3 * stroke) << "\"";
		out << "/>\n";
	}
	if (solution) {
		for (const auto &l : solution->lines) {
			auto seg = clip(l, box);
			if (!seg) continue;
			out << "<line x1=\"" << num(seg->first.first) << "\" y1=\"" << num(seg->first.second) << "\" x2=\""
			    << num(seg->second.first) << "\" y2=\"" << num(seg->second.second) << "\" stroke=\"#d62728\"/>\n";
		}
	}
	out << "</g>\n</svg>\n";
	return out.str();
}

} // namespace stab::io
