#include "stab/rational.hpp"

#include <cctype>

namespace stab {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
	if (s.empty()) return false;
	std::size_t i = 0;
	if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
	if (i == s.size()) return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
	return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_integer_text(num, true) || !is_integer_text(den, false)) return std::nullopt;

	std::string n(num);
	if (n[0] == '+') n.erase(0, 1);
	mpz_class p(n, 10), q(std::string(den), 10);
	if (q == 0) return std::nullopt;
	Rational r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace stab
