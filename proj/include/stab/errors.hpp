#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stab {

/// Invalid geometric input: degenerate objects, singular maps, unknown directions.
class geometry_error : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Generator or solver called outside its documented parameter range.
class parameter_error : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its hard size guard.
class guard_exceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A proven bound of the algorithm failed at runtime; the input broke a precondition.
class invariant_violation : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
public:
	parse_error(std::size_t line, std::size_t column, const std::string &what)
	    : std::runtime_error("line " + std::to_string(line) + ", column " +
	                         std::to_string(column) + ": " + what),
	      line_(line), column_(column) {}

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

} // namespace stab
