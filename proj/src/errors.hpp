#ifndef HILCO_ERRORS_HPP
#define HILCO_ERRORS_HPP

#include <stdexcept>

namespace hilco {

// Malformed input text (bad JSON, bad plain-format line).
struct parse_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Structurally invalid table or split (invariant violations, pairing failures).
struct table_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Input data is mathematically inconsistent (failed exact division etc.).
struct math_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace hilco

#endif
