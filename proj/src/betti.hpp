#ifndef HILCO_BETTI_HPP
#define HILCO_BETTI_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hilco {

// One group of free summands: beta copies of R(-j) in homological degree i.
struct BettiEntry {
	int i;
	int j;
	long beta;
};

// Graded Betti table of a cyclic module R/I over R = K[x_1..x_n], stored
// sparsely as (i, j) -> beta. Immutable after construction. Construction
// enforces: a single entry (0, 0, 1), strictly positive multiplicities, and
// 1 <= s <= n where s is the top nonzero homological degree. Shifts with
// j < i are legal but flagged as non-minimal (see nonminimal_entries).
class BettiTable {
public:
	BettiTable(unsigned n, const std::vector<BettiEntry>& entries);

	static BettiTable parse_json(std::string_view text);
	static BettiTable parse_plain(std::string_view text);
	static BettiTable parse_auto(std::string_view text); // sniffs the format

	unsigned vars() const { return n_; }
	int length() const { return s_; } // s, the length of the resolution

	const std::map<std::pair<int, int>, long>& entries() const {
		return entries_;
	}
	long beta(int i, int j) const;
	mpz_class betti_number(int i) const;     // b_i
	std::vector<int> shifts_at(int i) const; // d_{i*}, sorted, with multiplicity
	int max_shift() const;
	std::vector<BettiEntry> nonminimal_entries() const; // entries with j < i

	std::string to_json() const;
	std::string to_plain() const;

	bool operator==(const BettiTable&) const = default;

private:
	unsigned n_;
	int s_;
	std::map<std::pair<int, int>, long> entries_;
};

// Minimal and maximal shifts per homological degree; index 0 holds degree 1.
struct ShiftProfile {
	std::vector<int> m;
	std::vector<int> M;
	int length() const { return static_cast<int>(m.size()); }
};

enum class Parity { odd, even };

// Half-resolution data of a symmetric (Gorenstein) table: socle shift c and
// the sorted shift columns a_{i1} <= ... <= a_{i r_i} for i = 1..k. For even
// length s = 2k the middle column holds the representative half of each dual
// pair, chosen so that c >= 2 a_{kj}; for odd s = 2k+1 columns are complete.
struct GorensteinSplit {
	Parity parity = Parity::odd;
	int k = 0;
	int c = 0;
	std::vector<std::vector<int>> columns; // columns[i-1] = shifts at degree i

	int s() const { return parity == Parity::odd ? 2 * k + 1 : 2 * k; }
	std::vector<int> column_sizes() const;

	bool operator==(const GorensteinSplit&) const = default;
};

ShiftProfile shift_profile(const BettiTable& t);

// m_i >= M_{i-1} for all 2 <= i <= s.
bool is_quasi_pure(const ShiftProfile& p);

// Socle shift c when the diagram is symmetric (beta_{ij} = beta_{s-i,c-j}
// with a single rank-one top entry), nullopt otherwise.
std::optional<int> gorenstein_socle(const BettiTable& t);

GorensteinSplit gorenstein_split(const BettiTable& t);
BettiTable dual_complete(const GorensteinSplit& half, unsigned n);

// Koszul table of a complete intersection of the given degrees.
BettiTable generate_ci(const std::vector<int>& degrees, unsigned n);

} // namespace hilco

#endif
