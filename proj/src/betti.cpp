#include "betti.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hilco {

BettiTable::BettiTable(unsigned n, const std::vector<BettiEntry>& entries)
    : n_(n), s_(0) {
	if (n == 0)
		throw table_error("the number of ring variables n must be positive");
	for (const auto& e : entries) {
		if (e.i < 0 || e.j < 0)
			throw table_error("negative homological degree or shift in entry (" +
			                  std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
		if (e.beta <= 0)
			throw table_error("nonpositive multiplicity at (" + std::to_string(e.i) +
			                  ", " + std::to_string(e.j) + ")");
		entries_[{e.i, e.j}] += e.beta;
		s_ = std::max(s_, e.i);
	}
	auto zero = entries_.find({0, 0});
	if (zero == entries_.end() || zero->second != 1)
		throw table_error("a table of a cyclic module needs exactly the entry "
		                  "(i=0, j=0, beta=1)");
	for (const auto& [key, beta] : entries_)
		if (key.first == 0 && key.second != 0)
			throw table_error("unexpected entry at homological degree 0 with shift " +
			                  std::to_string(key.second));
	if (s_ < 1) throw table_error("the resolution must have length s >= 1");
	if (static_cast<unsigned>(s_) > n_)
		throw table_error("resolution length s = " + std::to_string(s_) +
		                  " exceeds n = " + std::to_string(n_) +
		                  "; pass n >= s");
}

long BettiTable::beta(int i, int j) const {
	auto it = entries_.find({i, j});
	return it == entries_.end() ? 0 : it->second;
}

mpz_class BettiTable::betti_number(int i) const {
	mpz_class b = 0;
	for (const auto& [key, beta] : entries_)
		if (key.first == i) b += beta;
	return b;
}

std::vector<int> BettiTable::shifts_at(int i) const {
	std::vector<int> out;
	for (const auto& [key, beta] : entries_)
		if (key.first == i)
			for (long r = 0; r < beta; ++r) out.push_back(key.second);
	return out; // map order keeps shifts sorted
}

int BettiTable::max_shift() const {
	int m = 0;
	for (const auto& [key, beta] : entries_) m = std::max(m, key.second);
	return m;
}

std::vector<BettiEntry> BettiTable::nonminimal_entries() const {
	std::vector<BettiEntry> out;
	for (const auto& [key, beta] : entries_)
		if (key.second < key.first) out.push_back({key.first, key.second, beta});
	return out;
}

namespace {

long long require_int(const nlohmann::json& v, const char* what) {
	if (!v.is_number_integer())
		throw parse_error(std::string(what) + " must be an integer");
	return v.get<long long>();
}

} // namespace

BettiTable BettiTable::parse_json(std::string_view text) {
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw parse_error(std::string("invalid JSON: ") + e.what());
	}
	if (!doc.is_object()) throw parse_error("top-level JSON value must be an object");
	if (!doc.contains("n"))
		throw parse_error("missing field \"n\" (number of ring variables); "
		                  "pass any n >= s");
	long long n = require_int(doc["n"], "\"n\"");
	if (n <= 0) throw parse_error("\"n\" must be positive");
	if (!doc.contains("entries") || !doc["entries"].is_array())
		throw parse_error("missing array field \"entries\"");
	std::vector<BettiEntry> entries;
	for (const auto& item : doc["entries"]) {
		if (!item.is_object() || !item.contains("i") || !item.contains("j") ||
		    !item.contains("beta"))
			throw parse_error("each entry must be an object with fields i, j, beta");
		entries.push_back(
		    {static_cast<int>(require_int(item["i"], "entry field i")),
		     static_cast<int>(require_int(item["j"], "entry field j")),
		     static_cast<long>(require_int(item["beta"], "entry field beta"))});
	}
	return BettiTable(static_cast<unsigned>(n), entries);
}

BettiTable BettiTable::parse_plain(std::string_view text) {
	std::istringstream in{std::string(text)};
	std::string line;
	int lineno = 0;
	bool have_n = false;
	unsigned n = 0;
	std::vector<BettiEntry> entries;
	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream fields(line);
		if (!have_n) {
			std::string tag;
			if (!(fields >> tag)) continue; // blank / comment-only line
			long long value;
			if (tag != "n" || !(fields >> value) || value <= 0)
				throw parse_error("line " + std::to_string(lineno) +
				                  ": expected header \"n <positive int>\"");
			n = static_cast<unsigned>(value);
			have_n = true;
		} else {
			long long i, j, beta;
			if (!(fields >> i)) continue;
			if (!(fields >> j >> beta))
				throw parse_error("line " + std::to_string(lineno) +
				                  ": expected \"i j beta\"");
			entries.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<long>(beta)});
		}
		std::string extra;
		if (fields >> extra)
			throw parse_error("line " + std::to_string(lineno) +
			                  ": trailing token \"" + extra + "\"");
	}
	if (!have_n)
		throw parse_error("missing header line \"n <int>\"; pass any n >= s");
	return BettiTable(n, entries);
}

BettiTable BettiTable::parse_auto(std::string_view text) {
	for (char ch : text) {
		if (std::isspace(static_cast<unsigned char>(ch))) continue;
		return ch == '{' ? parse_json(text) : parse_plain(text);
	}
	throw parse_error("empty input");
}

std::string BettiTable::to_json() const {
	nlohmann::ordered_json doc;
	doc["n"] = n_;
	doc["entries"] = nlohmann::ordered_json::array();
	for (const auto& [key, beta] : entries_) {
		nlohmann::ordered_json e;
		e["i"] = key.first;
		e["j"] = key.second;
		e["beta"] = beta;
		doc["entries"].push_back(std::move(e));
	}
	return doc.dump(2) + "\n";
}

std::string BettiTable::to_plain() const {
	std::ostringstream out;
	out << "n " << n_ << "\n";
	for (const auto& [key, beta] : entries_)
		out << key.first << " " << key.second << " " << beta << "\n";
	return out.str();
}

std::vector<int> GorensteinSplit::column_sizes() const {
	std::vector<int> r;
	for (const auto& col : columns) r.push_back(static_cast<int>(col.size()));
	return r;
}

ShiftProfile shift_profile(const BettiTable& t) {
	ShiftProfile p;
	const int s = t.length();
	p.m.assign(s, 0);
	p.M.assign(s, 0);
	std::vector<bool> seen(s + 1, false);
	for (const auto& [key, beta] : t.entries()) {
		const auto [i, j] = key;
		if (i == 0) continue;
		if (!seen[i]) {
			p.m[i - 1] = p.M[i - 1] = j;
			seen[i] = true;
		} else {
			p.m[i - 1] = std::min(p.m[i - 1], j);
			p.M[i - 1] = std::max(p.M[i - 1], j);
		}
	}
	for (int i = 1; i <= s; ++i)
		if (!seen[i])
			throw table_error("no entries in homological degree " + std::to_string(i));
	return p;
}

bool is_quasi_pure(const ShiftProfile& p) {
	for (int i = 1; i < p.length(); ++i)
		if (p.m[i] < p.M[i - 1]) return false;
	return true;
}

std::optional<int> gorenstein_socle(const BettiTable& t) {
	const int s = t.length();
	int c = -1;
	for (const auto& [key, beta] : t.entries())
		if (key.first == s) {
			if (c >= 0 || beta != 1) return std::nullopt; // socle must have rank one
			c = key.second;
		}
	for (const auto& [key, beta] : t.entries()) {
		const auto [i, j] = key;
		if (c - j < 0 || t.beta(s - i, c - j) != beta) return std::nullopt;
	}
	return c;
}

GorensteinSplit gorenstein_split(const BettiTable& t) {
	const int s = t.length();
	GorensteinSplit g;
	g.parity = (s % 2 == 1) ? Parity::odd : Parity::even;
	g.k = s / 2;

	auto top = t.shifts_at(s);
	if (top.size() != 1 || t.beta(s, top[0]) != 1)
		throw table_error("top homological degree is not a single rank-one entry");
	g.c = top[0];

	for (int i = 1; i <= g.k; ++i) {
		g.columns.push_back(t.shifts_at(i));
		if (g.columns.back().empty())
			throw table_error("no entries in homological degree " + std::to_string(i));
	}

	if (g.parity == Parity::even && g.k >= 1) {
		// Partition the middle multiset into dual pairs (a, c-a), keeping the
		// smaller member of each: sorted two-pointer matching.
		auto& mid = g.columns[g.k - 1];
		if (mid.size() % 2 != 0)
			throw table_error("middle column of an even-length split must have an "
			                  "even number of shifts, got " +
			                  std::to_string(mid.size()));
		std::vector<int> half;
		for (size_t lo = 0, hi = mid.size() - 1; lo < hi; ++lo, --hi) {
			if (mid[lo] + mid[hi] != g.c)
				throw table_error("middle column is not symmetric about c = " +
				                  std::to_string(g.c) + ": cannot pair shift " +
				                  std::to_string(mid[lo]) + " with " +
				                  std::to_string(mid[hi]));
			half.push_back(mid[lo]);
		}
		mid = std::move(half);
	}
	return g;
}

namespace {

void validate_split(const GorensteinSplit& g) {
	if (g.k < 0 || g.c < 1) throw table_error("invalid split: need k >= 0, c >= 1");
	if (static_cast<int>(g.columns.size()) != g.k)
		throw table_error("invalid split: expected " + std::to_string(g.k) +
		                  " columns");
	for (const auto& col : g.columns) {
		if (col.empty() || !std::is_sorted(col.begin(), col.end()))
			throw table_error("invalid split: columns must be nonempty and sorted");
		for (int a : col)
			if (a < 1 || a >= g.c)
				throw table_error("invalid split: shift " + std::to_string(a) +
				                  " outside (0, c)");
	}
	if (g.parity == Parity::even) {
		if (g.k < 1) throw table_error("invalid split: even parity needs k >= 1");
		for (int a : g.columns[g.k - 1])
			if (2 * a > g.c)
				throw table_error("invalid split: middle shift " + std::to_string(a) +
				                  " exceeds c/2");
	}
}

} // namespace

BettiTable dual_complete(const GorensteinSplit& half, unsigned n) {
	validate_split(half);
	const int s = half.s();
	if (n < static_cast<unsigned>(s))
		throw table_error("need n >= s = " + std::to_string(s));
	std::map<std::pair<int, int>, long> acc;
	acc[{0, 0}] += 1;
	acc[{s, half.c}] += 1;
	for (int i = 1; i <= half.k; ++i)
		for (int a : half.columns[i - 1]) {
			acc[{i, a}] += 1;
			acc[{s - i, half.c - a}] += 1; // for even s, i = k folds onto itself
		}
	std::vector<BettiEntry> entries;
	for (const auto& [key, beta] : acc)
		entries.push_back({key.first, key.second, beta});
	return BettiTable(n, entries);
}

BettiTable generate_ci(const std::vector<int>& degrees, unsigned n) {
	const int s = static_cast<int>(degrees.size());
	if (s < 1) throw table_error("need at least one degree");
	if (s > 30) throw table_error("refusing to expand 2^s subsets for s > 30");
	for (int d : degrees)
		if (d < 1) throw table_error("degrees must be positive");
	if (static_cast<unsigned>(s) > n)
		throw table_error("number of degrees s = " + std::to_string(s) +
		                  " exceeds n = " + std::to_string(n));
	// Koszul complex: one summand per subset, at the subset's degree sum.
	std::map<std::pair<int, int>, long> acc;
	acc[{0, 0}] += 1;
	std::vector<int> sums{0};
	std::vector<int> sizes{0};
	for (int d : degrees) {
		size_t count = sums.size();
		for (size_t u = 0; u < count; ++u) {
			sums.push_back(sums[u] + d);
			sizes.push_back(sizes[u] + 1);
		}
	}
	for (size_t u = 1; u < sums.size(); ++u) acc[{sizes[u], sums[u]}] += 1;
	std::vector<BettiEntry> entries;
	for (const auto& [key, beta] : acc)
		entries.push_back({key.first, key.second, beta});
	return BettiTable(n, entries);
}

} // namespace hilco
