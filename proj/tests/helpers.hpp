#ifndef HILCO_TEST_HELPERS_HPP
#define HILCO_TEST_HELPERS_HPP

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "betti.hpp"

namespace hilco::test {

inline BettiTable make_table(unsigned n, const std::vector<BettiEntry>& e) {
	return BettiTable(n, e);
}

inline std::string fixture_path(const std::string& name) {
	return std::string(HILCO_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

// Deterministic complete-intersection corpus: every nondecreasing degree
// tuple over {2..6} for s <= 3, a strided slice for s = 4, 5, with the
// ambient size cycling through s..s+3.
struct CorpusTable {
	std::vector<int> degrees;
	unsigned n;
	BettiTable table;
};

inline std::vector<CorpusTable> ci_corpus() {
	std::vector<std::vector<int>> tuples;
	auto enumerate = [&](int s, int stride) {
		std::vector<int> d(s, 2);
		long count = 0;
		auto rec = [&](auto&& self, int pos, int lo) -> void {
			if (pos == s) {
				if (count++ % stride == 0) tuples.push_back(d);
				return;
			}
			for (int v = lo; v <= 6; ++v) {
				d[pos] = v;
				self(self, pos + 1, v);
			}
		};
		rec(rec, 0, 2);
	};
	for (int s = 1; s <= 3; ++s) enumerate(s, 1);
	enumerate(4, 7);
	enumerate(5, 12);
	// equal-degree tables in the longer lengths, for the pure-collapse checks
	tuples.push_back({3, 3, 3, 3});
	tuples.push_back({2, 2, 2, 2, 2});

	std::vector<CorpusTable> corpus;
	for (size_t u = 0; u < tuples.size(); ++u) {
		const auto& degs = tuples[u];
		unsigned n = static_cast<unsigned>(degs.size()) + u % 4;
		corpus.push_back({degs, n, generate_ci(degs, n)});
	}
	return corpus;
}

// Convolution of two tables: entries (i1+i2, j1+j2, b1*b2). The Koszul table
// of a union of regular sequences arises this way; convolving with the
// rank-five pfaffian table below yields symmetric non-CI test tables.
inline BettiTable tensor_table(const BettiTable& a, const BettiTable& b,
                               unsigned n) {
	std::vector<BettiEntry> entries;
	for (const auto& [ka, ba] : a.entries())
		for (const auto& [kb, bb] : b.entries())
			entries.push_back({ka.first + kb.first, ka.second + kb.second, ba * bb});
	return BettiTable(n, entries);
}

// Codimension-three Gorenstein table of five quadric pfaffians.
inline BettiTable pfaffian_table(unsigned n = 3) {
	return make_table(n, {{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}});
}

struct RunResult {
	int exit_code = -1;
	std::string out;
};

inline RunResult run_cmd(const std::string& cmd) {
	RunResult r;
	FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
	if (!pipe) return r;
	char buf[4096];
	size_t got;
	while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
	int status = pclose(pipe);
	if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
	return r;
}

} // namespace hilco::test

#endif
