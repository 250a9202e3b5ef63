#pragma once

#include "rgl/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rgl {

struct CliquePattern {
    int p;
};
struct BookPattern {
    int k;
    int n;
};
struct MultipartitePattern {
    std::vector<int> sizes;
};
struct GraphPattern {
    Graph g;
};
using Pattern = std::variant<CliquePattern, BookPattern, MultipartitePattern, GraphPattern>;

int pattern_order(const Pattern& p);
std::string pattern_str(const Pattern& p);
// "clique:3", "book:2,4", "multipartite:1,2,2", "g6:<string>"
Pattern parse_pattern(const std::string& s);

bool contains_pattern(const Graph& host, const Pattern& p);

using ContainmentWitness =
    std::variant<Bitset, BookWitness, MultipartiteWitness, std::vector<int>>;
std::optional<ContainmentWitness> find_pattern(const Graph& host, const Pattern& p);
nlohmann::json containment_witness_json(const ContainmentWitness& w);

struct ArrowingInstance {
    Pattern g_pattern;
    Pattern h_pattern;
    int n_vertices = 0;
};

struct ArrowResult {
    bool arrows = false;
    bool witness_in_complement = false; // true when H was found in the complement
    std::optional<ContainmentWitness> witness;
};

// Does gamma contain G, or its complement contain H?
ArrowResult arrows(const Graph& gamma, const ArrowingInstance& inst);

enum class SearchEngine { dfs, exhaustive };

struct NonArrowingSearch {
    bool found = false;
    Graph witness; // a graph on N vertices that fails to arrow, when found
    std::uint64_t nodes_explored = 0;
};

// Searches for an N-vertex graph containing no G whose complement contains
// no H. The DFS engine decides edges in graph6 bit order with sound pruning
// on decided edges, early acceptance through optimistic closures, and
// monotone row-0 symmetry breaking. The exhaustive engine scans all 2^C(N,2)
// labeled graphs (guarded) and reports the least graph6 code.
NonArrowingSearch find_non_arrowing(const Pattern& G, const Pattern& H, int N,
                                    SearchEngine engine, int threads = 1);

struct RamseyResult {
    int r = 0;
    Graph lower_bound_witness; // non-arrowing graph on r-1 vertices
    std::uint64_t nodes_explored = 0;
    std::int64_t wall_ms = 0;
};

// Least N such that every N-vertex graph arrows (G, H). Guards: N <= 10 for
// the DFS engine, C(N,2) <= 28 for the exhaustive engine; refuses beyond.
RamseyResult exact_ramsey(const Pattern& G, const Pattern& H,
                          SearchEngine engine = SearchEngine::dfs, int threads = 1);

// exact_ramsey(K_p, B_{k,n}) - ((p-1)(n-1)+1); zero iff B_{k,n} is p-good.
int goodness_gap(int p, int k, int n);

} // namespace rgl
