#pragma once

#include "rgl/exact.hpp"
#include "rgl/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

namespace rgl {

// Per-edge clique loads. Identities that hold exactly:
//   sum over edges of per_edge counts  = C(p,2) * total
//   sum over (p-1)-cliques S of ext(S) = p * total
struct CliqueCountReport {
    int p = 0;
    std::uint64_t total = 0;
    // (u, v, count) with u < v, sorted; every edge of the graph appears.
    std::vector<std::tuple<int, int, std::uint64_t>> per_edge;

    nlohmann::json to_json() const;
};

std::uint64_t count_cliques(const Graph& g, int p);

// Visits every p-clique once, vertices ascending, cliques in lex order.
void for_each_clique(const Graph& g, int p,
                     const std::function<void(const std::vector<int>&)>& fn);

CliqueCountReport clique_count_report(const Graph& g, int p);

// |ext(s)| = number of common neighbors of the clique s.
std::uint64_t extension_count(const Graph& g, const Bitset& s);

// Edges whose K_p load is >= threshold. Callers compute the threshold with
// exact rational arithmetic (see removal lemma engines).
std::vector<std::pair<int, int>> heavy_edges(const Graph& g, int p, std::uint64_t threshold);

// C(m,p)/C(r,p): lower bound on the K_p count of an m-vertex graph with no
// independent set of size z, where r = r(K_p, K_z).
Rat supersaturation_bound(long long m, long long p, long long r);

// x(2x-5)/(2x-3) >= x-2+2/5, needed for x >= 4. Bounds the second-part
// average degree in the removal lemma's auxiliary bipartite graph.
bool aux_degree_inequality_holds(const Rat& x);

// (2p-3-2t)/(5(2p-3)(p-t)) >= 1/(8p) for 1 <= t <= p-4; the induction-step
// constant in the heavy-edge count.
bool heavy_edge_step_inequality_holds(long long p, long long t);

// C(z+p, p), the Erdos-Szekeres upper bound for r(K_p, K_z) used in
// threshold arithmetic.
BigInt clique_ramsey_upper_bound(long long p, long long z);

} // namespace rgl
