#pragma once

#include "rgl/exact.hpp"
#include "rgl/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rgl {

struct GreedyParams {
    int k = 1;
    int s = 1;
    int t = 2;

    Rat eps() const { return Rat(s, t); }
    void validate() const
    {
        if (k < 1 || s < 1 || s > t || 2 * k > t)
            throw std::invalid_argument("greedy params: need 1 <= s <= t and 2k <= t");
    }
};

// U_0..U_r from the greedy embedding step: V_i subset of U_i; for i >= 1
// every vertex of U_i has at most eps*t neighbors in V_i; every vertex of
// U_0 has more than eps*t neighbors in every V_i.
struct DegreeClassPartition {
    std::vector<Bitset> classes;
};

// Books found by the engines live in the complement of the input graph.
struct BookFound {
    BookWitness book;
};
struct MultipartiteFound {
    MultipartiteWitness witness;
};
struct TargetFound {
    std::vector<int> embedding;
};
struct HypothesisViolated {
    std::string clause;
    nlohmann::json witness;
};
using LemmaOutcome = std::variant<BookFound, MultipartiteFound, TargetFound, HypothesisViolated>;

// {"lemma":..., "branch":..., "witness":..., "measurements":...}; enough to
// replay validation without rerunning the search.
struct LemmaRun {
    LemmaOutcome outcome;
    nlohmann::json trace;

    bool hypothesis_violated() const
    {
        return std::holds_alternative<HypothesisViolated>(outcome);
    }
};

// One greedy embedding step: parts must be an induced K_r(t) in g with all
// parts of order t. Returns a complement book on >= (1-4ks/t)N/r vertices,
// an induced K_{r+1}(s) whose parts 1..r sit inside the input parts, or the
// exact step at which the sizes ran out.
LemmaRun greedy_step(const Graph& g, const MultipartiteWitness& parts,
                     const GreedyParams& params);

DegreeClassPartition greedy_degree_classes(const Graph& g, const MultipartiteWitness& parts,
                                           const GreedyParams& params);

// Partition of V(g) into p-1 complement-books spined by the parts of an
// induced K_{p-1}(k); a vertex adjacent to every part certifies a K_p and
// comes back as HypothesisViolated.
struct BookPartitionRun {
    std::vector<BookWitness> books; // in complement(g)
    std::optional<HypothesisViolated> violation;
    nlohmann::json trace;
};
BookPartitionRun book_partition(const Graph& g, const MultipartiteWitness& spineparts);

// Iterated greedy steps: independent t_1-set inside s_set, then p-2 greedy
// steps down the t_r ladder. BookFound needs >= n vertices.
LemmaRun find_blowup(const Graph& g, const Bitset& s_set, int p, int k, int x, long long n);

// Exact threshold ceil(beta (m/8p)^(p-2)), heavy-edge deletion in one shot.
struct RemovalRun {
    Graph pruned;
    std::vector<std::pair<int, int>> removed_edges;
    BigInt threshold;
    bool min_degree_ok = false; // min degree >= (1 - 2/(2p-3) + beta) m
    nlohmann::json trace;
};
RemovalRun make_kp_free(const Graph& g, int p, const Rat& beta);

// An edge of the given p-clique lying in >= ceil(beta (m/8p)^(p-2)) copies
// of K_p, if any; must exist whenever the minimum-degree hypothesis holds.
std::optional<std::pair<int, int>> heavy_edge_for_clique(const Graph& g, const Bitset& clique,
                                                         const Rat& beta);

// Vertex-move-stable q-partition minimizing internal edges by local search
// from two deterministic starts; at the fixed point no vertex has fewer
// neighbors in any other class than in its own.
struct PartitionResult {
    std::vector<Bitset> classes;
    long long internal_edges = 0;
};
PartitionResult min_internal_partition(const Graph& g, int q);

// Removal at beta = 1/p^3 followed by local-search partition of the pruned
// graph into p-1 classes; internal edges recounted in the original graph.
struct StabilityRun {
    PartitionResult partition;
    long long internal_edges_in_g = 0;
    RemovalRun removal;
};
StabilityRun stability_partition(const Graph& g, int p);

// Pure measurement of a partition of T subset V(g): part sizes against
// |T|/(p-1) in units of xi*N (xi = 4p^2 alpha), and the worst cross density
// min_{i != j, w in T_i} d(w, T_j).
struct PartitionAudit {
    long long t_size = 0;
    Rat xi;
    std::vector<long long> sizes;
    std::vector<Rat> deviations;
    Rat min_cross_density;
    nlohmann::json to_json() const;
};
PartitionAudit partition_audit(const Graph& g, const std::vector<Bitset>& parts,
                               const Rat& alpha);

// Derandomized random-spine argument: over all k-subsets Q of independent
// parts, maximize |{v : v has no g-neighbor in Q}| (Q's own vertices count
// as extensions but are excluded from the pages). Exhaustive when the
// candidate count is <= 10^6, else seeded sampling plus steepest ascent.
struct SpineBookRun {
    BookWitness book; // in complement(g)
    long long extensions = 0;
    bool exhaustive = true;
    nlohmann::json trace;
};
SpineBookRun best_spine_book(const Graph& g, const std::vector<Bitset>& parts, int k,
                             std::uint64_t seed = 0);

struct NotTriangleFree : std::runtime_error {
    explicit NotTriangleFree(std::vector<int> tri)
        : std::runtime_error("graph has a triangle"), triangle(std::move(tri))
    {
    }
    std::vector<int> triangle;
};

// For triangle-free g: the best complement book per spine size k = 1..max_k
// (pages A, spine B, no g-edges between them), plus the overall winner by
// total order.
struct EmptyPairRun {
    Bitset pages; // A
    Bitset spine; // B
    struct PerSpine {
        int k;
        BookWitness book;
    };
    std::vector<PerSpine> ladder;
    nlohmann::json trace;
};
EmptyPairRun empty_pair_extract(const Graph& g, int max_k);

// Exact-rational audit of the low-degree contradiction chain over measured
// class sizes |U_0..U_{p-1}|; e enters only here, as a rational upper bound.
struct LowDegreeChainAudit {
    Rat u0_bound, u1_bound, ui_bound;
    bool u0_ok = false, u1_ok = false, ui_ok = false;
    bool chain_strict = false; // sum of bounds < N
    nlohmann::json to_json() const;
};
LowDegreeChainAudit low_degree_chain_audit(int p, int k, int t, const Rat& alpha,
                                           const Rat& delta, long long n, long long big_n,
                                           const std::vector<long long>& class_sizes);

nlohmann::json lemma_outcome_json(const LemmaOutcome& outcome);

} // namespace rgl
