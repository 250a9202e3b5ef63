#pragma once

#include "rgl/exact.hpp"
#include "rgl/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace rgl {

struct GoodnessInstance {
    int p = 2;
    int k = 2;
    long long n = 2;
    int t = 2;
    std::vector<int> a; // a_1 <= ... <= a_p
    std::uint64_t seed = 0;

    // Target order for each context.
    long long big_n_plus_one() const { return (p - 1) * (n - 1) + 1; }
    long long big_n_plus_a1() const { return (p - 1) * (n - 1) + a.at(0); }

    void validate() const;
};

// Exact working constants derived from an instance. The paper's asymptotic
// delta/gamma thresholds have exponents like t^(20p) and are not
// representable at desk scale; what is stored here is everything the
// engines and audits actually consume.
struct DerivedParams {
    Rat alpha;
    Rat eps;               // (alpha/10)^k / (10k)
    BigInt x;              // t / eps, rounded up
    BigInt z;              // x * (20k)^p
    std::vector<Rat> eps_r;    // eps_r = (1 - r/(p-1))/(4k), r = 1..p-2
    std::vector<BigInt> t_r;   // t_{p-1} = x, t_r = ceil(t_{r+1}/eps_r)
    Rat xi;                // 4 p^2 alpha
    Rat zeta;              // p t xi
    Rat eta;               // p^-10p * eps_stab (stability)
    Rat beta;              // 1/p^3 (stability pipeline)
    Rat lambda;            // eps_stab/10
    Rat d;                 // (1 - 1/(p-1) - alpha) N

    nlohmann::json to_json() const;
};

DerivedParams derive_params(int p, int k, int t, long long big_n, const Rat& alpha,
                            const Rat& eps_stab = Rat(1, 100));

// The t_r ladder alone, seeded by t_{p-1} = x (used by the blowup engine,
// where x is caller-supplied).
std::vector<BigInt> blowup_ladder(int p, int k, BigInt x);
std::vector<Rat> blowup_eps(int p, int k);

// Complete multipartite graph with chi-1 parts of order h_order-1 and one
// part of order s-1 (dropped when empty): the generic Ramsey lower-bound
// coloring.
Graph burr_graph(int chi, int s, int h_order);

struct SamplingBudgetExceeded : std::runtime_error {
    SamplingBudgetExceeded(int attempts_, const std::string& what_)
        : std::runtime_error(what_ + " (after " + std::to_string(attempts_) + " attempts)"),
          attempts(attempts_)
    {
    }
    int attempts;
};

// C_4-free graph on m vertices with every degree a, except that vertex m-1
// gets degree a-1 when m*a is odd. a = 1 is built as a maximum matching;
// a >= 2 is configuration-model sampling with whole-sample rejection.
Graph c4_free_almost_regular(int m, int a, std::uint64_t seed);

// The order-(p-1)(n-1)+a_1 construction showing r(K_p(a), B_{k,n}) exceeds
// it whenever a_2 >= 2: U_1 of order n+a_1-1 carrying a C_4-free almost
// a_1-regular graph, the other parts independent, all cross pairs adjacent.
Graph book_only_if_graph(const GoodnessInstance& inst);

// Same frame with an arbitrary inner graph: gamma0 must be K_{a_1,a_2}-free
// on n+d-1 vertices with at most k-1 vertices of degree < d. Throws
// std::invalid_argument naming the violated clause.
Graph near_goodness_graph(const GoodnessInstance& inst, const Graph& gamma0);

struct DkResult {
    int d = 0;
    Graph witness;
};

// d_k(n, K_{a1,a2}) by exhaustive isomorph-free search; refuses when the
// certifying enumeration would need graphs above 10 vertices.
DkResult dk_bruteforce(int n, int k, int a1, int a2);

struct RandomThresholdResult {
    Graph graph;
    long long n = 0;
    long long big_n = 0;
    double q = 0.0;
    bool clique_found = false;           // K_p in the sample
    bool book_in_complement_found = false; // B_{k,n} in the complement
};

// Seeded G(N, q) with q = C log2(p)/k and n = floor((k/log2 p)^(c p)); the
// audit fields are computed with the exact search oracles.
RandomThresholdResult random_threshold_graph(int p, int k, double C, double c,
                                             std::uint64_t seed);

} // namespace rgl
