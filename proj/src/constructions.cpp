#include "rgl/constructions.hpp"

#include "rgl/orderly.hpp"
#include "rgl/rng.hpp"

#include <algorithm>
#include <cmath>

namespace rgl {

void GoodnessInstance::validate() const
{
    if (p < 2 || k < 2)
        throw std::invalid_argument("goodness instance: need p, k >= 2");
    if (n < k)
        throw std::invalid_argument("goodness instance: need n >= k");
    if (a.empty())
        return;
    if (static_cast<int>(a.size()) != p)
        throw std::invalid_argument("goodness instance: need p part sizes");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1])
            throw std::invalid_argument("goodness instance: part sizes must be ascending");
    if (a[0] < 1)
        throw std::invalid_argument("goodness instance: part sizes must be >= 1");
    if (p >= 2 && a[p - 2] > t)
        throw std::invalid_argument("goodness instance: a_{p-1} must be <= t");
}

std::vector<Rat> blowup_eps(int p, int k)
{
    std::vector<Rat> eps;
    for (int r = 1; r <= p - 2; ++r)
        eps.push_back((1 - Rat(r, p - 1)) / (4 * k));
    return eps;
}

std::vector<BigInt> blowup_ladder(int p, int k, BigInt x)
{
    auto eps = blowup_eps(p, k);
    std::vector<BigInt> t(std::max(0, p - 1));
    if (p >= 2)
        t[p - 2] = x; // t_{p-1}, 0-indexed
    for (int r = p - 2; r >= 1; --r)
        t[r - 1] = rat_ceil(Rat(t[r]) / eps[r - 1]);
    return t;
}

DerivedParams derive_params(int p, int k, int t, long long big_n, const Rat& alpha,
                            const Rat& eps_stab)
{
    DerivedParams d;
    d.alpha = alpha;
    d.eps = rat_pow(alpha / 10, k) / (10 * k);
    d.x = rat_ceil(Rat(t) / d.eps);
    d.z = d.x * rat_ceil(rat_pow(Rat(20 * k), p));
    d.eps_r = blowup_eps(p, k);
    d.t_r = blowup_ladder(p, k, d.x);
    d.xi = 4 * p * p * alpha;
    d.zeta = p * t * d.xi;
    BigInt p10p = 1;
    for (int i = 0; i < 10 * p; ++i)
        p10p *= p;
    d.eta = eps_stab / Rat(p10p);
    d.beta = Rat(1, static_cast<long long>(p) * p * p);
    d.lambda = eps_stab / 10;
    d.d = (1 - Rat(1, p - 1) - alpha) * big_n;
    return d;
}

nlohmann::json DerivedParams::to_json() const
{
    nlohmann::json eps_list = nlohmann::json::array();
    for (const auto& e : eps_r)
        eps_list.push_back(rat_str(e));
    nlohmann::json t_list = nlohmann::json::array();
    for (const auto& t : t_r)
        t_list.push_back(t.str());
    return {{"alpha", rat_str(alpha)}, {"eps", rat_str(eps)},   {"x", x.str()},
            {"z", z.str()},            {"eps_r", eps_list},     {"t_r", t_list},
            {"xi", rat_str(xi)},       {"zeta", rat_str(zeta)}, {"eta", rat_str(eta)},
            {"beta", rat_str(beta)},   {"lambda", rat_str(lambda)}, {"d", rat_str(d)}};
}

Graph burr_graph(int chi, int s, int h_order)
{
    if (chi < 2 || s < 1 || h_order < s)
        throw std::invalid_argument("burr_graph: need chi >= 2, 1 <= s <= h_order");
    std::vector<int> sizes(chi - 1, h_order - 1);
    if (s - 1 > 0)
        sizes.push_back(s - 1);
    sizes.erase(std::remove(sizes.begin(), sizes.end(), 0), sizes.end());
    if (sizes.empty())
        return Graph(0);
    return complete_multipartite(sizes);
}

namespace {

bool has_c4(const Graph& g)
{
    // a 4-cycle is exactly a vertex pair with two common neighbors
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u).count_and(g.neighbors(v)) >= 2)
                return true;
    return false;
}

constexpr int sampler_budget = 10000;

} // namespace

Graph c4_free_almost_regular(int m, int a, std::uint64_t seed)
{
    if (a < 1 || m <= a)
        throw std::invalid_argument("c4_free_almost_regular: need 1 <= a < m");

    if (a == 1) {
        // maximum matching; odd m leaves vertex m-1 isolated
        Graph g(m);
        for (int v = 0; v + 1 < m; v += 2)
            g.add_edge(v, v + 1);
        return g;
    }

    // degree sequence: all a, except vertex m-1 drops to a-1 when m*a is odd
    std::vector<int> stubs;
    for (int v = 0; v < m; ++v) {
        int deg = a;
        if ((static_cast<long long>(m) * a) % 2 == 1 && v == m - 1)
            deg = a - 1;
        for (int i = 0; i < deg; ++i)
            stubs.push_back(v);
    }

    Rng rng(seed);
    for (int attempt = 1; attempt <= sampler_budget; ++attempt) {
        std::vector<int> pairing = stubs;
        rng.shuffle(pairing);
        Graph g(m);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < pairing.size(); i += 2) {
            int u = pairing[i], v = pairing[i + 1];
            if (u == v || g.has_edge(u, v)) {
                ok = false; // loop or multi-edge
                break;
            }
            g.add_edge(u, v);
        }
        if (ok && !has_c4(g))
            return g;
    }
    throw SamplingBudgetExceeded(sampler_budget,
                                 "no C_4-free graph with the requested degree sequence found");
}

Graph book_only_if_graph(const GoodnessInstance& inst)
{
    inst.validate();
    if (static_cast<int>(inst.a.size()) != inst.p)
        throw std::invalid_argument("book_only_if_graph: instance needs all p part sizes");
    if (inst.a[1] < 2)
        throw std::invalid_argument("book_only_if_graph: needs a_2 >= 2");
    int a1 = inst.a[0];
    long long u1_size = inst.n + a1 - 1;
    if (u1_size <= a1)
        throw std::invalid_argument("book_only_if_graph: n too small for the inner graph");
    Graph inner = c4_free_almost_regular(static_cast<int>(u1_size), a1, inst.seed);
    return near_goodness_graph(inst, inner);
}

Graph near_goodness_graph(const GoodnessInstance& inst, const Graph& gamma0)
{
    inst.validate();
    if (inst.a.size() < 2)
        throw std::invalid_argument("near_goodness_graph: needs a_1, a_2");
    int a1 = inst.a[0], a2 = inst.a[1];
    long long d = gamma0.order() - (inst.n - 1);
    if (d < 0)
        throw std::invalid_argument(
            "near_goodness_graph: gamma0 has fewer than n-1 vertices");
    if (find_multipartite(gamma0, {a1, a2}, false).has_value())
        throw std::invalid_argument("near_goodness_graph: gamma0 contains K_{a1,a2}");
    long long low = 0;
    for (int v = 0; v < gamma0.order(); ++v)
        if (gamma0.degree(v) < d)
            ++low;
    if (low > inst.k - 1)
        throw std::invalid_argument("near_goodness_graph: gamma0 has " + std::to_string(low) +
                                    " vertices of degree < d, allowed at most k-1");

    long long total = (inst.p - 1) * (inst.n - 1) + d;
    if (total > Graph::max_vertices)
        throw std::invalid_argument("near_goodness_graph: order above vertex cap");
    Graph g(static_cast<int>(total));
    long long u1 = gamma0.order();
    for (auto [u, v] : gamma0.edges())
        g.add_edge(u, v);
    // all cross pairs adjacent, parts U_2..U_{p-1} independent
    for (long long v = 0; v < total; ++v) {
        long long part_v = v < u1 ? 0 : (v - u1) / (inst.n - 1) + 1;
        for (long long w = v + 1; w < total; ++w) {
            long long part_w = w < u1 ? 0 : (w - u1) / (inst.n - 1) + 1;
            if (part_v != part_w)
                g.add_edge(static_cast<int>(v), static_cast<int>(w));
        }
    }
    return g;
}

namespace {

constexpr int dk_cap = 10;

// Witness for a given d: an (n+d-1)-vertex K_{a1,a2}-free graph, at most
// k-1 vertices of degree < d.
std::optional<Graph> dk_witness(int order, int k, int a1, int a2, int d)
{
    std::optional<Graph> found;
    for_each_graph_up_to_iso(
        order,
        [&](const Graph& g, int) {
            return !find_multipartite(g, {a1, a2}, false).has_value();
        },
        [&](const Graph& g) {
            int low = 0;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) < d)
                    ++low;
            if (low <= k - 1) {
                found = g;
                return true;
            }
            return false;
        });
    return found;
}

} // namespace

DkResult dk_bruteforce(int n, int k, int a1, int a2)
{
    if (n < 1 || k < 1 || a1 < 1 || a2 < a1)
        throw std::invalid_argument("dk_bruteforce: need n,k >= 1 and a2 >= a1 >= 1");
    if (n - 1 > dk_cap)
        throw std::invalid_argument("dk_bruteforce: instance above brute-force cap");

    DkResult best;
    bool have = false;
    for (int d = 0; n + d - 1 <= dk_cap; ++d) {
        int order = n + d - 1;
        if (order < 0)
            continue;
        auto w = dk_witness(order, k, a1, a2, d);
        if (w) {
            best = DkResult{d, *w};
            have = true;
            if (n + d == dk_cap + 1) {
                // a witness at the cap leaves larger d uncertified
                throw std::invalid_argument("dk_bruteforce: instance above brute-force cap");
            }
        }
    }
    if (!have)
        throw std::invalid_argument("dk_bruteforce: no witness at any feasible d");
    return best;
}

RandomThresholdResult random_threshold_graph(int p, int k, double C, double c,
                                             std::uint64_t seed)
{
    if (p < 2 || k < 1)
        throw std::invalid_argument("random_threshold_graph: need p >= 2, k >= 1");
    double log2p = std::log2(static_cast<double>(p));
    double q = C * log2p / k;
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("random_threshold_graph: edge probability out of [0,1]");
    double n_real = std::floor(std::pow(k / log2p, c * p));
    if (!(n_real >= 1.0))
        throw std::invalid_argument("random_threshold_graph: n underflows to zero");
    long long n = static_cast<long long>(n_real);
    long long big_n = (p - 1) * (n - 1) + 1;
    if (big_n > Graph::max_vertices)
        throw std::invalid_argument("random_threshold_graph: order above vertex cap");

    RandomThresholdResult res;
    res.n = n;
    res.big_n = big_n;
    res.q = q;
    Graph g(static_cast<int>(big_n));
    Rng rng(seed);
    // threshold on the raw 64-bit stream keeps the sample seed-reproducible
    std::uint64_t threshold =
        q >= 1.0 ? ~std::uint64_t{0}
                 : static_cast<std::uint64_t>(q * 18446744073709551616.0);
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (q >= 1.0 || rng.next() < threshold)
                g.add_edge(u, v);
    res.clique_found = find_clique(g, p).has_value();
    res.book_in_complement_found = find_book(complement(g), k, n).has_value();
    res.graph = std::move(g);
    return res;
}

} // namespace rgl
