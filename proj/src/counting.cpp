#include "rgl/counting.hpp"

#include <map>
#include <stdexcept>

namespace rgl {

namespace {

std::uint64_t count_dfs(const Graph& g, int depth, const Bitset& cand)
{
    if (depth == 1)
        return cand.count();
    std::uint64_t total = 0;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        Bitset next = cand;
        next &= g.neighbors(v);
        for (int w = next.first(); w != -1 && w < v; w = next.next(w))
            next.reset(w);
        if (next.count() >= depth - 1)
            total += count_dfs(g, depth - 1, next);
    }
    return total;
}

void enum_dfs(const Graph& g, int need, const Bitset& cand, std::vector<int>& stack,
              const std::function<void(const std::vector<int>&)>& fn)
{
    if (need == 0) {
        fn(stack);
        return;
    }
    if (cand.count() < need)
        return;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        stack.push_back(v);
        Bitset next = cand;
        next &= g.neighbors(v);
        for (int w = next.first(); w != -1 && w < v; w = next.next(w))
            next.reset(w);
        enum_dfs(g, need - 1, next, stack, fn);
        stack.pop_back();
    }
}

} // namespace

std::uint64_t count_cliques(const Graph& g, int p)
{
    if (p < 1)
        throw std::invalid_argument("count_cliques: p must be >= 1");
    if (p > g.order())
        return 0;
    if (p == 1)
        return g.order();
    return count_dfs(g, p, g.full_vertex_set());
}

void for_each_clique(const Graph& g, int p,
                     const std::function<void(const std::vector<int>&)>& fn)
{
    if (p < 1)
        throw std::invalid_argument("for_each_clique: p must be >= 1");
    std::vector<int> stack;
    enum_dfs(g, p, g.full_vertex_set(), stack, fn);
}

CliqueCountReport clique_count_report(const Graph& g, int p)
{
    CliqueCountReport report;
    report.p = p;
    std::map<std::pair<int, int>, std::uint64_t> loads;
    for (auto e : g.edges())
        loads[e] = 0;
    for_each_clique(g, p, [&](const std::vector<int>& clique) {
        ++report.total;
        if (p >= 2)
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    ++loads[{clique[i], clique[j]}];
    });
    for (const auto& [e, c] : loads)
        report.per_edge.emplace_back(e.first, e.second, c);
    return report;
}

nlohmann::json CliqueCountReport::to_json() const
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v, c] : per_edge)
        edges.push_back({u, v, c});
    return {{"p", p}, {"total", total}, {"per_edge", edges}};
}

std::uint64_t extension_count(const Graph& g, const Bitset& s)
{
    auto vs = s.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                throw std::invalid_argument("extension_count: set is not a clique");
    Bitset common = g.full_vertex_set();
    for (int v : vs)
        common &= g.neighbors(v);
    return common.count();
}

std::vector<std::pair<int, int>> heavy_edges(const Graph& g, int p, std::uint64_t threshold)
{
    if (p < 3)
        throw std::invalid_argument("heavy_edges: p must be >= 3");
    auto report = clique_count_report(g, p);
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v, c] : report.per_edge)
        if (c >= threshold)
            out.emplace_back(u, v);
    return out;
}

Rat supersaturation_bound(long long m, long long p, long long r)
{
    if (!(m >= r && r >= p && p >= 2))
        throw std::invalid_argument("supersaturation_bound: need m >= r >= p >= 2");
    return Rat(binomial(m, p), binomial(r, p));
}

bool aux_degree_inequality_holds(const Rat& x)
{
    return x * (2 * x - 5) / (2 * x - 3) >= x - 2 + Rat(2, 5);
}

bool heavy_edge_step_inequality_holds(long long p, long long t)
{
    if (t < 1 || t > p - 4)
        throw std::invalid_argument("heavy_edge_step_inequality: need 1 <= t <= p-4");
    return Rat(2 * p - 3 - 2 * t, 5 * (2 * p - 3) * (p - t)) >= Rat(1, 8 * p);
}

BigInt clique_ramsey_upper_bound(long long p, long long z)
{
    return binomial(z + p, p);
}

} // namespace rgl
