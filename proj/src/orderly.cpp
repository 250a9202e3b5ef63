#include "rgl/orderly.hpp"

#include <array>
#include <stdexcept>

namespace rgl {

namespace {

constexpr int orderly_cap = 12;

struct CanonTest {
    int n;
    std::array<std::uint16_t, orderly_cap> adj{};
    std::array<std::uint16_t, orderly_cap> id_col{};
    std::array<int, orderly_cap> perm{};
    std::uint16_t used = 0;

    explicit CanonTest(const Graph& g) : n(g.order())
    {
        for (int v = 0; v < n; ++v)
            for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
                adj[v] |= std::uint16_t(1) << u;
        for (int j = 1; j < n; ++j) {
            std::uint16_t col = 0;
            for (int i = 0; i < j; ++i)
                col = static_cast<std::uint16_t>((col << 1) | ((adj[i] >> j) & 1));
            id_col[j] = col;
        }
    }

    // True iff some relabeling yields a strictly larger code. Branches that
    // fall below the identity code are pruned; equal prefixes recurse.
    bool exists_larger(int slot)
    {
        if (slot == n)
            return false; // an automorphism, not an improvement
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1)
                continue;
            std::uint16_t col = 0;
            for (int i = 0; i < slot; ++i)
                col = static_cast<std::uint16_t>((col << 1) | ((adj[perm[i]] >> v) & 1));
            if (col > id_col[slot])
                return true;
            if (col == id_col[slot]) {
                perm[slot] = v;
                used |= std::uint16_t(1) << v;
                if (exists_larger(slot + 1))
                    return true;
                used &= static_cast<std::uint16_t>(~(std::uint16_t(1) << v));
            }
        }
        return false;
    }
};

struct OrderlyGen {
    int target;
    const std::function<bool(const Graph&, int)>& prune;
    const std::function<bool(const Graph&)>& visit;

    bool extend(const Graph& g)
    {
        int m = g.order();
        if (m == target)
            return visit(g);
        // dense rows first so witnesses with degree constraints surface early
        for (int row = (1 << m) - 1; row >= 0; --row) {
            Graph child(m + 1);
            for (int u = 0; u < m; ++u) {
                for (int v = g.neighbors(u).next(u); v != -1; v = g.neighbors(u).next(v))
                    child.add_edge(u, v);
                if ((row >> u) & 1)
                    child.add_edge(u, m);
            }
            if (!is_canonical_max(child))
                continue;
            if (!prune(child, m + 1))
                continue;
            if (extend(child))
                return true;
        }
        return false;
    }
};

} // namespace

bool is_canonical_max(const Graph& g)
{
    if (g.order() > orderly_cap)
        throw std::invalid_argument("is_canonical_max: order above orderly cap");
    if (g.order() <= 1)
        return true;
    CanonTest test(g);
    return !test.exists_larger(0);
}

void for_each_graph_up_to_iso(int n,
                              const std::function<bool(const Graph&, int)>& prune,
                              const std::function<bool(const Graph&)>& visit)
{
    if (n < 0 || n > orderly_cap)
        throw std::invalid_argument("for_each_graph_up_to_iso: order above orderly cap");
    if (n == 0) {
        visit(Graph(0));
        return;
    }
    OrderlyGen gen{n, prune, visit};
    Graph seed(1);
    if (prune(seed, 1))
        gen.extend(seed);
}

} // namespace rgl
