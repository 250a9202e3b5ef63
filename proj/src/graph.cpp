#include "rgl/graph.hpp"

#include <algorithm>
#include <numeric>

namespace rgl {

namespace {

constexpr int g6_bias = 63;

// Column-major upper-triangle order: (0,1),(0,2),(1,2),(0,3),...
template <class Fn> void for_each_triangle_bit(int n, Fn&& fn)
{
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            fn(u, v);
}

} // namespace

Graph parse_graph6(const std::string& text)
{
    std::size_t pos = 0;
    static const std::string header = ">>graph6<<";
    if (text.compare(0, header.size(), header) == 0)
        pos = header.size();

    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r'))
        --end;

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= end)
            throw Graph6Error(i, "truncated input");
        int c = static_cast<unsigned char>(text[i]);
        if (c < g6_bias || c > 126)
            throw Graph6Error(i, "byte out of range");
        return c - g6_bias;
    };

    if (pos >= end)
        throw Graph6Error(pos, "empty input");

    long long n;
    if (byte_at(pos) == 63) { // '~': extended order
        if (pos + 1 < end && byte_at(pos + 1) == 63)
            throw Graph6Error(pos, "order above implementation cap");
        n = 0;
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | byte_at(pos + i);
        if (n <= 62)
            throw Graph6Error(pos, "non-canonical long-form order");
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > Graph::max_vertices)
        throw Graph6Error(pos, "order above implementation cap");

    Graph g(static_cast<int>(n));
    int cur = 0, cur_left = 0;
    for_each_triangle_bit(static_cast<int>(n), [&](int u, int v) {
        if (cur_left == 0) {
            cur = byte_at(pos++);
            cur_left = 6;
        }
        if ((cur >> (cur_left - 1)) & 1)
            g.add_edge(u, v);
        --cur_left;
    });
    if (cur_left > 0 && (cur & ((1 << cur_left) - 1)) != 0)
        throw Graph6Error(pos - 1, "nonzero padding bits");
    if (pos != end)
        throw Graph6Error(pos, "trailing garbage");
    return g;
}

std::string serialize_graph6(const Graph& g)
{
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    }
    int cur = 0, nbits = 0;
    for_each_triangle_bit(g.order(), [&](int u, int v) {
        cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
        if (++nbits == 6) {
            out.push_back(static_cast<char>(cur + g6_bias));
            cur = 0;
            nbits = 0;
        }
    });
    if (nbits > 0)
        out.push_back(static_cast<char>((cur << (6 - nbits)) + g6_bias));
    return out;
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Graph complement(const Graph& g)
{
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const Bitset& s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph");
    std::vector<int> vs = s.to_vector();
    Graph out(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace {

// DFS over ascending vertex ids; the first p-clique found is the
// lexicographically least one (as a sorted tuple).
bool clique_dfs(const Graph& g, int p, Bitset& cand, std::vector<int>& stack)
{
    if (static_cast<int>(stack.size()) == p)
        return true;
    int need = p - static_cast<int>(stack.size());
    if (cand.count() < need)
        return false;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        stack.push_back(v);
        Bitset next_cand = cand;
        next_cand &= g.neighbors(v);
        // only consider vertices above v to enumerate sorted tuples
        for (int w = next_cand.first(); w != -1 && w < v; w = next_cand.next(w))
            next_cand.reset(w);
        if (clique_dfs(g, p, next_cand, stack))
            return true;
        stack.pop_back();
    }
    return false;
}

} // namespace

std::optional<Bitset> find_clique(const Graph& g, int p)
{
    if (p < 1)
        throw std::invalid_argument("find_clique: p must be >= 1");
    if (p > g.order())
        return std::nullopt;
    Bitset cand = g.full_vertex_set();
    std::vector<int> stack;
    if (!clique_dfs(g, p, cand, stack))
        return std::nullopt;
    return Bitset::of(g.order(), stack);
}

namespace {

bool indep_dfs(const Graph& g, int size, const Bitset& within, Bitset& cand,
               std::vector<int>& stack)
{
    if (static_cast<int>(stack.size()) == size)
        return true;
    if (cand.count() < size - static_cast<int>(stack.size()))
        return false;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        stack.push_back(v);
        Bitset next_cand = cand;
        next_cand.setminus(g.neighbors(v));
        for (int w = next_cand.first(); w != -1 && w <= v; w = next_cand.next(w))
            next_cand.reset(w);
        if (indep_dfs(g, size, within, next_cand, stack))
            return true;
        stack.pop_back();
    }
    return false;
}

} // namespace

std::optional<Bitset> find_independent_set(const Graph& g, const Bitset& within, int size)
{
    if (size < 0)
        throw std::invalid_argument("find_independent_set: negative size");
    if (size == 0)
        return Bitset(g.order());
    Bitset cand = within;
    std::vector<int> stack;
    if (!indep_dfs(g, size, within, cand, stack))
        return std::nullopt;
    return Bitset::of(g.order(), stack);
}

namespace {

// Enumerates k-cliques in lex order until fn returns true; returns whether
// the enumeration was stopped.
bool for_each_clique_until(const Graph& g, int k, Bitset& cand, std::vector<int>& stack,
                           const std::function<bool(const std::vector<int>&)>& fn)
{
    if (static_cast<int>(stack.size()) == k)
        return fn(stack);
    if (cand.count() < k - static_cast<int>(stack.size()))
        return false;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        stack.push_back(v);
        Bitset next_cand = cand;
        next_cand &= g.neighbors(v);
        for (int w = next_cand.first(); w != -1 && w < v; w = next_cand.next(w))
            next_cand.reset(w);
        if (for_each_clique_until(g, k, next_cand, stack, fn))
            return true;
        stack.pop_back();
    }
    return false;
}

} // namespace

std::optional<BookWitness> find_book(const Graph& g, int k, long long n)
{
    if (k < 1 || n < k)
        throw std::invalid_argument("find_book: need n >= k >= 1");
    std::optional<BookWitness> found;
    Bitset cand = g.full_vertex_set();
    std::vector<int> stack;
    for_each_clique_until(g, k, cand, stack, [&](const std::vector<int>& spine) {
        Bitset pages = g.full_vertex_set();
        for (int v : spine)
            pages &= g.neighbors(v);
        // spine vertices are never their own neighbors, so pages is already
        // disjoint from the spine
        if (spine.size() + pages.count() >= static_cast<std::size_t>(n)) {
            found = BookWitness{Bitset::of(g.order(), spine), pages};
            return true;
        }
        return false;
    });
    return found;
}

namespace {

struct MultipartiteSearch {
    const Graph& g;
    std::vector<int> sizes;     // internal order (descending size)
    std::vector<int> slot_of;   // requested part index -> internal slot
    bool induced;
    std::vector<std::vector<int>> chosen;
    Bitset used;

    MultipartiteSearch(const Graph& graph, const std::vector<int>& requested, bool ind)
        : g(graph), induced(ind), used(graph.order())
    {
        std::vector<int> idx(requested.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return requested[a] > requested[b]; });
        slot_of.resize(requested.size());
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            slot_of[idx[slot]] = static_cast<int>(slot);
            sizes.push_back(requested[idx[slot]]);
        }
        chosen.resize(sizes.size());
    }

    // cross = vertices adjacent to everything chosen in earlier parts
    bool fill(std::size_t part, int pos, const Bitset& cross)
    {
        if (pos == sizes[part]) {
            if (part + 1 == sizes.size())
                return true;
            Bitset next_cross = cross;
            for (int v : chosen[part])
                next_cross &= g.neighbors(v);
            return fill(part + 1, 0, next_cross);
        }
        Bitset cand = cross;
        cand.setminus(used);
        if (induced)
            for (int v : chosen[part])
                cand.setminus(g.neighbors(v));
        int lo = -1;
        if (pos > 0)
            lo = chosen[part].back(); // ascending within a part
        else if (part > 0 && sizes[part] == sizes[part - 1])
            lo = chosen[part - 1].front(); // equal-size parts: break symmetry
        for (int v = cand.next(lo); v != -1; v = cand.next(v)) {
            chosen[part].push_back(v);
            used.set(v);
            if (fill(part, pos + 1, cross))
                return true;
            used.reset(v);
            chosen[part].pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<MultipartiteWitness>
find_multipartite(const Graph& g, const std::vector<int>& sizes, bool induced)
{
    if (sizes.empty())
        throw std::invalid_argument("find_multipartite: sizes must be nonempty");
    for (int s : sizes)
        if (s < 1)
            throw std::invalid_argument("find_multipartite: part sizes must be >= 1");
    long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (total > g.order())
        return std::nullopt;

    MultipartiteSearch search(g, sizes, induced);
    if (!search.fill(0, 0, g.full_vertex_set()))
        return std::nullopt;

    MultipartiteWitness w;
    w.induced = induced;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        w.parts.push_back(Bitset::of(g.order(), search.chosen[search.slot_of[i]]));
    return w;
}

Rat degree_density(const Graph& g, int v, const Bitset& w)
{
    if (w.empty())
        throw std::invalid_argument("degree_density: empty target set");
    return Rat(g.neighbors(v).count_and(w), w.count());
}

namespace {

bool embed_dfs(const Graph& host, const Graph& pattern, const std::vector<int>& order,
               std::size_t depth, std::vector<int>& image, Bitset& used)
{
    if (depth == order.size())
        return true;
    int pv = order[depth];
    Bitset cand = host.full_vertex_set();
    cand.setminus(used);
    for (std::size_t i = 0; i < depth; ++i)
        if (pattern.has_edge(pv, order[i]))
            cand &= host.neighbors(image[order[i]]);
    for (int hv = cand.first(); hv != -1; hv = cand.next(hv)) {
        image[pv] = hv;
        used.set(hv);
        if (embed_dfs(host, pattern, order, depth + 1, image, used))
            return true;
        used.reset(hv);
    }
    image[pv] = -1;
    return false;
}

} // namespace

std::optional<std::vector<int>> find_embedding(const Graph& host, const Graph& pattern)
{
    if (pattern.order() > host.order())
        return std::nullopt;
    // high-degree pattern vertices first; constrains candidates early
    std::vector<int> order(pattern.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    std::vector<int> image(pattern.order(), -1);
    Bitset used(host.order());
    if (!embed_dfs(host, pattern, order, 0, image, used))
        return std::nullopt;
    return image;
}

std::string check_book(const Graph& g, const BookWitness& w, int k, long long n)
{
    if (w.spine.universe() != g.order() || w.pages.universe() != g.order())
        return "witness universe does not match graph";
    if (w.spine.intersects(w.pages))
        return "spine and pages overlap";
    if (k >= 0 && w.spine.count() != k)
        return "spine size != k";
    auto spine = w.spine.to_vector();
    for (std::size_t i = 0; i < spine.size(); ++i)
        for (std::size_t j = i + 1; j < spine.size(); ++j)
            if (!g.has_edge(spine[i], spine[j]))
                return "spine is not a clique";
    for (int v = w.pages.first(); v != -1; v = w.pages.next(v))
        for (int s : spine)
            if (!g.has_edge(v, s))
                return "page not adjacent to whole spine";
    if (n >= 0 && w.total() < n)
        return "book has fewer than n vertices";
    return {};
}

std::string check_multipartite(const Graph& g, const MultipartiteWitness& w,
                               const std::vector<int>* sizes)
{
    if (w.parts.empty())
        return "no parts";
    Bitset seen(g.order());
    for (const auto& p : w.parts) {
        if (p.universe() != g.order())
            return "witness universe does not match graph";
        if (seen.intersects(p))
            return "parts are not pairwise disjoint";
        seen |= p;
    }
    if (sizes) {
        if (sizes->size() != w.parts.size())
            return "part count != requested";
        for (std::size_t i = 0; i < sizes->size(); ++i)
            if (w.parts[i].count() != (*sizes)[i])
                return "part size != requested";
    }
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        auto pi = w.parts[i].to_vector();
        if (w.induced)
            for (std::size_t a = 0; a < pi.size(); ++a)
                for (std::size_t b = a + 1; b < pi.size(); ++b)
                    if (g.has_edge(pi[a], pi[b]))
                        return "edge inside a part of an induced witness";
        for (std::size_t j = i + 1; j < w.parts.size(); ++j)
            for (int u : pi)
                for (int v = w.parts[j].first(); v != -1; v = w.parts[j].next(v))
                    if (!g.has_edge(u, v))
                        return "missing cross-part edge";
    }
    return {};
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g(n);
    if (n == 2)
        g.add_edge(0, 1);
    if (n >= 3)
        for (int v = 0; v < n; ++v)
            g.add_edge(v, (v + 1) % n);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_multipartite(const std::vector<int>& sizes)
{
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j)
            part_of[v++] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w])
                g.add_edge(u, w);
    return g;
}

Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

} // namespace rgl
