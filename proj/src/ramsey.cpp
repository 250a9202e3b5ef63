#include "rgl/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

namespace rgl {

int pattern_order(const Pattern& p)
{
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CliquePattern>)
                return x.p;
            else if constexpr (std::is_same_v<T, BookPattern>)
                return x.n;
            else if constexpr (std::is_same_v<T, MultipartitePattern>)
                return std::accumulate(x.sizes.begin(), x.sizes.end(), 0);
            else
                return x.g.order();
        },
        p);
}

std::string pattern_str(const Pattern& p)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CliquePattern>)
                return "clique:" + std::to_string(x.p);
            else if constexpr (std::is_same_v<T, BookPattern>)
                return "book:" + std::to_string(x.k) + "," + std::to_string(x.n);
            else if constexpr (std::is_same_v<T, MultipartitePattern>) {
                std::string s = "multipartite:";
                for (std::size_t i = 0; i < x.sizes.size(); ++i)
                    s += (i ? "," : "") + std::to_string(x.sizes[i]);
                return s;
            } else
                return "g6:" + serialize_graph6(x.g);
        },
        p);
}

Pattern parse_pattern(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern must look like kind:args, got '" + s + "'");
    std::string kind = s.substr(0, colon);
    std::string args = s.substr(colon + 1);
    auto ints = [&]() {
        std::vector<int> out;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ','))
            out.push_back(std::stoi(tok));
        return out;
    };
    if (kind == "clique") {
        auto v = ints();
        if (v.size() != 1 || v[0] < 1)
            throw std::invalid_argument("clique pattern needs one size >= 1");
        return CliquePattern{v[0]};
    }
    if (kind == "book") {
        auto v = ints();
        if (v.size() != 2 || v[0] < 1 || v[1] < v[0])
            throw std::invalid_argument("book pattern needs k,n with n >= k >= 1");
        return BookPattern{v[0], v[1]};
    }
    if (kind == "multipartite") {
        auto v = ints();
        if (v.empty())
            throw std::invalid_argument("multipartite pattern needs part sizes");
        for (int x : v)
            if (x < 1)
                throw std::invalid_argument("multipartite part sizes must be >= 1");
        return MultipartitePattern{v};
    }
    if (kind == "g6")
        return GraphPattern{parse_graph6(args)};
    throw std::invalid_argument("unknown pattern kind '" + kind + "'");
}

bool contains_pattern(const Graph& host, const Pattern& p)
{
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CliquePattern>)
                return find_clique(host, x.p).has_value();
            else if constexpr (std::is_same_v<T, BookPattern>)
                return find_book(host, x.k, x.n).has_value();
            else if constexpr (std::is_same_v<T, MultipartitePattern>)
                return find_multipartite(host, x.sizes, false).has_value();
            else
                return find_embedding(host, x.g).has_value();
        },
        p);
}

std::optional<ContainmentWitness> find_pattern(const Graph& host, const Pattern& p)
{
    return std::visit(
        [&](const auto& x) -> std::optional<ContainmentWitness> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CliquePattern>) {
                if (auto c = find_clique(host, x.p))
                    return ContainmentWitness{*c};
            } else if constexpr (std::is_same_v<T, BookPattern>) {
                if (auto b = find_book(host, x.k, x.n))
                    return ContainmentWitness{*b};
            } else if constexpr (std::is_same_v<T, MultipartitePattern>) {
                if (auto m = find_multipartite(host, x.sizes, false))
                    return ContainmentWitness{*m};
            } else {
                if (auto e = find_embedding(host, x.g))
                    return ContainmentWitness{*e};
            }
            return std::nullopt;
        },
        p);
}

nlohmann::json containment_witness_json(const ContainmentWitness& w)
{
    return std::visit(
        [](const auto& x) -> nlohmann::json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Bitset>)
                return {{"type", "vertex_set"}, {"vertices", x.to_vector()}};
            else if constexpr (std::is_same_v<T, BookWitness>)
                return {{"type", "book"},
                        {"spine", x.spine.to_vector()},
                        {"pages", x.pages.to_vector()}};
            else if constexpr (std::is_same_v<T, MultipartiteWitness>) {
                nlohmann::json parts = nlohmann::json::array();
                for (const auto& p : x.parts)
                    parts.push_back(p.to_vector());
                return {{"type", "multipartite"}, {"induced", x.induced}, {"parts", parts}};
            } else
                return {{"type", "embedding"}, {"map", x}};
        },
        w);
}

ArrowResult arrows(const Graph& gamma, const ArrowingInstance& inst)
{
    if (gamma.order() != inst.n_vertices)
        throw std::invalid_argument("arrows: graph order != instance N");
    ArrowResult res;
    if (auto w = find_pattern(gamma, inst.g_pattern)) {
        res.arrows = true;
        res.witness = std::move(w);
        return res;
    }
    if (auto w = find_pattern(complement(gamma), inst.h_pattern)) {
        res.arrows = true;
        res.witness_in_complement = true;
        res.witness = std::move(w);
        return res;
    }
    return res;
}

namespace {

// DFS over edge variables in graph6 bit order. red = decided edges of Gamma,
// blue = decided edges of the complement, possible_* = decided plus all
// undecided. Pruning: a branch dies as soon as G sits inside decided red or
// H inside decided blue. Acceptance: if even possible_red lacks G we may set
// every undecided edge red (blue stays as decided, already H-free), and
// symmetrically. Symmetry breaking fixes vertex 0's row to the
// lexicographically least pattern among relabelings: once an edge (0,j) is
// red, all (0,j') with j' > j must be red.
struct DfsState {
    const Pattern& G;
    const Pattern& H;
    int N;
    Graph red, blue, possible_red, possible_blue;
    std::vector<std::pair<int, int>> edge_order;
    std::uint64_t nodes = 0;
    std::optional<Graph> found;

    DfsState(const Pattern& G_, const Pattern& H_, int N_)
        : G(G_), H(H_), N(N_), red(N_), blue(N_), possible_red(N_), possible_blue(N_)
    {
        for (int v = 1; v < N; ++v)
            for (int u = 0; u < v; ++u) {
                edge_order.emplace_back(u, v);
                possible_red.add_edge(u, v);
                possible_blue.add_edge(u, v);
            }
    }

    bool search(std::size_t idx)
    {
        ++nodes;
        if (contains_pattern(red, G) || contains_pattern(blue, H))
            return false;
        if (!contains_pattern(possible_red, G)) {
            found = possible_red;
            return true;
        }
        if (!contains_pattern(possible_blue, H)) {
            found = red;
            return true;
        }
        if (idx == edge_order.size()) {
            found = red; // fully decided, neither side contains its pattern
            return true;
        }
        auto [u, v] = edge_order[idx];
        bool must_be_red = (u == 0 && v >= 2 && red.has_edge(0, v - 1));
        if (!must_be_red) {
            blue.add_edge(u, v);
            possible_red.remove_edge(u, v);
            if (search(idx + 1))
                return true;
            blue.remove_edge(u, v);
            possible_red.add_edge(u, v);
        }
        red.add_edge(u, v);
        possible_blue.remove_edge(u, v);
        if (search(idx + 1))
            return true;
        red.remove_edge(u, v);
        possible_blue.add_edge(u, v);
        return false;
    }
};

Graph graph_from_code(int N, std::uint64_t code)
{
    Graph g(N);
    int bit = 0;
    for (int v = 1; v < N; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((code >> bit) & 1)
                g.add_edge(u, v);
    return g;
}

NonArrowingSearch exhaustive_scan(const Pattern& G, const Pattern& H, int N, int threads)
{
    long long nbits = static_cast<long long>(N) * (N - 1) / 2;
    if (nbits > 28)
        throw std::invalid_argument("exhaustive arrowing scan refused: C(N,2) > 28");
    std::uint64_t total = std::uint64_t{1} << nbits;

    threads = std::max(1, threads);
    std::atomic<std::uint64_t> best{~std::uint64_t{0}};
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t code = lo; code < hi; ++code) {
            if (code >= best.load(std::memory_order_relaxed))
                break; // everything past here is larger than the current best
            Graph g = graph_from_code(N, code);
            if (!contains_pattern(g, G) && !contains_pattern(complement(g), H)) {
                std::uint64_t cur = best.load();
                while (code < cur && !best.compare_exchange_weak(cur, code)) {
                }
                break;
            }
        }
    };
    if (threads == 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = chunk * t;
            std::uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi)
                pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }
    NonArrowingSearch res;
    if (best.load() != ~std::uint64_t{0}) {
        res.found = true;
        res.witness = graph_from_code(N, best.load());
        res.nodes_explored = best.load() + 1; // codes up to the decision point
    } else {
        res.witness = Graph(0);
        res.nodes_explored = total;
    }
    return res;
}

} // namespace

NonArrowingSearch find_non_arrowing(const Pattern& G, const Pattern& H, int N,
                                    SearchEngine engine, int threads)
{
    if (N < 0)
        throw std::invalid_argument("find_non_arrowing: negative N");
    if (engine == SearchEngine::exhaustive)
        return exhaustive_scan(G, H, N, threads);
    if (N > 10)
        throw std::invalid_argument("DFS arrowing search refused: N > 10");
    DfsState state(G, H, N);
    NonArrowingSearch res;
    res.found = state.search(0);
    res.nodes_explored = state.nodes;
    res.witness = res.found ? *state.found : Graph(0);
    return res;
}

RamseyResult exact_ramsey(const Pattern& G, const Pattern& H, SearchEngine engine, int threads)
{
    auto start = std::chrono::steady_clock::now();
    RamseyResult result;
    result.lower_bound_witness = Graph(0);
    for (int N = 1;; ++N) {
        auto search = find_non_arrowing(G, H, N, engine, threads);
        result.nodes_explored += search.nodes_explored;
        if (!search.found) {
            result.r = N;
            break;
        }
        result.lower_bound_witness = search.witness;
    }
    result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
}

int goodness_gap(int p, int k, int n)
{
    auto res = exact_ramsey(CliquePattern{p}, BookPattern{k, n});
    return res.r - ((p - 1) * (n - 1) + 1);
}

} // namespace rgl
