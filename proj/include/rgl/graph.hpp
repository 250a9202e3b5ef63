#pragma once

#include "rgl/bitset.hpp"
#include "rgl/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rgl {

// Undirected simple graph with bitset adjacency rows. Immutable in spirit:
// mutation happens during construction, after which graphs are shared
// read-only.
class Graph {
public:
    static constexpr int max_vertices = 4096;

    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n))
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    void add_edge(int u, int v)
    {
        if (u == v)
            throw std::invalid_argument("loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v)
    {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const
    {
        long long total = 0;
        for (int v = 0; v < n_; ++v)
            total += degree(v);
        return total / 2;
    }
    int min_degree() const
    {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    Bitset full_vertex_set() const
    {
        Bitset b(n_);
        b.fill();
        return b;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Book in some ambient graph: spine is a clique, every page vertex is
// adjacent to the whole spine, pages disjoint from spine. Engines that find
// books in the complement validate against the complement graph.
struct BookWitness {
    Bitset spine;
    Bitset pages;
    int total() const { return spine.count() + pages.count(); }
};

struct MultipartiteWitness {
    std::vector<Bitset> parts;
    bool induced = false;
};

struct Graph6Error : std::runtime_error {
    Graph6Error(std::size_t offset_, const std::string& what_)
        : std::runtime_error("graph6: " + what_ + " at byte " + std::to_string(offset_)),
          offset(offset_)
    {
    }
    std::size_t offset;
};

Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// {"n": int, "edges": [[u,v],...]} with u < v sorted lexicographically.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph complement(const Graph& g);

// Vertices relabeled 0..|s|-1 preserving the order of s.
Graph induced_subgraph(const Graph& g, const Bitset& s);

std::optional<Bitset> find_clique(const Graph& g, int p);

// Independent set of the requested size whose vertices all lie in `within`.
std::optional<Bitset> find_independent_set(const Graph& g, const Bitset& within, int size);

// B_{k,n} as a subgraph: spine = lexicographically least k-clique with at
// least n-k common neighbors; pages = the full common neighborhood.
std::optional<BookWitness> find_book(const Graph& g, int k, long long n);

std::optional<MultipartiteWitness>
find_multipartite(const Graph& g, const std::vector<int>& sizes, bool induced);

// |N(v) cap w| / |w|, exact.
Rat degree_density(const Graph& g, int v, const Bitset& w);

// Generic non-induced subgraph embedding; map[i] = host vertex for pattern
// vertex i. Used for explicit arrowing patterns.
std::optional<std::vector<int>> find_embedding(const Graph& host, const Graph& pattern);

// Witness checkers: empty string if the witness is valid against g, else the
// violated clause. These are the only checks the `validate` subcommand uses.
std::string check_book(const Graph& g, const BookWitness& w, int k = -1, long long n = -1);
std::string check_multipartite(const Graph& g, const MultipartiteWitness& w,
                               const std::vector<int>* sizes = nullptr);

// Named small graphs used across tests and docs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph petersen_graph();

} // namespace rgl
