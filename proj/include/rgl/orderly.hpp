#pragma once

#include "rgl/graph.hpp"

#include <functional>

namespace rgl {

// Isomorph-free exhaustive generation of graphs on n vertices (n <= 12) by
// orderly augmentation: a graph is canonical when its graph6 bit string is
// maximal over all vertex relabelings, and deleting the last vertex of a
// canonical graph yields a canonical graph, so recursing over last-vertex
// neighborhoods visits every isomorphism class exactly once.
//
// prune(g, m) is called on each intermediate canonical graph on m vertices;
// returning false cuts that subtree (only sound for monotone properties,
// e.g. H-freeness). visit(g) is called on each canonical n-vertex graph;
// returning true stops the whole generation.
void for_each_graph_up_to_iso(int n,
                              const std::function<bool(const Graph&, int)>& prune,
                              const std::function<bool(const Graph&)>& visit);

// True iff g's graph6 bit string is maximal over all relabelings.
bool is_canonical_max(const Graph& g);

} // namespace rgl
