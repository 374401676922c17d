#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfilter/filter.hpp"
#include "pfilter/tracing.hpp"

namespace pfilter {

/// Reachable tensor product of two filters. A pair (v, v') is a node exactly
/// when some common string reaches v in the left filter and v' in the right
/// one; only this reachable fragment is ever materialized. Nodes are stored
/// in BFS discovery order together with their discovery tree, which yields
/// shortest (then lexicographic) reaching strings.
struct ProductGraph {
    struct Node {
        std::string left;
        std::string right;
    };

    std::vector<Node> nodes;             // BFS discovery order
    std::vector<uint32_t> initial;       // indices into nodes
    std::map<std::pair<uint32_t, uint32_t>, SymbolSet> edges;
    SymbolSet alphabet;                  // shared symbols of the two factors

    // Discovery tree: parent node index (-1 for initial nodes) and the symbol
    // on the tree edge.
    std::vector<int64_t> parent;
    std::vector<Symbol> via;

    std::optional<uint32_t> find(std::string_view left, std::string_view right) const;
    ObservationString shortest_string_to(uint32_t node) const;

    /// The product viewed as a filter: every node becomes a state colored
    /// `fill`, node (v, v') is named "(v,v')".
    Filter as_filter(const Color& fill) const;
};

/// Forward-BFS reachable product; with differing alphabets only shared
/// symbols are followed.
ProductGraph tensor_product(const Filter& f, const Filter& g);

/// Disjoint union of the product graph (each node colored color_j) and a
/// (each state recolored color_a); the initial set is the union of both
/// initial sets. State ids are prefixed "J"/"A_" per side.
Filter union_graph(const ProductGraph& j, const Filter& a, const Color& color_j,
                   const Color& color_a);

}  // namespace pfilter
