#ifndef DMORSE_GRAPH_HPP
#define DMORSE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmorse {

/// Vertex labels are 1-based, as in the usual drawings of labelled graphs.
using Vertex = int;

/// Largest order representable by LabeledGraph (C(11,2) = 55 edge bits).
inline constexpr int kMaxGraphOrder = 11;

/// Largest order accepted by edge_index / edge_at.
inline constexpr int kMaxEdgeIndexOrder = 64;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of vertex pairs C(n, 2).
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// An undirected edge {i, j}; stored with i < j.
struct Edge {
    Vertex i = 0;
    Vertex j = 0;

    Edge() = default;
    /// Accepts the endpoints in either order; loops are rejected.
    Edge(Vertex a, Vertex b);

    auto operator<=>(const Edge&) const = default;
};

/// Colexicographic index of the pair (i, j), i < j <= n:
/// (j-1)(j-2)/2 + (i-1).
int edge_index(Vertex i, Vertex j, int n);
int edge_index(const Edge& e, int n);

/// Inverse of edge_index.
Edge edge_at(int index, int n);

/// Blocks of a vertex partition. Each block is sorted, blocks are ordered by
/// their smallest vertex.
struct ComponentPartition {
    std::vector<std::vector<Vertex>> blocks;

    std::size_t count() const { return blocks.size(); }
    /// Index of the block containing v, or -1.
    int block_of(Vertex v) const;
    bool operator==(const ComponentPartition&) const = default;
};

/// A simple labelled graph on {1..n} stored as an edge bit-vector in
/// colexicographic edge order. Graphs compare by (order, bit-vector read as
/// an unsigned integer), which is the canonical order used everywhere.
class LabeledGraph {
public:
    using Mask = std::uint64_t;

    explicit LabeledGraph(int order);
    LabeledGraph(int order, Mask edges);
    LabeledGraph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);
    LabeledGraph(int order, const std::vector<Edge>& edges);

    int order() const { return order_; }
    Mask mask() const { return edges_; }
    int edge_count() const;
    bool has_edge(const Edge& e) const;
    /// Edges sorted by edge_index.
    std::vector<Edge> edges() const;

    LabeledGraph add_edge(const Edge& e) const;
    LabeledGraph remove_edge(const Edge& e) const;

    /// `n=<order>;<i>-<j>,...` with edges ascending by edge_index.
    std::string to_string() const;
    static LabeledGraph parse(std::string_view text);

    auto operator<=>(const LabeledGraph&) const = default;
    bool operator==(const LabeledGraph&) const = default;

private:
    int order_;
    Mask edges_ = 0;
};

ComponentPartition components(const LabeledGraph& g);
bool is_disconnected(const LabeledGraph& g);
/// True iff u and v lie in the same connected component of g.
bool same_component(const LabeledGraph& g, Vertex u, Vertex v);

/// Vertex subset of {1..n}, bit (v-1) set for v in the subset.
using VertexMask = std::uint32_t;

VertexMask vertex_range_mask(Vertex first, Vertex last);

/// Subgraph induced on `vertices`, keeping original labels. The order is
/// unchanged; vertices outside the mask are isolated.
struct InducedSubgraph {
    LabeledGraph graph;
    VertexMask vertices;
};

InducedSubgraph induced_subgraph(const LabeledGraph& g, VertexMask vertices);

/// Two trees, 1 and 2 in different trees, labels increasing along every ray
/// from the roots 1 and 2.
bool is_increasing_two_forest(const LabeledGraph& g);

/// The same predicate restricted to the vertex set {1..m} of g; edges with an
/// endpoint above m are ignored.
bool is_increasing_two_forest_on_prefix(const LabeledGraph& g, int m);

}  // namespace dmorse

template <>
struct std::hash<dmorse::LabeledGraph> {
    std::size_t operator()(const dmorse::LabeledGraph& g) const noexcept {
        return std::hash<std::uint64_t>{}(g.mask() * 0x9E3779B97F4A7C15ull ^
                                          static_cast<std::uint64_t>(g.order()));
    }
};

#endif  // DMORSE_GRAPH_HPP
