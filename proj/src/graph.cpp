#include "dmorse/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <queue>

namespace dmorse {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

void check_order(int n) {
    if (n < 1 || n > kMaxGraphOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxGraphOrder));
}

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw GraphError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    if (i < 1) throw GraphError("vertex labels start at 1");
}

int edge_index(Vertex i, Vertex j, int n) {
    if (n > kMaxEdgeIndexOrder) throw GraphError("order too large for edge_index");
    if (i < 1 || i >= j || j > n)
        throw GraphError("edge_index requires 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                         std::to_string(j) + ") with n=" + std::to_string(n));
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

int edge_index(const Edge& e, int n) { return edge_index(e.i, e.j, n); }

Edge edge_at(int index, int n) {
    if (index < 0 || index >= pair_count(n))
        throw GraphError("edge index " + std::to_string(index) + " out of range for n=" +
                         std::to_string(n));
    int j = 2;
    while ((j - 1) * j / 2 <= index) ++j;
    return Edge(index - (j - 1) * (j - 2) / 2 + 1, j);
}

int ComponentPartition::block_of(Vertex v) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) return static_cast<int>(b);
    return -1;
}

LabeledGraph::LabeledGraph(int order) : order_(order) { check_order(order); }

LabeledGraph::LabeledGraph(int order, Mask edges) : order_(order), edges_(edges) {
    check_order(order);
    const int bits = pair_count(order);
    if (bits < 64 && (edges >> bits) != 0)
        throw GraphError("edge mask has bits beyond C(n,2) for n=" + std::to_string(order));
}

LabeledGraph::LabeledGraph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : LabeledGraph(order) {
    for (auto [a, b] : edges) edges_ |= Mask{1} << edge_index(Edge(a, b), order_);
}

LabeledGraph::LabeledGraph(int order, const std::vector<Edge>& edges) : LabeledGraph(order) {
    for (const auto& e : edges) edges_ |= Mask{1} << edge_index(e, order_);
}

int LabeledGraph::edge_count() const { return std::popcount(edges_); }

bool LabeledGraph::has_edge(const Edge& e) const {
    return (edges_ >> edge_index(e, order_)) & 1u;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Mask m = edges_; m != 0; m &= m - 1) out.push_back(edge_at(std::countr_zero(m), order_));
    return out;
}

LabeledGraph LabeledGraph::add_edge(const Edge& e) const {
    if (has_edge(e))
        throw GraphError("add_edge: (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                         ") already present");
    return LabeledGraph(order_, edges_ | (Mask{1} << edge_index(e, order_)));
}

LabeledGraph LabeledGraph::remove_edge(const Edge& e) const {
    if (!has_edge(e))
        throw GraphError("remove_edge: (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                         ") not present");
    return LabeledGraph(order_, edges_ & ~(Mask{1} << edge_index(e, order_)));
}

std::string LabeledGraph::to_string() const {
    std::string out = "n=" + std::to_string(order_) + ";";
    bool first = true;
    for (const auto& e : edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(e.i) + "-" + std::to_string(e.j);
    }
    return out;
}

LabeledGraph LabeledGraph::parse(std::string_view text) {
    if (text.substr(0, 2) != "n=") throw GraphError("graph text must start with 'n='");
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw GraphError("graph text missing ';'");
    LabeledGraph g(parse_int(text.substr(2, semi - 2), "order"));
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) throw GraphError("malformed edge '" + std::string(item) + "'");
        const Edge e(parse_int(item.substr(0, dash), "vertex"), parse_int(item.substr(dash + 1), "vertex"));
        if (e.j > g.order()) throw GraphError("edge endpoint exceeds order");
        g = g.add_edge(e);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw GraphError("trailing ',' in graph text");
    }
    return g;
}

ComponentPartition components(const LabeledGraph& g) {
    const int n = g.order();
    UnionFind uf(n + 1);
    for (const auto& e : g.edges()) uf.unite(e.i, e.j);
    ComponentPartition part;
    std::vector<int> slot(n + 1, -1);
    for (Vertex v = 1; v <= n; ++v) {
        const int root = uf.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(part.blocks.size());
            part.blocks.emplace_back();
        }
        part.blocks[slot[root]].push_back(v);
    }
    return part;
}

bool is_disconnected(const LabeledGraph& g) { return components(g).count() >= 2; }

bool same_component(const LabeledGraph& g, Vertex u, Vertex v) {
    UnionFind uf(g.order() + 1);
    for (const auto& e : g.edges()) uf.unite(e.i, e.j);
    return uf.find(u) == uf.find(v);
}

VertexMask vertex_range_mask(Vertex first, Vertex last) {
    VertexMask m = 0;
    for (Vertex v = first; v <= last; ++v) m |= VertexMask{1} << (v - 1);
    return m;
}

InducedSubgraph induced_subgraph(const LabeledGraph& g, VertexMask vertices) {
    if (vertices == 0) throw GraphError("induced_subgraph: empty vertex set");
    if (g.order() < 32 && (vertices >> g.order()) != 0)
        throw GraphError("induced_subgraph: vertex outside 1..n");
    LabeledGraph::Mask kept = 0;
    for (const auto& e : g.edges()) {
        if (((vertices >> (e.i - 1)) & 1u) && ((vertices >> (e.j - 1)) & 1u))
            kept |= LabeledGraph::Mask{1} << edge_index(e, g.order());
    }
    return {LabeledGraph(g.order(), kept), vertices};
}

bool is_increasing_two_forest_on_prefix(const LabeledGraph& g, int m) {
    if (m < 2 || m > g.order()) return false;
    std::vector<std::vector<Vertex>> adj(m + 1);
    int edge_total = 0;
    for (const auto& e : g.edges()) {
        if (e.j > m) continue;
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
        ++edge_total;
    }
    // Two trees on m vertices have exactly m - 2 edges.
    if (edge_total != m - 2) return false;
    std::vector<Vertex> parent(m + 1, 0);
    int reached = 0;
    for (Vertex root : {1, 2}) {
        if (parent[root] != 0) return false;  // 1 and 2 share a tree
        parent[root] = root;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop();
            ++reached;
            for (Vertex w : adj[u]) {
                if (w == parent[u] && u != root) continue;
                if (parent[w] != 0) return false;  // cycle or shared tree
                if (w < u) return false;           // label decreases along the ray
                parent[w] = u;
                queue.push(w);
            }
        }
    }
    return reached == m;
}

bool is_increasing_two_forest(const LabeledGraph& g) {
    return is_increasing_two_forest_on_prefix(g, g.order());
}

}  // namespace dmorse
