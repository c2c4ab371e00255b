#include "dmorse/ncomplex.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dmorse {

namespace {

struct EdgeEndpoints {
    std::uint32_t bits[64];  // vertex bit mask of both endpoints (0-based vertices)
};

EdgeEndpoints endpoints_for(int n) {
    EdgeEndpoints t{};
    for (int k = 0; k < pair_count(n); ++k) {
        const Edge e = edge_at(k, n);
        t.bits[k] = (1u << (e.i - 1)) | (1u << (e.j - 1));
    }
    return t;
}

bool connected_with(const EdgeEndpoints& t, LabeledGraph::Mask edges, int n) {
    std::uint32_t adj[kMaxGraphOrder] = {};
    for (LabeledGraph::Mask m = edges; m != 0; m &= m - 1) {
        const std::uint32_t b = t.bits[std::countr_zero(m)];
        const int lo = std::countr_zero(b);
        const int hi = 31 - std::countl_zero(b);
        adj[lo] |= b;
        adj[hi] |= b;
    }
    const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

}  // namespace

bool is_connected_mask(LabeledGraph::Mask edges, int n) {
    return connected_with(endpoints_for(n), edges, n);
}

NComplex NComplex::enumerate(int n) {
    if (n < 3) throw GraphError("the complex of disconnected graphs needs order >= 3, got " + std::to_string(n));
    if (n > kMaxComplexOrder)
        throw CapacityError("order " + std::to_string(n) + " exceeds the enumeration capacity (max " +
                            std::to_string(kMaxComplexOrder) + ")");
    NComplex k(n);
    const int bits = pair_count(n);
    const auto table = endpoints_for(n);
    const LabeledGraph::Mask total = LabeledGraph::Mask{1} << bits;

    // A disconnected graph has at most C(n-1, 2) edges.
    const int max_edges = pair_count(n - 1);
    std::vector<std::vector<LabeledGraph::Mask>> buckets(max_edges + 1);
    for (LabeledGraph::Mask m = 0; m < total; ++m) {
        const int e = std::popcount(m);
        if (e > max_edges) continue;
        if (!connected_with(table, m, n)) buckets[e].push_back(m);
    }

    k.id_of_mask_.assign(total, kNoSimplex);
    for (const auto& bucket : buckets) {
        k.dim_begin_.push_back(static_cast<SimplexId>(k.masks_.size()));
        for (auto m : bucket) {
            k.id_of_mask_[m] = static_cast<SimplexId>(k.masks_.size());
            k.masks_.push_back(m);
        }
    }
    k.dim_begin_.push_back(static_cast<SimplexId>(k.masks_.size()));
    return k;
}

std::size_t NComplex::count(int dim) const {
    if (dim < -1 || dim > max_dimension()) return 0;
    return static_cast<std::size_t>(dim_begin_[dim + 2] - dim_begin_[dim + 1]);
}

SimplexId NComplex::first_id(int dim) const {
    if (dim < -1 || dim > max_dimension()) throw std::out_of_range("dimension out of range");
    return dim_begin_[dim + 1];
}

std::optional<SimplexId> NComplex::find_mask(LabeledGraph::Mask m) const {
    if (m >= id_of_mask_.size()) return std::nullopt;
    const SimplexId id = id_of_mask_[m];
    if (id == kNoSimplex) return std::nullopt;
    return id;
}

std::optional<SimplexId> NComplex::find(const LabeledGraph& g) const {
    if (g.order() != order_) return std::nullopt;
    return find_mask(g.mask());
}

SimplexId NComplex::id_of(const LabeledGraph& g) const {
    if (auto id = find(g)) return *id;
    throw NotInComplex("graph " + g.to_string() + " is not a simplex of the complex of order " +
                       std::to_string(order_));
}

std::vector<LabeledGraph> NComplex::faces(const LabeledGraph& g) const {
    std::vector<LabeledGraph> out;
    for (SimplexId f : faces(id_of(g))) out.push_back(graph(f));
    return out;
}

std::vector<LabeledGraph> NComplex::cofaces(const LabeledGraph& g) const {
    std::vector<LabeledGraph> out;
    for (SimplexId c : cofaces(id_of(g))) out.push_back(graph(c));
    return out;
}

std::vector<LabeledGraph> NComplex::simplices(int dim) const {
    std::vector<LabeledGraph> out;
    if (count(dim) == 0) return out;
    for (SimplexId s = first_id(dim); s < dim_begin_[dim + 2]; ++s) out.push_back(graph(s));
    return out;
}

std::vector<int> NComplex::elements(SimplexId s) const {
    std::vector<int> out;
    for (auto m = masks_.at(s); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::optional<SimplexId> NComplex::find(std::span<const int> elements) const {
    LabeledGraph::Mask m = 0;
    for (int e : elements) {
        if (e < 0 || e >= pair_count(order_)) return std::nullopt;
        m |= LabeledGraph::Mask{1} << e;
    }
    if (static_cast<std::size_t>(std::popcount(m)) != elements.size()) return std::nullopt;
    return find_mask(m);
}

int NComplex::dimension(SimplexId s) const { return std::popcount(masks_.at(s)) - 1; }

std::vector<SimplexId> NComplex::faces(SimplexId s) const {
    std::vector<SimplexId> out;
    const auto m = masks_.at(s);
    for (auto rest = m; rest != 0; rest &= rest - 1)
        out.push_back(id_of_mask_[m & ~(rest & (~rest + 1))]);
    return out;
}

std::vector<SimplexId> NComplex::cofaces(SimplexId s) const {
    std::vector<SimplexId> out;
    const auto m = masks_.at(s);
    for (int k = 0; k < pair_count(order_); ++k) {
        const auto bit = LabeledGraph::Mask{1} << k;
        if (m & bit) continue;
        if (const SimplexId c = id_of_mask_[m | bit]; c != kNoSimplex) out.push_back(c);
    }
    return out;
}

bool NComplex::is_subset(SimplexId a, SimplexId b) const {
    return (masks_.at(a) & ~masks_.at(b)) == 0;
}

}  // namespace dmorse
