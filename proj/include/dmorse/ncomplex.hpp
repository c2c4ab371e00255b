#ifndef DMORSE_NCOMPLEX_HPP
#define DMORSE_NCOMPLEX_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "dmorse/complex.hpp"
#include "dmorse/graph.hpp"

namespace dmorse {

/// Largest order for which the complex of disconnected graphs is enumerated
/// explicitly (2^21 edge subsets at n = 7).
inline constexpr int kMaxComplexOrder = 7;

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a graph that is not a simplex is handed to a complex query.
class NotInComplex : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The complex of disconnected labelled graphs of order n. Simplices are
/// edge sets; a graph with d+1 edges is a d-simplex and the empty graph is
/// the unique (-1)-simplex. Ids run through the dimensions in increasing
/// order, and within a dimension in canonical graph order.
class NComplex final : public FiniteComplex {
public:
    static NComplex enumerate(int n);

    int order() const { return order_; }
    /// C(n-1, 2) - 1.
    int max_dimension() const { return static_cast<int>(dim_begin_.size()) - 3; }

    std::size_t count(int dim) const;
    /// Ids of all simplices of dimension dim, a contiguous range.
    SimplexId first_id(int dim) const;

    LabeledGraph graph(SimplexId s) const { return LabeledGraph(order_, masks_.at(s)); }
    LabeledGraph::Mask mask(SimplexId s) const { return masks_[s]; }
    std::optional<SimplexId> find(const LabeledGraph& g) const;
    std::optional<SimplexId> find_mask(LabeledGraph::Mask m) const;
    /// Throws NotInComplex when g is connected or of another order.
    SimplexId id_of(const LabeledGraph& g) const;
    bool contains_graph(const LabeledGraph& g) const { return find(g).has_value(); }

    std::vector<LabeledGraph> faces(const LabeledGraph& g) const;
    std::vector<LabeledGraph> cofaces(const LabeledGraph& g) const;
    std::vector<LabeledGraph> simplices(int dim) const;

    // FiniteComplex: elements are edge indices.
    std::size_t size() const override { return masks_.size(); }
    std::vector<int> elements(SimplexId s) const override;
    std::optional<SimplexId> find(std::span<const int> elements) const override;
    std::string label(SimplexId s) const override { return graph(s).to_string(); }
    int dimension(SimplexId s) const override;
    std::vector<SimplexId> faces(SimplexId s) const override;
    std::vector<SimplexId> cofaces(SimplexId s) const override;
    bool is_subset(SimplexId a, SimplexId b) const override;

private:
    explicit NComplex(int n) : order_(n) {}

    int order_;
    std::vector<LabeledGraph::Mask> masks_;
    std::vector<SimplexId> dim_begin_;  // dim_begin_[d + 1], one past the end at the back
    std::vector<SimplexId> id_of_mask_;  // dense over all 2^C(n,2) subsets
};

/// Edge-mask connectivity test used by enumeration.
bool is_connected_mask(LabeledGraph::Mask edges, int n);

}  // namespace dmorse

#endif  // DMORSE_NCOMPLEX_HPP
