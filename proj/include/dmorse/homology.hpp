#ifndef DMORSE_HOMOLOGY_HPP
#define DMORSE_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "dmorse/complex.hpp"
#include "dmorse/forman.hpp"
#include "dmorse/ncomplex.hpp"

namespace dmorse {

using BigInt = boost::multiprecision::cpp_int;

template <typename T>
struct Triplet {
    std::size_t row;
    std::size_t col;
    T value;
};

/// Boundary map from d-simplices (columns) to (d-1)-simplices (rows), both in
/// id order. The face obtained by dropping the k-th smallest element carries
/// sign (-1)^k. For d = 0 the single row is the empty simplex.
struct BoundaryMatrix {
    int dimension = 0;
    std::vector<SimplexId> row_simplices;
    std::vector<SimplexId> col_simplices;
    std::vector<Triplet<int>> entries;  // sorted by (col, row)

    std::size_t rows() const { return row_simplices.size(); }
    std::size_t cols() const { return col_simplices.size(); }
};

/// Ids of all simplices of one dimension, ascending.
std::vector<SimplexId> simplices_of_dimension(const FiniteComplex& k, int dim);

/// Throws std::out_of_range unless 0 <= d <= top dimension.
BoundaryMatrix boundary_matrix(const FiniteComplex& k, int d);

/// `row col value` lines, sorted by (col, row), 0-based positions.
void write_triplets(std::ostream& out, const BoundaryMatrix& m);

/// Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix given as
/// triplets (duplicates are summed). The count is the rank.
std::vector<BigInt> smith_normal_form(std::size_t rows, std::size_t cols, std::vector<Triplet<BigInt>> entries);
std::vector<BigInt> smith_normal_form(const std::vector<std::vector<long long>>& dense);

/// Reduced integral homology, one entry per dimension 0..top.
struct BettiReport {
    std::vector<std::size_t> simplex_counts;       // dimensions -1..top
    std::vector<std::size_t> boundary_ranks;       // rank of the boundary out of dimension d, d = 0..top
    std::vector<long long> betti;                  // reduced Betti numbers, d = 0..top
    std::vector<std::vector<BigInt>> torsion;      // invariants > 1, d = 0..top

    bool torsion_free() const;
    /// Same Betti numbers and torsion, ignoring trailing zero dimensions.
    bool same_homology(const BettiReport& other) const;
};

/// Largest order for which reduced_betti runs without an explicit override.
inline constexpr int kDefaultHomologyMaxOrder = 6;

BettiReport reduced_betti(const FiniteComplex& k);
/// Rejects orders above max_order with CapacityError.
BettiReport reduced_betti(const NComplex& k, int max_order = kDefaultHomologyMaxOrder);

class CensusShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Homology of a wedge of k spheres of dimension d, read off a census made of
/// one 0-cell and k d-cells. Throws CensusShapeError for any other shape.
BettiReport morse_predicted_betti(const CriticalCensus& census);

/// sum over d = -1..top of (-1)^d times the number of d-simplices.
long long reduced_euler_characteristic(const FiniteComplex& k);
long long reduced_euler_characteristic(const BettiReport& report);

}  // namespace dmorse

#endif  // DMORSE_HOMOLOGY_HPP
