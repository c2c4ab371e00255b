#ifndef DMORSE_COMPLEX_HPP
#define DMORSE_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmorse {

/// Dense handle of a simplex inside one complex (0 .. size()-1).
using SimplexId = std::int32_t;

inline constexpr SimplexId kNoSimplex = -1;

/// Read-only view of a finite abstract simplicial complex that contains the
/// empty simplex. Simplices are sorted sets of integer elements; the discrete
/// Morse code only ever talks to a complex through this interface.
class FiniteComplex {
public:
    virtual ~FiniteComplex() = default;

    virtual std::size_t size() const = 0;
    /// Sorted elements of the simplex.
    virtual std::vector<int> elements(SimplexId s) const = 0;
    /// Id of the simplex with exactly these (sorted) elements, if present.
    virtual std::optional<SimplexId> find(std::span<const int> elements) const = 0;
    virtual std::string label(SimplexId s) const = 0;

    virtual int dimension(SimplexId s) const {
        return static_cast<int>(elements(s).size()) - 1;
    }
    /// Codimension-one faces, in order of the removed element.
    virtual std::vector<SimplexId> faces(SimplexId s) const;
    /// Codimension-one cofaces that belong to the complex.
    virtual std::vector<SimplexId> cofaces(SimplexId s) const = 0;
    /// a is a subset of b (not necessarily proper).
    virtual bool is_subset(SimplexId a, SimplexId b) const;

    bool contains(SimplexId s) const { return s >= 0 && static_cast<std::size_t>(s) < size(); }
    int top_dimension() const;
};

/// Explicitly listed complex, built as the down-closure of a set of simplices.
/// Used for small hand-made and randomly generated complexes.
class ExplicitComplex final : public FiniteComplex {
public:
    explicit ExplicitComplex(const std::vector<std::vector<int>>& generators);

    std::size_t size() const override { return simplices_.size(); }
    std::vector<int> elements(SimplexId s) const override { return simplices_.at(s); }
    std::optional<SimplexId> find(std::span<const int> elements) const override;
    std::string label(SimplexId s) const override;
    std::vector<SimplexId> cofaces(SimplexId s) const override;

    /// Id of a simplex that must exist; throws otherwise.
    SimplexId id(std::vector<int> elements) const;

private:
    std::vector<std::vector<int>> simplices_;
    std::map<std::vector<int>, SimplexId> index_;
    std::vector<std::vector<SimplexId>> cofaces_;
};

}  // namespace dmorse

#endif  // DMORSE_COMPLEX_HPP
