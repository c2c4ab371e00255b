#ifndef DMORSE_MORSE_HPP
#define DMORSE_MORSE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmorse/complex.hpp"

namespace dmorse {

/// One pair (tail, head) of a discrete vector field, head one dimension up.
struct Arrow {
    SimplexId tail = kNoSimplex;
    SimplexId head = kNoSimplex;
    std::optional<int> stage;

    bool operator==(const Arrow&) const = default;
};

enum class Role { tail, head };

/// A collection of arrows on a complex with `complex_size` simplices. The
/// container accepts anything, including arrows that break the matching
/// conditions; validate_matching reports those. Lookups resolve to the first
/// arrow mentioning a simplex.
class DiscreteVectorField {
public:
    explicit DiscreteVectorField(std::size_t complex_size);

    void add(SimplexId tail, SimplexId head, std::optional<int> stage = std::nullopt);
    /// Drops every arrow that mentions s. Returns the number removed.
    std::size_t remove_involving(SimplexId s);
    /// Overwrites the stage of the arrow containing s.
    void set_stage(SimplexId s, std::optional<int> stage);

    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t complex_size() const { return slot_.size(); }

    const Arrow* arrow_of(SimplexId s) const;
    std::optional<SimplexId> partner(SimplexId s) const;
    bool is_paired(SimplexId s) const { return arrow_of(s) != nullptr; }
    bool is_tail(SimplexId s) const;
    bool is_head(SimplexId s) const;

private:
    void index(std::size_t arrow);
    void reindex();

    std::vector<Arrow> arrows_;
    std::vector<std::int32_t> slot_;
};

enum class ViolationKind {
    unknown_simplex,    // arrow names a simplex outside the complex
    not_a_face,         // condition (i): tail is not a proper subset of head
    wrong_codimension,  // condition (ii): dim(head) != dim(tail) + 1
    reused_simplex,     // condition (iii): a simplex occurs in two arrows
};

std::string to_string(ViolationKind kind);

struct MatchingViolation {
    ViolationKind kind;
    std::size_t arrow;  // index into DiscreteVectorField::arrows()
    std::string detail;
};

struct ValidationReport {
    std::vector<MatchingViolation> violations;
    bool ok() const { return violations.empty(); }
    std::size_t count(ViolationKind kind) const;
};

ValidationReport validate_matching(const FiniteComplex& k, const DiscreteVectorField& v);

class InvalidField : public std::invalid_argument {
public:
    explicit InvalidField(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// alpha_0, beta_0, alpha_1, ..., beta_k, alpha_{k+1}. At least one arrow is
/// always present.
class VPath {
public:
    explicit VPath(std::vector<SimplexId> simplices);

    const std::vector<SimplexId>& simplices() const { return simplices_; }
    /// Number of arrows used, k + 1.
    std::size_t arrow_count() const { return simplices_.size() / 2; }
    SimplexId alpha(std::size_t i) const { return simplices_.at(2 * i); }
    SimplexId beta(std::size_t i) const { return simplices_.at(2 * i + 1); }
    bool is_closed() const { return simplices_.front() == simplices_.back(); }

    bool operator==(const VPath&) const = default;

private:
    std::vector<SimplexId> simplices_;
};

/// Empty string when `path` is a V-path of `v`, otherwise the first defect.
std::string check_vpath(const FiniteComplex& k, const DiscreteVectorField& v, const VPath& path);

/// Digraph on the d-dimensional tails: alpha -> alpha' whenever alpha' is a
/// tail, a face of the head paired with alpha, and alpha' != alpha.
struct VDigraph {
    int dimension = 0;
    std::vector<SimplexId> nodes;                 // ascending
    std::vector<std::vector<SimplexId>> arcs;     // arcs[i] leaves nodes[i]
};

VDigraph v_digraph(const FiniteComplex& k, const DiscreteVectorField& v, int dim);

struct AcyclicityReport {
    bool acyclic = true;
    std::optional<VPath> witness;  // closed, present iff !acyclic
    int witness_dimension = 0;
};

/// Throws InvalidField if v is not a matching on k.
AcyclicityReport is_acyclic(const FiniteComplex& k, const DiscreteVectorField& v);

struct CriticalSimplex {
    SimplexId simplex;
    int dimension;
    bool paired_with_empty;  // a 0-simplex whose partner is the empty simplex
};

/// Nonempty unpaired simplices plus the 0-simplex paired with the empty simplex,
/// in id order.
std::vector<CriticalSimplex> critical_simplices(const FiniteComplex& k, const DiscreteVectorField& v);

/// Indices promised by the general observation on closed V-paths: with
/// beta_0 = alpha_0 + {x} and alpha_1 = beta_0 - {y}, the least i in
/// {2..k} with x not in alpha_i and the least j in {3..k+1} with y in alpha_j.
struct ClosedPathIndices {
    int x = 0;
    int y = 0;
    std::optional<std::size_t> i;
    std::optional<std::size_t> j;
    bool holds() const { return i.has_value() && j.has_value(); }
};

/// Throws std::invalid_argument unless gamma is a closed V-path of v.
ClosedPathIndices check_closed_path_indices(const FiniteComplex& k, const DiscreteVectorField& v,
                                            const VPath& gamma);

/// Modified Hasse diagram between dimensions d and d+1 in Graphviz syntax.
/// Matched pairs point up and are drawn bold; every other face relation
/// points down.
void write_dot(std::ostream& out, const FiniteComplex& k, const DiscreteVectorField& v, int dim);

}  // namespace dmorse

#endif  // DMORSE_MORSE_HPP
