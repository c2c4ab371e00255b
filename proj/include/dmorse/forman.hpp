#ifndef DMORSE_FORMAN_HPP
#define DMORSE_FORMAN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmorse/morse.hpp"
#include "dmorse/ncomplex.hpp"

namespace dmorse {

/// Stage label of the pairs that differ by the edge (1,2).
inline constexpr int kEdgeOneTwoStage = 2;

/// Something the staged construction expected never to see.
struct StageDiagnostic {
    enum class Kind { multiple_candidates, head_conflict };

    Kind kind;
    int stage;
    LabeledGraph graph;           // the tail being processed
    std::vector<Vertex> partners;  // j values with (j, stage) a candidate edge
    std::string message() const;
};

class FormanBuildError : public std::runtime_error {
public:
    explicit FormanBuildError(StageDiagnostic diag);
    const StageDiagnostic& diagnostic() const { return diag_; }

private:
    StageDiagnostic diag_;
};

struct BuildOptions {
    /// Throw on the first diagnostic instead of recording it and falling
    /// back to the smallest free candidate.
    bool strict = true;
    /// Run validate_matching on the partial field after every stage.
    bool validate_each_stage = true;
};

/// The staged matching on the complex of disconnected graphs: stage 2 toggles
/// the edge (1,2); stage i >= 3 toggles an edge (j,i), j < i, between two
/// vertices of the same component. Every arrow carries its stage. The
/// complex must outlive the field.
class StagedVectorField {
public:
    StagedVectorField(const NComplex& complex, DiscreteVectorField field,
                      std::vector<StageDiagnostic> diagnostics = {});

    const NComplex& complex() const { return *complex_; }
    const DiscreteVectorField& field() const { return field_; }
    DiscreteVectorField& mutable_field() { return field_; }
    const std::vector<StageDiagnostic>& diagnostics() const { return diagnostics_; }
    int order() const { return complex_->order(); }

    /// Stage of the arrow containing s, 0 when s is unpaired.
    int stage_of(SimplexId s) const;

private:
    const NComplex* complex_;
    DiscreteVectorField field_;
    std::vector<StageDiagnostic> diagnostics_;
};

StagedVectorField build_forman_field(const NComplex& k, const BuildOptions& options = {});

struct PairRecord {
    LabeledGraph partner;
    Role role;
    int stage;

    bool operator==(const PairRecord&) const = default;
};

/// Throws NotInComplex for graphs outside the complex.
std::optional<PairRecord> pair_of(const StagedVectorField& v, const LabeledGraph& g);

/// Graphs (including the empty graph) not paired by any stage <= i, in
/// canonical order. Throws std::out_of_range unless 2 <= i <= n.
std::vector<LabeledGraph> unpaired_after_stage(const StagedVectorField& v, int stage);

/// Two-tree spanning forests with roots 1 and 2 and labels increasing away
/// from the roots, built by attaching 3, 4, ..., n in turn to any smaller
/// vertex. Canonical order; (n-1)! of them.
std::vector<LabeledGraph> generate_increasing_forests(int n);

struct CriticalCensus {
    int order = 0;
    int complex_top_dimension = 0;
    std::vector<LabeledGraph> zero_cells;   // 0-simplices paired with the empty graph, or unpaired 0-simplices when n > 3
    std::vector<LabeledGraph> top_cells;    // unpaired (n-3)-simplices
    std::vector<CriticalSimplex> other_cells;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Sorts the critical simplices of v into the three groups and checks them
/// against the expected shape: the single 0-cell {(1,2)}, exactly the
/// increasing two-forests in dimension n-3, and nothing else.
CriticalCensus critical_census(const NComplex& k, const DiscreteVectorField& v);

}  // namespace dmorse

#endif  // DMORSE_FORMAN_HPP
