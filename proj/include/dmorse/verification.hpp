#ifndef DMORSE_VERIFICATION_HPP
#define DMORSE_VERIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmorse/forman.hpp"

namespace dmorse {

/// A two-step path alpha_0, beta_0, alpha_1 with (alpha_0, beta_0) first
/// paired at stage i >= 3 where alpha_1 is neither a head of the stage-i
/// field nor paired at a stage below i.
struct DichotomyViolation {
    enum class Status { paired_later, critical };

    LabeledGraph alpha0;
    LabeledGraph beta0;
    LabeledGraph alpha1;
    int stage;            // stage of (alpha0, beta0)
    Status status;
    int alpha1_stage;     // 0 when critical
    Role alpha1_role;     // meaningful only when paired_later
};

std::string to_string(DichotomyViolation::Status status);

/// Every two-step V-path out of a stage >= 3 arrow whose third simplex
/// escapes the "head of V_i or paired in V_{i-1}" dichotomy. Ordered by
/// (stage, alpha0, alpha1).
std::vector<DichotomyViolation> find_dichotomy_violations(const StagedVectorField& v);

struct NamedCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<NamedCheck> checks;
    bool passed() const;
};

/// The n = 5 configuration: alpha0 = {24,45,35} pairs with +(2,3) at stage 3,
/// alpha1 = beta0 - (2,4) is no stage-3 head and pairs with +(3,4) at stage 4.
CheckReport check_late_pairing_example();
CheckReport check_late_pairing_example(const StagedVectorField& v);

/// The n = 4 configuration: alpha0 = {24,34} pairs with +(2,3) at stage 3 and
/// both other faces of the head are critical.
CheckReport check_critical_face_example();
CheckReport check_critical_face_example(const StagedVectorField& v);

/// F = subgraph of alpha induced on {1..k-1}; H = component of alpha - E(F)
/// that contains k.
struct ForestSplit {
    LabeledGraph forest;
    VertexMask component;  // vertex set of H
    LabeledGraph component_graph;
};

ForestSplit split_at_stage(const LabeledGraph& alpha, int k);

struct PathInvariantReport {
    std::size_t paths = 0;             // maximal V-paths examined
    std::size_t starts = 0;            // stage >= 3 tails used as alpha_0
    std::size_t longest = 0;           // most arrows on one path
    std::size_t many_component_exits = 0;  // paths ended by a > 2 component alpha
    bool budget_exhausted = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Walks every V-path starting at a tail first paired at stage k >= 3 and
/// checks, while each alpha_i has two components: the subgraph induced on
/// {1..k-1} never changes, it is an increasing two-forest, and the stage-k
/// partner j stays in the component H_i of alpha_i - E(F) holding k. An
/// alpha with more than two components must be followed only by stage-2
/// heads. `max_paths` caps the number of complete paths.
PathInvariantReport check_path_invariants(const StagedVectorField& v,
                                        std::optional<std::size_t> max_paths = std::nullopt);

}  // namespace dmorse

#endif  // DMORSE_VERIFICATION_HPP
