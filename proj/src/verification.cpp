#include "dmorse/verification.hpp"

#include <algorithm>
#include <tuple>

namespace dmorse {

std::string to_string(DichotomyViolation::Status status) {
    return status == DichotomyViolation::Status::critical ? "critical" : "paired_later";
}

std::vector<DichotomyViolation> find_dichotomy_violations(const StagedVectorField& v) {
    const NComplex& k = v.complex();
    const DiscreteVectorField& field = v.field();
    std::vector<DichotomyViolation> out;
    for (const Arrow& arrow : field.arrows()) {
        const int i = arrow.stage.value_or(0);
        if (i < 3) continue;
        for (SimplexId alpha1 : k.faces(arrow.head)) {
            if (alpha1 == arrow.tail) continue;
            const int s = v.stage_of(alpha1);
            const bool head_of_vi = field.is_head(alpha1) && s <= i;
            const bool paired_before = s != 0 && s <= i - 1;
            if (head_of_vi || paired_before) continue;
            out.push_back({k.graph(arrow.tail), k.graph(arrow.head), k.graph(alpha1), i,
                           s == 0 ? DichotomyViolation::Status::critical : DichotomyViolation::Status::paired_later,
                           s, field.is_head(alpha1) ? Role::head : Role::tail});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.stage, a.alpha0, a.alpha1) < std::tie(b.stage, b.alpha0, b.alpha1);
    });
    return out;
}

bool CheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::string describe(const std::optional<PairRecord>& p) {
    if (!p) return "unpaired";
    return std::string(p->role == Role::tail ? "tail of " : "head of ") + p->partner.to_string() + " at stage " +
           std::to_string(p->stage);
}

NamedCheck expect_pair(const StagedVectorField& v, const std::string& name, const LabeledGraph& g,
                       const PairRecord& expected) {
    const auto actual = pair_of(v, g);
    return {name, actual == expected, g.to_string() + " is " + describe(actual)};
}

NamedCheck expect_critical(const StagedVectorField& v, const std::string& name, const LabeledGraph& g) {
    const auto actual = pair_of(v, g);
    return {name, !actual.has_value(), g.to_string() + " is " + describe(actual)};
}

void require_order(const StagedVectorField& v, int n, const char* what) {
    if (v.order() != n)
        throw std::invalid_argument(std::string(what) + " needs the field of order " + std::to_string(n));
}

}  // namespace

CheckReport check_late_pairing_example(const StagedVectorField& v) {
    require_order(v, 5, "late pairing example");
    const LabeledGraph alpha0(5, {{2, 4}, {4, 5}, {3, 5}});
    const LabeledGraph beta0 = alpha0.add_edge({2, 3});
    const LabeledGraph alpha1 = beta0.remove_edge({2, 4});
    const LabeledGraph beta1 = alpha1.add_edge({3, 4});

    CheckReport report{"late_pairing", {}};
    report.checks.push_back(expect_pair(v, "alpha0_pairs_beta0_at_stage_3", alpha0, {beta0, Role::tail, 3}));
    const auto p1 = pair_of(v, alpha1);
    const bool head_by_3 = p1 && p1->role == Role::head && p1->stage <= 3;
    report.checks.push_back({"alpha1_not_a_stage_3_head", !head_by_3, alpha1.to_string() + " is " + describe(p1)});
    report.checks.push_back(expect_pair(v, "alpha1_pairs_beta1_at_stage_4", alpha1, {beta1, Role::tail, 4}));
    return report;
}

CheckReport check_late_pairing_example() {
    const auto k = NComplex::enumerate(5);
    return check_late_pairing_example(build_forman_field(k));
}

CheckReport check_critical_face_example(const StagedVectorField& v) {
    require_order(v, 4, "critical face example");
    const LabeledGraph alpha0(4, {{2, 4}, {4, 3}});
    const LabeledGraph beta0 = alpha0.add_edge({2, 3});

    CheckReport report{"critical_faces", {}};
    report.checks.push_back(expect_pair(v, "alpha0_pairs_beta0_at_stage_3", alpha0, {beta0, Role::tail, 3}));
    report.checks.push_back(expect_critical(v, "face_without_24_is_critical", beta0.remove_edge({2, 4})));
    report.checks.push_back(expect_critical(v, "face_without_34_is_critical", beta0.remove_edge({3, 4})));
    return report;
}

CheckReport check_critical_face_example() {
    const auto k = NComplex::enumerate(4);
    return check_critical_face_example(build_forman_field(k));
}

ForestSplit split_at_stage(const LabeledGraph& alpha, int k) {
    if (k < 3 || k > alpha.order()) throw std::out_of_range("stage outside 3..n");
    const LabeledGraph forest = induced_subgraph(alpha, vertex_range_mask(1, k - 1)).graph;
    const LabeledGraph rest(alpha.order(), alpha.mask() & ~forest.mask());
    const auto parts = components(rest);
    const auto& block = parts.blocks[parts.block_of(k)];
    VertexMask h = 0;
    for (Vertex u : block) h |= VertexMask{1} << (u - 1);
    return {forest, h, induced_subgraph(rest, h).graph};
}

namespace {

class PathWalker {
public:
    PathWalker(const StagedVectorField& v, std::optional<std::size_t> budget, PathInvariantReport& report)
        : v_(v), k_(v.complex()), budget_(budget), report_(report) {}

    void start(const Arrow& arrow) {
        stage_ = *arrow.stage;
        const LabeledGraph tail = k_.graph(arrow.tail);
        const LabeledGraph added(k_.order(), k_.mask(arrow.head) & ~tail.mask());
        partner_ = added.edges().front().i;
        forest_ = split_at_stage(tail, stage_).forest;
        if (components(tail).count() != 2) fail("alpha_0 " + tail.to_string() + " does not have two components");
        if (!is_increasing_two_forest_on_prefix(forest_, stage_ - 1))
            fail("F = " + forest_.to_string() + " of " + tail.to_string() + " is not an increasing two-forest on 1.." +
                 std::to_string(stage_ - 1));
        ++report_.starts;
        visit(arrow.tail, 0);
    }

    bool out_of_budget() const { return report_.budget_exhausted; }

private:
    void fail(std::string msg) { report_.failures.push_back(std::move(msg)); }

    void finish(std::size_t arrows) {
        ++report_.paths;
        report_.longest = std::max(report_.longest, arrows);
        if (budget_ && report_.paths >= *budget_) report_.budget_exhausted = true;
    }

    void visit(SimplexId alpha, std::size_t depth) {
        if (report_.budget_exhausted) return;
        const LabeledGraph g = k_.graph(alpha);
        const std::size_t parts = components(g).count();
        const std::string where = " (alpha_" + std::to_string(depth) + " = " + g.to_string() + ", stage " +
                                  std::to_string(stage_) + ")";
        if (parts > 2) {
            if (!v_.field().is_tail(alpha)) {
                finish(depth);
                return;
            }
            const SimplexId beta = *v_.field().partner(alpha);
            if (v_.stage_of(alpha) != kEdgeOneTwoStage) fail("many-component alpha not paired by (1,2)" + where);
            ++report_.many_component_exits;
            for (SimplexId next : k_.faces(beta)) {
                if (next == alpha) continue;
                if (!(v_.field().is_head(next) && v_.stage_of(next) == kEdgeOneTwoStage))
                    fail("continuation " + k_.label(next) + " is not a stage-2 head" + where);
                finish(depth + 1);
            }
            return;
        }

        if (induced_subgraph(g, vertex_range_mask(1, stage_ - 1)).graph != forest_)
            fail("induced subgraph on 1.." + std::to_string(stage_ - 1) + " differs from F" + where);
        if (!((split_at_stage(g, stage_).component >> (partner_ - 1)) & 1u))
            fail("vertex " + std::to_string(partner_) + " left the component of " + std::to_string(stage_) + where);

        if (!v_.field().is_tail(alpha)) {
            finish(depth);
            return;
        }
        const SimplexId beta = *v_.field().partner(alpha);
        for (SimplexId next : k_.faces(beta)) {
            if (next == alpha) continue;
            visit(next, depth + 1);
            if (report_.budget_exhausted) return;
        }
    }

    const StagedVectorField& v_;
    const NComplex& k_;
    std::optional<std::size_t> budget_;
    PathInvariantReport& report_;
    int stage_ = 0;
    Vertex partner_ = 0;
    LabeledGraph forest_{3};
};

}  // namespace

PathInvariantReport check_path_invariants(const StagedVectorField& v, std::optional<std::size_t> max_paths) {
    PathInvariantReport report;
    PathWalker walker(v, max_paths, report);
    for (const Arrow& arrow : v.field().arrows()) {
        if (arrow.stage.value_or(0) < 3) continue;
        walker.start(arrow);
        if (walker.out_of_budget()) break;
    }
    return report;
}

}  // namespace dmorse
