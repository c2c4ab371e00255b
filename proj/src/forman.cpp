#include "dmorse/forman.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace dmorse {

namespace {

using Mask = LabeledGraph::Mask;

// Component label of every vertex (0-based) of the graph with edge mask m.
std::array<int, kMaxGraphOrder> component_labels(Mask m, int n) {
    std::array<int, kMaxGraphOrder> label{};
    for (int v = 0; v < n; ++v) label[v] = v;
    auto find = [&label](int x) {
        while (label[x] != x) x = label[x] = label[label[x]];
        return x;
    };
    for (; m != 0; m &= m - 1) {
        const Edge e = edge_at(std::countr_zero(m), n);
        const int a = find(e.i - 1), b = find(e.j - 1);
        if (a != b) label[std::max(a, b)] = std::min(a, b);
    }
    for (int v = 0; v < n; ++v) label[v] = find(v);
    return label;
}

std::string graph_list(const std::vector<LabeledGraph>& graphs) {
    std::string out;
    for (const auto& g : graphs) {
        if (!out.empty()) out += ' ';
        out += g.to_string();
    }
    return out;
}

}  // namespace

std::string StageDiagnostic::message() const {
    std::string out = kind == Kind::multiple_candidates ? "multiple unpaired candidates"
                                                        : "head conflict within stage";
    out += " at stage " + std::to_string(stage) + " for " + graph.to_string() + " (j in {";
    for (std::size_t k = 0; k < partners.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(partners[k]);
    }
    return out + "})";
}

FormanBuildError::FormanBuildError(StageDiagnostic diag)
    : std::runtime_error(diag.message()), diag_(std::move(diag)) {}

StagedVectorField::StagedVectorField(const NComplex& complex, DiscreteVectorField field,
                                     std::vector<StageDiagnostic> diagnostics)
    : complex_(&complex), field_(std::move(field)), diagnostics_(std::move(diagnostics)) {}

int StagedVectorField::stage_of(SimplexId s) const {
    const Arrow* a = field_.arrow_of(s);
    return a && a->stage ? *a->stage : 0;
}

StagedVectorField build_forman_field(const NComplex& k, const BuildOptions& options) {
    const int n = k.order();
    const Mask total = Mask{1} << pair_count(n);
    DiscreteVectorField field(k.size());
    std::vector<StageDiagnostic> diagnostics;
    std::vector<std::uint8_t> stage(k.size(), 0);  // 0 = unpaired so far

    auto pair_up = [&](SimplexId tail, SimplexId head, int s) {
        field.add(tail, head, s);
        stage[tail] = stage[head] = static_cast<std::uint8_t>(s);
    };
    auto report = [&](StageDiagnostic diag) {
        if (options.strict) throw FormanBuildError(std::move(diag));
        diagnostics.push_back(std::move(diag));
    };
    auto check_partial = [&](int s) {
        if (!options.validate_each_stage) return;
        if (auto r = validate_matching(k, field); !r.ok())
            throw std::logic_error("partial field after stage " + std::to_string(s) +
                                   " is not a matching: " + r.violations.front().detail);
    };

    // Stage 2: G <-> G + (1,2) whenever both are disconnected. Edge (1,2) has index 0.
    for (Mask m = 0; m < total; m += 2) {
        const auto tail = k.find_mask(m);
        const auto head = k.find_mask(m | 1u);
        if (tail && head) pair_up(*tail, *head, kEdgeOneTwoStage);
    }
    check_partial(kEdgeOneTwoStage);

    for (int i = 3; i <= n; ++i) {
        // Canonical order is the numeric order of edge masks.
        for (Mask m = 0; m < total; ++m) {
            const auto g = k.find_mask(m);
            if (!g || stage[*g] != 0) continue;
            const auto label = component_labels(m, n);
            std::vector<Vertex> partners;
            std::vector<SimplexId> heads;
            for (Vertex j = 1; j < i; ++j) {
                const Mask bit = Mask{1} << edge_index(j, i, n);
                if ((m & bit) || label[j - 1] != label[i - 1]) continue;
                const auto head = k.find_mask(m | bit);
                if (!head)
                    throw std::logic_error("adding an edge inside a component left the complex: " +
                                           LabeledGraph(n, m | bit).to_string());
                // Heads paired before this stage are out; those taken earlier in
                // this stage are still counted so that a clash gets reported.
                if (stage[*head] != 0 && stage[*head] != i) continue;
                partners.push_back(j);
                heads.push_back(*head);
            }
            if (partners.empty()) continue;
            if (partners.size() > 1)
                report({StageDiagnostic::Kind::multiple_candidates, i, LabeledGraph(n, m), partners});
            bool paired = false;
            for (std::size_t c = 0; c < heads.size() && !paired; ++c) {
                if (stage[heads[c]] == 0) {
                    pair_up(*g, heads[c], i);
                    paired = true;
                } else {
                    report({StageDiagnostic::Kind::head_conflict, i, LabeledGraph(n, m), {partners[c]}});
                }
            }
        }
        check_partial(i);
    }
    return StagedVectorField(k, std::move(field), std::move(diagnostics));
}

std::optional<PairRecord> pair_of(const StagedVectorField& v, const LabeledGraph& g) {
    const NComplex& k = v.complex();
    const SimplexId s = k.id_of(g);
    const Arrow* a = v.field().arrow_of(s);
    if (!a) return std::nullopt;
    const bool tail = a->tail == s;
    return PairRecord{k.graph(tail ? a->head : a->tail), tail ? Role::tail : Role::head, a->stage.value_or(0)};
}

std::vector<LabeledGraph> unpaired_after_stage(const StagedVectorField& v, int stage) {
    const NComplex& k = v.complex();
    if (stage < kEdgeOneTwoStage || stage > k.order())
        throw std::out_of_range("stage " + std::to_string(stage) + " outside 2.." + std::to_string(k.order()));
    std::vector<LabeledGraph> out;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
        const int st = v.stage_of(s);
        if (st == 0 || st > stage) out.push_back(k.graph(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabeledGraph> generate_increasing_forests(int n) {
    if (n < 3) throw GraphError("increasing two-forests need n >= 3");
    if (n > kMaxGraphOrder) throw GraphError("order too large for LabeledGraph");
    std::vector<LabeledGraph> out;
    // Vertex v attaches below any of 1..v-1; the parent is always smaller.
    auto extend = [&](auto&& self, Vertex v, Mask edges) -> void {
        if (v > n) {
            out.emplace_back(n, edges);
            return;
        }
        for (Vertex parent = 1; parent < v; ++parent)
            self(self, v + 1, edges | (Mask{1} << edge_index(parent, v, n)));
    };
    extend(extend, 3, 0);
    std::sort(out.begin(), out.end());
    return out;
}

CriticalCensus critical_census(const NComplex& k, const DiscreteVectorField& v) {
    CriticalCensus census;
    const int n = k.order();
    census.order = n;
    census.complex_top_dimension = k.max_dimension();
    const int top = n - 3;
    for (const auto& c : critical_simplices(k, v)) {
        if (c.paired_with_empty || (c.dimension == 0 && top != 0))
            census.zero_cells.push_back(k.graph(c.simplex));
        else if (c.dimension == top)
            census.top_cells.push_back(k.graph(c.simplex));
        else
            census.other_cells.push_back(c);
    }
    std::sort(census.zero_cells.begin(), census.zero_cells.end());
    std::sort(census.top_cells.begin(), census.top_cells.end());

    const LabeledGraph expected_zero(n, {{1, 2}});
    if (census.zero_cells != std::vector<LabeledGraph>{expected_zero})
        census.failures.push_back("expected the single 0-cell " + expected_zero.to_string() + ", found [" +
                                  graph_list(census.zero_cells) + "]");
    for (const auto& c : census.other_cells)
        census.failures.push_back("unexpected critical " + std::to_string(c.dimension) + "-simplex " +
                                  k.label(c.simplex));

    const auto forests = generate_increasing_forests(n);
    std::vector<LabeledGraph> missing, extra;
    std::set_difference(forests.begin(), forests.end(), census.top_cells.begin(), census.top_cells.end(),
                        std::back_inserter(missing));
    std::set_difference(census.top_cells.begin(), census.top_cells.end(), forests.begin(), forests.end(),
                        std::back_inserter(extra));
    for (const auto& g : missing) census.failures.push_back("increasing forest not critical: " + g.to_string());
    for (const auto& g : extra)
        census.failures.push_back("critical top simplex is not an increasing forest: " + g.to_string());
    return census;
}

}  // namespace dmorse
