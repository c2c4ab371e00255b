#include "dmorse/morse.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace dmorse {

DiscreteVectorField::DiscreteVectorField(std::size_t complex_size) : slot_(complex_size, -1) {}

void DiscreteVectorField::index(std::size_t arrow) {
    const Arrow& a = arrows_[arrow];
    for (SimplexId s : {a.tail, a.head}) {
        if (s < 0 || static_cast<std::size_t>(s) >= slot_.size()) continue;
        if (slot_[s] < 0) slot_[s] = static_cast<std::int32_t>(arrow);
    }
}

void DiscreteVectorField::reindex() {
    std::fill(slot_.begin(), slot_.end(), -1);
    for (std::size_t a = 0; a < arrows_.size(); ++a) index(a);
}

void DiscreteVectorField::add(SimplexId tail, SimplexId head, std::optional<int> stage) {
    arrows_.push_back({tail, head, stage});
    index(arrows_.size() - 1);
}

std::size_t DiscreteVectorField::remove_involving(SimplexId s) {
    const auto before = arrows_.size();
    std::erase_if(arrows_, [s](const Arrow& a) { return a.tail == s || a.head == s; });
    reindex();
    return before - arrows_.size();
}

void DiscreteVectorField::set_stage(SimplexId s, std::optional<int> stage) {
    if (s < 0 || static_cast<std::size_t>(s) >= slot_.size() || slot_[s] < 0)
        throw std::out_of_range("set_stage: simplex is not paired");
    arrows_[slot_[s]].stage = stage;
}

const Arrow* DiscreteVectorField::arrow_of(SimplexId s) const {
    if (s < 0 || static_cast<std::size_t>(s) >= slot_.size() || slot_[s] < 0) return nullptr;
    return &arrows_[slot_[s]];
}

std::optional<SimplexId> DiscreteVectorField::partner(SimplexId s) const {
    const Arrow* a = arrow_of(s);
    if (!a) return std::nullopt;
    return a->tail == s ? a->head : a->tail;
}

bool DiscreteVectorField::is_tail(SimplexId s) const {
    const Arrow* a = arrow_of(s);
    return a && a->tail == s;
}

bool DiscreteVectorField::is_head(SimplexId s) const {
    const Arrow* a = arrow_of(s);
    return a && a->head == s;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::unknown_simplex: return "unknown_simplex";
        case ViolationKind::not_a_face: return "not_a_face";
        case ViolationKind::wrong_codimension: return "wrong_codimension";
        case ViolationKind::reused_simplex: return "reused_simplex";
    }
    return "?";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [kind](const auto& v) { return v.kind == kind; }));
}

ValidationReport validate_matching(const FiniteComplex& k, const DiscreteVectorField& v) {
    ValidationReport report;
    std::vector<std::int64_t> first_use(k.size(), -1);
    const auto& arrows = v.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Arrow& arrow = arrows[a];
        if (!k.contains(arrow.tail) || !k.contains(arrow.head)) {
            report.violations.push_back({ViolationKind::unknown_simplex, a,
                                         "arrow " + std::to_string(a) + " names a simplex outside the complex"});
            continue;
        }
        auto pair_text = [&] { return k.label(arrow.tail) + " -> " + k.label(arrow.head); };
        if (arrow.tail == arrow.head || !k.is_subset(arrow.tail, arrow.head))
            report.violations.push_back({ViolationKind::not_a_face, a, pair_text()});
        if (k.dimension(arrow.head) != k.dimension(arrow.tail) + 1)
            report.violations.push_back({ViolationKind::wrong_codimension, a, pair_text()});
        for (SimplexId s : {arrow.tail, arrow.head}) {
            if (first_use[s] < 0) {
                first_use[s] = static_cast<std::int64_t>(a);
            } else if (first_use[s] != static_cast<std::int64_t>(a)) {
                report.violations.push_back({ViolationKind::reused_simplex, a,
                                             k.label(s) + " already used by arrow " + std::to_string(first_use[s])});
            }
        }
    }
    return report;
}

InvalidField::InvalidField(ValidationReport report)
    : std::invalid_argument("discrete vector field violates the matching conditions (" +
                            std::to_string(report.violations.size()) + " violations)"),
      report_(std::move(report)) {}

VPath::VPath(std::vector<SimplexId> simplices) : simplices_(std::move(simplices)) {
    if (simplices_.size() < 3 || simplices_.size() % 2 == 0)
        throw std::invalid_argument("a V-path alternates alpha, beta and uses at least one arrow");
}

std::string check_vpath(const FiniteComplex& k, const DiscreteVectorField& v, const VPath& path) {
    for (SimplexId s : path.simplices())
        if (!k.contains(s)) return "simplex id " + std::to_string(s) + " outside the complex";
    const int d = k.dimension(path.alpha(0));
    for (std::size_t i = 0; i < path.arrow_count(); ++i) {
        const SimplexId a = path.alpha(i), b = path.beta(i), next = path.alpha(i + 1);
        const std::string at = " at step " + std::to_string(i);
        if (k.dimension(a) != d || k.dimension(next) != d) return "alpha dimension changes" + at;
        const Arrow* arrow = v.arrow_of(a);
        if (!arrow || arrow->tail != a || arrow->head != b) return "(alpha, beta) is not an arrow" + at;
        if (next == a) return "alpha repeats across beta" + at;
        if (!k.is_subset(next, b)) return "next alpha is not a face of beta" + at;
    }
    return {};
}

VDigraph v_digraph(const FiniteComplex& k, const DiscreteVectorField& v, int dim) {
    VDigraph g;
    g.dimension = dim;
    for (const Arrow& a : v.arrows())
        if (k.contains(a.tail) && k.dimension(a.tail) == dim) g.nodes.push_back(a.tail);
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
    g.arcs.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const SimplexId alpha = g.nodes[i];
        const SimplexId beta = *v.partner(alpha);
        for (SimplexId f : k.faces(beta))
            if (f != alpha && v.is_tail(f)) g.arcs[i].push_back(f);
    }
    return g;
}

namespace {

// Shortest cycle through `start` in the digraph (BFS), as a node sequence
// without the repeated endpoint.
std::vector<std::int32_t> shortest_cycle_through(std::int32_t start,
                                                 const std::vector<std::vector<std::int32_t>>& adj) {
    std::vector<std::int32_t> parent(adj.size(), -1);
    std::deque<std::int32_t> queue{start};
    std::vector<bool> seen(adj.size(), false);
    seen[start] = true;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : adj[u]) {
            if (w == start) {
                std::vector<std::int32_t> cycle;
                for (auto x = u; x != -1; x = parent[x]) cycle.push_back(x);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return {};
}

}  // namespace

AcyclicityReport is_acyclic(const FiniteComplex& k, const DiscreteVectorField& v) {
    if (auto report = validate_matching(k, v); !report.ok()) throw InvalidField(std::move(report));

    std::vector<int> dims;
    for (const Arrow& a : v.arrows()) dims.push_back(k.dimension(a.tail));
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    std::vector<std::int32_t> local(k.size(), -1);
    for (int d : dims) {
        const VDigraph g = v_digraph(k, v, d);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) local[g.nodes[i]] = static_cast<std::int32_t>(i);
        std::vector<std::vector<std::int32_t>> adj(g.nodes.size());
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            for (SimplexId t : g.arcs[i]) adj[i].push_back(local[t]);
        for (SimplexId s : g.nodes) local[s] = -1;

        enum : std::uint8_t { white, gray, black };
        std::vector<std::uint8_t> color(adj.size(), white);
        std::vector<std::pair<std::int32_t, std::size_t>> stack;
        for (std::int32_t root = 0; root < static_cast<std::int32_t>(adj.size()); ++root) {
            if (color[root] != white) continue;
            stack.push_back({root, 0});
            color[root] = gray;
            while (!stack.empty()) {
                auto& [u, next] = stack.back();
                if (next == adj[u].size()) {
                    color[u] = black;
                    stack.pop_back();
                    continue;
                }
                const auto w = adj[u][next++];
                if (color[w] == gray) {
                    const auto cycle = shortest_cycle_through(w, adj);
                    std::vector<SimplexId> seq;
                    for (auto node : cycle) {
                        seq.push_back(g.nodes[node]);
                        seq.push_back(*v.partner(g.nodes[node]));
                    }
                    seq.push_back(g.nodes[cycle.front()]);
                    return {false, VPath(std::move(seq)), d};
                }
                if (color[w] == white) {
                    color[w] = gray;
                    stack.push_back({w, 0});
                }
            }
        }
    }
    return {};
}

std::vector<CriticalSimplex> critical_simplices(const FiniteComplex& k, const DiscreteVectorField& v) {
    std::vector<CriticalSimplex> out;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
        const int d = k.dimension(s);
        if (d < 0) continue;
        const Arrow* a = v.arrow_of(s);
        if (!a) {
            out.push_back({s, d, false});
        } else if (d == 0 && a->head == s && k.contains(a->tail) && k.dimension(a->tail) == -1) {
            out.push_back({s, d, true});
        }
    }
    return out;
}

ClosedPathIndices check_closed_path_indices(const FiniteComplex& k, const DiscreteVectorField& v,
                                            const VPath& gamma) {
    if (auto defect = check_vpath(k, v, gamma); !defect.empty())
        throw std::invalid_argument("not a V-path: " + defect);
    if (!gamma.is_closed()) throw std::invalid_argument("V-path is not closed");

    const auto a0 = k.elements(gamma.alpha(0));
    const auto b0 = k.elements(gamma.beta(0));
    const auto a1 = k.elements(gamma.alpha(1));
    ClosedPathIndices out;
    std::vector<int> diff;
    std::set_difference(b0.begin(), b0.end(), a0.begin(), a0.end(), std::back_inserter(diff));
    out.x = diff.at(0);
    diff.clear();
    std::set_difference(a0.begin(), a0.end(), a1.begin(), a1.end(), std::back_inserter(diff));
    out.y = diff.at(0);

    auto has = [&k](SimplexId s, int e) {
        const auto el = k.elements(s);
        return std::binary_search(el.begin(), el.end(), e);
    };
    const std::size_t last = gamma.arrow_count() - 1;  // the path is alpha_0 .. alpha_{last+1}
    for (std::size_t i = 2; i <= last; ++i)
        if (!has(gamma.alpha(i), out.x)) {
            out.i = i;
            break;
        }
    for (std::size_t j = 3; j <= last + 1; ++j)
        if (has(gamma.alpha(j), out.y)) {
            out.j = j;
            break;
        }
    return out;
}

void write_dot(std::ostream& out, const FiniteComplex& k, const DiscreteVectorField& v, int dim) {
    out << "digraph vfield_dim" << dim << " {\n";
    out << "  rankdir=BT;\n";
    std::vector<SimplexId> lower, upper;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
        const int d = k.dimension(s);
        if (d == dim) lower.push_back(s);
        if (d == dim + 1) upper.push_back(s);
    }
    for (SimplexId s : lower) out << "  s" << s << " [label=\"" << k.label(s) << "\"];\n";
    for (SimplexId s : upper) out << "  s" << s << " [label=\"" << k.label(s) << "\", shape=box];\n";
    for (SimplexId b : upper) {
        for (SimplexId a : k.faces(b)) {
            const Arrow* arrow = v.arrow_of(a);
            if (arrow && arrow->tail == a && arrow->head == b) {
                out << "  s" << a << " -> s" << b << " [style=bold, color=red";
                if (arrow->stage) out << ", label=\"" << *arrow->stage << "\"";
                out << "];\n";
            } else {
                out << "  s" << b << " -> s" << a << ";\n";
            }
        }
    }
    out << "}\n";
}

}  // namespace dmorse
