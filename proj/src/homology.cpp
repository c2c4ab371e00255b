#include "dmorse/homology.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace dmorse {

std::vector<SimplexId> simplices_of_dimension(const FiniteComplex& k, int dim) {
    std::vector<SimplexId> out;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s)
        if (k.dimension(s) == dim) out.push_back(s);
    return out;
}

BoundaryMatrix boundary_matrix(const FiniteComplex& k, int d) {
    const int top = k.top_dimension();
    if (d < 0 || d > top)
        throw std::out_of_range("boundary dimension " + std::to_string(d) + " outside 0.." + std::to_string(top));
    BoundaryMatrix m;
    m.dimension = d;
    m.row_simplices = simplices_of_dimension(k, d - 1);
    m.col_simplices = simplices_of_dimension(k, d);
    std::map<SimplexId, std::size_t> row_pos;
    for (std::size_t r = 0; r < m.row_simplices.size(); ++r) row_pos.emplace(m.row_simplices[r], r);

    for (std::size_t c = 0; c < m.col_simplices.size(); ++c) {
        const auto elems = k.elements(m.col_simplices[c]);
        std::vector<int> face(elems.size() - 1);
        std::vector<Triplet<int>> column;
        for (std::size_t drop = 0; drop < elems.size(); ++drop) {
            std::copy(elems.begin(), elems.begin() + drop, face.begin());
            std::copy(elems.begin() + drop + 1, elems.end(), face.begin() + drop);
            const auto f = k.find(face);
            if (!f) throw std::logic_error("complex is not closed under faces at " + k.label(m.col_simplices[c]));
            column.push_back({row_pos.at(*f), c, drop % 2 == 0 ? 1 : -1});
        }
        std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
        m.entries.insert(m.entries.end(), column.begin(), column.end());
    }
    return m;
}

void write_triplets(std::ostream& out, const BoundaryMatrix& m) {
    for (const auto& e : m.entries) out << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

namespace {

// Exact Smith form of a small dense matrix by repeated division steps.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) {
                for (auto& d : diag) d = abs(d);
                return diag;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the rest of the block, otherwise fold the
            // offending row into the pivot row and go again.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(a[t][t]);
    }
    for (auto& d : diag) d = abs(d);
    return diag;
}

using Column = std::vector<std::pair<std::uint32_t, BigInt>>;

bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

}  // namespace

std::vector<BigInt> smith_normal_form(std::size_t rows, std::size_t cols, std::vector<Triplet<BigInt>> entries) {
    std::vector<Column> col(cols);
    {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
        for (auto& e : entries) {
            if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry outside the shape");
            auto& c = col[e.col];
            if (!c.empty() && c.back().first == e.row)
                c.back().second += e.value;
            else
                c.emplace_back(static_cast<std::uint32_t>(e.row), std::move(e.value));
        }
        for (auto& c : col) std::erase_if(c, [](const auto& p) { return p.second == 0; });
    }
    std::vector<std::set<std::uint32_t>> row_cols(rows);
    for (std::uint32_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[c]) row_cols[r].insert(c);

    // Unit-pivot elimination, sparsest column first. Columns without a unit
    // entry wait outside the queue until an update touches them.
    std::set<std::pair<std::size_t, std::uint32_t>> queue;
    std::vector<std::size_t> queued_key(cols, 0);
    auto requeue = [&](std::uint32_t c, std::size_t old_size) {
        if (old_size) queue.erase({old_size, c});
        queued_key[c] = 0;
        if (col[c].empty()) return;
        if (std::any_of(col[c].begin(), col[c].end(), [](const auto& p) { return is_unit(p.second); })) {
            queue.insert({col[c].size(), c});
            queued_key[c] = col[c].size();
        }
    };
    for (std::uint32_t c = 0; c < cols; ++c) requeue(c, 0);

    std::size_t unit_rank = 0;
    Column merged;
    while (!queue.empty()) {
        const std::uint32_t pc = queue.begin()->second;
        queue.erase(queue.begin());
        queued_key[pc] = 0;

        std::uint32_t pr = 0;
        BigInt pivot;
        std::size_t best = SIZE_MAX;
        for (const auto& [r, v] : col[pc])
            if (is_unit(v) && row_cols[r].size() < best) {
                best = row_cols[r].size();
                pr = r;
                pivot = v;
            }

        const std::vector<std::uint32_t> others(row_cols[pr].begin(), row_cols[pr].end());
        for (std::uint32_t oc : others) {
            if (oc == pc) continue;
            const auto it = std::lower_bound(col[oc].begin(), col[oc].end(), pr,
                                             [](const auto& p, std::uint32_t r) { return p.first < r; });
            const BigInt factor = it->second * pivot;  // pivot is its own inverse
            const std::size_t old_size = queued_key[oc];
            merged.clear();
            auto a = col[oc].begin(), ae = col[oc].end();
            auto b = col[pc].begin(), be = col[pc].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(std::move(*a++));
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, -factor * b->second);
                    row_cols[b->first].insert(oc);
                    ++b;
                } else {
                    BigInt v = a->second - factor * b->second;
                    if (v != 0)
                        merged.emplace_back(a->first, std::move(v));
                    else
                        row_cols[a->first].erase(oc);
                    ++a;
                    ++b;
                }
            }
            col[oc].swap(merged);
            requeue(oc, old_size);
        }
        for (const auto& [r, v] : col[pc]) row_cols[r].erase(pc);
        col[pc].clear();
        ++unit_rank;
    }

    std::vector<std::uint32_t> rest_cols, rest_rows;
    for (std::uint32_t c = 0; c < cols; ++c)
        if (!col[c].empty()) rest_cols.push_back(c);
    for (std::uint32_t r = 0; r < rows; ++r)
        if (!row_cols[r].empty()) rest_rows.push_back(r);

    std::vector<BigInt> invariants(unit_rank, BigInt(1));
    if (!rest_cols.empty()) {
        std::vector<std::vector<BigInt>> dense(rest_rows.size(), std::vector<BigInt>(rest_cols.size()));
        for (std::size_t j = 0; j < rest_cols.size(); ++j)
            for (const auto& [r, v] : col[rest_cols[j]]) {
                const auto i = std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin();
                dense[i][j] = v;
            }
        for (auto& d : dense_smith(std::move(dense))) invariants.push_back(std::move(d));
    }
    std::sort(invariants.begin(), invariants.end());
    return invariants;
}

std::vector<BigInt> smith_normal_form(const std::vector<std::vector<long long>>& dense) {
    std::vector<Triplet<BigInt>> entries;
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (dense[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            if (dense[i][j] != 0) entries.push_back({i, j, BigInt(dense[i][j])});
    }
    return smith_normal_form(rows, cols, std::move(entries));
}

bool BettiReport::torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool BettiReport::same_homology(const BettiReport& other) const {
    const std::size_t n = std::max(betti.size(), other.betti.size());
    for (std::size_t d = 0; d < n; ++d) {
        const long long a = d < betti.size() ? betti[d] : 0;
        const long long b = d < other.betti.size() ? other.betti[d] : 0;
        if (a != b) return false;
        static const std::vector<BigInt> none;
        const auto& ta = d < torsion.size() ? torsion[d] : none;
        const auto& tb = d < other.torsion.size() ? other.torsion[d] : none;
        if (ta != tb) return false;
    }
    return true;
}

BettiReport reduced_betti(const FiniteComplex& k) {
    const int top = k.top_dimension();
    BettiReport report;
    for (int d = -1; d <= top; ++d) report.simplex_counts.push_back(simplices_of_dimension(k, d).size());
    std::vector<std::vector<BigInt>> invariants;
    for (int d = 0; d <= top; ++d) {
        const BoundaryMatrix m = boundary_matrix(k, d);
        std::vector<Triplet<BigInt>> entries;
        entries.reserve(m.entries.size());
        for (const auto& e : m.entries) entries.push_back({e.row, e.col, BigInt(e.value)});
        invariants.push_back(smith_normal_form(m.rows(), m.cols(), std::move(entries)));
        report.boundary_ranks.push_back(invariants.back().size());
    }
    for (int d = 0; d <= top; ++d) {
        const std::size_t rank_out = report.boundary_ranks[d];
        const std::size_t rank_in = d < top ? report.boundary_ranks[d + 1] : 0;
        report.betti.push_back(static_cast<long long>(report.simplex_counts[d + 1]) -
                               static_cast<long long>(rank_out) - static_cast<long long>(rank_in));
        std::vector<BigInt> tors;
        if (d < top)
            for (const auto& inv : invariants[d + 1])
                if (inv > 1) tors.push_back(inv);
        report.torsion.push_back(std::move(tors));
    }
    return report;
}

BettiReport reduced_betti(const NComplex& k, int max_order) {
    if (k.order() > max_order)
        throw CapacityError("homology of order " + std::to_string(k.order()) + " exceeds the configured limit " +
                            std::to_string(max_order));
    return reduced_betti(static_cast<const FiniteComplex&>(k));
}

BettiReport morse_predicted_betti(const CriticalCensus& census) {
    if (!census.other_cells.empty())
        throw CensusShapeError("census has critical simplices outside dimensions 0 and n-3");
    if (census.zero_cells.size() != 1)
        throw CensusShapeError("census needs exactly one 0-cell, found " + std::to_string(census.zero_cells.size()));
    const int d = census.order - 3;
    BettiReport report;
    const int top = std::max(census.complex_top_dimension, d);
    report.betti.assign(top + 1, 0);
    report.torsion.assign(top + 1, {});
    report.betti[d] = static_cast<long long>(census.top_cells.size());
    return report;
}

long long reduced_euler_characteristic(const FiniteComplex& k) {
    long long chi = 0;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) chi += (k.dimension(s) % 2 == 0) ? 1 : -1;
    return chi;
}

long long reduced_euler_characteristic(const BettiReport& report) {
    long long chi = 0;
    for (std::size_t d = 0; d < report.betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * report.betti[d];
    return chi;
}

}  // namespace dmorse
