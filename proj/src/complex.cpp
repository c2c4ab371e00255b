#include "dmorse/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dmorse {

std::vector<SimplexId> FiniteComplex::faces(SimplexId s) const {
    const auto elems = elements(s);
    std::vector<SimplexId> out;
    out.reserve(elems.size());
    std::vector<int> face(elems.size() > 0 ? elems.size() - 1 : 0);
    for (std::size_t k = 0; k < elems.size(); ++k) {
        std::copy(elems.begin(), elems.begin() + k, face.begin());
        std::copy(elems.begin() + k + 1, elems.end(), face.begin() + k);
        if (auto id = find(face)) out.push_back(*id);
    }
    return out;
}

bool FiniteComplex::is_subset(SimplexId a, SimplexId b) const {
    const auto ea = elements(a);
    const auto eb = elements(b);
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

int FiniteComplex::top_dimension() const {
    int top = -1;
    for (SimplexId s = 0; static_cast<std::size_t>(s) < size(); ++s) top = std::max(top, dimension(s));
    return top;
}

ExplicitComplex::ExplicitComplex(const std::vector<std::vector<int>>& generators) {
    // Ordered by (dimension, elements) so ids are deterministic.
    auto by_dim = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    };
    std::set<std::vector<int>, decltype(by_dim)> closure(by_dim);
    for (auto g : generators) {
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw std::invalid_argument("simplex with repeated element");
        if (g.size() > 20) throw std::invalid_argument("generator too large to close");
        const std::uint32_t subsets = 1u << g.size();
        for (std::uint32_t m = 0; m < subsets; ++m) {
            std::vector<int> sub;
            for (std::size_t k = 0; k < g.size(); ++k)
                if ((m >> k) & 1u) sub.push_back(g[k]);
            closure.insert(std::move(sub));
        }
    }
    closure.insert(std::vector<int>{});
    simplices_.assign(closure.begin(), closure.end());
    for (std::size_t s = 0; s < simplices_.size(); ++s)
        index_.emplace(simplices_[s], static_cast<SimplexId>(s));
    cofaces_.resize(simplices_.size());
    for (std::size_t s = 0; s < simplices_.size(); ++s)
        for (SimplexId f : FiniteComplex::faces(static_cast<SimplexId>(s)))
            cofaces_[f].push_back(static_cast<SimplexId>(s));
}

std::optional<SimplexId> ExplicitComplex::find(std::span<const int> elements) const {
    auto it = index_.find(std::vector<int>(elements.begin(), elements.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string ExplicitComplex::label(SimplexId s) const {
    std::string out = "{";
    const auto& e = simplices_.at(s);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(e[k]);
    }
    return out + "}";
}

std::vector<SimplexId> ExplicitComplex::cofaces(SimplexId s) const { return cofaces_.at(s); }

SimplexId ExplicitComplex::id(std::vector<int> elements) const {
    std::sort(elements.begin(), elements.end());
    if (auto found = find(elements)) return *found;
    throw std::out_of_range("simplex not in complex");
}

}  // namespace dmorse
