#include "dmorse/field_io.hpp"

#include <algorithm>
#include <map>

namespace dmorse {

nlohmann::json field_to_json(const NComplex& k, const DiscreteVectorField& v) {
    std::vector<Arrow> arrows = v.arrows();
    std::sort(arrows.begin(), arrows.end(), [&k](const Arrow& a, const Arrow& b) {
        const int sa = a.stage.value_or(0), sb = b.stage.value_or(0);
        if (sa != sb) return sa < sb;
        return k.mask(a.tail) < k.mask(b.tail);
    });
    auto doc = nlohmann::json::array();
    for (const Arrow& a : arrows) {
        nlohmann::json item;
        item["tail"] = k.label(a.tail);
        item["head"] = k.label(a.head);
        item["stage"] = a.stage ? nlohmann::json(*a.stage) : nlohmann::json(nullptr);
        doc.push_back(std::move(item));
    }
    return doc;
}

DiscreteVectorField field_from_json(const NComplex& k, const nlohmann::json& doc) {
    if (!doc.is_array()) throw GraphError("field file must hold a JSON array");
    DiscreteVectorField field(k.size());
    std::map<LabeledGraph, SimplexId> outside;
    auto resolve = [&](const nlohmann::json& text) {
        if (!text.is_string()) throw GraphError("field entries need graph strings");
        const LabeledGraph g = LabeledGraph::parse(text.get<std::string>());
        if (g.order() != k.order())
            throw GraphError("field graph " + g.to_string() + " does not have order " + std::to_string(k.order()));
        if (auto id = k.find(g)) return *id;
        auto [it, inserted] =
            outside.emplace(g, static_cast<SimplexId>(k.size() + outside.size()));
        return it->second;
    };
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("tail") || !item.contains("head"))
            throw GraphError("field entries need \"tail\" and \"head\"");
        std::optional<int> stage;
        if (item.contains("stage") && !item["stage"].is_null()) stage = item["stage"].get<int>();
        field.add(resolve(item["tail"]), resolve(item["head"]), stage);
    }
    return field;
}

}  // namespace dmorse
