#include <json.hpp>

#include "gegwp/errors.hpp"
#include "gegwp/wpt.hpp"

namespace gegwp {

std::string tree_to_json(const WpTree& tree) {
    nlohmann::json j;
    j["J"] = tree.max_depth();
    auto& ls = j["leaves"] = nlohmann::json::array();
    for (const auto& n : tree.leaves()) ls.push_back({n.j, n.p});
    return j.dump();
}

WpTree tree_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("J") || !j.contains("leaves"))
        throw InvalidTree("malformed tree JSON");
    std::vector<WpNode> leaves;
    for (const auto& e : j["leaves"])
        leaves.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return WpTree(j["J"].get<int>(), std::move(leaves));
}

} // namespace gegwp
