#pragma once

#include <string>

#include "json.hpp"

#include "ferrers/errors.hpp"
#include "ferrers/geometry.hpp"

namespace ferrers {

using Json = nlohmann::ordered_json;

// {"n", "rect": {"height", "width"}, "policy", "placements": [{"parts", "orientation", "row", "col"}]}
inline Json packing_to_json(const Packing& pk) {
    Json placements = Json::array();
    for (const auto& pl : pk.placements) {
        Json parts = Json::array();
        for (int x : pl.shape.parts())
            parts.push_back(x);
        placements.push_back(Json{{"parts", std::move(parts)},
                                  {"orientation", pl.orientation.index()},
                                  {"row", pl.row},
                                  {"col", pl.col}});
    }
    return Json{{"n", pk.n},
                {"rect", Json{{"height", pk.rect.height}, {"width", pk.rect.width}}},
                {"policy", std::string(to_string(pk.policy))},
                {"placements", std::move(placements)}};
}

inline Packing packing_from_json(const Json& j) {
    try {
        Packing pk;
        pk.n = j.at("n").get<int>();
        pk.rect.height = j.at("rect").at("height").get<Coord>();
        pk.rect.width = j.at("rect").at("width").get<Coord>();
        pk.policy = parse_policy(j.at("policy").get<std::string>());
        for (const auto& e : j.at("placements")) {
            Placement pl;
            pl.shape = Partition(e.at("parts").get<std::vector<int>>());
            pl.orientation = Orientation(e.at("orientation").get<int>());
            pl.row = e.at("row").get<Coord>();
            pl.col = e.at("col").get<Coord>();
            pk.placements.push_back(std::move(pl));
        }
        return pk;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed packing JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("malformed packing JSON: ") + e.what());
    }
}

inline std::string dump_packing(const Packing& pk, int indent = -1) {
    return packing_to_json(pk).dump(indent);
}

inline Packing parse_packing(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("packing JSON does not parse: ") + e.what());
    }
    return packing_from_json(j);
}

} // namespace ferrers
