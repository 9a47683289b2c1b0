#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cuboid/correspondence.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/face_cuboid.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/rational.hpp"

// JSON and CSV record builders. All rationals render as exact "p/q" strings;
// field order is fixed so identical inputs give identical bytes.

namespace cuboid {

using Json = nlohmann::ordered_json;

inline Json point_json(const CurvePoint& p) {
    if (p.is_identity())
        return Json{{"identity", true}};
    return Json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

inline Json pair_a_json(const PairA& p) {
    return Json{{"s", to_string(p.s())}, {"alpha", to_string(p.alpha())}};
}

inline Json triple_a_json(const TripleA& a) {
    return Json{{"s", to_string(a.s())},
                {"alpha", to_string(a.alpha())},
                {"beta", to_string(a.beta())}};
}

inline Json pair_b_json(const PairB& q) {
    return Json{{"t", to_string(q.t())}, {"gamma", to_string(q.gamma())}};
}

inline Json triple_b_json(const TripleB& b) {
    return Json{{"t", to_string(b.t())},
                {"gamma", to_string(b.gamma())},
                {"delta", to_string(b.delta())}};
}

// The cuboid-class record: the canonical box, its diagonals, the reported
// third-diagonal status and the primitive integer edges (decimal strings;
// they outgrow 64-bit fast).
inline Json cuboid_class_json(const CuboidClass& cls) {
    FaceCuboid box = cuboid_from_pair_b(cls.canonical());
    Json edges = Json::array({to_string(box.bf), to_string(box.ef), to_string(box.gf)});
    Json diagonals = Json::array({to_string(box.be), to_string(box.hf)});
    Json primitive = Json::array();
    for (const Integer& e : cls.primitive_edges())
        primitive.push_back(e.get_str());
    return Json{{"edges", edges},
                {"face_diagonals", diagonals},
                {"space_diagonal", to_string(box.df)},
                {"third_diagonal_rational", third_diagonal_rational(box)},
                {"canonical_t", to_string(cls.canonical().t())},
                {"canonical_gamma", to_string(cls.canonical().gamma())},
                {"primitive_edges", primitive}};
}

inline Json hit_json(const IntegerCuboidHit& hit) {
    Json diagonals = Json::array();
    for (const auto& d : hit.rational_diagonals)
        diagonals.push_back(Json::array({d[0], d[1], d[2]}));
    Json out{{"edges", Json::array({hit.edges[0], hit.edges[1], hit.edges[2]})},
             {"rational_diagonals", diagonals}};
    if (hit.space_diagonal)
        out["space_diagonal"] = *hit.space_diagonal;
    else
        out["space_diagonal"] = nullptr;
    return out;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            row += ',';
        row += csv_escape(fields[i]);
    }
    row += '\n';
    return row;
}

// Flattens one JSON record (scalars, arrays of scalars, one level of nested
// objects) into header/value column lists.
inline void flatten_record(const Json& record, std::vector<std::string>& header,
                           std::vector<std::string>& values) {
    auto add_scalar = [&](const std::string& key, const Json& value) {
        header.push_back(key);
        if (value.is_string())
            values.push_back(value.get<std::string>());
        else if (value.is_null())
            values.push_back("");
        else
            values.push_back(value.dump());
    };
    for (const auto& [key, value] : record.items()) {
        if (value.is_array()) {
            std::size_t index = 0;
            for (const auto& entry : value) {
                if (entry.is_array()) {
                    std::size_t inner = 0;
                    for (const auto& piece : entry)
                        add_scalar(key + "_" + std::to_string(index) + "_" +
                                       std::to_string(inner++),
                                   piece);
                } else {
                    add_scalar(key + "_" + std::to_string(index), entry);
                }
                ++index;
            }
        } else if (value.is_object()) {
            for (const auto& [inner_key, inner_value] : value.items())
                add_scalar(key + "_" + inner_key, inner_value);
        } else {
            add_scalar(key, value);
        }
    }
}

}  // namespace cuboid
