#ifndef FIRM_JSON_IO_HPP
#define FIRM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "firm/matrix.hpp"
#include "firm/rect.hpp"
#include "firm/solvers.hpp"
#include "firm/verdict.hpp"

namespace firm {

// All JSON output is 1-based, matching the text formats.

inline nlohmann::json json_position(const Position& p) {
    return nlohmann::json::array({p.row + 1, p.col + 1});
}

inline nlohmann::json json_positions(const std::vector<Position>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const Position& p : ps) a.push_back(json_position(p));
    return a;
}

inline nlohmann::json json_index_set(const std::vector<int>& ix) {
    nlohmann::json a = nlohmann::json::array();
    for (int i : ix) a.push_back(i + 1);
    return a;
}

inline nlohmann::json json_rectangle(const Rectangle& r) {
    return {{"rows", json_index_set(r.rows)}, {"cols", json_index_set(r.cols)}};
}

inline nlohmann::json json_certificate(const IsolationCertificate& c) {
    return {{"kind", "isolation"}, {"value", c.value}, {"positions", json_positions(c.positions)}};
}

inline nlohmann::json json_certificate(const CoverCertificate& c) {
    nlohmann::json rects = nlohmann::json::array();
    for (const Rectangle& r : c.rectangles) rects.push_back(json_rectangle(r));
    return {{"kind", "cover"}, {"value", c.value}, {"rectangles", rects}};
}

inline nlohmann::json json_witness(const Witness& w) {
    if (const auto* s = std::get_if<SubmatrixWitness>(&w)) {
        nlohmann::json j{{"type", "submatrix"},
                         {"rows", json_index_set(s->rows)},
                         {"cols", json_index_set(s->cols)}};
        if (!s->cycle.empty()) j["cycle"] = json_positions(s->cycle);
        return j;
    }
    if (const auto* h = std::get_if<HoleWitness>(&w))
        return {{"type", h->antihole ? "odd_antihole" : "odd_hole"},
                {"cycle", json_positions(h->cycle)}};
    if (const auto* e = std::get_if<PatternEmbedding>(&w))
        return {{"type", "embedding"},
                {"pattern", e->pattern},
                {"row_map", json_index_set(e->row_map)},
                {"col_map", json_index_set(e->col_map)}};
    const auto& v = std::get<ValueWitness>(w);
    return {{"type", "values"}, {"isolation", v.isolation}, {"boolean_rank", v.boolean_rank}};
}

inline nlohmann::json json_verdict(const std::string& property, const PropertyVerdict& v) {
    nlohmann::json j{{"property", property}, {"holds", v.holds}};
    j["witness"] = v.witness ? json_witness(*v.witness) : nlohmann::json(nullptr);
    return j;
}

} // namespace firm

#endif
