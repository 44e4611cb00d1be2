#include "achr/json_io.hpp"

namespace achr {

using nlohmann::json;

json plane_to_json(const ProjectivePlane& plane) {
    json j;
    j["order"] = plane.order();
    j["lines"] = plane.lines();
    return j;
}

ProjectivePlane plane_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("lines")) {
        throw std::invalid_argument("plane JSON needs \"order\" and \"lines\"");
    }
    return ProjectivePlane(j.at("order").get<int>(),
                           j.at("lines").get<std::vector<std::vector<int>>>());
}

json plane_report_to_json(const ProjectivePlane& plane, const PlaneReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"description", c.description},
                          {"pass", c.pass},
                          {"witnesses", c.witnesses}});
    }
    return {{"order", plane.order()},
            {"points", plane.point_count()},
            {"lines", plane.line_count()},
            {"pass", report.all_pass()},
            {"checks", checks}};
}

json matrix_to_json(const ColourMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).label());
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"cells", rows}};
}

ColourMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("cells")) {
        throw std::invalid_argument("matrix JSON needs \"rows\", \"cols\" and \"cells\"");
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& cells = j.at("cells");
    if (!cells.is_array() || static_cast<int>(cells.size()) != rows) {
        throw std::invalid_argument("matrix JSON: \"cells\" must hold one array per row");
    }
    std::vector<Colour> flat;
    flat.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : cells) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument("matrix JSON: every row needs exactly \"cols\" labels");
        }
        for (const auto& label : row) flat.emplace_back(label.get<std::string>());
    }
    return ColourMatrix(rows, cols, std::move(flat));
}

json matrix_report_to_json(const MatrixReport& report) {
    auto duplicates = [](const std::vector<DuplicateWitness>& ws) {
        json out = json::array();
        for (const auto& w : ws) {
            out.push_back({{"line", w.line},
                           {"first", w.first},
                           {"second", w.second},
                           {"colour", w.colour.label()}});
        }
        return out;
    };
    json uncovered = json::array();
    for (const auto& [a, b] : report.uncovered_pairs) {
        uncovered.push_back({a.label(), b.label()});
    }
    return {{"mode", report.mode == Mode::Row ? "row" : "line"},
            {"proper_rows", report.proper_rows},
            {"proper_cols", report.proper_cols},
            {"complete", report.complete},
            {"colour_count", report.colour_count},
            {"row_duplicates", duplicates(report.row_duplicates)},
            {"col_duplicates", duplicates(report.col_duplicates)},
            {"uncovered_pairs", uncovered},
            {"pass", report.all_pass()}};
}

json bounds_report_to_json(const BoundsReport& report) {
    json j{{"p", report.p},
           {"q", report.q},
           {"lower", {{"value", report.lower.value}, {"rule", report.lower.rule}}},
           {"upper", {{"value", report.upper.value}, {"rule", report.upper.rule}}},
           {"exact", nullptr},
           {"construction_backed", report.construction_backed},
           {"notes", report.notes}};
    if (report.exact) j["exact"] = *report.exact;
    if (report.witness) j["witness"] = matrix_to_json(*report.witness);
    return j;
}

json exact_result_to_json(int p, int q, const ExactResult& result) {
    json j{{"p", p},
           {"q", q},
           {"value", result.value},
           {"completed", result.completed},
           {"nodes", result.nodes},
           {"witness", nullptr}};
    if (result.witness) j["witness"] = matrix_to_json(*result.witness);
    return j;
}

} // namespace achr
