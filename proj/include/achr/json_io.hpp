#ifndef ACHR_JSON_IO_HPP
#define ACHR_JSON_IO_HPP

#include "json.hpp"

#include "achr/bounds.hpp"
#include "achr/colouring.hpp"
#include "achr/plane.hpp"
#include "achr/solver.hpp"

namespace achr {

// Plane interchange: { "order": r, "lines": [[point indices]] }, points
// implicitly [1, r^2+r+1]. Line order and in-line point order are preserved.
nlohmann::json plane_to_json(const ProjectivePlane& plane);
ProjectivePlane plane_from_json(const nlohmann::json& j);

nlohmann::json plane_report_to_json(const ProjectivePlane& plane, const PlaneReport& report);

// Matrix interchange: { "rows": p, "cols": q, "cells": [[labels]] },
// row-major; structured colours serialize as "k:t".
nlohmann::json matrix_to_json(const ColourMatrix& m);
ColourMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json matrix_report_to_json(const MatrixReport& report);

nlohmann::json bounds_report_to_json(const BoundsReport& report);

nlohmann::json exact_result_to_json(int p, int q, const ExactResult& result);

} // namespace achr

#endif
