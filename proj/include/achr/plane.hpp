#ifndef ACHR_PLANE_HPP
#define ACHR_PLANE_HPP

#include <string>
#include <vector>

#include "achr/errors.hpp"
#include "achr/gf.hpp"

namespace achr {

/// Point-line incidence structure with 1-based point and line indices.
///
/// Lines are stored as sequences: the order of points inside a line and the
/// order of lines are both part of the labelling, because the matrix
/// constructions read rows straight off the stored sequences. The canonical
/// construction (plane_construct) emits every line in ascending point order;
/// imported structures keep whatever order they declare.
class ProjectivePlane {
public:
    /// Structure with points implicitly [1, order^2+order+1].
    ProjectivePlane(int order, std::vector<std::vector<int>> lines);

    /// Structure over an explicit point universe [1, point_count]; used to
    /// feed the verifier arbitrary incidence structures.
    ProjectivePlane(int order, int point_count, std::vector<std::vector<int>> lines);

    int order() const { return order_; }
    int point_count() const { return point_count_; }
    int line_count() const { return static_cast<int>(lines_.size()); }

    /// 1-based line access.
    const std::vector<int>& line(int index) const;
    const std::vector<std::vector<int>>& lines() const { return lines_; }

private:
    int order_;
    int point_count_;
    std::vector<std::vector<int>> lines_;
};

struct PlaneCheck {
    std::string id;          // "A1".."A4", "B1".."B5"
    std::string description;
    bool pass = false;
    std::vector<std::string> witnesses; // at most 10, failures only
};

struct PlaneReport {
    std::vector<PlaneCheck> checks;
    bool all_pass() const;
    const PlaneCheck& check(const std::string& id) const;
};

/// Algebraic plane over the given field: points and lines are the normalized
/// nonzero homogeneous triples (first nonzero coordinate 1), both ordered
/// lexicographically by the coordinates' canonical integer encodings, with
/// incidence x.u = 0.
ProjectivePlane plane_construct(const Field& field);

/// Checks the four axioms and five counting properties against any incidence
/// structure. Failures come back as report content with witnesses, never as
/// exceptions. The second axiom is evaluated as "two distinct lines share a
/// point" (the intersection reading).
PlaneReport plane_verify(const ProjectivePlane& plane);

/// The unique line through two distinct points. Throws NoUniqueLine when the
/// structure has zero or several candidates for this pair.
int line_through(const ProjectivePlane& plane, int p1, int p2);

} // namespace achr

#endif
