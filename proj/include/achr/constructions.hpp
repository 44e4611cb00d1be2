#ifndef ACHR_CONSTRUCTIONS_HPP
#define ACHR_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "achr/colouring.hpp"
#include "achr/plane.hpp"

namespace achr {

/// The base matrix with each point occurrence tagged by its copy number:
/// cell (i, j) holds (point k, copy l), copies numbered 1..order+1 in
/// row-major scan order.
struct SuperscriptedMatrix {
    int order = 0; // r
    int rows = 0;  // r^2 + r + 1
    int cols = 0;  // r + 1
    std::vector<std::pair<int, int>> cells; // row-major (point, copy)

    const std::pair<int, int>& at(int row, int col) const {
        return cells[static_cast<size_t>(row) * cols + col];
    }
};

/// The (r^2+r+1) x (r+1) matrix whose i-th row lists line i of the plane, in
/// the line's stored point order, as opaque labels "p<k>". Canonical planes
/// store lines ascending, so their base matrices have ascending rows.
/// Throws InvalidPlane when the line size or point/line counts are off
/// (B2/B4/B5).
ColourMatrix build_base_matrix(const ProjectivePlane& plane);

/// Numbers the copies of each point in row-major scan order. Expects an
/// (r^2+r+1) x (r+1) matrix of labels "p<k>" in which every point occurs
/// exactly r+1 times; throws BadMultiplicity otherwise.
SuperscriptedMatrix build_superscripted(const ColourMatrix& base);

/// The (r+1) x s cyclic block for point k: cell (i, j) = (k, wrap(i+j-1))
/// where wrap maps into [1, s], rows and columns 1-based. Row l is the l-th
/// cyclic shift of (k,1)..(k,s).
ColourMatrix build_cyclic_block(int k, int s, int r);

/// Replaces every (k, l) cell with row l of point k's cyclic block, giving an
/// (r^2+r+1) x (r+1)s matrix of structured colours.
ColourMatrix expand_superscripted(const SuperscriptedMatrix& sup, int s);

/// The plane-based colouring matrix: base matrix -> copy numbering -> cyclic
/// block expansion. Requires s >= order+1 (STooSmall otherwise). The result
/// is row-complete with (r^2+r+1)s colours, every colour of frequency r+1.
ColourMatrix build_Ms(const ProjectivePlane& plane, int s);

/// Adds one fresh colour d by appending a column of d and, for every row but
/// the first, swapping d into the smallest column j such that no earlier row
/// placed d in column j and the displaced element does not already sit in the
/// last column. Requires rows >= 3, cols >= 2*rows-1, a row-complete proper
/// input and a fresh d (PreconditionViolated otherwise); ExtensionFailed when
/// no column qualifies, which the hypotheses rule out.
ColourMatrix extend_plus_one(const ColourMatrix& m, const Colour& d);

/// Lower-bound witness with (r^2+r+1)s + t colours: the plane-based matrix
/// for GF(r) followed by t one-colour extensions with fresh colours
/// "d1".."dt". Requires t in [0, r]; t >= 1 additionally requires
/// s >= r^3+1 so the extension hypotheses hold along the way.
ColourMatrix build_colouring(long long r, int s, int t);

} // namespace achr

#endif
