#include "achr/constructions.hpp"

#include <string>
#include <unordered_set>

namespace achr {
namespace {

int parse_point_label(const Colour& c) {
    const std::string& s = c.label();
    if (s.size() < 2 || s[0] != 'p') return -1;
    long long k = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return -1;
        k = k * 10 + (s[i] - '0');
        if (k > 1'000'000) return -1;
    }
    return k >= 1 ? static_cast<int>(k) : -1;
}

int wrap_shift(int z, int s) {
    // the unique t in [1, s] with t == z (mod s)
    int t = z % s;
    if (t <= 0) t += s;
    return t;
}

} // namespace

ColourMatrix build_base_matrix(const ProjectivePlane& plane) {
    const int r = plane.order();
    const int n = r * r + r + 1;
    if (plane.point_count() != n) {
        throw InvalidPlane("expected " + std::to_string(n) + " points, got " +
                           std::to_string(plane.point_count()));
    }
    if (plane.line_count() != n) {
        throw InvalidPlane("expected " + std::to_string(n) + " lines, got " +
                           std::to_string(plane.line_count()));
    }
    std::vector<Colour> cells;
    cells.reserve(static_cast<size_t>(n) * (r + 1));
    for (int li = 1; li <= n; ++li) {
        const auto& line = plane.line(li);
        if (static_cast<int>(line.size()) != r + 1) {
            throw InvalidPlane("line " + std::to_string(li) + " has " +
                               std::to_string(line.size()) + " points, expected " +
                               std::to_string(r + 1));
        }
        for (int pt : line) cells.push_back(Colour("p" + std::to_string(pt)));
    }
    return ColourMatrix(n, r + 1, std::move(cells));
}

SuperscriptedMatrix build_superscripted(const ColourMatrix& base) {
    const int n = base.rows();
    const int r = base.cols() - 1;
    if (r < 1 || n != r * r + r + 1) {
        throw BadMultiplicity("matrix shape " + std::to_string(n) + "x" +
                              std::to_string(base.cols()) +
                              " is not (r^2+r+1) x (r+1)");
    }
    std::vector<int> occurrences(static_cast<size_t>(n) + 1, 0);

    SuperscriptedMatrix sup;
    sup.order = r;
    sup.rows = n;
    sup.cols = r + 1;
    sup.cells.reserve(static_cast<size_t>(n) * (r + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= r; ++j) {
            const int k = parse_point_label(base.at(i, j));
            if (k < 1 || k > n) {
                throw BadMultiplicity("cell (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is not a point label p1..p" +
                                      std::to_string(n));
            }
            const int copy = ++occurrences[static_cast<size_t>(k)];
            if (copy > r + 1) {
                throw BadMultiplicity("point p" + std::to_string(k) + " occurs more than " +
                                      std::to_string(r + 1) + " times");
            }
            sup.cells.emplace_back(k, copy);
        }
    }
    for (int k = 1; k <= n; ++k) {
        if (occurrences[static_cast<size_t>(k)] != r + 1) {
            throw BadMultiplicity("point p" + std::to_string(k) + " occurs " +
                                  std::to_string(occurrences[static_cast<size_t>(k)]) +
                                  " times, expected " + std::to_string(r + 1));
        }
    }
    return sup;
}

ColourMatrix build_cyclic_block(int k, int s, int r) {
    if (k < 1) throw std::invalid_argument("point index must be >= 1");
    if (s < 1) throw std::invalid_argument("shift count must be >= 1");
    if (r < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<Colour> cells;
    cells.reserve(static_cast<size_t>(r + 1) * s);
    for (int i = 1; i <= r + 1; ++i) {
        for (int j = 1; j <= s; ++j) {
            cells.push_back(Colour::point_shift(k, wrap_shift(i + j - 1, s)));
        }
    }
    return ColourMatrix(r + 1, s, std::move(cells));
}

ColourMatrix expand_superscripted(const SuperscriptedMatrix& sup, int s) {
    if (s < 1) throw std::invalid_argument("shift count must be >= 1");
    const int cols = sup.cols * s;
    std::vector<Colour> cells;
    cells.reserve(static_cast<size_t>(sup.rows) * cols);
    for (int i = 0; i < sup.rows; ++i) {
        for (int j = 0; j < sup.cols; ++j) {
            const auto [k, copy] = sup.at(i, j);
            // Row `copy` of point k's cyclic block.
            for (int u = 1; u <= s; ++u) {
                cells.push_back(Colour::point_shift(k, wrap_shift(copy + u - 1, s)));
            }
        }
    }
    return ColourMatrix(sup.rows, cols, std::move(cells));
}

ColourMatrix build_Ms(const ProjectivePlane& plane, int s) {
    if (s < plane.order() + 1) {
        throw STooSmall("construction requires s >= order+1 = " +
                        std::to_string(plane.order() + 1) + ", got " + std::to_string(s));
    }
    return expand_superscripted(build_superscripted(build_base_matrix(plane)), s);
}

ColourMatrix extend_plus_one(const ColourMatrix& m, const Colour& d) {
    const int p = m.rows();
    const int q = m.cols();
    if (p < 3) {
        throw PreconditionViolated("extension requires at least 3 rows");
    }
    if (q < 2 * p - 1) {
        throw PreconditionViolated("extension requires cols >= 2*rows-1 = " +
                                   std::to_string(2 * p - 1) + ", got " + std::to_string(q));
    }
    for (const auto& c : m.cells()) {
        if (c == d) {
            throw PreconditionViolated("colour \"" + d.label() + "\" already occurs");
        }
    }
    if (!verify_matrix(m, Mode::Row).all_pass()) {
        throw PreconditionViolated("input matrix is not proper and row-complete");
    }

    std::vector<Colour> cells;
    cells.reserve(static_cast<size_t>(p) * (q + 1));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) cells.push_back(m.at(i, j));
        cells.push_back(d);
    }
    ColourMatrix out(p, q + 1, std::move(cells));

    // Row 0 keeps d in the last column. Each later row swaps d into the
    // smallest column not yet holding d whose displaced element is new to
    // the last column.
    std::vector<bool> column_has_d(static_cast<size_t>(q), false);
    std::unordered_set<Colour> displaced;
    for (int i = 1; i < p; ++i) {
        int chosen = -1;
        for (int j = 0; j < q; ++j) {
            if (column_has_d[static_cast<size_t>(j)]) continue;
            if (displaced.contains(out.at(i, j))) continue;
            chosen = j;
            break;
        }
        if (chosen < 0) {
            throw ExtensionFailed("no swap column available in row " + std::to_string(i));
        }
        Colour moved = out.at(i, chosen);
        out.set(i, chosen, d);
        out.set(i, q, moved);
        column_has_d[static_cast<size_t>(chosen)] = true;
        displaced.insert(std::move(moved));
    }
    return out;
}

ColourMatrix build_colouring(long long r, int s, int t) {
    if (t < 0 || t > r) {
        throw HypothesisViolated("t must lie in [0, r] = [0, " + std::to_string(r) + "]");
    }
    if (t >= 1 && static_cast<long long>(s) < r * r * r + 1) {
        throw HypothesisViolated("extensions require s >= r^3+1 = " +
                                 std::to_string(r * r * r + 1) + ", got " + std::to_string(s));
    }
    const Field field = Field::create(r);
    ColourMatrix m = build_Ms(plane_construct(field), s);
    for (int i = 1; i <= t; ++i) {
        m = extend_plus_one(m, Colour("d" + std::to_string(i)));
    }
    return m;
}

} // namespace achr
