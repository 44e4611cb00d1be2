#include "achr/plane.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace achr {
namespace {

constexpr size_t kWitnessCap = 10;

std::string point_pair(int a, int b) {
    return "points (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string line_pair(int a, int b) {
    return "lines (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Bit rows over the point universe, one per line.
struct LineSets {
    int words;
    std::vector<uint64_t> bits; // line-major

    LineSets(const ProjectivePlane& p)
        : words((p.point_count() + 63) / 64),
          bits(static_cast<size_t>(p.line_count()) * words, 0) {
        for (int li = 1; li <= p.line_count(); ++li) {
            for (int pt : p.line(li)) set(li, pt);
        }
    }
    void set(int line, int point) {
        bits[static_cast<size_t>(line - 1) * words + (point - 1) / 64] |=
            uint64_t{1} << ((point - 1) % 64);
    }
    int intersection_size(int la, int lb) const {
        const uint64_t* a = &bits[static_cast<size_t>(la - 1) * words];
        const uint64_t* b = &bits[static_cast<size_t>(lb - 1) * words];
        int count = 0;
        for (int w = 0; w < words; ++w) count += __builtin_popcountll(a[w] & b[w]);
        return count;
    }
};

} // namespace

ProjectivePlane::ProjectivePlane(int order, int point_count,
                                 std::vector<std::vector<int>> lines)
    : order_(order), point_count_(point_count), lines_(std::move(lines)) {
    if (order_ < 2) throw std::invalid_argument("plane order must be at least 2");
    if (point_count_ < 1) throw std::invalid_argument("point count must be positive");
    for (const auto& l : lines_) {
        std::vector<int> seen;
        for (int pt : l) {
            if (pt < 1 || pt > point_count_) {
                throw std::invalid_argument("line references point " + std::to_string(pt) +
                                            " outside [1, " + std::to_string(point_count_) + "]");
            }
            if (std::find(seen.begin(), seen.end(), pt) != seen.end()) {
                throw std::invalid_argument("line repeats point " + std::to_string(pt));
            }
            seen.push_back(pt);
        }
    }
}

ProjectivePlane::ProjectivePlane(int order, std::vector<std::vector<int>> lines)
    : ProjectivePlane(order, order * order + order + 1, std::move(lines)) {}

const std::vector<int>& ProjectivePlane::line(int index) const {
    if (index < 1 || index > line_count()) {
        throw std::out_of_range("line index out of range");
    }
    return lines_[static_cast<size_t>(index - 1)];
}

bool PlaneReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PlaneCheck& c) { return c.pass; });
}

const PlaneCheck& PlaneReport::check(const std::string& id) const {
    for (const auto& c : checks) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("no check with id " + id);
}

ProjectivePlane plane_construct(const Field& field) {
    const long long r = field.order();

    // Normalized projective triples, sorted by encoding, coordinate 0 first.
    std::vector<std::array<FieldElement, 3>> triples;
    const auto zero = field.zero();
    const auto one = field.one();
    for (long long b = 0; b < r; ++b) {
        for (long long c = 0; c < r; ++c) {
            triples.push_back({one, field.element(b), field.element(c)});
        }
    }
    for (long long c = 0; c < r; ++c) {
        triples.push_back({zero, one, field.element(c)});
    }
    triples.push_back({zero, zero, one});
    std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
        for (int i = 0; i < 3; ++i) {
            if (x[i].encoding() != y[i].encoding()) {
                return x[i].encoding() < y[i].encoding();
            }
        }
        return false;
    });

    const int n = static_cast<int>(triples.size()); // r^2 + r + 1
    std::vector<std::vector<int>> lines(static_cast<size_t>(n));
    for (int li = 0; li < n; ++li) {
        const auto& u = triples[static_cast<size_t>(li)];
        for (int pi = 0; pi < n; ++pi) {
            const auto& x = triples[static_cast<size_t>(pi)];
            auto dot = field.add(field.add(field.mul(u[0], x[0]), field.mul(u[1], x[1])),
                                 field.mul(u[2], x[2]));
            if (dot.is_zero()) lines[static_cast<size_t>(li)].push_back(pi + 1);
        }
    }
    return ProjectivePlane(static_cast<int>(r), n, std::move(lines));
}

PlaneReport plane_verify(const ProjectivePlane& plane) {
    const int n = plane.point_count();
    const int m = plane.line_count();
    const int r = plane.order();
    PlaneReport report;

    // pair_line[a][b]: 0 = no common line, -1 = several, else the line index.
    std::vector<int> pair_line(static_cast<size_t>(n) * n, 0);
    auto pl = [&](int a, int b) -> int& {
        return pair_line[static_cast<size_t>(a - 1) * n + (b - 1)];
    };
    for (int li = 1; li <= m; ++li) {
        const auto& l = plane.line(li);
        for (size_t i = 0; i < l.size(); ++i) {
            for (size_t j = i + 1; j < l.size(); ++j) {
                int a = std::min(l[i], l[j]);
                int b = std::max(l[i], l[j]);
                pl(a, b) = (pl(a, b) == 0) ? li : -1;
            }
        }
    }

    PlaneCheck a1{"A1", "every two distinct points lie on exactly one line", true, {}};
    for (int a = 1; a <= n && a1.witnesses.size() < kWitnessCap; ++a) {
        for (int b = a + 1; b <= n && a1.witnesses.size() < kWitnessCap; ++b) {
            const int v = pl(a, b);
            if (v == 0) {
                a1.pass = false;
                a1.witnesses.push_back(point_pair(a, b) + " lie on no line");
            } else if (v == -1) {
                a1.pass = false;
                a1.witnesses.push_back(point_pair(a, b) + " lie on several lines");
            }
        }
    }
    report.checks.push_back(std::move(a1));

    const LineSets sets(plane);
    PlaneCheck a2{"A2", "every two distinct lines share a point (intersection reading)", true, {}};
    PlaneCheck b1{"B1", "every two distinct lines share exactly one point", true, {}};
    for (int la = 1; la <= m; ++la) {
        for (int lb = la + 1; lb <= m; ++lb) {
            const int isz = sets.intersection_size(la, lb);
            if (isz == 0 && a2.witnesses.size() < kWitnessCap) {
                a2.pass = false;
                a2.witnesses.push_back(line_pair(la, lb) + " are disjoint");
            }
            if (isz != 1 && b1.witnesses.size() < kWitnessCap) {
                b1.pass = false;
                b1.witnesses.push_back(line_pair(la, lb) + " share " +
                                       std::to_string(isz) + " points");
            }
        }
    }

    // A3: some four points in general position span six distinct lines.
    PlaneCheck a3{"A3", "four points exist whose six connecting lines are distinct", true, {}};
    {
        bool found = false;
        std::array<int, 6> ls{};
        for (int a = 1; a <= n && !found; ++a) {
            for (int b = a + 1; b <= n && !found; ++b) {
                if (pl(a, b) <= 0) continue;
                for (int c = b + 1; c <= n && !found; ++c) {
                    if (pl(a, c) <= 0 || pl(b, c) <= 0) continue;
                    for (int d = c + 1; d <= n && !found; ++d) {
                        if (pl(a, d) <= 0 || pl(b, d) <= 0 || pl(c, d) <= 0) continue;
                        ls = {pl(a, b), pl(a, c), pl(a, d), pl(b, c), pl(b, d), pl(c, d)};
                        std::sort(ls.begin(), ls.end());
                        if (std::adjacent_find(ls.begin(), ls.end()) == ls.end()) found = true;
                    }
                }
            }
        }
        if (!found) {
            a3.pass = false;
            a3.witnesses.push_back("no four points determine six distinct lines");
        }
    }
    report.checks.push_back(std::move(a2));
    report.checks.push_back(std::move(a3));

    PlaneCheck a4{"A4", "some line has exactly order+1 points", true, {}};
    {
        bool found = false;
        for (int li = 1; li <= m; ++li) {
            if (static_cast<int>(plane.line(li).size()) == r + 1) { found = true; break; }
        }
        if (!found) {
            a4.pass = false;
            a4.witnesses.push_back("no line of size " + std::to_string(r + 1));
        }
    }
    report.checks.push_back(std::move(a4));

    report.checks.push_back(std::move(b1));

    PlaneCheck b2{"B2", "every line has exactly order+1 points", true, {}};
    for (int li = 1; li <= m && b2.witnesses.size() < kWitnessCap; ++li) {
        const int sz = static_cast<int>(plane.line(li).size());
        if (sz != r + 1) {
            b2.pass = false;
            b2.witnesses.push_back("line " + std::to_string(li) + " has " +
                                   std::to_string(sz) + " points");
        }
    }
    report.checks.push_back(std::move(b2));

    PlaneCheck b3{"B3", "every point lies on exactly order+1 lines", true, {}};
    {
        std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
        for (int li = 1; li <= m; ++li) {
            for (int pt : plane.line(li)) ++degree[static_cast<size_t>(pt)];
        }
        for (int pt = 1; pt <= n && b3.witnesses.size() < kWitnessCap; ++pt) {
            if (degree[static_cast<size_t>(pt)] != r + 1) {
                b3.pass = false;
                b3.witnesses.push_back("point " + std::to_string(pt) + " lies on " +
                                       std::to_string(degree[static_cast<size_t>(pt)]) + " lines");
            }
        }
    }
    report.checks.push_back(std::move(b3));

    const int expected = r * r + r + 1;
    PlaneCheck b4{"B4", "point count equals order^2+order+1", n == expected, {}};
    if (!b4.pass) {
        b4.witnesses.push_back(std::to_string(n) + " points, expected " +
                               std::to_string(expected));
    }
    report.checks.push_back(std::move(b4));

    PlaneCheck b5{"B5", "line count equals order^2+order+1", m == expected, {}};
    if (!b5.pass) {
        b5.witnesses.push_back(std::to_string(m) + " lines, expected " +
                               std::to_string(expected));
    }
    report.checks.push_back(std::move(b5));

    return report;
}

int line_through(const ProjectivePlane& plane, int p1, int p2) {
    if (p1 == p2) throw std::invalid_argument("line_through needs two distinct points");
    if (p1 < 1 || p1 > plane.point_count() || p2 < 1 || p2 > plane.point_count()) {
        throw std::invalid_argument("point index out of range");
    }
    int found = 0;
    for (int li = 1; li <= plane.line_count(); ++li) {
        const auto& l = plane.line(li);
        if (std::find(l.begin(), l.end(), p1) != l.end() &&
            std::find(l.begin(), l.end(), p2) != l.end()) {
            if (found != 0) {
                throw NoUniqueLine("several lines contain " + point_pair(p1, p2));
            }
            found = li;
        }
    }
    if (found == 0) throw NoUniqueLine("no line contains " + point_pair(p1, p2));
    return found;
}

} // namespace achr
