#include "achr/colouring.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace achr {
namespace {

constexpr size_t kWitnessCap = 10;

// Canonical "k:t" with k, t >= 1, no leading zeros, at most 9 digits each.
bool parse_point_shift(const std::string& s, int& k, int& t) {
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size()) return false;
    if (colon > 9 || s.size() - colon - 1 > 9) return false;
    if (s[0] == '0' || s[colon + 1] == '0') return false;
    long long kv = 0, tv = 0;
    for (size_t i = 0; i < colon; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        kv = kv * 10 + (s[i] - '0');
    }
    for (size_t i = colon + 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        tv = tv * 10 + (s[i] - '0');
    }
    if (kv < 1 || tv < 1) return false;
    k = static_cast<int>(kv);
    t = static_cast<int>(tv);
    return true;
}

size_t tri_index(int a, int b) {
    // a < b
    return static_cast<size_t>(b) * (b - 1) / 2 + a;
}

} // namespace

Colour::Colour(const std::string& label) : text_(label) {
    int k = 0, t = 0;
    if (parse_point_shift(label, k, t)) {
        point_ = k;
        shift_ = t;
    }
}

Colour Colour::point_shift(int k, int t) {
    if (k < 1 || t < 1) throw std::invalid_argument("point and shift must be >= 1");
    Colour c;
    c.point_ = k;
    c.shift_ = t;
    c.text_ = std::to_string(k) + ":" + std::to_string(t);
    return c;
}

ColourMatrix::ColourMatrix(int rows, int cols, std::vector<Colour> cells_row_major)
    : rows_(rows), cols_(cols), cells_(std::move(cells_row_major)) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (cells_.size() != static_cast<size_t>(rows_) * cols_) {
        throw std::invalid_argument("cell count does not match dimensions");
    }
}

size_t ColourMatrix::index(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::out_of_range("matrix cell out of range");
    }
    return static_cast<size_t>(row) * cols_ + col;
}

MatrixReport verify_matrix(const ColourMatrix& m, Mode mode) {
    const int p = m.rows();
    const int q = m.cols();

    // Deterministic colour ids: sorted order of the colours that occur.
    std::vector<Colour> palette(m.cells());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    const int nc = static_cast<int>(palette.size());

    std::unordered_map<Colour, int> id;
    id.reserve(palette.size());
    for (int i = 0; i < nc; ++i) id.emplace(palette[static_cast<size_t>(i)], i);

    std::vector<int> grid(static_cast<size_t>(p) * q);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            grid[static_cast<size_t>(i) * q + j] = id.at(m.at(i, j));
        }
    }

    MatrixReport report;
    report.mode = mode;
    report.colour_count = nc;

    // Properness: first duplicate positions per line, scan order.
    std::vector<int> seen_at(static_cast<size_t>(nc), -1);
    std::vector<int> stamp(static_cast<size_t>(nc), -1);
    report.proper_rows = true;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            const int c = grid[static_cast<size_t>(i) * q + j];
            if (stamp[static_cast<size_t>(c)] == i) {
                report.proper_rows = false;
                if (report.row_duplicates.size() < kWitnessCap) {
                    report.row_duplicates.push_back(
                        {i, seen_at[static_cast<size_t>(c)], j, m.at(i, j)});
                }
            } else {
                stamp[static_cast<size_t>(c)] = i;
                seen_at[static_cast<size_t>(c)] = j;
            }
        }
    }
    std::fill(stamp.begin(), stamp.end(), -1);
    report.proper_cols = true;
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < p; ++i) {
            const int c = grid[static_cast<size_t>(i) * q + j];
            if (stamp[static_cast<size_t>(c)] == j) {
                report.proper_cols = false;
                if (report.col_duplicates.size() < kWitnessCap) {
                    report.col_duplicates.push_back(
                        {j, seen_at[static_cast<size_t>(c)], i, m.at(i, j)});
                }
            } else {
                stamp[static_cast<size_t>(c)] = j;
                seen_at[static_cast<size_t>(c)] = i;
            }
        }
    }

    // Pair coverage over a triangular table, one line at a time.
    std::vector<uint8_t> covered(nc > 1 ? tri_index(nc - 2, nc - 1) + 1 : 0, 0);
    std::vector<int> distinct;
    distinct.reserve(static_cast<size_t>(std::max(p, q)));
    std::fill(stamp.begin(), stamp.end(), -1);
    int stamp_value = 0;

    auto mark_line = [&](auto begin_cell, int count, auto step) {
        distinct.clear();
        ++stamp_value;
        for (int k = 0; k < count; ++k) {
            const int c = grid[begin_cell + static_cast<size_t>(k) * step];
            if (stamp[static_cast<size_t>(c)] != stamp_value) {
                stamp[static_cast<size_t>(c)] = stamp_value;
                distinct.push_back(c);
            }
        }
        for (size_t x = 0; x < distinct.size(); ++x) {
            for (size_t y = x + 1; y < distinct.size(); ++y) {
                const int a = std::min(distinct[x], distinct[y]);
                const int b = std::max(distinct[x], distinct[y]);
                covered[tri_index(a, b)] = 1;
            }
        }
    };

    for (int i = 0; i < p; ++i) {
        mark_line(static_cast<size_t>(i) * q, q, size_t{1});
    }
    if (mode == Mode::Line) {
        for (int j = 0; j < q; ++j) {
            mark_line(static_cast<size_t>(j), p, static_cast<size_t>(q));
        }
    }

    report.complete = true;
    for (int a = 0; a < nc; ++a) {
        for (int b = a + 1; b < nc; ++b) {
            if (!covered[tri_index(a, b)]) {
                report.complete = false;
                if (report.uncovered_pairs.size() < kWitnessCap) {
                    report.uncovered_pairs.emplace_back(palette[static_cast<size_t>(a)],
                                                        palette[static_cast<size_t>(b)]);
                }
            }
        }
    }
    return report;
}

FrequencyReport colour_frequencies(const ColourMatrix& m) {
    FrequencyReport report;
    for (const auto& c : m.cells()) ++report.counts[c];
    report.min_frequency = std::numeric_limits<int>::max();
    for (const auto& [colour, count] : report.counts) {
        report.min_frequency = std::min(report.min_frequency, count);
    }
    return report;
}

} // namespace achr
