#ifndef ACHR_COLOURING_HPP
#define ACHR_COLOURING_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "achr/errors.hpp"

namespace achr {

/// A colour is either an opaque label or a structured (point, shift) pair.
/// The pair (k, t) serializes as "k:t"; constructing a colour from a label of
/// that shape (k, t >= 1) yields the structured form, so the two
/// representations never collide.
class Colour {
public:
    Colour() = default;
    explicit Colour(const std::string& label);
    static Colour point_shift(int k, int t);

    bool structured() const { return point_ > 0; }
    int point() const { return point_; }
    int shift() const { return shift_; }
    const std::string& label() const { return text_; }

    // Structured colours order numerically, opaque ones by label; the two
    // groups never interleave, so sorted colour lists are deterministic.
    friend std::strong_ordering operator<=>(const Colour& a, const Colour& b) {
        if (auto c = a.point_ <=> b.point_; c != 0) return c;
        if (auto c = a.shift_ <=> b.shift_; c != 0) return c;
        return a.text_ <=> b.text_;
    }
    friend bool operator==(const Colour& a, const Colour& b) {
        return a.point_ == b.point_ && a.shift_ == b.shift_ && a.text_ == b.text_;
    }

private:
    int point_ = 0;
    int shift_ = 0;
    std::string text_;
};

/// Dense matrix of colours; every cell is populated and dimensions are
/// positive. Cell access is 0-based.
class ColourMatrix {
public:
    ColourMatrix(int rows, int cols, std::vector<Colour> cells_row_major);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Colour& at(int row, int col) const { return cells_[index(row, col)]; }
    void set(int row, int col, Colour c) { cells_[index(row, col)] = std::move(c); }
    const std::vector<Colour>& cells() const { return cells_; }

    bool operator==(const ColourMatrix& other) const = default;

private:
    size_t index(int row, int col) const;

    int rows_;
    int cols_;
    std::vector<Colour> cells_;
};

/// Which lines must witness colour pairs: rows and columns, or rows only.
enum class Mode { Line, Row };

/// A colour occurring twice in one line; positions are 0-based offsets
/// within the line.
struct DuplicateWitness {
    int line;   // row index or column index
    int first;  // first offset within the line
    int second; // second offset within the line
    Colour colour;
};

struct MatrixReport {
    Mode mode = Mode::Line;
    bool proper_rows = false;
    bool proper_cols = false;
    bool complete = false;
    int colour_count = 0;
    std::vector<DuplicateWitness> row_duplicates;           // at most 10
    std::vector<DuplicateWitness> col_duplicates;           // at most 10
    std::vector<std::pair<Colour, Colour>> uncovered_pairs; // at most 10

    bool all_pass() const { return proper_rows && proper_cols && complete; }
};

/// Checks properness of every row and column and coverage of every unordered
/// pair of used colours by some line (Mode::Line) or some row (Mode::Row).
/// Defects are report content, never exceptions. Witness lists are ordered by
/// position and capped at 10 entries each.
MatrixReport verify_matrix(const ColourMatrix& m, Mode mode);

struct FrequencyReport {
    std::map<Colour, int> counts;
    int min_frequency = 0; // over colours that occur
};

/// Exact occurrence counts; the counts sum to rows*cols.
FrequencyReport colour_frequencies(const ColourMatrix& m);

} // namespace achr

template <>
struct std::hash<achr::Colour> {
    size_t operator()(const achr::Colour& c) const noexcept {
        size_t h = std::hash<std::string>{}(c.label());
        return h ^ (static_cast<size_t>(c.point()) << 1);
    }
};

#endif
