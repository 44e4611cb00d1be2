#include "achr/solver.hpp"

#include <algorithm>
#include <string>

namespace achr {
namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
    Search(int p, int q, std::optional<std::chrono::milliseconds> budget,
           std::ostream* progress)
        : p_(p), q_(q), cap_(static_cast<int>(lemma1_colour_cap(p, q))),
          cell_(static_cast<size_t>(p) * q, 0),
          row_used_(static_cast<size_t>(p) * (cap_ + 1), 0),
          col_used_(static_cast<size_t>(q) * (cap_ + 1), 0),
          cover_(static_cast<size_t>(cap_) * (cap_ + 1) / 2, 0),
          progress_(progress) {
        if (budget) deadline_ = Clock::now() + *budget;
    }

    ExactResult run() {
        // Symmetry: the first row is colours 1..q.
        for (int j = 0; j < q_; ++j) assign(0, j, j + 1);
        dfs(q_);

        ExactResult result;
        result.value = best_;
        result.completed = !timed_out_;
        result.nodes = nodes_;
        if (best_ > 0) {
            std::vector<Colour> cells;
            cells.reserve(best_cells_.size());
            for (int c : best_cells_) cells.emplace_back(std::to_string(c));
            result.witness = ColourMatrix(p_, q_, std::move(cells));
        }
        return result;
    }

private:
    size_t tri(int a, int b) const { // a < b, colours 1-based
        return static_cast<size_t>(b - 1) * (b - 2) / 2 + (a - 1);
    }

    // Marks {c, other} covered once more; returns true when newly covered.
    bool cover(int c, int other) {
        const size_t idx = other < c ? tri(other, c) : tri(c, other);
        return cover_[idx]++ == 0;
    }
    bool uncover(int c, int other) {
        const size_t idx = other < c ? tri(other, c) : tri(c, other);
        return --cover_[idx] == 0;
    }

    void assign(int i, int j, int c) {
        ++nodes_;
        cell_[static_cast<size_t>(i) * q_ + j] = c;
        row_used_[static_cast<size_t>(i) * (cap_ + 1) + c] = 1;
        col_used_[static_cast<size_t>(j) * (cap_ + 1) + c] = 1;
        if (c > used_) {
            ++used_;
            uncovered_ += used_ - 1; // pairs {c, 1..c-1} start uncovered
        }
        for (int jj = 0; jj < j; ++jj) {
            if (cover(c, cell_[static_cast<size_t>(i) * q_ + jj])) --uncovered_;
        }
        for (int ii = 0; ii < i; ++ii) {
            if (cover(c, cell_[static_cast<size_t>(ii) * q_ + j])) --uncovered_;
        }
    }

    // introduced: whether the matching assign brought colour c into use.
    void unassign(int i, int j, int c, bool introduced) {
        for (int ii = i - 1; ii >= 0; --ii) {
            if (uncover(c, cell_[static_cast<size_t>(ii) * q_ + j])) ++uncovered_;
        }
        for (int jj = j - 1; jj >= 0; --jj) {
            if (uncover(c, cell_[static_cast<size_t>(i) * q_ + jj])) ++uncovered_;
        }
        if (introduced) {
            uncovered_ -= used_ - 1;
            --used_;
        }
        row_used_[static_cast<size_t>(i) * (cap_ + 1) + c] = 0;
        col_used_[static_cast<size_t>(j) * (cap_ + 1) + c] = 0;
        cell_[static_cast<size_t>(i) * q_ + j] = 0;
    }

    void dfs(int filled) {
        if (timed_out_) return;
        if ((nodes_ & 0x1fff) == 0) {
            if (deadline_ && Clock::now() >= *deadline_) {
                timed_out_ = true;
                return;
            }
            if (progress_ && nodes_ - last_report_ >= (1 << 22)) {
                last_report_ = nodes_;
                *progress_ << "nodes " << nodes_ << " best " << best_ << '\n';
            }
        }

        const int remaining = p_ * q_ - filled;
        if (remaining == 0) {
            if (uncovered_ == 0 && used_ > best_) {
                best_ = used_;
                best_cells_ = cell_;
            }
            return;
        }
        // Each unfilled cell can add at most one colour, and its assignment
        // can newly cover at most its row and column mates.
        if (std::min<long long>(cap_, used_ + remaining) <= best_) return;
        if (static_cast<long long>(uncovered_) >
            static_cast<long long>(remaining) * (p_ - 1 + q_ - 1)) {
            return;
        }

        const int i = filled / q_;
        const int j = filled % q_;
        const uint8_t* in_row = &row_used_[static_cast<size_t>(i) * (cap_ + 1)];
        const uint8_t* in_col = &col_used_[static_cast<size_t>(j) * (cap_ + 1)];
        const int limit = std::min(used_ + 1, cap_); // one fresh colour at most
        for (int c = 1; c <= limit; ++c) {
            if (in_row[c] || in_col[c]) continue;
            const bool introduced = c > used_;
            assign(i, j, c);
            dfs(filled + 1);
            unassign(i, j, c, introduced);
            if (timed_out_) return;
        }
    }

    int p_, q_, cap_;
    std::vector<int> cell_;
    std::vector<uint8_t> row_used_, col_used_;
    std::vector<int> cover_;
    int used_ = 0;
    long long uncovered_ = 0;
    int best_ = 0;
    std::vector<int> best_cells_;
    long long nodes_ = 0;
    long long last_report_ = 0;
    bool timed_out_ = false;
    std::optional<Clock::time_point> deadline_;
    std::ostream* progress_;
};

} // namespace

SearchNode SearchNode::empty(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("dimensions must be positive");
    return SearchNode{rows, cols, std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
}

int SearchNode::colours_used() const {
    std::vector<int> distinct;
    for (int c : cells) {
        if (c > 0 && std::find(distinct.begin(), distinct.end(), c) == distinct.end()) {
            distinct.push_back(c);
        }
    }
    return static_cast<int>(distinct.size());
}

int SearchNode::unfilled() const {
    return static_cast<int>(std::count(cells.begin(), cells.end(), 0));
}

long long lemma1_colour_cap(long long p, long long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("dimensions must be positive");
    for (long long a = p * q; a >= 1; --a) {
        for (long long l = 1; l <= std::min(p, q); ++l) {
            if (l <= p * q / a && a <= l * (p + q - l - 1) + 1) return a;
        }
    }
    return 1;
}

long long prune_bound(const SearchNode& node) {
    return std::min(lemma1_colour_cap(node.rows, node.cols),
                    static_cast<long long>(node.colours_used()) + node.unfilled());
}

ExactResult achromatic_exact(int p, int q,
                             std::optional<std::chrono::milliseconds> budget,
                             std::ostream* progress) {
    if (p < 1 || q < 1) throw std::invalid_argument("dimensions must be positive");
    if (static_cast<long long>(p) * q > 4096) {
        throw std::invalid_argument("exact search is for desk-scale instances "
                                    "(at most 4096 cells)");
    }
    return Search(p, q, budget, progress).run();
}

} // namespace achr
