#ifndef ACHR_SOLVER_HPP
#define ACHR_SOLVER_HPP

#include <chrono>
#include <optional>
#include <ostream>

#include "achr/colouring.hpp"

namespace achr {

/// A partially filled matrix in the exact search: cells hold colour indices
/// >= 1 in row-major order, 0 marks an unfilled cell.
struct SearchNode {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    static SearchNode empty(int rows, int cols);

    int colours_used() const;   // distinct nonzero values
    int unfilled() const;
};

/// Largest colour count a p x q matrix of the class can have: the maximum a
/// for which some frequency l satisfies all three of the lemma1_constraints
/// checks.
long long lemma1_colour_cap(long long p, long long q);

/// Admissible bound on the colours of any completion of the node: the static
/// cap combined with colours used plus unfilled cells. Never smaller than
/// the best completable value.
long long prune_bound(const SearchNode& node);

struct ExactResult {
    int value = 0;            // best colour count found
    bool completed = false;   // search space exhausted: value is exact
    long long nodes = 0;      // cell assignments explored
    std::optional<ColourMatrix> witness; // labels "1".."value"
};

/// Exact maximum colour count over proper complete colourings of the p x q
/// matrix class, by depth-first search in row-major cell order. The first row
/// is fixed to colours 1..q and new colours are introduced in first-use
/// order, so identical inputs give identical (canonical) witnesses: the
/// returned matrix is the row-major lexicographically smallest optimum.
/// On budget exhaustion the best witness so far comes back with
/// completed = false. Progress lines go to *progress when given.
ExactResult achromatic_exact(int p, int q,
                             std::optional<std::chrono::milliseconds> budget = std::nullopt,
                             std::ostream* progress = nullptr);

} // namespace achr

#endif
