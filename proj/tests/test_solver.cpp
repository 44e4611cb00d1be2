#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "achr/bounds.hpp"
#include "achr/solver.hpp"

using achr::achromatic_exact;
using achr::lemma1_colour_cap;
using achr::SearchNode;

namespace {

// Independent oracle for the static cap: scan every (a, l) pair against the
// three frequency constraints spelled out directly.
long long cap_oracle(long long p, long long q) {
    long long best = 0;
    for (long long a = 1; a <= p * q; ++a) {
        for (long long l = 1; l <= p && l <= q; ++l) {
            if (l <= p * q / a && a <= l * (p + q - l - 1) + 1) best = std::max(best, a);
        }
    }
    return best;
}

// Independent oracle for small exact values: plain recursive enumeration of
// canonical proper fillings with a full completeness check at every leaf.
// No bounds, no coverage bookkeeping; usable up to a dozen cells.
struct EnumerationOracle {
    int p, q, best = 0;
    std::vector<int> cells;

    EnumerationOracle(int p_, int q_) : p(p_), q(q_), cells(p_ * q_, 0) {
        for (int j = 0; j < q; ++j) cells[j] = j + 1;
        rec(q, q);
    }

    bool complete_at_leaf(int used) const {
        std::vector<std::vector<bool>> covered(used + 1, std::vector<bool>(used + 1, false));
        auto mark = [&](int a, int b) { covered[a][b] = covered[b][a] = true; };
        for (int i = 0; i < p; ++i) {
            for (int x = 0; x < q; ++x) {
                for (int y = x + 1; y < q; ++y) mark(cells[i * q + x], cells[i * q + y]);
            }
        }
        for (int j = 0; j < q; ++j) {
            for (int x = 0; x < p; ++x) {
                for (int y = x + 1; y < p; ++y) mark(cells[x * q + j], cells[y * q + j]);
            }
        }
        for (int a = 1; a <= used; ++a) {
            for (int b = a + 1; b <= used; ++b) {
                if (!covered[a][b]) return false;
            }
        }
        return true;
    }

    void rec(int idx, int used) {
        if (idx == p * q) {
            if (used > best && complete_at_leaf(used)) best = used;
            return;
        }
        const int i = idx / q, j = idx % q;
        for (int c = 1; c <= used + 1; ++c) {
            bool clash = false;
            for (int x = 0; x < j && !clash; ++x) clash = cells[i * q + x] == c;
            for (int x = 0; x < i && !clash; ++x) clash = cells[x * q + j] == c;
            if (clash) continue;
            cells[idx] = c;
            rec(idx + 1, std::max(used, c));
            cells[idx] = 0;
        }
    }
};

} // namespace

TEST_CASE("static colour cap matches the exhaustive oracle") {
    CHECK(lemma1_colour_cap(2, 3) == 4);
    CHECK(lemma1_colour_cap(3, 4) == 6);
    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; q <= 7; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(lemma1_colour_cap(p, q) == cap_oracle(p, q));
        }
    }
}

TEST_CASE("prune bound on empty, partial and filled nodes") {
    CHECK(achr::prune_bound(SearchNode::empty(2, 3)) == 4);
    CHECK(achr::prune_bound(SearchNode::empty(3, 4)) == 6);

    SearchNode partial = SearchNode::empty(2, 3);
    partial.cells = {1, 2, 3, 0, 0, 0};
    CHECK(partial.colours_used() == 3);
    CHECK(partial.unfilled() == 3);
    CHECK(achr::prune_bound(partial) == 4); // capped by the static bound

    SearchNode filled = SearchNode::empty(2, 2);
    filled.cells = {1, 2, 3, 1};
    CHECK(achr::prune_bound(filled) == 3); // exactly its colour count

    SearchNode two = SearchNode::empty(2, 2);
    two.cells = {1, 2, 2, 1};
    CHECK(achr::prune_bound(two) == 2);
}

TEST_CASE("exact values for the closed-form instances") {
    CHECK(achromatic_exact(1, 5).value == 5);
    CHECK(achromatic_exact(2, 3).value == 4);
    CHECK(achromatic_exact(2, 4).value == 5);
    CHECK(achromatic_exact(2, 5).value == 6);
    CHECK(achromatic_exact(3, 4).value == 6);

    for (const auto& [p, q] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 4}}) {
        const auto result = achromatic_exact(p, q);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(result.completed);
        CHECK(result.value == achr::known_value(p, q));
    }
}

TEST_CASE("exact values match the plain enumeration oracle") {
    for (const auto& [p, q] :
         {std::pair{1, 3}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}}) {
        const EnumerationOracle oracle(p, q);
        const auto result = achromatic_exact(p, q);
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(result.completed);
        CHECK(result.value == oracle.best);
    }
}

TEST_CASE("witnesses verify with the claimed colour count") {
    for (const auto& [p, q] : {std::pair{1, 4}, {2, 2}, {2, 5}, {3, 4}, {3, 3}}) {
        const auto result = achromatic_exact(p, q);
        REQUIRE(result.witness.has_value());
        const auto report = achr::verify_matrix(*result.witness, achr::Mode::Line);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(report.all_pass());
        CHECK(report.colour_count == result.value);
        CHECK(result.nodes > 0);
    }
}

TEST_CASE("witnesses satisfy the frequency constraints") {
    for (const auto& [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 3}, {2, 2}}) {
        const auto result = achromatic_exact(p, q);
        REQUIRE(result.witness.has_value());
        const auto freq = achr::colour_frequencies(*result.witness);
        const auto c = achr::lemma1_constraints(std::min(p, q), std::max(p, q),
                                                result.value, freq.min_frequency);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(c.satisfied);
    }
}

TEST_CASE("transposing the shape does not change the value") {
    CHECK(achromatic_exact(3, 2).value == achromatic_exact(2, 3).value);
    CHECK(achromatic_exact(4, 3).value == achromatic_exact(3, 4).value);
    CHECK(achromatic_exact(5, 2).value == achromatic_exact(2, 5).value);
}

TEST_CASE("more columns never hurt") {
    int previous = 0;
    for (int q = 2; q <= 6; ++q) {
        const auto result = achromatic_exact(2, q);
        REQUIRE(result.completed);
        CHECK(result.value >= previous);
        previous = result.value;
    }
}

TEST_CASE("identical runs return identical witnesses") {
    const auto a = achromatic_exact(3, 4);
    const auto b = achromatic_exact(3, 4);
    CHECK(a.value == b.value);
    CHECK(a.nodes == b.nodes);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("the canonical witness starts with colours 1..q") {
    const auto result = achromatic_exact(2, 4);
    REQUIRE(result.witness.has_value());
    for (int j = 0; j < 4; ++j) {
        CHECK(result.witness->at(0, j) == achr::Colour(std::to_string(j + 1)));
    }
}

TEST_CASE("a tiny budget yields a flagged partial result") {
    const auto result = achromatic_exact(4, 6, std::chrono::milliseconds(1));
    CHECK_FALSE(result.completed); // 24 cells cannot be exhausted in 1 ms
    // Whatever was found so far is still a valid colouring.
    if (result.witness) {
        const auto report = achr::verify_matrix(*result.witness, achr::Mode::Line);
        CHECK(report.all_pass());
        CHECK(report.colour_count == result.value);
    }
}

TEST_CASE("progress stream receives output without breaking the search") {
    std::ostringstream progress;
    const auto result = achromatic_exact(2, 3, std::nullopt, &progress);
    CHECK(result.value == 4);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(achromatic_exact(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(SearchNode::empty(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_colour_cap(0, 1), std::invalid_argument);
}
