// Shared test utilities: fixture loading, independent oracles, and random
// matrix transformations. The oracles deliberately avoid the library's own
// code paths so they can vouch for them.
#ifndef ACHR_TESTS_HELPERS_HPP
#define ACHR_TESTS_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "achr/colouring.hpp"

namespace testutil {

inline nlohmann::json load_fixture(const std::string& name) {
    const std::string path = std::string(FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    return nlohmann::json::parse(in);
}

// --- polynomial oracle over GF(p), little-endian coefficients ---

inline std::vector<int> poly_oracle_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Long division a / b over GF(p) for prime p; returns the remainder.
inline std::vector<int> poly_oracle_rem(std::vector<int> a, std::vector<int> b, int p) {
    a = poly_oracle_trim(std::move(a));
    b = poly_oracle_trim(std::move(b));
    int inv = 0; // inverse of b's leading coefficient
    for (int c = 1; c < p; ++c) {
        if (b.back() * c % p == 1) inv = c;
    }
    while (a.size() >= b.size() && !a.empty()) {
        const int shift = static_cast<int>(a.size() - b.size());
        const int factor = static_cast<int>(a.back()) * inv % p;
        for (size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        }
        a = poly_oracle_trim(std::move(a));
    }
    return a;
}

inline bool poly_oracle_divides(const std::vector<int>& divisor,
                                const std::vector<int>& dividend, int p) {
    return poly_oracle_rem(dividend, divisor, p).empty();
}

// Reducibility of a monic polynomial by exhaustive trial division over all
// monic divisors of degree 1 .. deg/2.
inline bool poly_oracle_reducible(const std::vector<int>& poly, int p) {
    const int deg = static_cast<int>(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<int> low(d, 0);
        while (true) {
            std::vector<int> divisor = low;
            divisor.push_back(1);
            if (poly_oracle_divides(divisor, poly, p)) return true;
            int i = 0;
            for (; i < d; ++i) {
                if (++low[i] < p) break;
                low[i] = 0;
            }
            if (i == d) break;
        }
    }
    return false;
}

// --- graph-level oracle for the matrix classes ---

// Builds the vertex set of the product of complete graphs on p rows and q
// columns, derives adjacency straight from the definition (one coordinate
// equal, the other different), and checks the colouring the slow way.
struct GraphOracle {
    bool proper = true;
    bool complete = true;

    GraphOracle(const achr::ColourMatrix& m) {
        const int p = m.rows();
        const int q = m.cols();
        std::vector<achr::Colour> palette;
        for (const auto& c : m.cells()) palette.push_back(c);
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

        auto id = [&](const achr::Colour& c) {
            return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) -
                                    palette.begin());
        };

        std::set<std::pair<int, int>> adjacent_colours;
        for (int i1 = 0; i1 < p; ++i1) {
            for (int j1 = 0; j1 < q; ++j1) {
                for (int i2 = 0; i2 < p; ++i2) {
                    for (int j2 = 0; j2 < q; ++j2) {
                        const bool edge = (i1 == i2 && j1 != j2) || (i1 != i2 && j1 == j2);
                        if (!edge) continue;
                        const int a = id(m.at(i1, j1));
                        const int b = id(m.at(i2, j2));
                        if (a == b) proper = false;
                        adjacent_colours.emplace(std::min(a, b), std::max(a, b));
                    }
                }
            }
        }
        const int nc = static_cast<int>(palette.size());
        for (int a = 0; a < nc && complete; ++a) {
            for (int b = a + 1; b < nc; ++b) {
                if (!adjacent_colours.count({a, b})) {
                    complete = false;
                    break;
                }
            }
        }
    }
};

// --- randomized transformations (colouring-class preserving) ---

inline achr::ColourMatrix permute_columns(const achr::ColourMatrix& m, std::mt19937& rng) {
    std::vector<int> perm(static_cast<size_t>(m.cols()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<achr::Colour> cells;
    cells.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) cells.push_back(m.at(i, perm[static_cast<size_t>(j)]));
    }
    return achr::ColourMatrix(m.rows(), m.cols(), std::move(cells));
}

inline achr::ColourMatrix permute_rows(const achr::ColourMatrix& m, std::mt19937& rng) {
    std::vector<int> perm(static_cast<size_t>(m.rows()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<achr::Colour> cells;
    cells.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) cells.push_back(m.at(perm[static_cast<size_t>(i)], j));
    }
    return achr::ColourMatrix(m.rows(), m.cols(), std::move(cells));
}

} // namespace testutil

#endif
