#ifndef ACHR_BOUNDS_HPP
#define ACHR_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "achr/colouring.hpp"
#include "achr/errors.hpp"

namespace achr {

/// Exact rational, reduced, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

Rational make_rational(long long num, long long den);

/// Outcome of the three frequency constraints for a p x q matrix with a
/// colours whose minimum colour frequency is l:
///   1. l <= p        2. l <= floor(pq/a)        3. a <= l(p+q-l-1)+1
struct Lemma1Result {
    bool freq_le_rows = false;
    bool freq_le_average = false;
    bool colours_le_neighbourhood = false;
    long long average_cap = 0;       // floor(pq/a)
    long long neighbourhood_cap = 0; // l(p+q-l-1)+1
    bool satisfied = false;
};

Lemma1Result lemma1_constraints(long long p, long long q, long long a, long long l);

struct Bound {
    long long value = 0;
    std::string rule;
};

struct BoundsReport {
    long long p = 0;
    long long q = 0;
    Bound lower;
    Bound upper;
    std::optional<long long> exact;
    bool construction_backed = false; // r is a prime power
    std::vector<std::string> notes;
    std::optional<ColourMatrix> witness;
};

/// Two-sided bound for the colour count of K_{r^2+r+1} box K_{(r+1)s+t}:
/// lower (r^2+r+1)s+t, upper (r^2+r+1)s+rt, exact at t=0. Requires r >= 2,
/// s >= r^3+1 and t in [0, r] (HypothesisViolated otherwise). When r is not
/// a prime power the figures are arithmetic only and flagged as such. With
/// attach_witness the lower-bound construction is built and included, which
/// requires a prime-power r.
BoundsReport theorem4_bounds(long long r, long long s, long long t,
                             bool attach_witness = false);

/// Closed-form value of achr(K_p box K_q) where one is known; empty outside
/// the listed ranges. Arguments may come in either order.
std::optional<long long> known_value(long long p, long long q);

/// limit of achr(K_{r^2+r+1} box K_q)/q: the rational (r^2+r+1)/(r+1) in
/// lowest terms. Requires r >= 2.
Rational asymptotic_ratio(long long r);

/// The known limits of achr(K_p box K_q)/q for p = 1..6: 1, 1, 3/2, 5/3,
/// 9/5, 2.
std::array<Rational, 6> limit_ratio_table();

enum class ChainBranch {
    RejectedFrequencyCap, // l exceeds the cap r+1
    FrequencyEqualsCap,   // l = r+1: class-size pigeonhole
    FrequencyBelowCap     // l <= r: neighbourhood bound, majorized
};

/// Derivation trace for a hypothetical minimum colour frequency l.
struct ChainResult {
    ChainBranch branch = ChainBranch::RejectedFrequencyCap;
    std::optional<long long> bound; // empty when rejected
    std::vector<std::string> steps;
};

/// Reproduces the upper-bound case split for minimum frequency l under the
/// theorem4_bounds hypotheses. Every l in [1, r+1] yields a bound at most
/// (r^2+r+1)s+rt, and l = r+1 attains it.
ChainResult upper_bound_chain(long long r, long long s, long long t, long long l);

} // namespace achr

#endif
