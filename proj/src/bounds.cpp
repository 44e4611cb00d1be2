#include "achr/bounds.hpp"

#include <numeric>

#include "achr/constructions.hpp"
#include "achr/gf.hpp"

namespace achr {
namespace {

void require_theorem4_hypotheses(long long r, long long s, long long t) {
    if (r < 2) {
        throw HypothesisViolated("Theorem4 requires r >= 2, got " + std::to_string(r));
    }
    if (s < r * r * r + 1) {
        throw HypothesisViolated("Theorem4 requires s >= r^3+1 = " +
                                 std::to_string(r * r * r + 1) + ", got " +
                                 std::to_string(s));
    }
    if (t < 0 || t > r) {
        throw HypothesisViolated("Theorem4 requires t in [0, r] = [0, " +
                                 std::to_string(r) + "], got " + std::to_string(t));
    }
}

} // namespace

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    return Rational{g == 0 ? 0 : num / g, g == 0 ? 1 : den / g};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Lemma1Result lemma1_constraints(long long p, long long q, long long a, long long l) {
    if (p < 1 || q < p || a < 1 || l < 1) {
        throw std::invalid_argument("requires p >= 1, q >= p, a >= 1, l >= 1");
    }
    Lemma1Result result;
    result.freq_le_rows = l <= p;
    result.average_cap = p * q / a;
    result.freq_le_average = l <= result.average_cap;
    result.neighbourhood_cap = l * (p + q - l - 1) + 1;
    result.colours_le_neighbourhood = a <= result.neighbourhood_cap;
    result.satisfied = result.freq_le_rows && result.freq_le_average &&
                       result.colours_le_neighbourhood;
    return result;
}

BoundsReport theorem4_bounds(long long r, long long s, long long t, bool attach_witness) {
    require_theorem4_hypotheses(r, s, t);

    const long long n = r * r + r + 1;
    BoundsReport report;
    report.p = n;
    report.q = (r + 1) * s + t;
    report.lower = {n * s + t, "Theorem4.lower"};
    report.upper = {n * s + r * t, "Theorem4.upper"};
    report.construction_backed = prime_power_decompose(r).has_value();
    if (!report.construction_backed) {
        report.notes.push_back("r = " + std::to_string(r) +
                               " is not a prime power: no plane construction backs "
                               "the lower bound; figures are arithmetic only");
    }
    if (t == 0) {
        report.exact = report.lower.value;
        report.notes.push_back("Corollary: lower and upper coincide at t = 0");
    } else {
        // Whether the upper bound is tight for t >= 1 is open; never report
        // these as exact.
        report.notes.push_back("t >= 1: result is a range, not an exact value");
    }
    if (attach_witness) {
        report.witness = build_colouring(r, static_cast<int>(s), static_cast<int>(t));
        report.notes.push_back("witness attached: " + std::to_string(n) + "x" +
                               std::to_string(report.q) + " matrix with " +
                               std::to_string(report.lower.value) + " colours");
    }
    return report;
}

std::optional<long long> known_value(long long p, long long q) {
    if (p < 1 || q < 1) return std::nullopt;
    if (p > q) std::swap(p, q);
    switch (p) {
        case 1:
            return q;
        case 2:
            if (q >= 3) return q + 1;
            return std::nullopt;
        case 3:
            if (q >= 4) return 3 * q / 2;
            return std::nullopt;
        case 4:
            if (q >= 25) return 5 * q / 3;
            return std::nullopt;
        case 5:
            if (q >= 43) return 9 * q / 5;
            return std::nullopt;
        case 6:
            if (q >= 41 && q % 2 == 1) return 2 * q + 3;
            if (q >= 42 && q % 2 == 0) return 2 * q + 4;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

Rational asymptotic_ratio(long long r) {
    if (r < 2) throw std::invalid_argument("requires r >= 2");
    return make_rational(r * r + r + 1, r + 1);
}

std::array<Rational, 6> limit_ratio_table() {
    return {make_rational(1, 1), make_rational(1, 1), make_rational(3, 2),
            make_rational(5, 3), make_rational(9, 5), make_rational(2, 1)};
}

ChainResult upper_bound_chain(long long r, long long s, long long t, long long l) {
    require_theorem4_hypotheses(r, s, t);
    if (l < 1) {
        throw HypothesisViolated("minimum frequency l must be >= 1");
    }

    const long long n = r * r + r + 1;
    const long long q = (r + 1) * s + t;
    const long long target = n * s + r * t;
    ChainResult result;

    // Frequency cap: l <= floor(n*q / (n*s)) = r+1.
    const long long cap = n * q / (n * s);
    result.steps.push_back("frequency cap: l <= floor(" + std::to_string(n * q) + "/" +
                           std::to_string(n * s) + ") = " + std::to_string(cap));
    if (l > cap) {
        result.branch = ChainBranch::RejectedFrequencyCap;
        result.steps.push_back("l = " + std::to_string(l) + " exceeds the cap " +
                               std::to_string(cap) + ": no optimal matrix has this "
                               "minimum frequency");
        return result;
    }

    if (l == cap) {
        // Every colour class has at least r+1 cells, so n*q >= (r+1)*a.
        result.branch = ChainBranch::FrequencyEqualsCap;
        const long long bound = n * s + n * t / (r + 1);
        result.steps.push_back("l = r+1: colour classes have >= r+1 cells, so a <= " +
                               std::to_string(n) + "*" + std::to_string(q) + "/" +
                               std::to_string(r + 1) + ", i.e. a <= " +
                               std::to_string(bound));
        result.bound = bound;
        return result;
    }

    // l <= r: neighbourhood bound at l, then majorized to l = r, then capped.
    result.branch = ChainBranch::FrequencyBelowCap;
    const long long exact = l * (n + q - l - 1) + 1;
    const long long at_r = r * (r * r + (r + 1) * s + t) + 1;
    result.steps.push_back("l <= r: neighbourhood bound a <= l(p+q-l-1)+1 = " +
                           std::to_string(exact));
    result.steps.push_back("increasing in l up to r: a <= r(r^2+(r+1)s+t)+1 = " +
                           std::to_string(at_r));
    result.steps.push_back("r^3+1 <= s: a <= s+r(r+1)s+rt = " + std::to_string(target));
    result.bound = exact;
    return result;
}

} // namespace achr
