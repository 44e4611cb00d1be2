#ifndef ACHR_GF_HPP
#define ACHR_GF_HPP

#include <optional>
#include <vector>

#include "achr/errors.hpp"

namespace achr {

class Field;

/// Element of a finite field, stored as a little-endian coefficient vector
/// over the prime subfield (coefficients[i] multiplies x^i, each reduced
/// modulo the characteristic). Elements keep a pointer to their field; the
/// field must outlive them.
class FieldElement {
public:
    FieldElement() = default;

    const std::vector<int>& coefficients() const { return coeffs_; }

    /// Canonical integer encoding: sum of coefficients[i] * p^i.
    long long encoding() const;

    bool is_zero() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    friend class Field;
    FieldElement(const Field* field, std::vector<int> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    const Field* field_ = nullptr;
    std::vector<int> coeffs_;
};

/// GF(p^e) with a fixed irreducible modulus. Immutable after construction.
class Field {
public:
    /// Builds GF(order). The modulus is the lexicographically smallest monic
    /// irreducible polynomial of the required degree, coefficients compared
    /// low-degree-first, so construction is deterministic.
    /// Throws NotPrimePower when order has more than one prime factor.
    static Field create(long long order);

    long long characteristic() const { return characteristic_; }
    int degree() const { return degree_; }
    long long order() const { return order_; }

    /// Monic modulus as a little-endian coefficient vector of length degree+1.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element with the given canonical encoding in [0, order).
    FieldElement element(long long encoding) const;

    /// All elements ordered by canonical encoding.
    std::vector<FieldElement> elements() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;

    /// Polynomial product reduced by the modulus.
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;

    /// Multiplicative inverse; throws ZeroInverse on zero.
    FieldElement inv(const FieldElement& a) const;

    bool operator==(const Field& other) const {
        return characteristic_ == other.characteristic_ &&
               degree_ == other.degree_ && modulus_ == other.modulus_;
    }

private:
    Field(long long characteristic, int degree, std::vector<int> modulus);
    void check_member(const FieldElement& a) const;

    long long characteristic_ = 0;
    int degree_ = 0;
    long long order_ = 0;
    std::vector<int> modulus_;
};

/// Decomposes n as p^e for prime p, e >= 1; empty when n is not a prime power.
std::optional<std::pair<long long, int>> prime_power_decompose(long long n);

} // namespace achr

#endif
