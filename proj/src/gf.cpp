#include "achr/gf.hpp"

#include <string>

namespace achr {
namespace {

// Polynomials over GF(p) as little-endian coefficient vectors.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a / b, coefficients mod p. b must be nonzero.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, long long p) {
    a = poly_trim(std::move(a));
    const auto bt = poly_trim(b);
    const int db = static_cast<int>(bt.size()) - 1;
    // b monic is not assumed: scale by the inverse of its leading coefficient.
    long long lead = bt.back();
    long long lead_inv = 1;
    for (long long c = 1; c < p; ++c) {
        if (lead * c % p == 1) { lead_inv = c; break; }
    }
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        const long long factor = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            long long v = a[da - db + i] - factor * bt[i] % p;
            a[da - db + i] = static_cast<int>(((v % p) + p) % p);
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<int>((out[i + j] + 1LL * a[i] * b[j]) % p);
        }
    }
    return out;
}

// Trial division: a monic polynomial of degree d is reducible iff some monic
// polynomial of degree in [1, d/2] divides it.
bool poly_irreducible(const std::vector<int>& candidate, long long p) {
    const int deg = static_cast<int>(candidate.size()) - 1;
    for (int d = 1; d * 2 <= deg; ++d) {
        std::vector<int> div(d + 1, 0);
        div[d] = 1;
        while (true) {
            if (poly_rem(candidate, div, p).empty()) return false;
            int i = 0;
            for (; i < d; ++i) {
                if (++div[i] < p) break;
                div[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

// Lexicographically smallest (low-degree coefficients compared first) monic
// irreducible polynomial of the given degree over GF(p).
std::vector<int> smallest_irreducible(long long p, int degree) {
    if (degree == 1) return {0, 1}; // x
    std::vector<int> low(degree, 0);
    while (true) {
        std::vector<int> candidate = low;
        candidate.push_back(1);
        if (poly_irreducible(candidate, p)) return candidate;
        int i = degree - 1;
        for (; i >= 0; --i) {
            if (++low[i] < p) break;
            low[i] = 0;
        }
        if (i < 0) break;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

std::optional<std::pair<long long, int>> prime_power_decompose(long long n) {
    if (n < 2) return std::nullopt;
    long long p = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    int e = 0;
    long long m = n;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, e);
}

long long FieldElement::encoding() const {
    if (field_ == nullptr) return 0;
    long long value = 0;
    long long base = 1;
    for (int c : coeffs_) {
        value += c * base;
        base *= field_->characteristic();
    }
    return value;
}

bool FieldElement::is_zero() const {
    for (int c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

Field::Field(long long characteristic, int degree, std::vector<int> modulus)
    : characteristic_(characteristic), degree_(degree), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < degree_; ++i) order_ *= characteristic_;
}

Field Field::create(long long order) {
    const auto pe = prime_power_decompose(order);
    if (!pe) {
        throw NotPrimePower("order " + std::to_string(order) + " is not a prime power");
    }
    if (order > (1LL << 16)) {
        throw std::invalid_argument("field orders above 2^16 are not supported");
    }
    const auto [p, e] = *pe;
    return Field(p, e, smallest_irreducible(p, e));
}

FieldElement Field::zero() const {
    return FieldElement(this, std::vector<int>(degree_, 0));
}

FieldElement Field::one() const {
    std::vector<int> c(degree_, 0);
    c[0] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement Field::element(long long encoding) const {
    if (encoding < 0 || encoding >= order_) {
        throw std::invalid_argument("element encoding out of range");
    }
    std::vector<int> c(degree_, 0);
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<int>(encoding % characteristic_);
        encoding /= characteristic_;
    }
    return FieldElement(this, std::move(c));
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(order_));
    for (long long v = 0; v < order_; ++v) out.push_back(element(v));
    return out;
}

void Field::check_member(const FieldElement& a) const {
    if (a.field_ == nullptr || !(*a.field_ == *this)) {
        throw FieldMismatch("element does not belong to this field");
    }
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check_member(a);
    check_member(b);
    std::vector<int> c(degree_);
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<int>((a.coeffs_[i] + b.coeffs_[i]) % characteristic_);
    }
    return FieldElement(this, std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
    check_member(a);
    std::vector<int> c(degree_);
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<int>((characteristic_ - a.coeffs_[i]) % characteristic_);
    }
    return FieldElement(this, std::move(c));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check_member(a);
    check_member(b);
    auto prod = poly_rem(poly_mul(a.coeffs_, b.coeffs_, characteristic_),
                         modulus_, characteristic_);
    prod.resize(static_cast<size_t>(degree_), 0);
    return FieldElement(this, std::move(prod));
}

FieldElement Field::inv(const FieldElement& a) const {
    check_member(a);
    if (a.is_zero()) throw ZeroInverse("zero has no multiplicative inverse");
    // a^(order-2) inverts nonzero a.
    long long exp = order_ - 2;
    FieldElement result = one();
    FieldElement base = a;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

} // namespace achr
