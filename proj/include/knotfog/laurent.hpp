#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace knotfog {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer Laurent polynomial in one variable t.
///
/// Stored densely as a lowest exponent plus a coefficient run. The
/// representation is always normalized: the zero polynomial has no
/// coefficients (and min_degree 0), otherwise the first and last stored
/// coefficients are nonzero. Two polynomials are equal iff their
/// representations are identical.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t min_degree, std::vector<Integer> coeffs);

    static LaurentPoly constant(const Integer& c);
    static LaurentPoly monomial(const Integer& c, std::int64_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_degree() const { return min_degree_; }
    // Undefined for the zero polynomial.
    std::int64_t max_degree() const { return min_degree_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer coeff(std::int64_t degree) const;
    const Integer& leading_coeff() const { return coeffs_.back(); }

    LaurentPoly shifted(std::int64_t k) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void normalize();

    std::int64_t min_degree_ = 0;
    std::vector<Integer> coeffs_;
};

LaurentPoly pow(const LaurentPoly& a, std::uint64_t k);

// Exact substitution t := x. Throws std::domain_error for x = 0.
Rational evaluate(const LaurentPoly& a, const Integer& x);

// Unit normal form: lowest exponent 0, positive top coefficient.
LaurentPoly canonical(const LaurentPoly& a);

// Equality up to multiplication by a unit ±t^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

// Quotient a / b when b divides a in Z[t, t^-1]. Throws std::domain_error
// if b is zero or the division is not exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Terms in decreasing degree, e.g. "2t^2 - 5t + 2" or "t - 1 + 3t^-2".
std::string to_string(const LaurentPoly& a);

} // namespace knotfog
