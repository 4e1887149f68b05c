#ifndef DUNKL_FIELD_SCALAR_HPP
#define DUNKL_FIELD_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in the formal parameter c with big-integer
/// coefficients, stored densely in ascending degree.
class ZPoly {
  public:
    ZPoly() = default;
    ZPoly(long v);                 // NOLINT(google-explicit-constructor)
    ZPoly(const BigInt& v);        // NOLINT(google-explicit-constructor)
    explicit ZPoly(std::vector<BigInt> coeffs);

    static ZPoly variable(); // the polynomial c

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int k) const;
    const BigInt& leading() const;

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    BigInt content() const; // nonnegative; 0 for the zero polynomial
    ZPoly primitive_part() const;
    ZPoly divide_by_int(const BigInt& d) const; // exact

    /// Exact division; returns nothing when the division has a remainder.
    std::optional<ZPoly> divide_exact(const ZPoly& d) const;

    /// Primitive gcd with positive leading coefficient.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

    Rational eval(const Rational& r) const;

    /// String in ascending degree, e.g. "1 - c + 2*c^2".
    std::string str() const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Element of K = Q(c): a ratio of integer polynomials in canonical form.
/// Canonical form: denominator nonzero with positive leading coefficient,
/// no common polynomial factor, numerator and denominator with coprime
/// integer contents, and zero represented as 0/1.
class FieldScalar {
  public:
    FieldScalar() : num_(), den_(1) {}
    FieldScalar(long v) : num_(v), den_(1) {}          // NOLINT
    FieldScalar(const Rational& r);                    // NOLINT
    FieldScalar(ZPoly num, ZPoly den);

    static FieldScalar c(); // the formal parameter

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    /// The exact integer value when this is a constant integer.
    std::optional<BigInt> integer_value() const;

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    bool operator==(const FieldScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Exact value at c = r; throws PoleAtSpecialization when the
    /// denominator vanishes there.
    Rational evaluate_at(const Rational& r) const;

    /// Substitute c -> v, e.g. v = -c or v = -c-1.
    FieldScalar substitute(const FieldScalar& v) const;

    std::string str() const;

  private:
    void normalize();
    ZPoly num_, den_;
};

FieldScalar normalize(const ZPoly& num, const ZPoly& den);

std::string rational_str(const Rational& r);

} // namespace dunkl

#endif
