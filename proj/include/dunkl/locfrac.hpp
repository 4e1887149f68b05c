#ifndef DUNKL_LOCFRAC_HPP
#define DUNKL_LOCFRAC_HPP

#include <string>

#include "dunkl/poly.hpp"

namespace dunkl {

/// Element p / delta^k of C[h][delta^{-1}] over Q(c). The numerator uses
/// x-variables only; when k > 0 delta does not divide the numerator, and
/// zero is stored as (0, 0).
class LocFrac {
  public:
    LocFrac() : num_(0), dpow_(0) {}
    LocFrac(Poly num, int dpow);

    static LocFrac constant(int n, const FieldScalar& v);
    static LocFrac one(int n) { return constant(n, FieldScalar(1)); }
    static LocFrac delta_inverse_power(int n, int k); // delta^{-k}, k >= 0

    int n() const { return num_.n(); }
    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    int dpow() const { return dpow_; }

    LocFrac operator+(const LocFrac& o) const;
    LocFrac operator-(const LocFrac& o) const;
    LocFrac operator*(const LocFrac& o) const;
    LocFrac operator-() const;
    LocFrac scaled(const FieldScalar& s) const;
    LocFrac& operator+=(const LocFrac& o) { return *this = *this + o; }

    bool operator==(const LocFrac& o) const { return dpow_ == o.dpow_ && num_ == o.num_; }
    bool operator!=(const LocFrac& o) const { return !(*this == o); }

    /// d/dx_i via the quotient rule against delta^{-k}.
    LocFrac derivative(int i) const;

    /// w.(p/delta^k) = sign(w)^k (w.p)/delta^k.
    LocFrac group_act(const Perm& w) const;

    LocFrac substitute_parameter(const FieldScalar& v) const;
    LocFrac specialize_c(const Rational& r) const;

    /// Value as a plain polynomial when dpow == 0.
    const Poly& as_poly() const;

    std::string str() const;

  private:
    void normalize();
    Poly num_;
    int dpow_;
};

/// 1/(x_i - x_j) as cofactor/delta (0-based indices, i != j).
LocFrac root_inverse(int n, int i, int j);

} // namespace dunkl

#endif
