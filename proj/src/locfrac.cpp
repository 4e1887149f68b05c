#include "dunkl/locfrac.hpp"

namespace dunkl {

LocFrac::LocFrac(Poly num, int dpow) : num_(std::move(num)), dpow_(dpow) {
    if (!num_.x_only()) throw WrongVariableFamily("LocFrac numerator must use x-variables only");
    if (dpow_ < 0) throw ShapeError("negative delta power");
    normalize();
}

void LocFrac::normalize() {
    if (num_.is_zero()) {
        dpow_ = 0;
        return;
    }
    if (dpow_ == 0) return;
    Poly d = discriminant(num_.n());
    while (dpow_ > 0) {
        auto q = num_.divide_exact(d);
        if (!q) break;
        num_ = std::move(*q);
        --dpow_;
    }
}

LocFrac LocFrac::constant(int n, const FieldScalar& v) {
    return LocFrac(Poly::constant(n, v), 0);
}

LocFrac LocFrac::delta_inverse_power(int n, int k) {
    return LocFrac(Poly::constant(n, FieldScalar(1)), k);
}

LocFrac LocFrac::operator+(const LocFrac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int k = std::max(dpow_, o.dpow_);
    Poly d = discriminant(n());
    Poly a = num_, b = o.num_;
    for (int i = dpow_; i < k; ++i) a = a * d;
    for (int i = o.dpow_; i < k; ++i) b = b * d;
    return LocFrac(a + b, k);
}

LocFrac LocFrac::operator-(const LocFrac& o) const { return *this + (-o); }

LocFrac LocFrac::operator*(const LocFrac& o) const {
    return LocFrac(num_ * o.num_, dpow_ + o.dpow_);
}

LocFrac LocFrac::operator-() const {
    LocFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

LocFrac LocFrac::scaled(const FieldScalar& s) const {
    if (s.is_zero()) return LocFrac(Poly(n()), 0);
    LocFrac r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
}

LocFrac LocFrac::derivative(int i) const {
    // d_i(p delta^{-k}) = (d_i p) delta^{-k} - k p (d_i delta) delta^{-k-1}
    Poly dp = num_.partial_derivative(Poly::Family::x, i);
    if (dpow_ == 0) return LocFrac(std::move(dp), 0);
    Poly d = discriminant(n());
    Poly dd = d.partial_derivative(Poly::Family::x, i);
    return LocFrac(dp * d - (num_ * dd).scaled(FieldScalar(dpow_)), dpow_ + 1);
}

LocFrac LocFrac::group_act(const Perm& w) const {
    Poly p = num_.group_act(w);
    if (dpow_ % 2 != 0 && w.sign() < 0) p = -p;
    LocFrac r;
    r.num_ = std::move(p);
    r.dpow_ = is_zero() ? 0 : dpow_;
    return r; // w.delta = sign(w) delta, so normalization is preserved
}

LocFrac LocFrac::substitute_parameter(const FieldScalar& v) const {
    return LocFrac(num_.substitute_parameter(v), dpow_);
}

LocFrac LocFrac::specialize_c(const Rational& r) const {
    return LocFrac(num_.specialize_c(r), dpow_);
}

const Poly& LocFrac::as_poly() const {
    if (dpow_ != 0) throw ShapeError("LocFrac has a delta denominator");
    return num_;
}

std::string LocFrac::str() const {
    if (dpow_ == 0) return num_.str();
    return "(" + num_.str() + ") / del^" + std::to_string(dpow_);
}

LocFrac root_inverse(int n, int i, int j) {
    Poly cof = Poly::constant(n, FieldScalar(1));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (!(p == std::min(i, j) && q == std::max(i, j))) cof = cof * root_poly(n, p, q);
    if (i > j) cof = -cof;
    return LocFrac(std::move(cof), 1);
}

} // namespace dunkl
