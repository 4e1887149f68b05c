#include "dunkl/field_scalar.hpp"

#include <algorithm>
#include <sstream>

namespace dunkl {

ZPoly::ZPoly(long v) {
    if (v != 0) coeffs_.push_back(BigInt(v));
}

ZPoly::ZPoly(const BigInt& v) {
    if (v != 0) coeffs_.push_back(v);
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::variable() {
    return ZPoly(std::vector<BigInt>{BigInt(0), BigInt(1)});
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& ZPoly::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& ZPoly::leading() const {
    static const BigInt zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
    std::vector<BigInt> r(coeffs_);
    for (auto& v : r) v = -v;
    return ZPoly(std::move(r));
}

BigInt ZPoly::content() const {
    BigInt g(0);
    for (const auto& v : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    BigInt g = content();
    if (leading() < 0) g = -g;
    return divide_by_int(g);
}

ZPoly ZPoly::divide_by_int(const BigInt& d) const {
    std::vector<BigInt> r(coeffs_);
    for (auto& v : r) v /= d;
    return ZPoly(std::move(r));
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return ZPoly();
    if (degree() < d.degree()) return std::nullopt;
    // Long division over Q, then an integrality check.
    std::vector<Rational> rem(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) rem[i] = Rational(coeffs_[i]);
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, Rational(0));
    Rational dl(d.leading());
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + d.degree())] / dl;
        quot[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * Rational(d.coeff(j));
    }
    for (int j = 0; j < d.degree(); ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    std::vector<BigInt> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) return std::nullopt;
        out[i] = quot[i].get_num();
    }
    return ZPoly(std::move(out));
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    // Euclidean remainders computed with pseudo-division, renormalizing to
    // primitive parts at each step.
    while (!v.is_zero()) {
        ZPoly r = u;
        while (!r.is_zero() && r.degree() >= v.degree()) {
            int k = r.degree() - v.degree();
            std::vector<BigInt> shift(static_cast<std::size_t>(k) + 1, BigInt(0));
            shift.back() = r.leading();
            r = r * ZPoly(v.leading()) - v * ZPoly(std::move(shift));
        }
        u = v;
        v = r.primitive_part();
    }
    return u.primitive_part();
}

Rational ZPoly::eval(const Rational& r) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + Rational(*it);
    return acc;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const BigInt& a = coeff(k);
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "c";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

FieldScalar::FieldScalar(const Rational& r)
    : num_(BigInt(r.get_num())), den_(BigInt(r.get_den())) {}

FieldScalar::FieldScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

FieldScalar FieldScalar::c() { return FieldScalar(ZPoly::variable(), ZPoly(1)); }

void FieldScalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator in Q(c)");
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
        ZPoly g = ZPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    BigInt cn = num_.content(), cd = den_.content(), t;
    mpz_gcd(t.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) t = -t;
    if (t != 1) {
        num_ = num_.divide_by_int(t);
        den_ = den_.divide_by_int(t);
    }
}

bool FieldScalar::is_one() const { return num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0 && den_.coeff(0) == 1; }

std::optional<BigInt> FieldScalar::integer_value() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (den_.coeff(0) != 1) return std::nullopt;
    return num_.is_zero() ? BigInt(0) : num_.coeff(0);
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return FieldScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    if (o.is_zero()) return *this;
    return FieldScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    if (is_zero() || o.is_zero()) return FieldScalar();
    if (is_one()) return o;
    if (o.is_one()) return *this;
    return FieldScalar(num_ * o.num_, den_ * o.den_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero in Q(c)");
    if (is_zero()) return FieldScalar();
    return FieldScalar(num_ * o.den_, den_ * o.num_);
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(c)");
    return FieldScalar(den_, num_);
}

Rational FieldScalar::evaluate_at(const Rational& r) const {
    Rational d = den_.eval(r);
    if (d == 0)
        throw PoleAtSpecialization("pole at c = " + rational_str(r) + " in " + str());
    return num_.eval(r) / d;
}

FieldScalar FieldScalar::substitute(const FieldScalar& v) const {
    auto eval_poly = [&v](const ZPoly& p) {
        FieldScalar acc;
        for (int k = p.degree(); k >= 0; --k) {
            acc = acc * v + FieldScalar(ZPoly(p.coeff(k)), ZPoly(1));
        }
        return acc;
    };
    return eval_poly(num_) / eval_poly(den_);
}

std::string FieldScalar::str() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
    if (den_.degree() == 0) {
        // Constant denominator: fold it into each coefficient, e.g. (1 + c)/2.
        std::ostringstream os;
        os << "(" << num_.str() << ")/" << den_.coeff(0);
        return os.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

FieldScalar normalize(const ZPoly& num, const ZPoly& den) { return FieldScalar(num, den); }

} // namespace dunkl
