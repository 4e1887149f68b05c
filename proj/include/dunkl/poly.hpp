#ifndef DUNKL_POLY_HPP
#define DUNKL_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/field_scalar.hpp"

namespace dunkl {

/// Element of S_n, stored by images: w maps i -> images[i] (0-based).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int i, int j); // 0-based

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Perm compose(const Perm& o) const; // this after o: (this*o)(i) = this(o(i))
    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    static std::vector<Perm> all(int n);

    /// Decomposition into transpositions (empty for the identity).
    std::vector<std::pair<int, int>> transposition_factors() const;

  private:
    std::vector<int> img_;
};

/// Exponent pair of a monomial x^a y^b, both vectors of length n.
struct Monomial {
    std::vector<int> xe, ye;

    int xdeg() const;
    int ydeg() const;
    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return xe == o.xe && ye == o.ye; }
};

/// Fixed term order: bidegree-major (total degree, then x-degree descending),
/// then descending lex on the concatenated exponents. Serialization and
/// pivoting both use this order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q(c) in x_1..x_n and y_1..y_n.
class Poly {
  public:
    Poly() : n_(0) {}
    explicit Poly(int n) : n_(n) {}

    static Poly constant(int n, const FieldScalar& v);
    static Poly variable_x(int n, int i); // 0-based
    static Poly variable_y(int n, int i);
    static Poly monomial(int n, Monomial m, FieldScalar coeff);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, FieldScalar, MonomialOrder>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldScalar& s) const;
    Poly& operator+=(const Poly& o);

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    enum class Family { x, y };
    Poly partial_derivative(Family f, int i) const; // 0-based index

    /// Diagonal S_n action, (w.f)(v) = f(w^{-1} v); w.x_i = x_{w(i)}.
    Poly group_act(const Perm& w) const;

    /// Bihomogeneous components keyed by (x-degree, y-degree).
    std::vector<std::pair<std::pair<int, int>, Poly>> bidegree_components() const;

    int x_degree() const; // -1 for zero
    int y_degree() const;
    bool x_only() const;
    bool is_bihomogeneous() const;

    std::optional<Poly> divide_exact(const Poly& d) const;

    Poly substitute_parameter(const FieldScalar& v) const; // c -> v in coefficients
    Poly specialize_c(const Rational& r) const;

    void add_term(const Monomial& m, const FieldScalar& coeff);
    FieldScalar coeff(const Monomial& m) const;
    FieldScalar constant_coeff() const;

    std::string str() const;

  private:
    void check_arity(const Poly& o) const;
    int n_;
    std::map<Monomial, FieldScalar, MonomialOrder> terms_;
};

/// The discriminant prod_{i<j} (x_i - x_j).
Poly discriminant(int n);

/// The root x_i - x_j (0-based, i != j).
Poly root_poly(int n, int i, int j);

} // namespace dunkl

#endif
