#ifndef DUNKL_SKEWOP_HPP
#define DUNKL_SKEWOP_HPP

#include <map>
#include <string>
#include <vector>

#include "dunkl/locfrac.hpp"

namespace dunkl {

/// Coefficient of the associated graded ring: q / delta^k with q a
/// polynomial in both x- and y-variables (y_i is the symbol of d_i).
class LocPoly {
  public:
    LocPoly() : num_(0), dpow_(0) {}
    LocPoly(Poly num, int dpow);

    int n() const { return num_.n(); }
    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    int dpow() const { return dpow_; }

    LocPoly operator+(const LocPoly& o) const;
    LocPoly operator*(const LocPoly& o) const;
    LocPoly operator-() const;
    LocPoly scaled(const FieldScalar& s) const;
    LocPoly group_act(const Perm& w) const;
    bool operator==(const LocPoly& o) const { return dpow_ == o.dpow_ && num_ == o.num_; }
    bool operator!=(const LocPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
    Poly num_;
    int dpow_;
};

/// Element of gr(D(h^reg) * W): commuting coefficients times group elements.
class SymbolElement {
  public:
    explicit SymbolElement(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Perm, LocPoly>& terms() const { return terms_; }
    void add(const Perm& w, const LocPoly& f);

    SymbolElement operator+(const SymbolElement& o) const;
    SymbolElement operator*(const SymbolElement& o) const;
    bool operator==(const SymbolElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str() const;

  private:
    int n_;
    std::map<Perm, LocPoly> terms_;
};

/// Normal-form element of D(h^reg) * W over Q(c): a finite sum of terms
/// (LocFrac coefficient) * d^a * w with coefficients on the left and group
/// elements on the right.
class SkewOperator {
  public:
    struct TermKey {
        std::vector<int> dexp;
        Perm w;
        bool operator<(const TermKey& o) const;
        bool operator==(const TermKey& o) const { return dexp == o.dexp && w == o.w; }
    };

    explicit SkewOperator(int n) : n_(n) {}

    static SkewOperator zero(int n) { return SkewOperator(n); }
    static SkewOperator one(int n);
    static SkewOperator scalar(int n, const FieldScalar& v);
    static SkewOperator coefficient(LocFrac f);
    static SkewOperator partial(int n, int i); // d_i, 0-based
    static SkewOperator group(const Perm& w);
    static SkewOperator delta_power(int n, int k); // delta^k, any integer k

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<TermKey, LocFrac>& terms() const { return terms_; }
    void add_term(const TermKey& key, const LocFrac& coeff);

    SkewOperator operator+(const SkewOperator& o) const;
    SkewOperator operator-(const SkewOperator& o) const;
    SkewOperator operator*(const SkewOperator& o) const;
    SkewOperator operator-() const;
    SkewOperator& operator+=(const SkewOperator& o);
    SkewOperator scaled(const FieldScalar& s) const;
    bool operator==(const SkewOperator& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const SkewOperator& o) const { return !(*this == o); }

    /// Cheap left multiplication by a function (no normal ordering needed).
    SkewOperator mul_coeff_left(const LocFrac& f) const;
    /// Cheap left multiplication by a group element: w (f d^a s) = (w.f) d^{w(a)} (w s).
    SkewOperator mul_group_left(const Perm& w) const;
    /// Cheap right multiplication by a group element.
    SkewOperator mul_group_right(const Perm& w) const;

    /// Natural action on C[h][delta^{-1}].
    LocFrac apply(const LocFrac& f) const;

    /// Total d-order; -1 for the zero operator.
    int gamma_degree() const;

    /// Top-order part with d^a replaced by y^a; throws ZeroOperator on 0.
    SymbolElement principal_symbol() const;

    /// delta^{-w} (this) delta^{w} for a formal or numeric exponent w:
    /// each d_i becomes d_i + w (d_i delta)/delta; each group element g
    /// picks up sign(g)^w, which requires an integer w when g is odd.
    SkewOperator conjugate_by_delta_power(const FieldScalar& w) const;

    SkewOperator substitute_parameter(const FieldScalar& v) const;
    SkewOperator specialize_c(const Rational& r) const;

    /// For an e-sandwiched operator, the invariant scalar p with
    /// principal symbol p * e; throws NotSpherical otherwise.
    LocPoly spherical_scalar_symbol() const;

    std::string str() const;

  private:
    void check_arity(const SkewOperator& o) const;
    int n_;
    std::map<TermKey, LocFrac> terms_;
};

} // namespace dunkl

#endif
