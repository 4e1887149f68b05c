#ifndef DUNKL_CHEREDNIK_HPP
#define DUNKL_CHEREDNIK_HPP

#include "dunkl/skewop.hpp"

namespace dunkl {

/// Rank n and the coupling parameter used in the Dunkl formulas; the
/// parameter instantiates c as well as shifted values such as c-1 or -c-1.
struct CherednikContext {
    int n;
    FieldScalar kappa;

    CherednikContext(int n, FieldScalar kappa) : n(n), kappa(std::move(kappa)) {
        if (n < 2) throw ShapeError("rank must be at least 2");
    }
};

/// Dunkl operator D_kappa(y_i), 0-based index.
SkewOperator dunkl(const CherednikContext& ctx, int i);

enum class IdempotentKind { triv, sign };

/// e = (1/n!) sum_w w  or  e_- = (1/n!) sum_w sign(w) w.
SkewOperator idempotent(int n, IdempotentKind kind);

/// nabla^2 = sum_i D_kappa(y_i)^2.
SkewOperator nabla2(const CherednikContext& ctx);

/// Calogero-Moser operator L_w = Delta - 2 sum_{i<j} w(w+1)/(x_i-x_j)^2
/// (both root signs and (alpha, alpha) = 2 folded in).
SkewOperator calogero_moser(int n, const FieldScalar& w);

/// Twisted Dunkl conjugation delta^{-w} u delta^{w}.
SkewOperator theta_spher(const SkewOperator& u, const FieldScalar& w);

/// Termwise twist: group elements pick up their sign and c goes to -c in
/// every coefficient; fixes functions and plain derivatives.
SkewOperator phi_twist(const SkewOperator& u);

/// Right-hand side of the radial-part identity:
/// delta^{-w} Delta delta^{w} + sum_alpha delta^{-w} (1/alpha) d_{h_alpha} delta^{w}
///   - sum_alpha w(w+1)/alpha^2.
SkewOperator radial_rhs(int n, const FieldScalar& w);

/// Good parameters: r is good iff r is not in C cap (-1, 0) where
/// C = { a/b : 2 <= b <= n }.
bool is_good(const Rational& r, int n);

/// The plain Laplacian sum_i d_i^2.
SkewOperator laplacian(int n);

} // namespace dunkl

#endif
