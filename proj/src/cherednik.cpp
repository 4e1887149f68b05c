#include "dunkl/cherednik.hpp"

namespace dunkl {

SkewOperator dunkl(const CherednikContext& ctx, int i) {
    const int n = ctx.n;
    if (i < 0 || i >= n) throw ShapeError("dunkl: index out of range");
    SkewOperator op = SkewOperator::partial(n, i);
    for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        // - kappa/(x_i-x_k) (1 - s_ik)
        LocFrac coeff = root_inverse(n, i, k).scaled(-ctx.kappa);
        SkewOperator::TermKey id_key{std::vector<int>(n, 0), Perm::identity(n)};
        SkewOperator::TermKey sw_key{std::vector<int>(n, 0), Perm::transposition(n, i, k)};
        op.add_term(id_key, coeff);
        op.add_term(sw_key, -coeff);
    }
    return op;
}

SkewOperator idempotent(int n, IdempotentKind kind) {
    SkewOperator op(n);
    Rational scale(1);
    for (int k = 2; k <= n; ++k) scale *= k;
    FieldScalar inv_fact(Rational(1) / scale);
    std::vector<int> zero(n, 0);
    for (const Perm& w : Perm::all(n)) {
        FieldScalar s = inv_fact;
        if (kind == IdempotentKind::sign && w.sign() < 0) s = -s;
        op.add_term(SkewOperator::TermKey{zero, w}, LocFrac::constant(n, s));
    }
    return op;
}

SkewOperator nabla2(const CherednikContext& ctx) {
    SkewOperator acc(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
        SkewOperator d = dunkl(ctx, i);
        acc += d * d;
    }
    return acc;
}

SkewOperator laplacian(int n) {
    SkewOperator acc(n);
    for (int i = 0; i < n; ++i) {
        SkewOperator d = SkewOperator::partial(n, i);
        acc += d * d;
    }
    return acc;
}

SkewOperator calogero_moser(int n, const FieldScalar& w) {
    SkewOperator acc = laplacian(n);
    FieldScalar amount = w * (w + FieldScalar(1)) * FieldScalar(2);
    std::vector<int> zero(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LocFrac inv = root_inverse(n, i, j);
            acc.add_term(SkewOperator::TermKey{zero, Perm::identity(n)},
                         (inv * inv).scaled(-amount));
        }
    return acc;
}

SkewOperator theta_spher(const SkewOperator& u, const FieldScalar& w) {
    return u.conjugate_by_delta_power(w);
}

SkewOperator phi_twist(const SkewOperator& u) {
    FieldScalar minus_c = -FieldScalar::c();
    SkewOperator out(u.n());
    for (const auto& [key, coeff] : u.terms()) {
        LocFrac f = coeff.substitute_parameter(minus_c);
        if (key.w.sign() < 0) f = -f;
        out.add_term(key, f);
    }
    return out;
}

SkewOperator radial_rhs(int n, const FieldScalar& w) {
    SkewOperator acc = theta_spher(laplacian(n), w);
    FieldScalar amount = w * (w + FieldScalar(1));
    std::vector<int> zero(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Both root signs alpha = +-(x_i - x_j) contribute equally to
            // (1/alpha) d_{h_alpha}: each gives (1/(x_i-x_j))(d_i - d_j).
            LocFrac inv = root_inverse(n, i, j);
            SkewOperator dir = SkewOperator::partial(n, i) - SkewOperator::partial(n, j);
            acc += theta_spher(dir.mul_coeff_left(inv), w).scaled(FieldScalar(2));
            acc.add_term(SkewOperator::TermKey{zero, Perm::identity(n)},
                         (inv * inv).scaled(-amount * FieldScalar(2)));
        }
    return acc;
}

bool is_good(const Rational& r, int n) {
    if (r >= 0 || r <= -1) return true;
    for (int b = 2; b <= n; ++b) {
        Rational rb = r * b;
        rb.canonicalize();
        if (rb.get_den() == 1) return false;
    }
    return true;
}

} // namespace dunkl
