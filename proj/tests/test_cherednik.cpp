#include <doctest.h>

#include "dunkl/cherednik.hpp"

using namespace dunkl;

namespace {

SkewOperator dop(int n, int i) { return SkewOperator::partial(n, i); }
SkewOperator sop(int n, int i, int j) { return SkewOperator::group(Perm::transposition(n, i, j)); }

} // namespace

TEST_CASE("dunkl operator shape at n=2") {
    int n = 2;
    FieldScalar kappa = FieldScalar::c();
    SkewOperator d = dunkl::dunkl(CherednikContext(n, kappa), 0);
    // d1 - kappa/(x1-x2) (1 - s12)
    SkewOperator expect = dop(n, 0) -
                          SkewOperator::coefficient(root_inverse(n, 0, 1).scaled(kappa)) *
                              (SkewOperator::one(n) - sop(n, 0, 1));
    CHECK(d == expect);

    CHECK(d.apply(LocFrac::one(n)).is_zero());
    LocFrac x1(Poly::variable_x(n, 0), 0);
    CHECK(d.apply(x1) == LocFrac::constant(n, FieldScalar(1) - kappa));
}

TEST_CASE("dunkl action preserves polynomials") {
    for (int n = 2; n <= 3; ++n) {
        CherednikContext ctx(n, FieldScalar::c());
        for (int i = 0; i < n; ++i) {
            SkewOperator d = dunkl::dunkl(ctx, i);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Poly p = Poly::variable_x(n, j) * Poly::variable_x(n, j) * Poly::variable_x(n, k);
                    CHECK(d.apply(LocFrac(p, 0)).dpow() == 0);
                }
        }
    }
}

TEST_CASE("idempotents") {
    for (int n = 2; n <= 3; ++n) {
        SkewOperator e = idempotent(n, IdempotentKind::triv);
        SkewOperator es = idempotent(n, IdempotentKind::sign);
        CHECK(e * e == e);
        CHECK(es * es == es);
        CHECK((e * es).is_zero());
        CHECK(sop(n, 0, 1) * e == e);
        CHECK(sop(n, 0, 1) * es == -es);
    }
}

TEST_CASE("nabla squared") {
    int n = 2;
    CHECK(nabla2(CherednikContext(n, FieldScalar(0))) == laplacian(n));
    CHECK(nabla2(CherednikContext(n, FieldScalar::c())).gamma_degree() == 2);
}

TEST_CASE("calogero-moser operator") {
    int n = 2;
    FieldScalar w = FieldScalar::c();
    SkewOperator L = calogero_moser(n, w);
    LocFrac inv2 = root_inverse(n, 0, 1) * root_inverse(n, 0, 1);
    SkewOperator expect =
        laplacian(n) - SkewOperator::coefficient(inv2.scaled(w * (w + FieldScalar(1)) * FieldScalar(2)));
    CHECK(L == expect);
    CHECK(calogero_moser(n, FieldScalar(0)) == laplacian(n));
    // L_w = L_{-(w+1)}
    CHECK(L == calogero_moser(n, -(w + FieldScalar(1))));
}

TEST_CASE("twisted conjugation of the laplacian") {
    int n = 2;
    FieldScalar w = FieldScalar::c();
    SkewOperator lhs = theta_spher(laplacian(n), w);
    LocFrac inv = root_inverse(n, 0, 1);
    SkewOperator expect =
        laplacian(n) +
        SkewOperator::coefficient(inv.scaled(w * FieldScalar(2))) * (dop(n, 0) - dop(n, 1)) +
        SkewOperator::coefficient(
            (inv * inv).scaled(w * (w - FieldScalar(1)) * FieldScalar(2)));
    CHECK(lhs == expect);
    CHECK(theta_spher(laplacian(n), FieldScalar(0)) == laplacian(n));
    SkewOperator x1 = SkewOperator::coefficient(LocFrac(Poly::variable_x(n, 0), 0));
    CHECK(theta_spher(x1, w) == x1);
}

TEST_CASE("termwise twist") {
    int n = 2;
    CHECK(phi_twist(sop(n, 0, 1)) == -sop(n, 0, 1));
    SkewOperator x1 = SkewOperator::coefficient(LocFrac(Poly::variable_x(n, 0), 0));
    CHECK(phi_twist(x1) == x1);
    CHECK(phi_twist(phi_twist(sop(n, 0, 1) .scaled(FieldScalar::c()))) ==
          sop(n, 0, 1).scaled(FieldScalar::c()));

    // On the bare Dunkl operator the termwise twist flips the reflection
    // coefficient's sign along with c -> -c:
    FieldScalar c = FieldScalar::c();
    SkewOperator d = dunkl::dunkl(CherednikContext(n, c), 0);
    LocFrac inv = root_inverse(n, 0, 1);
    SkewOperator expect = dop(n, 0) + SkewOperator::coefficient(inv.scaled(c)) +
                          SkewOperator::coefficient(inv.scaled(c)) * sop(n, 0, 1);
    CHECK(phi_twist(d) == expect);
}

TEST_CASE("radial right-hand side") {
    int n = 2;
    // w = 0: Delta + sum over both roots of (1/alpha) d_{h_alpha}
    SkewOperator r0 = radial_rhs(n, FieldScalar(0));
    SkewOperator expect = laplacian(n) +
                          SkewOperator::coefficient(root_inverse(n, 0, 1).scaled(FieldScalar(2))) *
                              (dop(n, 0) - dop(n, 1));
    CHECK(r0 == expect);
    CHECK(radial_rhs(n, FieldScalar::c()).gamma_degree() == 2);
}

TEST_CASE("good parameter predicate") {
    CHECK(!is_good(Rational(-1, 2), 2));
    CHECK(is_good(Rational(1, 2), 2));
    CHECK(is_good(Rational(5), 3));
    CHECK(!is_good(Rational(-1, 3), 3));
    CHECK(is_good(Rational(-1, 3), 2));
    CHECK(!is_good(Rational(-2, 3), 3));
    CHECK(is_good(Rational(-1), 4));
    CHECK(is_good(Rational(0), 4));
    CHECK(!is_good(Rational(-1, 2), 4));
}
