#include <doctest.h>

#include "dunkl/isotypic.hpp"

using namespace dunkl;

namespace {

Poly xv(int n, int i) { return Poly::variable_x(n, i); }
Poly yv(int n, int i) { return Poly::variable_y(n, i); }

bool sign_semi_invariant(const Poly& p, int n, int m) {
    for (const Perm& w : Perm::all(n)) {
        Poly moved = p.group_act(w);
        Poly expect = (w.sign() < 0 && m % 2 == 1) ? -p : p;
        if (moved != expect) return false;
    }
    return true;
}

} // namespace

TEST_CASE("echelon basics") {
    int n = 2;
    PolyEchelon ech;
    CHECK(ech.insert(xv(n, 0)));
    CHECK(!ech.insert(xv(n, 0).scaled(FieldScalar::c())));
    CHECK(ech.insert(xv(n, 0) + xv(n, 1)));
    CHECK(ech.rank() == 2);
    CHECK(ech.in_span(xv(n, 1)));
    CHECK(!ech.in_span(yv(n, 0)));
    CHECK(!ech.insert(Poly(n)));
}

TEST_CASE("isotypic dimensions at n=2") {
    CHECK(isotypic_basis(2, Character::sign, {0, 0}).dim() == 0);
    CHECK(isotypic_basis(2, Character::triv, {0, 0}).dim() == 1);

    IsotypicBasis b10 = isotypic_basis(2, Character::sign, {1, 0});
    REQUIRE(b10.dim() == 1);
    PolyEchelon ech;
    ech.insert(xv(2, 0) - xv(2, 1));
    CHECK(ech.in_span(b10.basis[0]));

    CHECK(isotypic_basis(2, Character::sign, {1, 1}).dim() == 2);
    CHECK(isotypic_basis(2, Character::triv, {1, 1}).dim() == 2);
}

TEST_CASE("a_power_basis") {
    // m = 0 and m = 1 reduce to plain isotypic components.
    CHECK(a_power_basis(2, 0, {0, 0}).dim() == 1);
    CHECK(a_power_basis(2, 1, {1, 0}).dim() == 1);

    const IsotypicBasis& sq = a_power_basis(2, 2, {2, 0});
    REQUIRE(sq.dim() == 1);
    Poly d = xv(2, 0) - xv(2, 1);
    PolyEchelon ech;
    ech.insert(d * d);
    CHECK(ech.in_span(sq.basis[0]));

    // Elements of A^m transform by sign^m.
    for (int n = 2; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m)
            for (const Poly& p : a_power_basis(n, m, {m * (n * (n - 1) / 2), 1}).basis)
                CHECK(sign_semi_invariant(p, n, m));
}

TEST_CASE("a_power products land in higher powers") {
    int n = 3;
    // A^1 * A^1 is inside A^2, bidegree by bidegree.
    for (int i1 = 3; i1 <= 4; ++i1)
        for (int j1 = 0; j1 <= 1; ++j1)
            for (int i2 = 3; i2 <= 4; ++i2)
                for (int j2 = 0; j2 <= 1; ++j2) {
                    PolyEchelon target;
                    for (const Poly& p : a_power_basis(n, 2, {i1 + i2, j1 + j2}).basis)
                        target.insert(p);
                    for (const Poly& p : a_power_basis(n, 1, {i1, j1}).basis)
                        for (const Poly& q : a_power_basis(n, 1, {i2, j2}).basis)
                            CHECK(target.in_span(p * q));
                }
    // A^0 * A^2 stays in A^2.
    PolyEchelon target;
    for (const Poly& p : a_power_basis(n, 2, {8, 0}).basis) target.insert(p);
    for (const Poly& p : isotypic_basis(n, Character::triv, {2, 0}).basis)
        for (const Poly& q : a_power_basis(n, 2, {6, 0}).basis)
            CHECK(target.in_span(p * q));
}

TEST_CASE("exact_rank") {
    FieldScalar c = FieldScalar::c();
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{FieldScalar(0), FieldScalar(0)}}) == 0);
    CHECK(exact_rank({{FieldScalar(1), FieldScalar(0)},
                      {FieldScalar(0), FieldScalar(1)}}) == 2);
    CHECK(exact_rank({{FieldScalar(1), c}, {c, c * c}}) == 1);
    CHECK_THROWS_AS(exact_rank({{FieldScalar(1)}, {FieldScalar(1), c}}), ShapeError);
}

TEST_CASE("molien dimensions") {
    CHECK(molien_dimension(2, Character::triv, {0, 0}) == 1);
    CHECK(molien_dimension(2, Character::sign, {0, 0}) == 0);
    CHECK(molien_dimension(2, Character::sign, {1, 0}) == 1);
    CHECK(molien_dimension(2, Character::sign, {1, 1}) == 2);
    // triv + sign exhausts everything at n = 2.
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j)
            CHECK(molien_dimension(2, Character::triv, {i, j}) +
                      molien_dimension(2, Character::sign, {i, j}) ==
                  (i + 1) * (j + 1));
}

TEST_CASE("molien matches brute force") {
    for (int n = 2; n <= 3; ++n)
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 5; ++j)
                for (Character chi : {Character::triv, Character::sign})
                    CHECK(molien_dimension(n, chi, {i, j}) ==
                          isotypic_basis(n, chi, {i, j}).dim());
}
