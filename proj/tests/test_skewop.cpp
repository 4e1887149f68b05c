#include <doctest.h>

#include <random>

#include "dunkl/cherednik.hpp"

using namespace dunkl;

namespace {

SkewOperator xop(int n, int i) {
    return SkewOperator::coefficient(LocFrac(Poly::variable_x(n, i), 0));
}
SkewOperator dop(int n, int i) { return SkewOperator::partial(n, i); }
SkewOperator sop(int n, int i, int j) { return SkewOperator::group(Perm::transposition(n, i, j)); }

SkewOperator random_op(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-2, 2), e(0, 1), dp(0, 1), terms(1, 3);
    auto group = Perm::all(n);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    SkewOperator u(n);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        m.xe.resize(static_cast<std::size_t>(n));
        m.ye.resize(static_cast<std::size_t>(n));
        for (auto& v : m.xe) v = e(rng);
        Poly num(n);
        num.add_term(m, FieldScalar(coeff(rng)));
        LocFrac f(num, dp(rng));
        if (f.is_zero()) continue;
        std::vector<int> dexp(static_cast<std::size_t>(n));
        for (auto& v : dexp) v = e(rng);
        u.add_term(SkewOperator::TermKey{dexp, group[pick(rng)]}, f);
    }
    return u;
}

LocFrac random_frac(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3), e(0, 2), dp(0, 1);
    Monomial m;
    m.xe.resize(static_cast<std::size_t>(n));
    m.ye.resize(static_cast<std::size_t>(n));
    for (auto& v : m.xe) v = e(rng);
    Poly num(n);
    num.add_term(m, FieldScalar(coeff(rng)));
    return LocFrac(num, dp(rng));
}

} // namespace

TEST_CASE("skew multiplication basic relations") {
    int n = 2;
    // Weyl relation: d1 * x1 = x1 d1 + 1
    CHECK(dop(n, 0) * xop(n, 0) == xop(n, 0) * dop(n, 0) + SkewOperator::one(n));
    // group past function: s12 * x1 = x2 * s12
    CHECK(sop(n, 0, 1) * xop(n, 0) == xop(n, 1) * sop(n, 0, 1));
    // group past derivative: s12 * d1 = d2 * s12
    CHECK(sop(n, 0, 1) * dop(n, 0) == dop(n, 1) * sop(n, 0, 1));
}

TEST_CASE("associativity and module action") {
    std::mt19937 rng(21);
    for (int t = 0; t < 15; ++t) {
        SkewOperator a = random_op(rng, 3), b = random_op(rng, 3), c = random_op(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        LocFrac f = random_frac(rng, 3);
        CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("apply examples") {
    int n = 2;
    Poly x1 = Poly::variable_x(n, 0);
    CHECK(dop(n, 0).apply(LocFrac(x1 * x1, 0)) == LocFrac(x1.scaled(FieldScalar(2)), 0));
    CHECK(sop(n, 0, 1).apply(LocFrac(x1, 0)) == LocFrac(Poly::variable_x(n, 1), 0));
    SkewOperator u = xop(n, 0) * dop(n, 0) + SkewOperator::one(n);
    CHECK(u.apply(LocFrac::one(n)) == LocFrac::one(n));
}

TEST_CASE("gamma degree and principal symbol") {
    int n = 2;
    SkewOperator u = xop(n, 0) * dop(n, 0) * dop(n, 0) * sop(n, 0, 1);
    CHECK(u.gamma_degree() == 2);
    CHECK(SkewOperator::delta_power(n, -1).gamma_degree() == 0);
    CHECK(SkewOperator(n).gamma_degree() == -1);
    CHECK_THROWS_AS(SkewOperator(n).principal_symbol(), ZeroOperator);

    // sigma(d1^2 + x1 d1) = y1^2
    SkewOperator v = dop(n, 0) * dop(n, 0) + xop(n, 0) * dop(n, 0);
    SymbolElement sym = v.principal_symbol();
    SymbolElement expect(n);
    expect.add(Perm::identity(n), LocPoly(Poly::variable_y(n, 0) * Poly::variable_y(n, 0), 0));
    CHECK(sym == expect);

    // sigma(Dunkl) = y1: the reflection part has order 0
    SkewOperator d = dunkl::dunkl(CherednikContext(n, FieldScalar::c()), 0);
    SymbolElement dsym = d.principal_symbol();
    SymbolElement dexpect(n);
    dexpect.add(Perm::identity(n), LocPoly(Poly::variable_y(n, 0), 0));
    CHECK(dsym == dexpect);

    // order-0 operator is its own symbol
    SkewOperator w = SkewOperator::coefficient(LocFrac(discriminant(n), 0)) * sop(n, 0, 1);
    SymbolElement wsym = w.principal_symbol();
    SymbolElement wexpect(n);
    wexpect.add(Perm::transposition(n, 0, 1), LocPoly(discriminant(n), 0));
    CHECK(wsym == wexpect);
}

TEST_CASE("symbol multiplicativity at top order") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        SkewOperator a = random_op(rng, 2), b = random_op(rng, 2);
        SkewOperator ab = a * b;
        if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
        CHECK(ab.gamma_degree() <= a.gamma_degree() + b.gamma_degree());
        if (ab.gamma_degree() == a.gamma_degree() + b.gamma_degree())
            CHECK(ab.principal_symbol() == a.principal_symbol() * b.principal_symbol());
    }
}

TEST_CASE("conjugation by delta powers") {
    int n = 2;
    FieldScalar w = FieldScalar::c(); // formal exponent
    // delta^-w d1 delta^w = d1 + w/(x1-x2)
    SkewOperator lhs = dop(n, 0).conjugate_by_delta_power(w);
    SkewOperator expect = dop(n, 0) + SkewOperator::coefficient(root_inverse(n, 0, 1).scaled(w));
    CHECK(lhs == expect);
    // functions are fixed
    CHECK(xop(n, 0).conjugate_by_delta_power(w) == xop(n, 0));
    // exponent zero is the identity map
    SkewOperator u = dop(n, 0) * xop(n, 1) * sop(n, 0, 1);
    CHECK(u.conjugate_by_delta_power(FieldScalar(0)) == u);
    // odd permutations need an integer exponent
    CHECK_THROWS_AS(sop(n, 0, 1).conjugate_by_delta_power(w), OddPermutationUnderFormalTwist);
    CHECK(sop(n, 0, 1).conjugate_by_delta_power(FieldScalar(3)) == -sop(n, 0, 1));

    // integer w agrees with explicit delta^-1 u delta
    std::mt19937 rng(41);
    for (int t = 0; t < 10; ++t) {
        SkewOperator a = random_op(rng, 2);
        SkewOperator direct = SkewOperator::delta_power(2, -1) * a * SkewOperator::delta_power(2, 1);
        CHECK(a.conjugate_by_delta_power(FieldScalar(1)) == direct);
    }

    // multiplicative on group-free operators with formal exponent
    for (int t = 0; t < 10; ++t) {
        SkewOperator a = random_op(rng, 2).mul_group_right(Perm::identity(2));
        SkewOperator b = random_op(rng, 2);
        SkewOperator af(2), bf(2);
        for (const auto& [key, coeff] : a.terms())
            if (key.w.is_identity()) af.add_term(key, coeff);
        for (const auto& [key, coeff] : b.terms())
            if (key.w.is_identity()) bf.add_term(key, coeff);
        CHECK((af * bf).conjugate_by_delta_power(w) ==
              af.conjugate_by_delta_power(w) * bf.conjugate_by_delta_power(w));
    }
}

TEST_CASE("specialization at rational c") {
    int n = 2;
    SkewOperator d = dunkl::dunkl(CherednikContext(n, FieldScalar::c()), 0);
    CHECK(d.specialize_c(Rational(0)) == dop(n, 0));
    SkewOperator expect_half = dunkl::dunkl(CherednikContext(n, FieldScalar(Rational(1, 2))), 0);
    CHECK(d.specialize_c(Rational(1, 2)) == expect_half);

    SkewOperator pole =
        dop(n, 0).scaled(FieldScalar(1) / (FieldScalar::c() - FieldScalar(1)));
    CHECK_THROWS_AS(pole.specialize_c(Rational(1)), PoleAtSpecialization);

    std::mt19937 rng(51);
    for (int t = 0; t < 10; ++t) {
        SkewOperator a = random_op(rng, 2), b = random_op(rng, 2);
        CHECK((a * b).specialize_c(Rational(2, 3)) ==
              a.specialize_c(Rational(2, 3)) * b.specialize_c(Rational(2, 3)));
    }
}

TEST_CASE("spherical scalar symbols") {
    int n = 2;
    SkewOperator E = idempotent(n, IdempotentKind::triv);
    // u = e d1 d2 e has spherical symbol y1 y2
    SkewOperator u = E * dop(n, 0) * dop(n, 1) * E;
    LocPoly p = u.spherical_scalar_symbol();
    CHECK(p == LocPoly(Poly::variable_y(n, 0) * Poly::variable_y(n, 1), 0));
    CHECK(E.spherical_scalar_symbol() == LocPoly(Poly::constant(n, FieldScalar(1)), 0));
    CHECK_THROWS_AS(dop(n, 0).spherical_scalar_symbol(), NotSpherical);
}
