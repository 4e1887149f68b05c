#include <doctest.h>

#include <random>

#include "dunkl/locfrac.hpp"

using namespace dunkl;

namespace {

Poly x(int n, int i) { return Poly::variable_x(n, i); }

LocFrac random_frac(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3), e(0, 2), terms(1, 3), dp(0, 2);
    Poly p(n);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        m.xe.resize(static_cast<std::size_t>(n));
        m.ye.resize(static_cast<std::size_t>(n));
        for (auto& v : m.xe) v = e(rng);
        p.add_term(m, FieldScalar(coeff(rng)));
    }
    return LocFrac(p, dp(rng));
}

} // namespace

TEST_CASE("normalization divides out delta") {
    int n = 2;
    Poly d = discriminant(n);
    CHECK(LocFrac(d * x(n, 0), 2) == LocFrac(x(n, 0), 1));
    CHECK(LocFrac(x(n, 0), 0).dpow() == 0);
    CHECK(LocFrac(d * d, 1) == LocFrac(d, 0));
    CHECK(LocFrac(Poly(n), 3).is_zero());
    CHECK(LocFrac(Poly(n), 3).dpow() == 0);

    Poly bad = Poly::variable_y(n, 0);
    CHECK_THROWS_AS(LocFrac(bad, 0), WrongVariableFamily);
}

TEST_CASE("arithmetic over common delta power") {
    int n = 2;
    LocFrac inv_d = LocFrac::delta_inverse_power(n, 1);
    CHECK((inv_d + (-inv_d)).is_zero());
    CHECK(inv_d * LocFrac(discriminant(n), 0) == LocFrac::one(n));
    LocFrac sum = LocFrac(x(n, 0), 1) + LocFrac(x(n, 1), 1);
    CHECK(sum == LocFrac(x(n, 0) + x(n, 1), 1));
    CHECK(sum.dpow() == 1);
}

TEST_CASE("derivative by quotient rule") {
    int n = 2;
    // d/dx1 (1/(x1-x2)) = -1/(x1-x2)^2
    LocFrac inv_d = LocFrac::delta_inverse_power(n, 1);
    CHECK(inv_d.derivative(0) == -LocFrac::delta_inverse_power(n, 2));
    CHECK(LocFrac(x(n, 1), 0).derivative(0).is_zero());
    CHECK(LocFrac(discriminant(n), 1).derivative(0).is_zero()); // delta/delta = 1

    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        LocFrac f = random_frac(rng, 3), g = random_frac(rng, 3);
        CHECK((f * g).derivative(1) == f.derivative(1) * g + f * g.derivative(1));
        CHECK(f.derivative(0).derivative(2) == f.derivative(2).derivative(0));
    }
}

TEST_CASE("group action with delta sign") {
    int n = 3;
    std::mt19937 rng(13);
    auto group = Perm::all(n);
    for (int t = 0; t < 15; ++t) {
        LocFrac f = random_frac(rng, n), g = random_frac(rng, n);
        for (const Perm& w : group) {
            CHECK((f * g).group_act(w) == f.group_act(w) * g.group_act(w));
            for (const Perm& v : group)
                CHECK(f.group_act(v.compose(w)) == f.group_act(w).group_act(v));
        }
    }
    LocFrac inv_d = LocFrac::delta_inverse_power(n, 1);
    Perm s12 = Perm::transposition(n, 0, 1);
    CHECK(inv_d.group_act(s12) == -inv_d);
}

TEST_CASE("root inverses") {
    int n = 3;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            CHECK(root_inverse(n, i, j) * LocFrac(root_poly(n, i, j), 0) == LocFrac::one(n));
            CHECK(root_inverse(n, i, j) == -root_inverse(n, j, i));
        }
}
