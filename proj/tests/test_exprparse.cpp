#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "dunkl/exprparse.hpp"

using namespace dunkl;

namespace {

SkewOperator parse_op(const std::string& src, int n) { return elaborate(*parse(src, n), n); }

} // namespace

TEST_CASE("parse and elaborate core atoms") {
    int n = 2;
    CherednikContext ctx(n, FieldScalar::c());
    CHECK(parse_op("y1", n) == dunkl::dunkl(ctx, 0));
    CHECK(parse_op("d1 - c * del^-1 * (1 - s(1,2))", n) == dunkl::dunkl(ctx, 0));
    CHECK(parse_op("del^-1 * del", n) == SkewOperator::one(n));
    CHECK(parse_op("e", n) == idempotent(n, IdempotentKind::triv));
    CHECK(parse_op("e_", n) == idempotent(n, IdempotentKind::sign));
    CHECK(parse_op("s(1,2)*x1", n) ==
          SkewOperator::coefficient(LocFrac(Poly::variable_x(n, 1), 0)) *
              SkewOperator::group(Perm::transposition(n, 0, 1)));
    CHECK(parse_op("-x1 + x1", n).is_zero());
    CHECK(parse_op("3/4", n) == SkewOperator::scalar(n, FieldScalar(Rational(3, 4))));
    CHECK(parse_op("(c + 1)^2", n) ==
          SkewOperator::scalar(n, (FieldScalar::c() + FieldScalar(1)) *
                                      (FieldScalar::c() + FieldScalar(1))));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse("x3", 2), ParseError);
    CHECK_THROWS_AS(parse("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse("s(1,1)", 2), ParseError);
    CHECK_THROWS_AS(parse("", 2), ParseError);
    CHECK_THROWS_AS(parse("x1^99999", 2), ParseError);
    try {
        parse("x1 + @", 2);
        CHECK(false);
    } catch (const ParseError& err) {
        CHECK(err.offset == 5);
    }
}

TEST_CASE("negative exponents restricted to scalars and del") {
    int n = 2;
    CHECK_THROWS_AS(parse_op("x1^-1", n), ParseError);
    CHECK_THROWS_AS(parse_op("(1 - 1)^-1", n), DivisionByZero);
    CHECK(parse_op("(2)^-1", n) == SkewOperator::scalar(n, FieldScalar(Rational(1, 2))));
    CHECK(parse_op("del^-2 * del^2", n) == SkewOperator::one(n));
}

TEST_CASE("render") {
    int n = 2;
    CHECK(render(idempotent(n, IdempotentKind::triv)) == "1/2 + 1/2*s(1,2)");
    CHECK(render(SkewOperator::zero(n)) == "0");
    CHECK(render(LocFrac::constant(n, FieldScalar(1) - FieldScalar::c())) == "1 - c");
}

TEST_CASE("render round-trips") {
    int n = 2;
    std::vector<std::string> corpus = {
        "y1", "y2", "y1*y1 + y2*y2", "e * del^-1 * e", "d1*d2 - x1*d2^2",
        "c^2 * s(1,2) - 1/3", "del^-3", "e_ * x1 * e", "-d1 + d1*s(1,2)",
        "(x1 - x2)^2 * del^-1",
    };
    std::mt19937 rng(20240817);
    std::vector<std::string> atoms = {"x1", "x2", "d1", "d2", "s(1,2)", "e", "e_",
                                      "del", "c",  "2",  "1/2"};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(atoms.size()) - 1);
    std::uniform_int_distribution<int> len(1, 4);
    for (int t = 0; t < 40; ++t) {
        std::string s = atoms[pick(rng)];
        int k = len(rng);
        for (int f = 1; f < k; ++f) s += (rng() % 2 ? " + " : " * ") + atoms[pick(rng)];
        corpus.push_back(s);
    }
    for (const std::string& src : corpus) {
        SkewOperator u = parse_op(src, n);
        SkewOperator again = parse_op(render(u), n);
        CHECK(u == again);
    }
}
