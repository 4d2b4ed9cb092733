#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "transversal/errors.hpp"

using namespace transversal;
using tu::P;

TEST_CASE("rational canonical form")
{
    Rational a = rational_from_string("4/6");
    CHECK(a == rat(2, 3));
    CHECK(rational_to_string(a) == "2/3");
    CHECK(rational_from_string("-10/4") == rat(-5, 2));
    CHECK(rational_to_string(rational_from_string("0")) == "0");
    CHECK(rat(3, -6) == rat(-1, 2));  // denominator normalized positive
    CHECK_THROWS_AS(rational_from_string("1/0"), InvalidArgumentError);
    CHECK_THROWS_AS(rational_from_string("x"), InvalidArgumentError);
}

TEST_CASE("monomial comparisons")
{
    auto r = tu::ring_xy();
    Monomial xy({1, 1});
    Monomial y2({0, 2});
    Monomial one({0, 0});
    Monomial x({1, 0});

    CHECK(compare_monomials(xy, y2, TermOrder::degrevlex()) == Ordering::Greater);
    CHECK(compare_monomials(xy, xy, TermOrder::degrevlex()) == Ordering::Equal);
    CHECK(compare_monomials(one, x, TermOrder::lex()) == Ordering::Less);

    Monomial bad({1, 0, 0});
    CHECK_THROWS_AS(compare_monomials(x, bad, TermOrder::lex()), DimensionError);
}

TEST_CASE("term orders are total, antisymmetric, transitive, with 1 minimal")
{
    auto r3 = tu::ring_xyz();
    std::vector<TermOrder> orders = {TermOrder::lex(), TermOrder::degrevlex(),
                                     TermOrder::block_elimination(1),
                                     TermOrder::tdegree_first(1, 3)};
    std::mt19937 rng(12345);
    for (const auto& ord : orders) {
        Monomial one = Monomial::one(3);
        for (int it = 0; it < 300; ++it) {
            Monomial a = tu::random_monomial(rng, r3, 5);
            Monomial b = tu::random_monomial(rng, r3, 5);
            Monomial c = tu::random_monomial(rng, r3, 5);
            Ordering ab = compare_monomials(a, b, ord);
            Ordering ba = compare_monomials(b, a, ord);
            CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
            CHECK((ab == Ordering::Equal) == (a == b));
            if (compare_monomials(a, b, ord) != Ordering::Greater &&
                compare_monomials(b, c, ord) != Ordering::Greater) {
                CHECK(compare_monomials(a, c, ord) != Ordering::Greater);
            }
            if (!(a == one))
                CHECK(compare_monomials(a, one, ord) == Ordering::Greater);
            // multiplicative: a < b => aw < bw
            Monomial w = tu::random_monomial(rng, r3, 3);
            if (ab == Ordering::Less)
                CHECK(compare_monomials(a * w, b * w, ord) == Ordering::Less);
        }
    }
}

TEST_CASE("polynomial arithmetic fixtures")
{
    auto r = tu::ring_xy();
    CHECK(P(r, "x+y") * P(r, "x-y") == P(r, "x^2-y^2"));
    Polynomial f = P(r, "3*x^2*y - 7*y + 1/2");
    CHECK(f + Polynomial::zero(r) == f);
    CHECK(P(r, "1/2*x") * P(r, "2/3*x") == P(r, "1/3*x^2"));
}

TEST_CASE("ring axioms on random polynomials")
{
    auto r = tu::ring_xyz();
    std::mt19937 rng(987);
    for (int it = 0; it < 60; ++it) {
        Polynomial f = tu::random_poly(rng, r, 3, 3);
        Polynomial g = tu::random_poly(rng, r, 3, 3);
        Polynomial h = tu::random_poly(rng, r, 3, 3);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Polynomial::zero(r));
    }
}

TEST_CASE("poly mul requires matching rings")
{
    auto a = tu::ring_xy();
    auto b = tu::ring_xyz();
    CHECK_THROWS_AS(P(a, "x") * P(b, "x"), RingMismatchError);
}

TEST_CASE("parser/printer round-trip")
{
    auto r = tu::ring_xyz();
    std::vector<std::string> cases = {
        "3/2*x^2*y - z + 1", "x", "0", "-x^3", "1/7", "x*y*z - 2*x + 5/3*z^4",
    };
    for (const auto& s : cases) {
        Polynomial p = P(r, s);
        CHECK(P(r, print_polynomial(p)) == p);
    }
    std::mt19937 rng(5150);
    for (int it = 0; it < 100; ++it) {
        Polynomial p = tu::random_poly(rng, r, 4, 5);
        CHECK(P(r, print_polynomial(p)) == p);
    }
    CHECK_THROWS_AS(P(r, "x +"), ParseError);
    CHECK_THROWS_AS(P(r, "q"), ParseError);
    CHECK_THROWS_AS(P(r, "x y"), ParseError);
}

TEST_CASE("reduce_mod_ring in QQ[z,t]/(zt)")
{
    auto B = tu::ring_zt_mod_zt();
    CHECK(reduce_mod_ring(P(B, "z*t")).is_zero());
    CHECK(reduce_mod_ring(P(B, "z^2")) == P(B, "z^2"));
    CHECK(reduce_mod_ring(P(B, "z^2*t + z")) == P(B, "z"));

    // idempotent and QQ-linear on random inputs
    std::mt19937 rng(777);
    for (int it = 0; it < 50; ++it) {
        Polynomial f = tu::random_poly(rng, B, 4, 4);
        Polynomial g = tu::random_poly(rng, B, 4, 4);
        Polynomial rf = reduce_mod_ring(f);
        CHECK(reduce_mod_ring(rf) == rf);
        CHECK(reduce_mod_ring(f + g) == reduce_mod_ring(rf + reduce_mod_ring(g)));
    }

    // identity on free rings
    auto r = tu::ring_xy();
    Polynomial p = P(r, "x^2+y");
    CHECK(reduce_mod_ring(p) == p);
}

TEST_CASE("polynomial evaluation")
{
    auto r = tu::ring_xy();
    Polynomial f = P(r, "x^2*y - 3*x + 1/2");
    std::vector<Rational> pt = {rat(2), rat(-1)};
    CHECK(f.evaluate(pt) == rat(-4) - rat(6) + rat(1, 2));
}

TEST_CASE("homogeneity with weights")
{
    auto r = tu::ring_xy();
    CHECK(P(r, "x^2 + x*y").is_homogeneous());
    CHECK_FALSE(P(r, "x^2 + x").is_homogeneous());
    std::vector<long> w = {2, 1};
    CHECK(P(r, "x + y^2").is_homogeneous(w));
}
