#include <catch2/catch_amalgamated.hpp>

#include "gtkit/fields.hpp"
#include "gtkit/polynomial.hpp"
#include "gtkit/ring.hpp"
#include "gtkit/rng.hpp"
#include "gtkit/text.hpp"

using namespace gtkit;

TEST_CASE("rational arithmetic and parsing", "[core]") {
    Rational a(3, 6);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((a + Rational(1, 2)) == Rational(1));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
}

TEST_CASE("prime field validates its modulus", "[core]") {
    PrimeField fp(32003);
    CHECK(fp.name() == "F32003");
    CHECK(fp.eq(fp.from_int(32003), fp.zero()));
    CHECK(fp.eq(fp.mul(fp.from_int(2), fp.inv(fp.from_int(2))), fp.one()));
    CHECK(fp.eq(fp.from_rational(Rational(1, 2)), fp.inv(fp.from_int(2))));
    CHECK_THROWS_AS(PrimeField(1), DomainError);
    CHECK_THROWS_AS(PrimeField(2), DomainError);
    CHECK_THROWS_AS(PrimeField(15), DomainError);
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("rng streams are reproducible", "[core]") {
    Rng a(2026), b(2026), c(99);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 50; ++i) {
        const auto va = a.next();
        if (va != b.next()) all_equal = false;
        if (va != c.next()) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
    Rng d(7), e(7);
    std::vector<int> v1{1, 2, 3, 4, 5, 6}, v2 = v1;
    d.shuffle(v1);
    e.shuffle(v2);
    CHECK(v1 == v2);
    CHECK(!d.nonzero_rational(5, 3).is_zero());
}

TEST_CASE("grid rings name and index variables", "[core]") {
    QField q;
    auto r3 = make_grid_ring(3, q);
    CHECK(r3->nvars() == 9);
    CHECK(r3->name(r3->id(2, 3)) == "x23");
    CHECK(r3->find(3, 1) >= 0);
    CHECK_THROWS_AS(r3->id(4, 1), DomainError);
    auto sub = make_sub_ring(3, {Variable{2, 1}, Variable{1, 2}}, q);
    CHECK(sub->nvars() == 2);
    CHECK(sub->find(3, 3) == -1);
    CHECK(same_ring(r3, make_grid_ring(3, q)));
    CHECK(!same_ring(r3, sub));
    auto lex = with_order(r3, MonomialOrder{OrderKind::Lex, 0});
    CHECK(lex->order().name() == "lex");
    CHECK(!same_ring(r3, lex));
}

TEST_CASE("polynomial arithmetic stays canonical", "[core]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    CHECK(to_string(P("x11 + x11")) == "2*x11");
    CHECK((P("x11 + x22") - P("x22")) == P("x11"));
    CHECK((P("x11") * P("x11")) == P("x11^2"));
    CHECK(P("x11 + x12").pow(2) == P("x11^2 + 2*x11*x12 + x12^2"));
    CHECK((P("x11") - P("x11")).is_zero());
    CHECK(to_string(P("-3/2 * x12^2 * x21")) == "-3/2*x12^2*x21");

    auto f = P("x11^2 + x12*x21 + x22");
    auto [hom, deg] = is_homogeneous(f);
    CHECK(!hom);
    auto [hom2, deg2] = is_homogeneous(P("x11^2 + x12*x21"));
    CHECK(hom2);
    CHECK(deg2 == 2);
    CHECK(leading_form(f) == P("x11^2 + x12*x21"));
    CHECK(derivative(P("x11^3 + x11*x22"), r->id(1, 1)) == P("3*x11^2 + x22"));
}

TEST_CASE("substitution and evaluation agree with hand values", "[core]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    auto f = P("x11^2 + 2*x12*x21 + x22^2");
    CHECK(substitute_zero(f, {r->id(1, 2)}) == P("x11^2 + x22^2"));
    CHECK(substitute_zero(f, {r->id(1, 1), r->id(2, 2), r->id(1, 2)}).is_zero());

    std::vector<Rational> pt(4, Rational(0));
    pt[static_cast<std::size_t>(r->id(1, 1))] = Rational(1);
    pt[static_cast<std::size_t>(r->id(1, 2))] = Rational(2);
    pt[static_cast<std::size_t>(r->id(2, 1))] = Rational(3);
    pt[static_cast<std::size_t>(r->id(2, 2))] = Rational(4);
    CHECK(evaluate(f, pt) == Rational(1 + 12 + 16));
}

TEST_CASE("text round trips and transport by name", "[core]") {
    QField q;
    auto r = make_grid_ring(3, q);
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Polynomial<QField> f = Polynomial<QField>::zero(r);
        for (int t = 0; t < 4; ++t) {
            auto m = Polynomial<QField>::variable(r, static_cast<int>(rng.uniform(0, 8)));
            auto m2 = Polynomial<QField>::variable(r, static_cast<int>(rng.uniform(0, 8)));
            f = f + m * m2.scaled(rng.rational(9, 5));
        }
        CHECK(parse_polynomial(r, to_string(f)) == f);
    }
    auto sub = make_sub_ring(3, {Variable{1, 1}, Variable{2, 2}, Variable{1, 2}}, q);
    auto g = parse_polynomial(sub, "x11*x22 - x12");
    auto moved = transport(g, r);
    CHECK(to_string(moved) == "x11*x22 - x12");
    CHECK(transport(moved, sub) == g);

    PrimeField fp(32003);
    auto rp = make_grid_ring(2, fp);
    auto h = parse_polynomial(make_grid_ring(2, q), "1/2*x11 + 32003*x22 + x12");
    auto hp = mod_reduce(h, rp);
    CHECK(to_string(hp) == "16002*x11 + x12");
}
