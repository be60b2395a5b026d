#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "gtkit/groebner.hpp"
#include "gtkit/gt_systems.hpp"
#include "gtkit/ideal_ops.hpp"
#include "gtkit/rng.hpp"
#include "gtkit/text.hpp"

using namespace gtkit;

namespace {

std::multiset<std::string> basis_strings(const std::vector<Polynomial<QField>>& gb) {
    std::multiset<std::string> out;
    for (const auto& g : gb) out.insert(to_string(g));
    return out;
}

}  // namespace

TEST_CASE("reduced bases of pinned systems", "[engine]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };

    auto gb1 = groebner_basis(r, {P("x11"), P("x11 + x22")});
    REQUIRE(gb1.size() == 2);
    CHECK(basis_strings(gb1) == std::multiset<std::string>{"x11", "x22"});

    auto gb2 = groebner_basis(
        r, {P("x11"), P("x11 + x22"), P("x11^2 + 2*x12*x21 + x22^2")});
    REQUIRE(gb2.size() == 3);
    CHECK(basis_strings(gb2) == std::multiset<std::string>{"x11", "x22", "x12*x21"});

    auto nf = normal_form(P("x11^2 + 2*x12*x21 + x22^2"),
                          groebner_basis(r, {P("x11"), P("x11 + x22")}));
    CHECK(to_string(nf) == "2*x12*x21");
}

TEST_CASE("reduced basis is independent of generator order", "[engine]") {
    QField q;
    Rng rng(31);
    auto check_shuffles = [&](const RingPtr<QField>& ring,
                              std::vector<Polynomial<QField>> gens) {
        const auto baseline = basis_strings(groebner_basis(ring, gens));
        for (int s = 0; s < 8; ++s) {
            rng.shuffle(gens);
            CHECK(basis_strings(groebner_basis(ring, gens)) == baseline);
        }
    };
    auto g3 = gamma_bar_system(3, q);
    check_shuffles(g3.ring, g3.generators);
    auto s3 = sigma_system(3, q);
    check_shuffles(s3.ring, s3.generators);
    auto c2 = chi_system(2, q);
    check_shuffles(c2.ring, c2.generators);
}

TEST_CASE("normal form is linear over the field", "[engine]") {
    QField q;
    auto sys = gamma_bar_system(2, q);
    Ideal<QField> ideal(sys.ring, sys.generators);
    Rng rng(47);
    auto random_poly = [&] {
        auto f = Polynomial<QField>::zero(sys.ring);
        for (int t = 0; t < 3; ++t) {
            auto v = Polynomial<QField>::variable(sys.ring,
                                                  static_cast<int>(rng.uniform(0, 3)));
            auto w = Polynomial<QField>::variable(sys.ring,
                                                  static_cast<int>(rng.uniform(0, 3)));
            f = f + (v * w).scaled(rng.rational(7, 4)) + v.scaled(rng.rational(7, 4));
        }
        return f;
    };
    for (int i = 0; i < 25; ++i) {
        auto f = random_poly(), g = random_poly();
        auto a = rng.rational(5, 3), b = rng.nonzero_rational(5, 3);
        auto lhs = ideal.normal_form(f.scaled(a) + g.scaled(b));
        auto rhs = ideal.normal_form(f).scaled(a) + ideal.normal_form(g).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quotients and intersections on pinned ideals", "[engine]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };

    Ideal<QField> principal(r, {P("x11")});
    CHECK(quotient(principal, P("x11")).is_unit());

    Ideal<QField> edge(r, {P("x11*x12")});
    auto col = quotient(edge, P("x11"));
    CHECK(basis_strings(col.groebner()) == std::multiset<std::string>{"x12"});

    Ideal<QField> two(r, {P("x11*x12"), P("x11*x21")});
    CHECK(quotient(two, P("x11")).groebner().size() == 2);

    Ideal<QField> a(r, {P("x11")}), b(r, {P("x22")});
    CHECK(basis_strings(intersect(a, b).groebner()) ==
          std::multiset<std::string>{"x11*x22"});

    Ideal<QField> c1(r, {P("x11"), P("x22"), P("x21")});
    Ideal<QField> c2(r, {P("x11"), P("x22"), P("x12")});
    CHECK(intersect(c1, c2).groebner().size() == 3);

    Ideal<QField> unit(r, {Polynomial<QField>::one(r)});
    CHECK(ideal_equal(intersect(two, unit), two));

    auto quo = quotient(two, P("x12*x21"));
    for (const auto& g : two.generators()) CHECK(quo.contains(g));
}

TEST_CASE("radical membership distinguishes powers from strangers", "[engine]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    Ideal<QField> sq(r, {P("x11^2")});
    CHECK(radical_membership(P("x11"), sq));
    CHECK(!sq.contains(P("x11")));
    CHECK(!radical_membership(P("x22"), Ideal<QField>(r, {P("x11")})));
    Ideal<QField> mixed(r, {P("x11^3"), P("x22^2 + x11*x22")});
    CHECK(radical_membership(P("x11*x22"), mixed));
    CHECK(radical_equal(sq, Ideal<QField>(r, {P("x11")})));
}

TEST_CASE("krull dimension via independent variable sets", "[engine]") {
    QField q;
    auto r = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    auto hyp = krull_dimension(Ideal<QField>(r, {P("x21*x12")}));
    CHECK(hyp.krull_dim == 3);
    CHECK(hyp.witness.size() == 3);
    auto sys = gamma_bar_system(2, q);
    CHECK(krull_dimension(Ideal<QField>(sys.ring, sys.generators)).krull_dim == 1);
    CHECK(krull_dimension(Ideal<QField>::zero(r)).krull_dim == 4);
    CHECK(krull_dimension(Ideal<QField>(r, {Polynomial<QField>::one(r)})).krull_dim == -1);
}

TEST_CASE("modular basis matches the rational one after reduction", "[engine]") {
    QField q;
    PrimeField fp(32003);
    auto sys = gamma_bar_system(3, q);
    auto rp = make_grid_ring(3, fp);
    std::vector<Polynomial<PrimeField>> gens_p;
    for (const auto& g : sys.generators) gens_p.push_back(mod_reduce(g, rp));
    auto gb_q = groebner_basis(sys.ring, sys.generators);
    auto gb_p = groebner_basis(rp, gens_p);
    REQUIRE(gb_q.size() == gb_p.size());
    std::multiset<std::string> reduced, direct;
    for (const auto& g : gb_q) reduced.insert(to_string(mod_reduce(g, rp)));
    for (const auto& g : gb_p) direct.insert(to_string(g));
    CHECK(reduced == direct);
}
