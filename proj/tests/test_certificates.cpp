#include <catch2/catch_amalgamated.hpp>

#include "gtkit/gt_systems.hpp"
#include "gtkit/koszul.hpp"
#include "gtkit/regularity.hpp"
#include "gtkit/text.hpp"

using namespace gtkit;

TEST_CASE("quotient-chain regularity certificates", "[certificates]") {
    QField q;
    auto r2 = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r2, s); };

    auto good = is_regular_sequence<QField>(
        r2, {P("x11"), P("x22"), P("x12*x21")});
    CHECK(good.regular());
    CHECK(good.steps.size() == 3);

    auto repeated = is_regular_sequence<QField>(r2, {P("x11"), P("x11")});
    CHECK(repeated.verdict == RegularityVerdict::FailedAt);
    CHECK(repeated.failed_index == 2);

    auto shared_factor = is_regular_sequence<QField>(
        r2, {P("x11*x12"), P("x11*x21")});
    CHECK(shared_factor.verdict == RegularityVerdict::FailedAt);
    CHECK(shared_factor.failed_index == 2);

    CHECK_THROWS_AS(is_regular_sequence<QField>(
                        r2, {P("x11"), P("x12"), P("x21"), P("x22"), P("x11 + 1")}),
                    DomainError);
}

TEST_CASE("complete intersection certificates fix the dimension", "[certificates]") {
    QField q;
    auto sys = gamma_bar_system(2, q);
    auto cert = equidimensional_by_ci(sys.ring, sys.generators);
    CHECK(cert.issued);
    CHECK(cert.homogeneous);
    CHECK(cert.ambient == 4);
    CHECK(cert.length == 3);
    CHECK(cert.concluded_dim == 1);

    auto s3 = sigma_system(3, q);
    auto c2 = equidimensional_by_ci(s3.ring, s3.generators);
    CHECK(c2.issued);
    CHECK(c2.ambient == 5);
    CHECK(c2.concluded_dim == 3);

    auto r2 = make_grid_ring(2, q);
    auto P = [&](const char* s) { return parse_polynomial(r2, s); };
    auto refused = equidimensional_by_ci<QField>(r2, {P("x11"), P("x11^2")});
    CHECK(!refused.issued);
    CHECK(refused.regularity.verdict == RegularityVerdict::FailedAt);
    CHECK(refused.regularity.failed_index == 2);
}

TEST_CASE("regularity is order independent on homogeneous fixtures", "[certificates]") {
    QField q;
    auto sys = gamma_bar_system(2, q);
    auto rep = check_permutation_invariance(sys.ring, sys.generators, 10, 7);
    CHECK(rep.exhaustive);
    CHECK(rep.orderings_checked == 6);
    CHECK(rep.all_regular);
    CHECK(rep.regular_count == 6);
    CHECK(rep.failures.empty());
}

TEST_CASE("leading forms decide inhomogeneous dimensions", "[certificates]") {
    QField q;
    auto r2 = make_grid_ring(2, q);
    auto gl = gamma_bar_level(r2, 2);
    auto one = Polynomial<QField>::constant(r2, q.from_int(1));
    auto five = Polynomial<QField>::constant(r2, q.from_int(5));
    auto inf = leading_form_inference<QField>(r2, {gl[0] - one, gl[1] - five});
    CHECK(inf.conclusion == InferenceConclusion::Regular);
    CHECK(inf.concluded_dim == 2);
    CHECK(!inf.direct_checked);

    auto P = [&](const char* s) { return parse_polynomial(r2, s); };
    auto unit = leading_form_inference<QField>(r2, {P("x11 + 1"), P("x11")});
    CHECK(unit.conclusion == InferenceConclusion::UnitIdeal);
    CHECK(unit.direct_checked);
}

TEST_CASE("koszul differentials carry the contraction signs", "[certificates]") {
    QField q;
    auto rxy = make_sub_ring(2, {Variable{1, 1}, Variable{1, 2}}, q);
    auto P = [&](const char* s) { return parse_polynomial(rxy, s); };
    KoszulComplex<QField> kz(rxy, {P("x11"), P("x12")});
    Budget b = Budget::defaults();
    BudgetGuard guard(b, "test");
    auto mat = kz.differential_piece(2, 2, guard);
    REQUIRE(mat.rows() == 4);
    REQUIRE(mat.cols() == 1);
    int plus = 0, minus = 0;
    for (std::size_t r = 0; r < 4; ++r) {
        if (q.eq(mat.at(r, 0), q.one())) ++plus;
        if (q.eq(mat.at(r, 0), q.neg(q.one()))) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);

    auto piece = kz.graded_piece(2, 2);
    CHECK(piece.dim_piece == 1);
    CHECK(piece.rank_d_p == 1);
    CHECK(piece.homology_dim == 0);
    CHECK(kz.d_squared_is_zero(6));

    auto s3 = sigma_system(3, q);
    KoszulComplex<QField> kz3(s3.ring, s3.generators);
    CHECK(kz3.d_squared_is_zero(8));
}

TEST_CASE("homology screen locates the first obstruction", "[certificates]") {
    QField q;
    auto r3 = make_sub_ring(3, {Variable{1, 1}, Variable{1, 2}, Variable{1, 3}}, q);
    auto P = [&](const char* s) { return parse_polynomial(r3, s); };
    auto rep = ci_oracle<QField>(r3, {P("x11*x12"), P("x11*x13")});
    CHECK(rep.homology_found);
    CHECK(rep.at_p == 1);
    CHECK(rep.at_d == 3);

    auto rx = make_sub_ring(1, {Variable{1, 1}}, q);
    auto dup = ci_oracle<QField>(rx, {parse_polynomial(rx, "x11"),
                                      parse_polynomial(rx, "x11")});
    CHECK(dup.homology_found);
    CHECK(dup.at_p == 1);
    CHECK(dup.at_d == 1);

    auto sys = gamma_bar_system(2, q);
    auto clean = ci_oracle(sys.ring, sys.generators, 8);
    CHECK(!clean.homology_found);
}
