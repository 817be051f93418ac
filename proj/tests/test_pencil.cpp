#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellsurf/pencil.hpp"

using namespace ellsurf;

namespace {

void expect_all_pass(const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);
    }
}

} // namespace

TEST_CASE("section generators satisfy the Weierstrass equation") {
    auto checks = section_generator_checks();
    CHECK(checks.size() == 6);
    expect_all_pass(checks);
}

TEST_CASE("pencil consistency") { expect_all_pass(pencil_consistency_checks()); }

TEST_CASE("base point checks") { expect_all_pass(base_point_checks()); }

TEST_CASE("group law against the chord oracle") {
    expect_all_pass(group_law_oracle_checks(20240811, 10));
}

TEST_CASE("fiber group values") { expect_all_pass(fiber_group_value_checks()); }

TEST_CASE("annihilating polynomials") {
    expect_all_pass(annihilator_check(AnnihilatorKind::degree6));
    expect_all_pass(annihilator_check(AnnihilatorKind::degree12));
}

TEST_CASE("xi relations") {
    expect_all_pass(xi_relation_checks());
    expect_all_pass(xi_subfield_relations());
}

TEST_CASE("modulus and torus suites") {
    expect_all_pass(modulus_relations());
    expect_all_pass(lambda_orbit_checks());
    expect_all_pass(torus_j_transfer());
}

TEST_CASE("singular members are labeled and positioned") {
    auto members = singular_members(Ring::conic);
    REQUIRE(members.size() == 4);
    CHECK(members[0].label == "nodal");
    CHECK(members[1].label == "cuspidal");
    CHECK(members[2].label == "conic-tangent");
    CHECK(members[3].label == "concurrent-lines");
}

TEST_CASE("base points") {
    auto bps = base_points(Ring::conic);
    REQUIRE(bps.size() == 7);
    int affine = 0, markers = 0;
    for (const auto& bp : bps) {
        if (bp.infinitely_near) {
            ++markers;
            CHECK(bp.multiplicity == 3);
        } else {
            ++affine;
        }
    }
    CHECK(affine == 6);
    CHECK(markers == 1);

    auto pts = base_points_at(K(1), K(2));
    REQUIRE(pts.size() == 6);
    // V1V2 = -12, V1V3 = -20i, V2V3 = -15i at (1,2)
    CHECK(pts[0] == std::pair<K, K>{K(Rat(481, 144)), K(Rat(-1, 6912))});
    CHECK(pts[1] == std::pair<K, K>{K(Rat(481, 144)), K(Rat(1, 6912))});
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b) CHECK(pts[a] != pts[b]);
    CHECK_THROWS_AS(base_points_at(K(1), K(0)), VertexDegeneration);
}

TEST_CASE("transform to the Weierstrass model") {
    // the inflection point stays at infinity for generic (S:T)
    auto image = to_weierstrass({K(0), K(1), K(0)}, K(2), K(5), K(1), K(2));
    CHECK(image[0] == K(0));
    CHECK(image[2] == K(0));
    CHECK_FALSE(image[1].is_zero());
}

TEST_CASE("section generator evaluation") {
    // at (S:T) = (1:1) the generator passes through (0:0:1), the III position
    auto p = eval_section(K(1), K(2), K(1), K(1), 1, 2, +1);
    CHECK(p[0] == K(0));
    CHECK(p[1] == K(0));
    CHECK_FALSE(p[2].is_zero());
    CHECK_THROWS_AS(eval_section(K(1), K(0), K(0), K(1), 1, 2, +1), VertexDegeneration);

    // generic evaluation satisfies the Weierstrass equation of the member
    K alpha(1), beta(2), s(2), t(3);
    std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
    K a = invariants::E().eval(pt).pow(2), b = invariants::F().eval(pt).pow(3);
    WeierstrassData d = family_coefficients(a, b);
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        for (int sign : {1, -1}) {
            auto q = eval_section(alpha, beta, s, t, i, j, sign);
            K g2 = d.g2.eval({{Var::S, s}, {Var::T, t}});
            K g3 = d.g3.eval({{Var::S, s}, {Var::T, t}});
            K lhs = q[1] * q[1] * q[2];
            K rhs = 4 * q[0].pow(3) - g2 * q[0] * q[2] * q[2] - g3 * q[2].pow(3);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cubic group law basics") {
    ShapedCubic nodal = nodal_member(K(1), K(2));
    CHECK(is_singular_point(nodal, CubicPoint::affine(K(Rat(-3, 2)), K(0))));
    CHECK_FALSE(is_singular_point(nodal, CubicPoint::affine(K(3), K(0))));
    CHECK(on_curve(nodal, CubicPoint::affine(K(3), K(0))));
    // doubling the smooth 2-torsion point (3,0) gives the identity
    CubicPoint two_torsion = CubicPoint::affine(K(3), K(0));
    CHECK(cubic_add(nodal, two_torsion, two_torsion) == CubicPoint::infinity());
    CHECK_THROWS_AS(
        cubic_add(nodal, CubicPoint::affine(K(Rat(-3, 2)), K(0)), CubicPoint::infinity()),
        SingularPointInput);
    CHECK_THROWS_AS(cubic_add(nodal, CubicPoint::affine(K(5), K(1)), CubicPoint::infinity()),
                    NotOnCurve);

    ShapedCubic cusp = cuspidal_member(K(1), K(2));
    CHECK(is_singular_point(cusp, CubicPoint::affine(K(0), K(0))));
    CHECK_THROWS_AS(nodal_member(K(Rat(-1), Rat(0), Rat(1), Rat(0)), K(1)), ConfluentCase);
    CHECK_THROWS_AS(nodal_member(K(0), K(0)), DegenerateParameter);
}

TEST_CASE("mu and nu endpoint behavior") {
    K alpha(1), beta(2);
    std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
    K e = invariants::E().eval(pt), f = invariants::F().eval(pt);
    CHECK(mu_value(e, CubicPoint::infinity()) == K(1));
    CHECK_THROWS_AS(mu_value(e, CubicPoint::affine(K(Rat(-3, 2)), K(0))), NodePoint);
    CHECK_THROWS_AS(mu_inverse_point(e, K(0)), NodePoint);
    CHECK(mu_inverse_point(e, K(1)) == CubicPoint::infinity());
    CHECK(nu_value(f, CubicPoint::infinity()) == K(0));
    CHECK_THROWS_AS(nu_value(f, CubicPoint::affine(K(0), K(0))), CuspPoint);
    CHECK(nu_inverse_point(f, K(0)) == CubicPoint::infinity());

    // reciprocal convention flips the tangent-cone branches
    CubicPoint p = mu_inverse_point(e, K(Rat(5, 3)));
    CHECK(mu_value(e, p, true) == mu_value(e, p).inv());
    CHECK(mu_inverse_point(e, K(Rat(3, 5)), true) == mu_inverse_point(e, K(Rat(5, 3))));

    // nu of the positive base points are the V_iV_j values themselves
    auto gens = singular_group_generators(FiberGroupKind::II, alpha, beta);
    auto pts = base_points_at(alpha, beta);
    // base points come in (i,j) = (1,2),(1,3),(2,3) pairs with signs -,+ per Y
    ShapedCubic cusp = cuspidal_member(alpha, beta);
    for (const auto& q : pts) {
        CubicPoint cp = CubicPoint::affine(q.first, q.second);
        CHECK(on_curve(cusp, cp));
        K v = nu_value(f, cp);
        bool matches = v == gens[0] || v == -gens[0] || v == gens[1] || v == -gens[1] ||
                       v == gens[2] || v == -gens[2];
        CHECK(matches);
    }
}

TEST_CASE("I1 generators satisfy the degree-6 polynomial numerically") {
    K alpha(1), beta(2);
    std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
    K j0 = invariants::F().eval(pt).pow(3) / invariants::E().eval(pt).pow(2);
    auto gens = singular_group_generators(FiberGroupKind::I1, alpha, beta);
    for (const K& x : gens) {
        K a = x * x + 10 * x + K(1);
        K value = a.pow(3) - 432 * j0 * x * x * a + 3456 * j0 * x.pow(3);
        CHECK(value.is_zero());
    }
    // the I1 generators are also the mu values of the positive base points
    ShapedCubic nodal = nodal_member(alpha, beta);
    K e = invariants::E().eval(pt);
    auto pts = base_points_at(alpha, beta);
    int matched = 0;
    for (const auto& q : pts) {
        CubicPoint cp = CubicPoint::affine(q.first, q.second);
        REQUIRE(on_curve(nodal, cp));
        K m = mu_value(e, cp);
        for (const K& g : gens)
            if (m == g || m == g.inv()) {
                ++matched;
                break;
            }
    }
    CHECK(matched == 6);
    CHECK_THROWS_AS(singular_group_generators(FiberGroupKind::I1, K(Rat(-1), Rat(0), Rat(1), Rat(0)), K(1)),
                    ConfluentCase);
}

TEST_CASE("xi values carry the I0* intersection data") {
    auto xi = xi_values(Ring::cover);
    std::map<Var, K> pt{{Var::alpha, K(1)}, {Var::beta, K(2)}};
    CHECK(xi[0].eval(pt) == K(Rat(-481, 225)));
    CHECK(xi[1].eval(pt) == K(Rat(-481, 400)));
    CHECK(xi[2].eval(pt) == K(Rat(481, 144)));
}

TEST_CASE("full verification roll-up") {
    auto all = verify_all();
    CHECK(all.size() > 60);
    expect_all_pass(all);
}
