#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellsurf/lattice.hpp"

using namespace ellsurf;

namespace {

DivisorClass nc(const std::string& n) { return named_class(n); }

// the second representation from the proposition's proof
DivisorClass section_by_components(const SectionIndex& x) {
    DivisorClass s = nc("s0");
    const long long n[3] = {x.n1, x.n2, x.n3};
    const int eps[3] = {x.eps1, x.eps2, x.eps3};
    for (int k = 0; k < 3; ++k) s = s + n[k] * (DivisorClass::e(k + 1) - nc("s0"));
    for (int k = 0; k < 3; ++k) {
        DivisorClass dev = nc("u0") + nc("v0") - nc("v" + std::to_string(k + 1));
        s = s - ((n[k] - eps[k]) / 2) * dev;
    }
    DivisorClass bracket = nc("u0") + (x.eps - 2) * nc("v0") - nc("v4");
    for (int k = 0; k < 3; ++k)
        bracket = bracket - static_cast<long long>(eps[k]) * nc("v" + std::to_string(k + 1));
    s = s - static_cast<long long>(x.eps_half) * bracket;
    return s + x.m * nc("f");
}

} // namespace

TEST_CASE("gram pairing") {
    CHECK(gram(nc("f"), nc("f")) == 0);
    CHECK(gram(nc("f"), nc("s0")) == 1);
    CHECK(gram(nc("u0"), nc("u1")) == 2);
    CHECK(gram(DivisorClass::l(), DivisorClass::l()) == 1);
    CHECK(gram(DivisorClass::e(3), DivisorClass::e(3)) == -1);
    CHECK(gram(DivisorClass::e(3), DivisorClass::e(4)) == 0);
}

TEST_CASE("named classes") {
    CHECK(nc("v4") == DivisorClass::e(7) - DivisorClass::e(8));
    DivisorClass f = 3 * DivisorClass::l();
    for (int k = 1; k <= 9; ++k) f = f - DivisorClass::e(k);
    CHECK(nc("f") == f);
    CHECK(nc("r123") ==
          DivisorClass::l() - DivisorClass::e(1) - DivisorClass::e(2) - DivisorClass::e(3));
    CHECK(nc("r14") == DivisorClass::e(1) - DivisorClass::e(4));
    CHECK_THROWS_AS(named_class("bogus"), UnknownName);
    CHECK_THROWS_AS(named_class("r41"), UnknownName); // indices must increase
}

TEST_CASE("fiber component relations") {
    // affine D4 shape of the I0* fiber
    for (int i = 0; i <= 3; ++i) {
        CHECK(gram(nc("v4"), nc("v" + std::to_string(i))) == 1);
        for (int j = i + 1; j <= 3; ++j)
            CHECK(gram(nc("v" + std::to_string(i)), nc("v" + std::to_string(j))) == 0);
    }
    CHECK(nc("f") == nc("u0") + nc("u1"));
    CHECK(nc("f") == nc("v0") + nc("v1") + nc("v2") + nc("v3") + 2 * nc("v4"));
    // component expressions of l, e7, e8 and the pair sums
    CHECK(DivisorClass::l() == 3 * nc("s0") + nc("u0") + 2 * nc("v0") + nc("v4"));
    CHECK(DivisorClass::e(7) == nc("s0") + nc("v0") + nc("v4"));
    CHECK(DivisorClass::e(8) == nc("s0") + nc("v0"));
    for (int k = 1; k <= 3; ++k) {
        DivisorClass lhs = DivisorClass::e(k) + DivisorClass::e(k + 3);
        CHECK(lhs == 2 * nc("s0") + nc("u0") + nc("v0") - nc("v" + std::to_string(k)));
    }
    // u1 meets e1..e6, v1 meets e1,e4, s0 meets u0 and v0
    for (int k = 1; k <= 6; ++k) CHECK(gram(nc("u1"), DivisorClass::e(k)) == 1);
    CHECK(gram(nc("v1"), DivisorClass::e(1)) == 1);
    CHECK(gram(nc("v1"), DivisorClass::e(4)) == 1);
    CHECK(gram(nc("v1"), DivisorClass::e(2)) == 0);
    CHECK(gram(nc("s0"), nc("u0")) == 1);
    CHECK(gram(nc("s0"), nc("v0")) == 1);
    CHECK(gram(nc("s0"), nc("u1")) == 0);
}

TEST_CASE("E8 root basis of U-perp") {
    const char* chain[7] = {"r12", "r23", "r34", "r45", "r56", "r67", "r78"};
    std::vector<DivisorClass> roots;
    for (const char* n : chain) roots.push_back(nc(n));
    DivisorClass branch = nc("r123");
    for (const auto& r : roots) CHECK(gram(r, r) == -2);
    CHECK(gram(branch, branch) == -2);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(gram(roots[i], roots[j]) == (j == i + 1 ? 1 : 0));
    for (int i = 0; i < 7; ++i) CHECK(gram(branch, roots[i]) == (chain[i][1] == '3' ? 1 : 0));
    // all roots lie in U-perp; r89 extends the diagram inside <f>-perp
    for (const auto& r : roots) {
        CHECK(gram(r, nc("f")) == 0);
        CHECK(gram(r, nc("s0")) == 0);
    }
    CHECK(gram(branch, nc("f")) == 0);
    CHECK(gram(branch, nc("s0")) == 0);
    CHECK(gram(nc("r89"), nc("f")) == 0);
    CHECK(gram(nc("r89"), nc("r78")) == 1);
}

TEST_CASE("section classes from the closed formula") {
    CHECK(section_class({0, 0, 0}) == nc("s0"));
    CHECK(section_class({1, 1, 0}) ==
          DivisorClass::l() - DivisorClass::e(4) - DivisorClass::e(5));
    DivisorClass s200 = 3 * DivisorClass::l() - DivisorClass::e(2) - DivisorClass::e(3) -
                        2 * DivisorClass::e(4) - DivisorClass::e(5) - DivisorClass::e(6) -
                        DivisorClass::e(7) - DivisorClass::e(8);
    CHECK(section_class({2, 0, 0}) == s200);
    CHECK(section_class({1, 0, 0}) == DivisorClass::e(1));
    CHECK(gram(s200, s200) == -1);
    CHECK(gram(s200, nc("f")) == 1);
}

TEST_CASE("numerical sections") {
    CHECK(is_numerical_section(DivisorClass::e(7))); // reducible but numerical
    CHECK_FALSE(is_numerical_section(nc("f")));
    for (long long n1 = -3; n1 <= 3; ++n1)
        for (long long n2 = -3; n2 <= 3; ++n2)
            for (long long n3 = -3; n3 <= 3; ++n3)
                CHECK(is_numerical_section(section_class({n1, n2, n3})));
}

TEST_CASE("the two representations of the proposition agree") {
    for (long long n1 = -3; n1 <= 3; ++n1)
        for (long long n2 = -3; n2 <= 3; ++n2)
            for (long long n3 = -3; n3 <= 3; ++n3) {
                SectionIndex x{n1, n2, n3};
                CHECK(section_class(x) == section_by_components(x));
            }
}

TEST_CASE("Mordell-Weil addition") {
    DivisorClass s0 = nc("s0");
    CHECK(mw_add(section_class({2, -1, 3}), s0) == section_class({2, -1, 3}));
    // s(e1) + s(e2) as numerical sections
    CHECK(mw_add(DivisorClass::e(1), DivisorClass::e(2)) ==
          DivisorClass::e(1) + DivisorClass::e(2) - DivisorClass::e(9) + nc("f"));
    CHECK_THROWS_AS(mw_add(nc("f"), s0), NotNumericalSection);
    // e1 + e2 equals the line class l - e4 - e5 modulo fiber components
    CHECK(in_fiber_span(mw_add(DivisorClass::e(1), DivisorClass::e(2)) -
                        section_class({1, 1, 0})));
    SUBCASE("additivity modulo the fiber span") {
        const SectionIndex others[3] = {{1, 0, 0}, {1, 1, 0}, {0, -1, 2}};
        for (long long n1 = -3; n1 <= 3; ++n1)
            for (long long n2 = -3; n2 <= 3; ++n2)
                for (long long n3 = -3; n3 <= 3; ++n3) {
                    SectionIndex x{n1, n2, n3};
                    for (const auto& y : others) {
                        DivisorClass lhs = mw_add(section_class(x), section_class(y));
                        CHECK(in_fiber_span(lhs - section_class(x + y)));
                    }
                }
    }
    SUBCASE("inverse") {
        for (long long n1 = -2; n1 <= 2; ++n1)
            for (long long n2 = -2; n2 <= 2; ++n2)
                for (long long n3 = -2; n3 <= 2; ++n3) {
                    SectionIndex x{n1, n2, n3};
                    DivisorClass s = section_class(x);
                    CHECK(in_fiber_span(mw_negate(s) - section_class(-x)));
                    CHECK(in_fiber_span(mw_add(s, mw_negate(s)) - s0));
                }
    }
}

TEST_CASE("projection onto span(r14, r25, r36)") {
    CHECK(mw_project(nc("s0")) == std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)});
    CHECK(mw_project(DivisorClass::e(7)) == std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)});
    for (long long n1 = -3; n1 <= 3; ++n1)
        for (long long n2 = -3; n2 <= 3; ++n2)
            for (long long n3 = -3; n3 <= 3; ++n3) {
                auto p = mw_project(section_class({n1, n2, n3}));
                CHECK(p == std::array<Rat, 3>{Rat(n1, 2), Rat(n2, 2), Rat(n3, 2)});
            }
    CHECK_THROWS_AS(mw_project(nc("f")), NotNumericalSection);
}

TEST_CASE("height pairing") {
    CHECK(height_pairing({1, 0, 0}, {1, 0, 0}) == Rat(1, 2));
    CHECK(height_pairing({1, 0, 0}, {0, 1, 0}) == 0);
    CHECK(height_pairing({0, 0, 0}, {17, -4, 9}) == 0);
    // sign-changed dual pairing: <s,s> = -(1/2 r14 . 1/2 r14) for the generator
    DivisorClass r14 = nc("r14");
    CHECK(Rat(-gram(r14, r14), 4) == height_pairing({1, 0, 0}, {1, 0, 0}));
}

TEST_CASE("fiber intersections match direct gram computation") {
    auto expect = fiber_intersections({0, 0, 0});
    CHECK(expect.u0 == 1);
    CHECK(expect.v[0] == 1);
    expect = fiber_intersections({1, 0, 0});
    CHECK(expect.u1 == 1);
    CHECK(expect.v[1] == 1);
    expect = fiber_intersections({1, 1, 0});
    CHECK(expect.u0 == 1);
    CHECK(expect.v[3] == 1);
    for (long long n1 = -3; n1 <= 3; ++n1)
        for (long long n2 = -3; n2 <= 3; ++n2)
            for (long long n3 = -3; n3 <= 3; ++n3) {
                SectionIndex x{n1, n2, n3};
                DivisorClass s = section_class(x);
                FiberMeeting fm = fiber_intersections(x);
                CHECK(fm.u0 == gram(s, nc("u0")));
                CHECK(fm.u1 == gram(s, nc("u1")));
                for (int k = 0; k <= 3; ++k)
                    CHECK(fm.v[k] == gram(s, nc("v" + std::to_string(k))));
                CHECK(fm.v4 == gram(s, nc("v4")));
                CHECK(fm.u0 + fm.u1 == 1);
                CHECK(fm.v[0] + fm.v[1] + fm.v[2] + fm.v[3] == 1);
                CHECK(fm.v4 == 0);
                for (int val : {fm.u0, fm.u1, fm.v[0], fm.v[1], fm.v[2], fm.v[3]}) {
                    CHECK(val >= 0);
                    CHECK(val <= 1);
                }
            }
}

TEST_CASE("m is integral for |n_i| <= 50") {
    for (long long n1 = -50; n1 <= 50; ++n1)
        for (long long n2 = -50; n2 <= 50; ++n2)
            for (long long n3 = -50; n3 <= 50; ++n3) {
                long long eps = (((n1 % 2) + 2) % 2) + (((n2 % 2) + 2) % 2) + (((n3 % 2) + 2) % 2);
                if ((n1 * n1 + n2 * n2 + n3 * n3 - eps) % 4 != 0) {
                    FAIL("non-integral m at ", n1, ",", n2, ",", n3);
                }
            }
    CHECK(true);
}

TEST_CASE("Shioda-Tate reports") {
    auto g = shioda_tate_report(ConfigCase::generic);
    CHECK(g.l_rank == 5);
    CHECK(g.mw_rank == 3);
    CHECK(g.mw_lattice == "A1*+A1*+A1*");
    CHECK(g.oguiso_shioda_number == 18);
    auto e0 = shioda_tate_report(ConfigCase::e_zero);
    CHECK(e0.l_rank == 6);
    CHECK(e0.mw_rank == 2);
    CHECK(e0.mw_lattice == "A1*+<1/4>");
    CHECK(e0.oguiso_shioda_number == 30);
    auto f0 = shioda_tate_report(ConfigCase::f_zero);
    CHECK(f0.mw_rank == 1);
    CHECK(f0.mw_lattice == "<1/6>");
    CHECK(f0.oguiso_shioda_number == 49);
    auto v0 = shioda_tate_report(ConfigCase::v_zero);
    CHECK(v0.mw_rank == 1);
    CHECK(v0.mw_lattice == "A1*");
    CHECK(v0.l_type == "E7");
    for (auto c : {ConfigCase::generic, ConfigCase::e_zero, ConfigCase::f_zero,
                   ConfigCase::v_zero}) {
        auto r = shioda_tate_report(c);
        CHECK(2 + r.l_rank + r.mw_rank == 10);
    }
}

TEST_CASE("span membership solver") {
    CHECK(in_fiber_span(nc("f")));
    CHECK(in_fiber_span(2 * nc("v1") - 3 * nc("v4") + nc("u1")));
    CHECK(in_fiber_span(nc("v0"))); // v0 = f - v1 - v2 - v3 - 2v4
    CHECK(in_fiber_span(nc("u0"))); // u0 = f - u1
    CHECK_FALSE(in_fiber_span(nc("s0"))); // pairs to 1 with f, the span pairs to 0
    CHECK_FALSE(in_fiber_span(DivisorClass::e(1)));
    std::vector<DivisorClass> gens{nc("u0"), nc("v0")};
    auto sol = solve_in_span(gens, nc("u0") + 2 * nc("v0"));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 2);
    CHECK_FALSE(solve_in_span(gens, DivisorClass::l()).has_value());
}
