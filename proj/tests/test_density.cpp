#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hexid/density.hpp"

using namespace hexid;

TEST_CASE("density_exact: direct counts") {
    CHECK(density_exact(make_params(6)) == Rational(11, 84));
    CHECK(density_exact(make_params(6)) == Rational(33, 252));
    CHECK(density_exact(make_params(16)) == Rational(83, 1632));
    // r=15: the direct count gives 1228 codewords per 22528-vertex tile.
    CHECK(density_exact(make_params(15)) == Rational(1228, 22528));
    CHECK(density_exact(make_params(15)) == Rational(307, 5632));
}

TEST_CASE("density_components: closed forms per parity") {
    const auto [cp6, cdp6] = density_components(make_params(6));
    CHECK(cp6 == Rational(5, 42));
    CHECK(cdp6 == Rational(1, 84));
    CHECK(cp6 + cdp6 == density_exact(make_params(6)));

    const auto [cp7, cdp7] = density_components(make_params(7));
    CHECK(cp7 == Rational(17, 160));
    CHECK(cdp7 == Rational(1, 128));
}

TEST_CASE("density_theorem: literal evaluation") {
    CHECK(density_theorem(6) == Rational(11, 84));
    CHECK(density_theorem(15) == Rational(1272, 22528));
    CHECK(density_theorem(15) == Rational(159, 2816));
    CHECK(density_theorem(20) == Rational(103, 2520));
    CHECK_THROWS_AS(density_theorem(0), std::invalid_argument);
}

TEST_CASE("even radii: count, closed form and component sum all agree") {
    for (int r = 2; r <= 30; r += 2) {
        const CodeParams p = make_params(r);
        const Rational exact = density_exact(p);
        const auto [cp, cdp] = density_components(p);
        REQUIRE(exact == density_theorem(r));
        REQUIRE(exact == cp + cdp);
    }
}

TEST_CASE("odd radii: count equals component sum; the stated form differs") {
    for (int r = 3; r <= 29; r += 2) {
        const CodeParams p = make_params(r);
        const auto [cp, cdp] = density_components(p);
        REQUIRE(density_exact(p) == cp + cdp);
        // Equivalent closed form of the component sum.
        REQUIRE(cp + cdp ==
                Rational(5 * r * r + 7 * r - 2, (6 * r - 2) * (r + 1) * (r + 1)));
    }
}

TEST_CASE("headline bounds hold as exact rational comparisons") {
    for (int r = 2; r <= 30; ++r) {
        const Rational d = density_exact(make_params(r));
        REQUIRE(d < Rational(5, 6 * r));
        REQUIRE(d < Rational(8, 9 * r));
    }
}

TEST_CASE("density denominators divide the domain size") {
    for (int r = 2; r <= 30; ++r) {
        const CodeParams p = make_params(r);
        const Rational d = density_exact(p);
        CHECK(Rational::Int(p.px) * p.py % d.den() == 0);
    }
}

TEST_CASE("density_empirical: tiny windows") {
    CHECK(density_empirical(make_params(2), 0) == Rational(1, 1));
    CHECK_THROWS_AS(density_empirical(make_params(2), -1), std::invalid_argument);
}

TEST_CASE("density_empirical converges to density_exact at r=6") {
    const CodeParams p = make_params(6);
    const Rational exact = density_exact(p);

    const Rational e126 = density_empirical(p, 126);
    const Rational e252 = density_empirical(p, 252);
    const Rational e504 = density_empirical(p, 504);
    CHECK(e126 == Rational(8563, 64009));
    CHECK(e252 == Rational(33757, 255025));
    CHECK(e504 == Rational(134041, 1018081));

    CHECK(abs(e126 - exact) <= Rational(10, 126));
    CHECK(abs(e252 - exact) <= Rational(10, 252));
    CHECK(abs(e504 - exact) <= Rational(10, 504));
    CHECK(abs(e252 - exact) <= abs(e126 - exact));
    CHECK(abs(e504 - exact) <= abs(e252 - exact));
}

TEST_CASE("audit: even radii agree with the stated form") {
    const DensityAudit a16 = audit(16);
    CHECK(a16.agrees_theorem);
    CHECK(a16.exact == Rational(83, 1632));
    CHECK(a16.notes.empty());

    CHECK(audit(18).exact == Rational(31, 684));
    CHECK(audit(20).exact == Rational(103, 2520));
    CHECK_THROWS_AS(audit(1), std::invalid_argument);
}

TEST_CASE("audit: odd radii report the three-way discrepancy") {
    const DensityAudit a15 = audit(15);
    CHECK_FALSE(a15.agrees_theorem);
    CHECK(a15.exact == a15.component_sum);
    CHECK(a15.exact == Rational(307, 5632));
    CHECK(a15.theorem_value == Rational(159, 2816));
    CHECK(a15.notes.find("1227/22528") != std::string::npos);
    CHECK(a15.notes.find("159/2816") != std::string::npos);
    CHECK(a15.notes.find("does not match") != std::string::npos);

    const DensityAudit a19 = audit(19);
    CHECK(a19.exact == a19.component_sum);
    CHECK(a19.notes.find("387/8960") != std::string::npos);
}

TEST_CASE("density table rows") {
    CHECK(density_table_row(16) == "16\t83/1632\t0.0509\tyes\t");
    CHECK(density_table_row(18) == "18\t31/684\t0.0453\tyes\t");
    CHECK(density_table_row(20) == "20\t103/2520\t0.0409\tyes\t");
    CHECK(density_table_row(16, true) == "16\t83/1632\t0.0509\tyes\t\t2/83\t1/18");
    // Rows for radii without literature entries keep the empty columns.
    CHECK(density_table_row(4, true) == "4\t23/120\t0.1917\tyes\t\t\t");

    const std::string table = density_table(16, 18);
    CHECK(table.find("16\t83/1632") != std::string::npos);
    CHECK(table.find("17\t") != std::string::npos);
    CHECK(table.back() == '\n');
    CHECK_THROWS_AS(density_table(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(density_table(5, 2), std::invalid_argument);
}
