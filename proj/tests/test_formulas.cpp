#include "nkg/formulas.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cstdint>

using namespace nkg;

namespace {

// Smallest g with (m-3)(m-4) <= d*g, found by counting up.
std::int64_t oracle_kn_genus(std::int64_t m, std::int64_t d)
{
    std::int64_t g = 0;
    while ((m - 3) * (m - 4) > d * g)
        ++g;
    return g;
}

// Counts up to the least genus allowed by the bound in s = n + 2k; s <= 4 is planar-sized.
std::int64_t oracle_genus_nk(std::int64_t n, std::int64_t k, bool orientable)
{
    const std::int64_t s = n + 2 * k;
    if (s <= 4)
        return orientable ? 0 : 1;
    return oracle_kn_genus(s + 2, orientable ? 12 : 6);
}

// mu by definition: the least k such that every (n,k)-graph needs more than the surface.
std::int64_t oracle_mu(std::int64_t n, std::int64_t genus, bool orientable)
{
    std::int64_t k = 0;
    while (oracle_genus_nk(n, k, orientable) <= genus)
        ++k;
    return k;
}

using Row9 = std::array<int, 9>;
using Row17 = std::array<int, 17>;
using Row16 = std::array<int, 16>;

constexpr std::array<Row9, 8> reference_genus_orientable{{
    {0, 0, 1, 3, 5, 8, 11, 16, 20},
    {0, 0, 2, 4, 6, 10, 13, 18, 23},
    {0, 1, 3, 5, 8, 11, 16, 20, 26},
    {0, 2, 4, 6, 10, 13, 18, 23, 29},
    {1, 3, 5, 8, 11, 16, 20, 26, 32},
    {2, 4, 6, 10, 13, 18, 23, 29, 35},
    {3, 5, 8, 11, 16, 20, 26, 32, 39},
    {4, 6, 10, 13, 18, 23, 29, 35, 43},
}};

constexpr std::array<Row9, 8> reference_genus_nonorientable{{
    {1, 1, 2, 5, 10, 15, 22, 31, 40},
    {1, 1, 4, 7, 12, 19, 26, 35, 46},
    {1, 2, 5, 10, 15, 22, 31, 40, 51},
    {1, 4, 7, 12, 19, 26, 35, 46, 57},
    {2, 5, 10, 15, 22, 31, 40, 51, 64},
    {4, 7, 12, 19, 26, 35, 46, 57, 70},
    {5, 10, 15, 22, 31, 40, 51, 64, 77},
    {7, 12, 19, 26, 35, 46, 57, 70, 85},
}};

constexpr std::array<Row17, 8> reference_mu_orientable{{
    {2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 8},
    {2, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7},
    {1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 6, 7},
    {1, 1, 2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6},
    {0, 1, 1, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 5, 6},
    {0, 0, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5},
    {0, 0, 0, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5},
    {0, 0, 0, 0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4},
}};

constexpr std::array<Row16, 8> reference_mu_nonorientable{{
    {2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6},
    {2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5},
    {1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5},
    {1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4},
    {0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4},
    {0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3},
    {0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3},
    {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2},
}};

}  // namespace

TEST_CASE("surface names")
{
    CHECK(Surface::parse("S0") == Surface::sphere());
    CHECK(Surface::parse("N3") == Surface::nonorientable(3));
    CHECK(Surface::parse("S12").name() == "S12");
    CHECK_THROWS_AS(Surface::parse("N0"), FormulaError);
    CHECK_THROWS_AS(Surface::parse("T1"), FormulaError);
    CHECK_THROWS_AS(Surface::parse("S-1"), FormulaError);
    CHECK_THROWS_AS(Surface::parse("S"), FormulaError);
    CHECK(euler_characteristic(Surface::orientable(3)) == -4);
    CHECK(euler_characteristic(Surface::nonorientable(3)) == -1);
}

TEST_CASE("integer helpers")
{
    for (std::int64_t m = 0; m < 20000; ++m) {
        const auto r = isqrt(m);
        REQUIRE(r * r <= m);
        REQUIRE((r + 1) * (r + 1) > m);
    }
    CHECK(isqrt(std::int64_t{3037000499} * 3037000499) == 3037000499);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("complete graph genus")
{
    CHECK(complete_graph_genus(5, true) == 1);
    CHECK(complete_graph_genus(7, true) == 1);
    CHECK(complete_graph_genus(8, true) == 2);
    CHECK(complete_graph_genus(7, false) == 3);
    CHECK(complete_graph_genus(6, false) == 1);
    CHECK(complete_graph_genus(3, true) == 0);
    CHECK(complete_graph_genus(4, false) == 1);
    CHECK_THROWS_AS(complete_graph_genus(2, true), FormulaError);
    for (std::int64_t m = 5; m <= 60; ++m) {
        CHECK(complete_graph_genus(m, true) == oracle_kn_genus(m, 12));
        if (m != 7)
            CHECK(complete_graph_genus(m, false) == oracle_kn_genus(m, 6));
    }
}

TEST_CASE("genus_nk matches reference grids")
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) {
            CHECK(genus_nk(n, k, true) == reference_genus_orientable[n - 1][k]);
            CHECK(genus_nk(n, k, false) == reference_genus_nonorientable[n - 1][k]);
        }
}

TEST_CASE("genus_nk agrees with brute-force oracle")
{
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t k = 0; k <= 15; ++k)
            for (bool o : {true, false})
                REQUIRE(genus_nk(n, k, o) == oracle_genus_nk(n, k, o));
}

TEST_CASE("mu_nk matches reference grids and the definition")
{
    for (int n = 1; n <= 8; ++n) {
        for (int g = 0; g <= 16; ++g) {
            CHECK(mu_nk(n, Surface::orientable(g)) == reference_mu_orientable[n - 1][g]);
            CHECK(mu_nk(n, Surface::orientable(g)) == oracle_mu(n, g, true));
        }
        for (int g = 1; g <= 16; ++g) {
            CHECK(mu_nk(n, Surface::nonorientable(g)) == reference_mu_nonorientable[n - 1][g - 1]);
            CHECK(mu_nk(n, Surface::nonorientable(g)) == oracle_mu(n, g, false));
        }
    }
    CHECK(mu_nk(6, Surface::parse("S8")) == 3);
    CHECK_THROWS_AS(mu_nk(0, Surface::sphere()), FormulaError);
}

TEST_CASE("mu_nk for larger parameters agrees with the definition")
{
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t g = 0; g <= 120; ++g) {
            REQUIRE(mu_nk(n, Surface::orientable(g)) == oracle_mu(n, g, true));
            if (g >= 1)
                REQUIRE(mu_nk(n, Surface::nonorientable(g)) == oracle_mu(n, g, false));
        }
}

TEST_CASE("mu_ext and rho")
{
    CHECK(mu_extendability(Surface::sphere()) == 3);
    CHECK(mu_extendability(Surface::orientable(1)) == 4);
    CHECK(mu_extendability(Surface::nonorientable(1)) == 3);
    CHECK(rho(Surface::sphere()) == 5);
    CHECK(rho(Surface::orientable(1)) == 6);
    CHECK(rho(Surface::nonorientable(1)) == 5);
    CHECK(rho(Surface::nonorientable(2)) == 6);
}

TEST_CASE("mu_ext and rho match 200-bit real evaluation")
{
    using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    for (std::int64_t g = 1; g <= 5000; ++g) {
        for (const Surface& s : {Surface::orientable(g), Surface::nonorientable(g)}) {
            const std::int64_t chi = euler_characteristic(s);
            const Real ext = 2 + floor(sqrt(Real(4 - 2 * chi)));
            const Real r = floor((5 + sqrt(Real(49 - 24 * chi))) / 2);
            REQUIRE(mu_extendability(s) == ext.convert_to<std::int64_t>());
            REQUIRE(rho(s) == r.convert_to<std::int64_t>());
        }
    }
}

TEST_CASE("rho inverts the first column")
{
    for (std::int64_t g = 1; g <= 20; ++g) {
        std::int64_t n = 1;
        while (genus_nk(n, 0, true) <= g)
            ++n;
        CHECK(rho(Surface::orientable(g)) == n);
        CHECK(invert_genus_column(g, true) == n);
        std::int64_t m = 1;
        while (genus_nk(m, 0, false) <= g)
            ++m;
        CHECK(rho(Surface::nonorientable(g)) == m);
    }
}

TEST_CASE("duality on the default mu tables")
{
    for (auto kind : {TableKind::mu_orientable, TableKind::mu_nonorientable}) {
        const auto report = check_duality(TableSpec::defaults(kind));
        CHECK(report.holds);
        CHECK(report.cells_checked == (kind == TableKind::mu_orientable ? 136 : 128));
    }
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t g = 1; g <= 16; ++g) {
            CHECK(mu_nk(n, Surface::orientable(g)) == invert_genus_table(n, g, true));
            CHECK(mu_nk(n, Surface::nonorientable(g)) == invert_genus_table(n, g, false));
        }
    CHECK_THROWS_AS(invert_genus_table(1, 0, false), FormulaError);
}

TEST_CASE("recurrence in n")
{
    CHECK(check_mu_recurrence(3, Surface::sphere()));
    CHECK(check_mu_recurrence(8, Surface::orientable(16)));
    CHECK(check_mu_recurrence(5, Surface::nonorientable(1)));
    for (std::int64_t n = 3; n <= 20; ++n)
        for (std::int64_t g = 0; g <= 50; ++g) {
            REQUIRE(check_mu_recurrence(n, Surface::orientable(g)));
            if (g >= 1)
                REQUIRE(check_mu_recurrence(n, Surface::nonorientable(g)));
        }
    CHECK_THROWS_AS(check_mu_recurrence(2, Surface::sphere()), FormulaError);
}

TEST_CASE("genus_nk depends on n+2k only and is monotone")
{
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t k = 0; n + 2 * k + 2 <= 40; ++k)
            for (bool o : {true, false}) {
                REQUIRE(genus_nk(n + 2, k, o) == genus_nk(n, k + 1, o));
                REQUIRE(genus_nk(n + 1, k, o) >= genus_nk(n, k, o));
                REQUIRE(genus_nk(n, k + 1, o) >= genus_nk(n, k, o));
            }
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t k = 0; k <= 15; ++k)
            REQUIRE(genus_nk(n, k, false) >= genus_nk(n, k, true));
}

TEST_CASE("ceiling lemma self-test")
{
    CHECK(ceiling_bound_equiv(5, 2, 3, CeilDirection::at_most));
    CHECK(ceiling_bound_equiv(7, 1, 6, CeilDirection::below));
    CHECK(ceiling_bound_equiv(1, 3, 0, CeilDirection::at_most));
    CHECK_THROWS_AS(ceiling_bound_equiv(1, 0, 0, CeilDirection::at_most), FormulaError);
    for (std::int64_t num = -1000; num <= 1000; ++num)
        for (std::int64_t den = 1; den <= 60; ++den)
            for (std::int64_t g = -100; g <= 100; ++g) {
                if (!ceiling_bound_equiv(num, den, g, CeilDirection::at_most) ||
                    !ceiling_bound_equiv(num, den, g, CeilDirection::below))
                    FAIL("ceiling lemma fails at " << num << "/" << den << ", g=" << g);
            }
}

TEST_CASE("integer square root inside mu matches 200-bit real arithmetic")
{
    using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    // mu(n, S_g) = floor((7 - 2n + sqrt(1 + 48g)) / 4) clamped at 0, g >= 1. The square
    // root is computed once per genus; the floor per n is taken in 200-bit arithmetic.
    auto check_range = [](std::int64_t g_first, std::int64_t g_last, std::int64_t g_step) {
        for (std::int64_t g = g_first; g <= g_last; g += g_step) {
            for (std::int64_t mult : {48, 24}) {
                const Real root = sqrt(Real(1 + mult * g));
                const Surface s = mult == 48 ? Surface::orientable(g) : Surface::nonorientable(g);
                for (std::int64_t n = 1; n <= 100; ++n) {
                    const Real value = floor((Real(7 - 2 * n) + root) / 4);
                    const std::int64_t expect = std::max<std::int64_t>(0, value.convert_to<std::int64_t>());
                    if (mu_nk(n, s) != expect)
                        FAIL("mismatch at n=" << n << " " << s.name());
                }
            }
        }
    };
    check_range(1, 20000, 1);
    check_range(20001, 1'000'000, 97);
    // Perfect squares 1 + 48g = m^2 and their neighbours are where rounding would bite.
    for (std::int64_t m = 7; m * m <= 1 + 48 * 1'000'000; m += 2)
        if ((m * m - 1) % 48 == 0) {
            const std::int64_t g = (m * m - 1) / 48;
            check_range(g > 1 ? g - 1 : 1, g + 1, 1);
        }
    for (std::int64_t m = 5; m * m <= 1 + 24 * 1'000'000; m += 2)
        if ((m * m - 1) % 24 == 0) {
            const std::int64_t g = (m * m - 1) / 24;
            check_range(g > 1 ? g - 1 : 1, g + 1, 1);
        }
}

TEST_CASE("table specs")
{
    const auto d = TableSpec::defaults(TableKind::mu_nonorientable);
    CHECK(d.rows == IntRange{1, 8});
    CHECK(d.columns == IntRange{1, 16});
    CHECK(TableSpec::defaults(TableKind::mu_orientable).columns == IntRange{0, 16});
    CHECK(TableSpec::defaults(TableKind::genus_orientable).columns == IntRange{0, 8});
    TableSpec bad = d;
    bad.columns = {0, 16};
    CHECK_THROWS_AS(bad.validate(), FormulaError);
    bad = d;
    bad.rows = {0, 3};
    CHECK_THROWS_AS(bad.validate(), FormulaError);
    const auto t = emit_table(TableSpec::defaults(TableKind::genus_orientable));
    CHECK(t.cells.size() == 72);
    CHECK(t.at(8, 8) == 43);
    CHECK(parse_table_kind("mu-orientable") == TableKind::mu_orientable);
}
