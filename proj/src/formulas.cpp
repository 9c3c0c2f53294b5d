#include "nkg/formulas.hpp"

#include <algorithm>
#include <charconv>

namespace nkg {

Surface Surface::orientable(std::int64_t genus)
{
    if (genus < 0)
        throw FormulaError("orientable genus must be nonnegative");
    return Surface(true, genus);
}

Surface Surface::nonorientable(std::int64_t genus)
{
    if (genus < 1)
        throw FormulaError("non-orientable genus must be at least 1");
    return Surface(false, genus);
}

Surface Surface::parse(std::string_view name)
{
    if (name.size() < 2 || (name[0] != 'S' && name[0] != 'N'))
        throw FormulaError("surface must be written S<g> or N<g>: '" + std::string(name) + "'");
    std::int64_t genus = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), genus);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw FormulaError("bad surface genus in '" + std::string(name) + "'");
    return name[0] == 'S' ? orientable(genus) : nonorientable(genus);
}

std::string Surface::name() const
{
    return (orientable_ ? "S" : "N") + std::to_string(genus_);
}

std::int64_t isqrt(std::int64_t m)
{
    if (m < 0)
        throw FormulaError("isqrt of a negative number");
    if (m < 2)
        return m;
    // Newton iteration from above converges to floor(sqrt(m)).
    std::int64_t x = m;
    std::int64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + m / x) / 2;
    }
    return x;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den)
{
    return -floor_div(-num, den);
}

std::int64_t euler_characteristic(const Surface& s)
{
    return s.is_orientable() ? 2 - 2 * s.genus() : 2 - s.genus();
}

std::int64_t complete_graph_genus(std::int64_t n, bool orientable)
{
    if (n < 3)
        throw FormulaError("complete_graph_genus requires n >= 3");
    if (orientable)
        return ceil_div((n - 3) * (n - 4), 12);
    if (n == 7)
        return 3;
    // K_3 and K_4 are planar; the smallest non-orientable surface is N_1.
    return std::max<std::int64_t>(1, ceil_div((n - 3) * (n - 4), 6));
}

std::int64_t genus_nk(std::int64_t n, std::int64_t k, bool orientable)
{
    if (n < 1)
        throw FormulaError("genus_nk requires n >= 1");
    if (k < 0)
        throw FormulaError("genus_nk requires k >= 0");
    const std::int64_t s = n + 2 * k;
    if (s <= 4)
        return orientable ? 0 : 1;
    return ceil_div((s - 1) * (s - 2), orientable ? 12 : 6);
}

std::int64_t mu_nk(std::int64_t n, const Surface& s)
{
    if (n < 1)
        throw FormulaError("mu_nk requires n >= 1 (use mu_extendability for n = 0)");
    if (s.is_sphere())
        return std::max<std::int64_t>(0, 3 - ceil_div(n, 2));
    // floor((a + sqrt(m)) / 4) == floor((a + isqrt(m)) / 4) for integer a: an integer
    // in (isqrt(m), sqrt(m)] would make sqrt(m) itself an integer.
    const std::int64_t m = 49 - 24 * euler_characteristic(s);
    return std::max<std::int64_t>(0, floor_div(7 - 2 * n + isqrt(m), 4));
}

std::int64_t mu_extendability(const Surface& s)
{
    if (s.is_sphere())
        return 3;
    return 2 + isqrt(4 - 2 * euler_characteristic(s));
}

std::int64_t rho(const Surface& s)
{
    if (s.is_sphere())
        return 5;
    return floor_div(5 + isqrt(49 - 24 * euler_characteristic(s)), 2);
}

std::int64_t invert_genus_table(std::int64_t n, std::int64_t genus, bool orientable)
{
    if (n < 1)
        throw FormulaError("invert_genus_table requires n >= 1");
    if (genus < (orientable ? 0 : 1))
        throw FormulaError("invert_genus_table: genus out of range for the surface type");
    std::int64_t k = 0;
    while (genus_nk(n, k, orientable) <= genus)
        ++k;
    return k;
}

std::int64_t invert_genus_column(std::int64_t genus, bool orientable)
{
    if (genus < (orientable ? 0 : 1))
        throw FormulaError("invert_genus_column: genus out of range for the surface type");
    std::int64_t n = 1;
    while (genus_nk(n, 0, orientable) <= genus)
        ++n;
    return n;
}

bool check_mu_recurrence(std::int64_t n, const Surface& s)
{
    if (n < 3)
        throw FormulaError("check_mu_recurrence requires n >= 3");
    return mu_nk(n, s) == std::max<std::int64_t>(0, mu_nk(n - 2, s) - 1);
}

bool ceiling_bound_equiv(std::int64_t x_num, std::int64_t x_den, std::int64_t g, CeilDirection dir)
{
    if (x_den == 0)
        throw FormulaError("ceiling_bound_equiv: zero denominator");
    if (x_den < 0) {
        x_num = -x_num;
        x_den = -x_den;
    }
    const std::int64_t ceil_x = ceil_div(x_num, x_den);
    if (dir == CeilDirection::at_most)
        return (ceil_x <= g) == (x_num <= g * x_den);
    return (g <= ceil_x - 1) == (g * x_den < x_num);
}

std::string_view to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::genus_orientable: return "genus-orientable";
    case TableKind::genus_nonorientable: return "genus-nonorientable";
    case TableKind::mu_orientable: return "mu-orientable";
    case TableKind::mu_nonorientable: return "mu-nonorientable";
    }
    return "?";
}

TableKind parse_table_kind(std::string_view name)
{
    for (auto kind : {TableKind::genus_orientable, TableKind::genus_nonorientable,
                      TableKind::mu_orientable, TableKind::mu_nonorientable}) {
        if (to_string(kind) == name)
            return kind;
    }
    throw FormulaError("unknown table kind '" + std::string(name) + "'");
}

TableSpec TableSpec::defaults(TableKind kind)
{
    switch (kind) {
    case TableKind::genus_orientable:
    case TableKind::genus_nonorientable:
        return {kind, {1, 8}, {0, 8}};
    case TableKind::mu_orientable:
        return {kind, {1, 8}, {0, 16}};
    case TableKind::mu_nonorientable:
        return {kind, {1, 8}, {1, 16}};
    }
    throw FormulaError("unknown table kind");
}

void TableSpec::validate() const
{
    if (rows.size() < 1 || columns.size() < 1)
        throw FormulaError("table ranges must be nonempty");
    if (rows.first < 1)
        throw FormulaError("table rows (n) must start at 1 or later");
    const std::int64_t min_column = kind == TableKind::mu_nonorientable ? 1 : 0;
    if (columns.first < min_column)
        throw FormulaError("table columns must start at " + std::to_string(min_column) + " or later");
}

std::int64_t FormulaTable::at(std::int64_t row, std::int64_t column) const
{
    if (row < spec.rows.first || row > spec.rows.last || column < spec.columns.first ||
        column > spec.columns.last)
        throw FormulaError("table index out of range");
    return cells[static_cast<std::size_t>((row - spec.rows.first) * spec.columns.size() +
                                          (column - spec.columns.first))];
}

FormulaTable emit_table(const TableSpec& spec)
{
    spec.validate();
    FormulaTable table{spec, {}};
    table.cells.reserve(static_cast<std::size_t>(spec.rows.size() * spec.columns.size()));
    for (std::int64_t n = spec.rows.first; n <= spec.rows.last; ++n) {
        for (std::int64_t c = spec.columns.first; c <= spec.columns.last; ++c) {
            switch (spec.kind) {
            case TableKind::genus_orientable: table.cells.push_back(genus_nk(n, c, true)); break;
            case TableKind::genus_nonorientable: table.cells.push_back(genus_nk(n, c, false)); break;
            case TableKind::mu_orientable: table.cells.push_back(mu_nk(n, Surface::orientable(c))); break;
            case TableKind::mu_nonorientable:
                table.cells.push_back(mu_nk(n, Surface::nonorientable(c)));
                break;
            }
        }
    }
    return table;
}

DualityReport check_duality(const TableSpec& mu_spec)
{
    mu_spec.validate();
    if (mu_spec.kind != TableKind::mu_orientable && mu_spec.kind != TableKind::mu_nonorientable)
        throw FormulaError("duality check applies to mu tables only");
    const bool orientable = mu_spec.kind == TableKind::mu_orientable;
    DualityReport report;
    for (std::int64_t n = mu_spec.rows.first; n <= mu_spec.rows.last; ++n) {
        for (std::int64_t g = mu_spec.columns.first; g <= mu_spec.columns.last; ++g) {
            const Surface s = orientable ? Surface::orientable(g) : Surface::nonorientable(g);
            ++report.cells_checked;
            if (report.holds && mu_nk(n, s) != invert_genus_table(n, g, orientable)) {
                report.holds = false;
                report.first_bad_n = n;
                report.first_bad_genus = g;
            }
        }
    }
    return report;
}

}  // namespace nkg
