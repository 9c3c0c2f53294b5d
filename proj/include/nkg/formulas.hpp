#pragma once

// Closed-form extendability / factor-criticality thresholds versus surface
// genus, the g(n,k) and mu(n, surface) tables, and their inversion checks.
// Everything here is exact integer arithmetic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nkg {

class FormulaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed surface: S_g (orientable, g >= 0) or N_g (non-orientable, g >= 1).
class Surface {
public:
    static Surface orientable(std::int64_t genus);
    static Surface nonorientable(std::int64_t genus);
    static Surface sphere() { return orientable(0); }

    /// Parses "S<g>" or "N<g>"; "N0" is rejected.
    static Surface parse(std::string_view name);

    bool is_orientable() const { return orientable_; }
    std::int64_t genus() const { return genus_; }
    bool is_sphere() const { return orientable_ && genus_ == 0; }
    std::string name() const;

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    Surface(bool orientable, std::int64_t genus) : orientable_(orientable), genus_(genus) {}
    bool orientable_;
    std::int64_t genus_;
};

/// floor(sqrt(m)) for m >= 0.
std::int64_t isqrt(std::int64_t m);

/// Floor / ceiling division with a positive denominator.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

std::int64_t euler_characteristic(const Surface& s);

/// Orientable / non-orientable genus of K_n. Defined for n >= 3; for n in {3, 4}
/// returns 0 (orientable) or 1 (non-orientable).
std::int64_t complete_graph_genus(std::int64_t n, bool orientable);

/// g(n,k) (orientable) or g~(n,k) (non-orientable): the least genus carrying an
/// (n,k)-graph. Requires n >= 1, k >= 0.
std::int64_t genus_nk(std::int64_t n, std::int64_t k, bool orientable);

/// mu(n, s): least k such that no s-embeddable (n,k)-graph exists. n >= 1.
std::int64_t mu_nk(std::int64_t n, const Surface& s);

/// mu(s): least k such that no s-embeddable graph is k-extendable.
std::int64_t mu_extendability(const Surface& s);

/// rho(s): least n such that no s-embeddable graph is n-factor-critical.
std::int64_t rho(const Surface& s);

/// Brute-force inverse of genus_nk: min{k >= 0 : genus_nk(n, k) > genus}.
std::int64_t invert_genus_table(std::int64_t n, std::int64_t genus, bool orientable);

/// Brute-force inverse of genus_nk along n: min{n >= 1 : genus_nk(n, 0) > genus}.
std::int64_t invert_genus_column(std::int64_t genus, bool orientable);

/// mu(n, s) == max(0, mu(n-2, s) - 1). n >= 3.
bool check_mu_recurrence(std::int64_t n, const Surface& s);

enum class CeilDirection { at_most, below };

/// Self-test of the ceiling inequality lemma for x = num/den:
///   at_most: ceil(x) <= g  <=>  x <= g
///   below:   g <= ceil(x) - 1  <=>  g < x
/// Returns true iff both sides agree.
bool ceiling_bound_equiv(std::int64_t x_num, std::int64_t x_den, std::int64_t g, CeilDirection dir);

enum class TableKind { genus_orientable, genus_nonorientable, mu_orientable, mu_nonorientable };

std::string_view to_string(TableKind kind);
TableKind parse_table_kind(std::string_view name);

struct IntRange {
    std::int64_t first = 0;
    std::int64_t last = 0;
    std::int64_t size() const { return last - first + 1; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Rows are indexed by n; columns by k (genus tables) or by surface genus (mu tables).
struct TableSpec {
    TableKind kind = TableKind::genus_orientable;
    IntRange rows;
    IntRange columns;

    /// Ranges of the published tables: n 1..8 and k 0..8, g 0..16 or g~ 1..16.
    static TableSpec defaults(TableKind kind);
    void validate() const;
};

struct FormulaTable {
    TableSpec spec;
    std::vector<std::int64_t> cells;  // row-major

    std::int64_t at(std::int64_t row, std::int64_t column) const;
};

FormulaTable emit_table(const TableSpec& spec);

/// Result of comparing the closed-form mu(n, .) against invert_genus_table cell by cell.
struct DualityReport {
    bool holds = true;
    std::int64_t cells_checked = 0;
    std::int64_t first_bad_n = -1;
    std::int64_t first_bad_genus = -1;
};

DualityReport check_duality(const TableSpec& mu_spec);

}  // namespace nkg
