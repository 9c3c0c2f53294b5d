#pragma once

// Command implementations behind the nkgenus executable. Each run_* takes a parsed
// configuration and returns a document that renders as text, JSON or CSV.

#include "nkg/formulas.hpp"
#include "nkg/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace nkg::cli {

enum class OutputFormat { text, json, csv };
enum class Status { ok, fail, not_applicable, cap_exceeded };

std::string_view to_string(Status status);
OutputFormat parse_output_format(std::string_view name);

inline constexpr std::uint64_t default_seed = 20240517;

struct CommandConfig {
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = default_seed;
    std::uint64_t cap = 10'000'000;
    int jobs = 1;

    // formula
    std::string formula;  // mu-nk | mu-ext | rho | genus-nk | kn-genus
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::string> surface;
    bool nonorientable = false;

    // table
    std::string table;  // genus | mu
    std::optional<IntRange> rows;
    std::optional<IntRange> columns;
    bool check_duality = false;

    // check / embed / genus: graph input (graph_text wins over graph_path)
    std::string property;  // extendable | factor-critical | nk
    std::string graph_path;
    std::optional<std::string> graph_text;
    GraphFormat input_format = GraphFormat::automatic;
    bool suites = false;

    // embed
    std::string rotation_path;
    std::optional<std::string> rotation_text;

    // genus
    bool exhaustive = false;
    bool bound = false;
    bool search = false;
    std::uint64_t budget = 200'000;
    std::string witness_path;
};

struct OutputDocument {
    Status status = Status::ok;
    std::string reason;            // set for fail / not-applicable / cap-exceeded
    nlohmann::ordered_json payload;
    std::string text;
    std::string csv;

    int exit_code() const;
    std::string render(OutputFormat format) const;
};

/// Parses "a:b" (inclusive) or a single integer.
IntRange parse_range(std::string_view text);

OutputDocument run_formula(const CommandConfig& config);
OutputDocument run_table(const CommandConfig& config);
OutputDocument run_check(const CommandConfig& config);
OutputDocument run_embed(const CommandConfig& config);
OutputDocument run_genus(const CommandConfig& config);

/// Text rendering of a formula table, as printed by `table`.
std::string render_table_text(const FormulaTable& table);
std::string render_table_csv(const FormulaTable& table);

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace nkg::cli
