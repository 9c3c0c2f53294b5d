// nkgenus: formulas, tables, matching checks, embedding reports and genus search.

#include "nkg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int usage_exit = 64;

void add_graph_options(CLI::App* sub, nkg::cli::CommandConfig& config, std::string& input_format,
                       std::string& generator)
{
    sub->add_option("--graph", config.graph_path, "graph file, or - for stdin");
    sub->add_option("--generate", generator, "built-in graph, e.g. \"complete 6\", \"icosahedron\", \"cycle 6\"");
    sub->add_option("--input-format", input_format, "graph6 | edgelist | auto")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace nkg::cli;
    CommandConfig config;
    std::string format = "text";
    std::string input_format = "auto";
    std::string generator;
    std::string range_rows;
    std::string range_columns;
    bool orientable_flag = false;

    CLI::App app{"Extendability versus surface genus: formulas, tables and graph oracles", "nkgenus"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", config.seed, "seed for randomised search")->capture_default_str();
    app.add_option("--cap", config.cap, "work cap in subproblems")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    formula->add_option("name", config.formula, "mu-nk | mu-ext | rho | genus-nk | kn-genus")->required();
    formula->add_option("--n", config.n);
    formula->add_option("--k", config.k);
    formula->add_option("--surface", config.surface, "S<g> or N<g>");
    formula->add_flag("--nonorientable", config.nonorientable);
    formula->add_flag("--orientable", orientable_flag);

    auto* table = app.add_subcommand("table", "print a genus or mu table");
    table->add_option("kind", config.table, "genus | mu")->required();
    table->add_flag("--nonorientable", config.nonorientable);
    table->add_flag("--orientable", orientable_flag);
    table->add_option("--rows", range_rows, "n range a:b");
    table->add_option("--columns", range_columns, "k or genus range a:b");
    table->add_flag("--check-duality", config.check_duality, "compare closed form with table inversion");

    auto* check = app.add_subcommand("check", "decide a matching property of a graph");
    check->add_option("property", config.property, "extendable | factor-critical | nk")->required();
    check->add_option("--n", config.n);
    check->add_option("--k", config.k);
    check->add_flag("--suites", config.suites, "run structural checks when the property holds");
    add_graph_options(check, config, input_format, generator);

    auto* embed = app.add_subcommand("embed", "trace faces of a rotation system");
    add_graph_options(embed, config, input_format, generator);
    embed->add_option("--rotation", config.rotation_path, "rotation system file")->required();
    embed->add_option("--n", config.n, "check the degree bound for an (n,k)-graph");
    embed->add_option("--k", config.k);

    auto* genus = app.add_subcommand("genus", "bound or compute the genus of a graph");
    add_graph_options(genus, config, input_format, generator);
    genus->add_flag("--exhaustive", config.exhaustive);
    genus->add_flag("--bound", config.bound);
    genus->add_flag("--search", config.search);
    genus->add_flag("--nonorientable", config.nonorientable);
    genus->add_flag("--orientable", orientable_flag);
    genus->add_option("--budget", config.budget, "local-search evaluations")->check(CLI::PositiveNumber);
    genus->add_option("--witness", config.witness_path, "write the best rotation system here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage_exit;
    }

    try {
        if (orientable_flag && config.nonorientable)
            throw UsageError("--orientable and --nonorientable are exclusive");
        config.format = parse_output_format(format);
        config.input_format = nkg::parse_graph_format(input_format);
        if (!range_rows.empty())
            config.rows = parse_range(range_rows);
        if (!range_columns.empty())
            config.columns = parse_range(range_columns);
        if (!generator.empty()) {
            if (!config.graph_path.empty())
                throw UsageError("--graph and --generate are exclusive");
            config.graph_text = nkg::to_graph6(nkg::generate(generator));
            config.input_format = nkg::GraphFormat::graph6;
        }

        OutputDocument doc;
        if (*formula)
            doc = run_formula(config);
        else if (*table)
            doc = run_table(config);
        else if (*check)
            doc = run_check(config);
        else if (*embed)
            doc = run_embed(config);
        else
            doc = run_genus(config);
        std::cout << doc.render(config.format);
        if (!doc.reason.empty() && config.format != OutputFormat::json && doc.status == Status::cap_exceeded)
            std::cerr << "nkgenus: " << doc.reason << "\n";
        return doc.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "nkgenus: " << e.what() << "\n";
        return usage_exit;
    }
}
