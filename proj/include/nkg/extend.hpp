#pragma once

// Brute-force, witness-producing deciders for k-extendability, n-factor-criticality
// and (n,k)-graphs, plus executable checks of the structural facts they obey.

#include "nkg/graph.hpp"

#include <cstdint>
#include <string>

namespace nkg {

enum class VerdictStatus { holds, fails, not_applicable };

std::string_view to_string(VerdictStatus status);

/// A failing pair (S, M): deleting S and then V(M) leaves no perfect matching.
/// Labels are those of the graph the decider was given.
struct Witness {
    VertexSet deleted;
    Matching matching;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::holds;
    std::optional<Witness> witness;  // present iff status == fails
    std::uint64_t work = 0;          // (subset, matching) subproblems examined
    std::string reason;              // set for fails / not_applicable

    bool holds() const { return status == VerdictStatus::holds; }
};

struct DeciderOptions {
    std::uint64_t cap = 10'000'000;  // subproblem budget; CapExceeded beyond it
    int jobs = 1;                    // worker threads for subset enumeration
};

/// k-matchings of g in lexicographic order of their sorted edge indices.
/// The callback returns false to stop.
template <typename Fn>
void for_each_k_matching(const Graph& g, int k, Fn&& fn);

Verdict is_k_extendable(const Graph& g, int k, const DeciderOptions& opts = {});
Verdict is_n_factor_critical(const Graph& g, int n, const DeciderOptions& opts = {});
Verdict is_nk_graph(const Graph& g, int n, int k, const DeciderOptions& opts = {});

/// Re-checks a witness independently: G - S - V(M) has no perfect matching, M is a
/// matching of G - S, and |S|, |M| are as claimed.
bool witness_is_counterexample(const Graph& g, const Witness& w, int n, int k);

/// Next n-subset of {0..order-1} in colex order; false after the last one.
bool next_colex_subset(std::vector<Vertex>& subset, int order);

// ---- structural property checks --------------------------------------------

enum class CheckStatus { passed, failed, precondition_unmet };

std::string_view to_string(CheckStatus status);

struct CheckResult {
    CheckStatus status = CheckStatus::passed;
    std::string detail;

    bool passed() const { return status == CheckStatus::passed; }
};

// The bare definition makes any graph whose k-matchings are all perfect vacuously
// k-extendable (P_4 with k = 2), so the extendability checks below also require
// |G| >= 2k+2.

/// Connected k-extendable (k >= 1): (k-1)-extendable and (k+1)-connected.
CheckResult check_plummer_basics(const Graph& g, int k, const DeciderOptions& opts = {});

/// Connected (n,k)-graph (n, k >= 1): an (n-2, k+1)-graph when n >= 2, and
/// delta >= kappa >= n+k+1.
CheckResult check_nk_basics(const Graph& g, int n, int k, const DeciderOptions& opts = {});

/// Connected (n,k)-graph with n, k >= 1: no induced bipartite subgraph on more than
/// |G|-n-1 vertices.
CheckResult check_bipartite_bound(const Graph& g, int n, int k, const DeciderOptions& opts = {});

/// k-extendable of order in [2k+2, 4k]: bipartite or kappa >= 2k.
CheckResult check_louyu_dichotomy(const Graph& g, int k, const DeciderOptions& opts = {});

// ---- implementation of the enumeration template -------------------------------

namespace detail {

template <typename Fn>
bool k_matchings_from(const Graph& g, int k, std::size_t start, std::vector<char>& used,
                      std::vector<Edge>& chosen, Fn& fn)
{
    if (static_cast<int>(chosen.size()) == k)
        return fn(static_cast<const std::vector<Edge>&>(chosen));
    const auto& edges = g.edges();
    const std::size_t remaining = static_cast<std::size_t>(k) - chosen.size();
    for (std::size_t i = start; i + remaining <= edges.size(); ++i) {
        const Edge& e = edges[i];
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
            continue;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
        chosen.push_back(e);
        const bool go_on = k_matchings_from(g, k, i + 1, used, chosen, fn);
        chosen.pop_back();
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
        if (!go_on)
            return false;
    }
    return true;
}

}  // namespace detail

template <typename Fn>
void for_each_k_matching(const Graph& g, int k, Fn&& fn)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::vector<Edge> chosen;
    detail::k_matchings_from(g, k, 0, used, chosen, fn);
}

}  // namespace nkg
