#include "nkg/extend.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace nkg {

std::string_view to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::precondition_unmet: return "precondition-unmet";
    }
    return "?";
}

bool next_colex_subset(std::vector<Vertex>& subset, int order)
{
    const std::size_t n = subset.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int limit = (i + 1 < n) ? subset[i + 1] : order;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (std::size_t j = 0; j < i; ++j)
                subset[j] = static_cast<Vertex>(j);
            return true;
        }
    }
    return false;
}

namespace {

struct ExtendOutcome {
    std::uint64_t work = 0;
    bool holds = true;
    Matching failing;  // empty when the graph itself has no perfect matching
    std::string reason;
};

// Bare definition: perfect matching exists and every k-matching extends.
// Throws CapExceeded once more than `budget` subproblems are needed.
ExtendOutcome extendable_core(const Graph& g, int k, std::uint64_t budget)
{
    ExtendOutcome out;
    auto charge = [&]() {
        if (++out.work > budget)
            throw CapExceeded("work limit of " + std::to_string(budget) + " subproblems exceeded");
    };
    charge();
    if (!has_perfect_matching(g)) {
        out.holds = false;
        out.reason = g.order() % 2 ? "odd order, no perfect matching" : "no perfect matching";
        return out;
    }
    if (k == 0)
        return out;
    for_each_k_matching(g, k, [&](const std::vector<Edge>& m) {
        charge();
        std::vector<Vertex> covered;
        for (const Edge& e : m) {
            covered.push_back(e.u);
            covered.push_back(e.v);
        }
        if (!has_perfect_matching(induced_delete(g, VertexSet(covered)).graph)) {
            out.holds = false;
            out.failing.edges = m;
            out.reason = "matching does not extend to a perfect matching";
            return false;
        }
        return true;
    });
    return out;
}

void require_nonnegative(int value, const char* name)
{
    if (value < 0)
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

struct SubsetResult {
    ExtendOutcome outcome;
    bool exceeded = false;
};

// Checks G - S for every n-subset S in colex order. Blocks of subsets are fanned out
// across workers; results are consumed in enumeration order so the witness, the
// reported work and any cap failure do not depend on the worker count.
Verdict subset_engine(const Graph& g, int n, int k, const DeciderOptions& opts)
{
    constexpr std::size_t block_size = 256;
    const int jobs = std::max(1, opts.jobs);
    Verdict verdict;
    std::vector<Vertex> subset(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        subset[static_cast<std::size_t>(i)] = i;
    bool more = true;
    while (more) {
        std::vector<std::vector<Vertex>> block;
        while (more && block.size() < block_size) {
            block.push_back(subset);
            more = next_colex_subset(subset, g.order());
        }
        const std::uint64_t remaining = opts.cap > verdict.work ? opts.cap - verdict.work : 0;
        std::vector<SubsetResult> results(block.size());
        auto work_on = [&](std::size_t first) {
            for (std::size_t i = first; i < block.size(); i += static_cast<std::size_t>(jobs)) {
                try {
                    auto sub = induced_delete(g, VertexSet(block[i]));
                    results[i].outcome = extendable_core(sub.graph, k, remaining);
                    for (Edge& e : results[i].outcome.failing.edges)
                        e = Edge(sub.original[static_cast<std::size_t>(e.u)],
                                 sub.original[static_cast<std::size_t>(e.v)]);
                } catch (const CapExceeded&) {
                    results[i].exceeded = true;
                }
            }
        };
        if (jobs == 1 || block.size() == 1) {
            work_on(0);
        } else {
            std::vector<std::jthread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back(work_on, static_cast<std::size_t>(w));
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
            const SubsetResult& r = results[i];
            if (r.exceeded || verdict.work + r.outcome.work > opts.cap)
                throw CapExceeded("work limit of " + std::to_string(opts.cap) + " subproblems exceeded");
            verdict.work += r.outcome.work;
            if (!r.outcome.holds) {
                verdict.status = VerdictStatus::fails;
                verdict.witness = Witness{VertexSet(block[i]), r.outcome.failing};
                verdict.reason = "deleting " + to_string(VertexSet(block[i])) + ": " + r.outcome.reason;
                return verdict;
            }
        }
    }
    return verdict;
}

}  // namespace

Verdict is_k_extendable(const Graph& g, int k, const DeciderOptions& opts)
{
    require_nonnegative(k, "k");
    const ExtendOutcome out = extendable_core(g, k, opts.cap);
    Verdict verdict;
    verdict.work = out.work;
    if (!out.holds) {
        verdict.status = VerdictStatus::fails;
        verdict.witness = Witness{VertexSet{}, out.failing};
        verdict.reason = out.reason;
    }
    return verdict;
}

Verdict is_n_factor_critical(const Graph& g, int n, const DeciderOptions& opts)
{
    require_nonnegative(n, "n");
    if (n == 0)
        return is_k_extendable(g, 0, opts);
    if (g.order() < n) {
        Verdict v;
        v.status = VerdictStatus::not_applicable;
        v.reason = "graph has fewer than n vertices";
        return v;
    }
    return subset_engine(g, n, 0, opts);
}

Verdict is_nk_graph(const Graph& g, int n, int k, const DeciderOptions& opts)
{
    require_nonnegative(n, "n");
    require_nonnegative(k, "k");
    Verdict v;
    if ((g.order() - n) % 2 != 0) {
        v.status = VerdictStatus::not_applicable;
        v.reason = "|G|-n is odd";
        return v;
    }
    if (g.order() < n + 2 * k + 2) {
        v.status = VerdictStatus::not_applicable;
        v.reason = "|G| < n+2k+2";
        return v;
    }
    if (n == 0)
        return is_k_extendable(g, k, opts);
    return subset_engine(g, n, k, opts);
}

bool witness_is_counterexample(const Graph& g, const Witness& w, int n, int k)
{
    if (static_cast<int>(w.deleted.size()) != n)
        return false;
    if (!w.matching.edges.empty() && static_cast<int>(w.matching.size()) != k)
        return false;
    try {
        w.deleted.check_within(g);
    } catch (const GraphError&) {
        return false;
    }
    // M must avoid S and be a matching of G.
    for (const Edge& e : w.matching.edges)
        if (w.deleted.contains(e.u) || w.deleted.contains(e.v))
            return false;
    if (!w.matching.is_valid_in(g))
        return false;
    std::vector<Vertex> gone = w.deleted.members();
    const VertexSet covered = w.matching.covered();
    gone.insert(gone.end(), covered.members().begin(), covered.members().end());
    return !has_perfect_matching(induced_delete(g, VertexSet(gone)).graph);
}

// ---- structural property checks --------------------------------------------

namespace {

CheckResult unmet(std::string why)
{
    return {CheckStatus::precondition_unmet, std::move(why)};
}

CheckResult verdict_of(bool ok, std::string detail)
{
    return {ok ? CheckStatus::passed : CheckStatus::failed, std::move(detail)};
}

}  // namespace

CheckResult check_plummer_basics(const Graph& g, int k, const DeciderOptions& opts)
{
    if (k < 1)
        return unmet("k must be positive");
    if (!g.is_connected())
        return unmet("graph is not connected");
    if (g.order() < 2 * k + 2)
        return unmet("order below 2k+2");
    if (!is_k_extendable(g, k, opts).holds())
        return unmet("graph is not " + std::to_string(k) + "-extendable");
    const bool lower = is_k_extendable(g, k - 1, opts).holds();
    const int kappa = vertex_connectivity(g);
    return verdict_of(lower && kappa >= k + 1,
                      std::to_string(k - 1) + "-extendable: " + (lower ? "yes" : "no") +
                          ", kappa = " + std::to_string(kappa) + " (need >= " + std::to_string(k + 1) + ")");
}

CheckResult check_nk_basics(const Graph& g, int n, int k, const DeciderOptions& opts)
{
    if (n < 1 || k < 1)
        return unmet("n and k must be positive");
    if (!g.is_connected())
        return unmet("graph is not connected");
    if (!is_nk_graph(g, n, k, opts).holds())
        return unmet("graph is not an (" + std::to_string(n) + "," + std::to_string(k) + ")-graph");
    const bool shifted = n < 2 || is_nk_graph(g, n - 2, k + 1, opts).holds();
    const int delta = g.min_degree();
    const int kappa = vertex_connectivity(g);
    return verdict_of(shifted && delta >= kappa && kappa >= n + k + 1,
                      "(" + std::to_string(n - 2) + "," + std::to_string(k + 1) + ")-graph: " +
                          (n < 2 ? "n/a" : (shifted ? "yes" : "no")) + ", delta = " + std::to_string(delta) +
                          ", kappa = " + std::to_string(kappa) + " (need >= " + std::to_string(n + k + 1) + ")");
}

CheckResult check_bipartite_bound(const Graph& g, int n, int k, const DeciderOptions& opts)
{
    // The argument swaps a vertex of S for one of H, so S must be nonempty; C_6 is a
    // bipartite (0,1)-graph.
    if (k < 1 || n < 1)
        return unmet("need n >= 1 and k >= 1");
    if (!g.is_connected())
        return unmet("graph is not connected");
    if (!is_nk_graph(g, n, k, opts).holds())
        return unmet("graph is not an (" + std::to_string(n) + "," + std::to_string(k) + ")-graph");
    const int largest = max_induced_bipartite_order(g);
    const int bound = g.order() - n - 1;
    return verdict_of(largest <= bound, "largest induced bipartite subgraph = " + std::to_string(largest) +
                                            " (bound " + std::to_string(bound) + ")");
}

CheckResult check_louyu_dichotomy(const Graph& g, int k, const DeciderOptions& opts)
{
    if (k < 1)
        return unmet("k must be positive");
    if (g.order() > 4 * k)
        return unmet("order exceeds 4k");
    if (g.order() < 2 * k + 2)
        return unmet("order below 2k+2");
    if (!is_k_extendable(g, k, opts).holds())
        return unmet("graph is not " + std::to_string(k) + "-extendable");
    const bool bip = is_bipartite(g);
    const int kappa = vertex_connectivity(g);
    return verdict_of(bip || kappa >= 2 * k, std::string("bipartite: ") + (bip ? "yes" : "no") +
                                                 ", kappa = " + std::to_string(kappa) + " (need >= " +
                                                 std::to_string(2 * k) + ")");
}

}  // namespace nkg
