#include "nkg/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

namespace nkg {

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, const std::vector<Edge>& edges) : order_(order)
{
    if (order < 0)
        throw GraphError("graph order must be nonnegative");
    const auto n = static_cast<std::size_t>(order);
    adj_.assign(n, {});
    edge_id_.assign(n * n, -1);
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= order)
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " out of range for order " + std::to_string(order));
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (i > 0 && edges_[i - 1] == e)
            throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        edge_id_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<int>(i);
        edge_id_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<int>(i);
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    return edge_index(a, b) >= 0;
}

int Graph::edge_index(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= order_ || b >= order_)
        return -1;
    return edge_id_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)];
}

int Graph::min_degree() const
{
    int best = order_ == 0 ? 0 : std::numeric_limits<int>::max();
    for (Vertex v = 0; v < order_; ++v)
        best = std::min(best, degree(v));
    return best;
}

bool Graph::is_connected() const
{
    if (order_ == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == order_;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw GraphError("vertex set has duplicate members");
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(const Graph& g) const
{
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= g.order()))
        throw GraphError("vertex set member out of range");
}

VertexSet Matching::covered() const
{
    std::vector<Vertex> vs;
    for (const Edge& e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    return VertexSet(std::move(vs));
}

bool Matching::is_valid_in(const Graph& g) const
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : edges) {
        if (!g.adjacent(e.u, e.v))
            return false;
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
            return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

std::string to_string(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(s.members()[i]);
    }
    return out + "}";
}

std::string to_string(const Matching& m)
{
    std::string out = "{";
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(m.edges[i].u) + "-" + std::to_string(m.edges[i].v);
    }
    return out + "}";
}

// ---- ingestion -------------------------------------------------------------

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

bool looks_like_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(graph6_header))
        return true;
    if (text.empty())
        return false;
    return std::all_of(text.begin(), text.end(), [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "graph6")
        return GraphFormat::graph6;
    if (name == "edgelist" || name == "edge-list")
        return GraphFormat::edge_list;
    if (name == "auto")
        return GraphFormat::automatic;
    throw GraphError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::automatic)
        format = looks_like_graph6(text) ? GraphFormat::graph6 : GraphFormat::edge_list;
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    if (text.empty())
        throw GraphError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126)
            throw GraphError("graph6: byte outside the printable range 63..126");
    }
    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > text.size())
            throw GraphError("graph6: truncated size header");
        std::int64_t value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | (text[pos++] - 63);
        return value;
    };
    std::int64_t n = 0;
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }
    if (n > 100000)
        throw GraphError("graph6: order too large");
    const std::int64_t bits = n * (n - 1) / 2;
    const std::int64_t bytes = (bits + 5) / 6;
    if (static_cast<std::int64_t>(text.size() - pos) != bytes)
        throw GraphError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(text.size() - pos));
    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if (byte & (1 << (5 - k % 6)))
                edges.emplace_back(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
        if (byte & (1 << (5 - k % 6)))
            throw GraphError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    int declared = -1;
    int max_label = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        auto number = [&](const std::string& t) {
            long long v = 0;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || p != t.data() + t.size() || v < 0 || v > 1000000)
                throw GraphError("edge list line " + std::to_string(lineno) + ": bad vertex label '" + t + "'");
            return static_cast<int>(v);
        };
        if (tok.size() == 2 && tok[0] == "n") {
            declared = number(tok[1]);
            continue;
        }
        if (tok.size() != 2)
            throw GraphError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        const int u = number(tok[0]);
        const int v = number(tok[1]);
        if (u == v)
            throw GraphError("edge list line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    if (declared >= 0 && max_label >= declared)
        throw GraphError("edge list: vertex " + std::to_string(max_label) + " out of range for n " +
                         std::to_string(declared));
    return Graph(declared >= 0 ? declared : max_label + 1, edges);
}

std::string to_graph6(const Graph& g)
{
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::string to_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// ---- generators ------------------------------------------------------------

Graph complete_graph(int n)
{
    if (n < 1)
        throw GraphError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    if (n < 1)
        throw GraphError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw GraphError("complete bipartite graph needs both sides nonempty");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph icosahedron()
{
    // Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11. Upper vertex i
    // is adjacent to lower vertices i+5 and i+5+1 (cyclically).
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        const int up = 1 + i;
        const int up_next = 1 + (i + 1) % 5;
        const int low = 6 + i;
        const int low_next = 6 + (i + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(up, up_next);
        edges.emplace_back(up, low);
        edges.emplace_back(up, low_next);
        edges.emplace_back(low, low_next);
        edges.emplace_back(low, 11);
    }
    return Graph(12, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

namespace {

// mt19937_64's output sequence is fixed by the standard; thresholds avoid the
// implementation-defined distribution classes.
bool coin(std::mt19937_64& rng, double p)
{
    if (p >= 1.0)
        return true;
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    return (rng() >> 11) < threshold;
}

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw GraphError("edge probability must lie in [0, 1]");
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw GraphError("random graph needs n >= 1");
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng, p))
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw GraphError("random graph needs n >= 1");
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        auto& slot = present[static_cast<std::size_t>(std::min(a, b) * n + std::max(a, b))];
        if (!slot) {
            slot = 1;
            edges.emplace_back(a, b);
        }
    };
    for (int v = 1; v < n; ++v)
        add(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng, p))
                add(i, j);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges())
        edges.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), edges);
}

Graph generate(std::string_view description)
{
    std::istringstream in{std::string(description)};
    std::string family;
    in >> family;
    auto need_int = [&]() {
        long long v = 0;
        if (!(in >> v) || v < 0 || v > 100000)
            throw GraphError("generate: bad integer parameter in '" + std::string(description) + "'");
        return static_cast<int>(v);
    };
    Graph g;
    if (family == "complete") {
        g = complete_graph(need_int());
    } else if (family == "cycle") {
        g = cycle_graph(need_int());
    } else if (family == "path") {
        g = path_graph(need_int());
    } else if (family == "complete-bipartite") {
        const int a = need_int();
        g = complete_bipartite(a, need_int());
    } else if (family == "icosahedron") {
        g = icosahedron();
    } else if (family == "petersen") {
        g = petersen();
    } else if (family == "random") {
        const int n = need_int();
        double p = 0;
        std::uint64_t seed = 0;
        if (!(in >> p >> seed))
            throw GraphError("generate: random needs 'random <n> <p> <seed>'");
        g = random_graph(n, p, seed);
    } else {
        throw GraphError("generate: unknown family '" + family + "'");
    }
    std::string extra;
    if (in >> extra)
        throw GraphError("generate: trailing input '" + extra + "'");
    return g;
}

// ---- maximum matching --------------------------------------------------------

Matching maximum_matching(const Graph& g)
{
    // Edmonds' blossom algorithm, O(V^3): BFS from each free vertex, contracting
    // odd cycles through a base[] array.
    const int n = g.order();
    const auto N = static_cast<std::size_t>(n);
    std::vector<int> match(N, -1), parent(N), base(N);
    std::vector<char> used(N), blossom(N);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(N, 0);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1)
                break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)])
                return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            const auto mv = static_cast<std::size_t>(match[static_cast<std::size_t>(v)]);
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base[mv])] = 1;
            parent[static_cast<std::size_t>(v)] = child;
            child = static_cast<int>(mv);
            v = parent[mv];
        }
    };
    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int to : g.neighbors(v)) {
                const auto t = static_cast<std::size_t>(to);
                if (base[static_cast<std::size_t>(v)] == base[t] || match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root || (match[t] != -1 && parent[static_cast<std::size_t>(match[t])] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        const auto si = static_cast<std::size_t>(i);
                        if (blossom[static_cast<std::size_t>(base[si])]) {
                            base[si] = cur;
                            if (!used[si]) {
                                used[si] = 1;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent[t] == -1) {
                    parent[t] = v;
                    if (match[t] == -1)
                        return to;
                    used[static_cast<std::size_t>(match[t])] = 1;
                    q.push_back(match[t]);
                }
            }
        }
        return -1;
    };

    // Greedy start keeps the number of augmenting searches small.
    for (const Edge& e : g.edges()) {
        if (match[static_cast<std::size_t>(e.u)] == -1 && match[static_cast<std::size_t>(e.v)] == -1) {
            match[static_cast<std::size_t>(e.u)] = e.v;
            match[static_cast<std::size_t>(e.v)] = e.u;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1)
            continue;
        int end = find_path(v);
        while (end != -1) {
            const int pv = parent[static_cast<std::size_t>(end)];
            const int ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(end)] = pv;
            match[static_cast<std::size_t>(pv)] = end;
            end = ppv;
        }
    }
    Matching m;
    for (int v = 0; v < n; ++v)
        if (match[static_cast<std::size_t>(v)] > v)
            m.edges.emplace_back(v, match[static_cast<std::size_t>(v)]);
    return m;
}

bool has_perfect_matching(const Graph& g)
{
    if (g.order() % 2 != 0)
        return false;
    return 2 * maximum_matching(g).size() == static_cast<std::size_t>(g.order());
}

// ---- connectivity ------------------------------------------------------------

namespace {

// Number of internally vertex-disjoint s-t paths for non-adjacent s, t, via
// unit-capacity augmenting paths in the split-vertex network.
int local_connectivity(const Graph& g, Vertex s, Vertex t)
{
    const int n = g.order();
    // Node v_in = 2v, v_out = 2v+1.
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
    auto add = [&](int a, int b, int cap) {
        out[static_cast<std::size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    const int big = n + 1;
    for (Vertex v = 0; v < n; ++v)
        add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (const Edge& e : g.edges()) {
        add(2 * e.u + 1, 2 * e.v, big);
        add(2 * e.v + 1, 2 * e.u, big);
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> via(static_cast<std::size_t>(2 * n), -1);
        std::queue<int> q;
        q.push(source);
        via[static_cast<std::size_t>(source)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
            const int x = q.front();
            q.pop();
            for (int id : out[static_cast<std::size_t>(x)]) {
                const Arc& a = arcs[static_cast<std::size_t>(id)];
                if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
                    via[static_cast<std::size_t>(a.to)] = id;
                    q.push(a.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(sink)] == -1)
            return flow;
        for (int x = sink; x != source;) {
            const int id = via[static_cast<std::size_t>(x)];
            arcs[static_cast<std::size_t>(id)].cap -= 1;
            arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
            x = arcs[static_cast<std::size_t>(id ^ 1)].to;
        }
        ++flow;
    }
}

}  // namespace

int vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (n <= 1)
        return 0;
    if (g.is_complete())
        return n - 1;
    if (!g.is_connected())
        return 0;
    // Even's scheme: some vertex among the first kappa+1 lies outside a minimum
    // separator, and is separated by it from a later vertex.
    int best = n - 1;
    for (Vertex i = 0; i < n && i <= best; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j))
                best = std::min(best, local_connectivity(g, i, j));
        }
    }
    return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[static_cast<std::size_t>(root)] != -1)
            continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

int max_induced_bipartite_order(const Graph& g, int cap)
{
    const int n = g.order();
    if (n > cap || n > 40)
        throw CapExceeded("induced bipartite scan: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(std::min(cap, 40)));
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    auto bipartite_mask = [&](std::uint64_t mask) {
        std::uint64_t unvisited = mask;
        while (unvisited) {
            std::uint64_t side[2] = {unvisited & (~unvisited + 1), 0};
            std::uint64_t frontier = side[0];
            unvisited &= ~frontier;
            int parity = 0;
            while (frontier) {
                std::uint64_t next = 0;
                for (std::uint64_t f = frontier; f; f &= f - 1)
                    next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
                next &= mask;
                if (next & side[parity])
                    return false;
                parity ^= 1;
                frontier = next & unvisited;
                side[parity] |= next;
                unvisited &= ~next;
            }
        }
        return true;
    };
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size > best && bipartite_mask(mask))
            best = size;
    }
    return best;
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed)
{
    removed.check_within(g);
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    InducedSubgraph result;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!removed.contains(v)) {
            relabel[static_cast<std::size_t>(v)] = static_cast<int>(result.original.size());
            result.original.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = relabel[static_cast<std::size_t>(e.u)];
        const int b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            edges.emplace_back(a, b);
    }
    result.graph = Graph(static_cast<int>(result.original.size()), edges);
    return result;
}

}  // namespace nkg
