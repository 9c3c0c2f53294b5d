#include "nkg/embedding.hpp"

#include "nkg/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace nkg {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---- rotation systems ----------------------------------------------------------

RotationSystem::RotationSystem(Graph host, std::vector<std::vector<Vertex>> rotations, std::vector<int> signs)
    : host_(std::move(host)), rotations_(std::move(rotations)), signs_(std::move(signs))
{
    if (rotations_.size() != static_cast<std::size_t>(host_.order()))
        throw EmbeddingError("rotation system needs one rotation per vertex");
    if (signs_.size() != host_.edge_count())
        throw EmbeddingError("rotation system needs one sign per edge");
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw EmbeddingError("edge signs must be +1 or -1");
    for (Vertex v = 0; v < host_.order(); ++v) {
        auto sorted = rotations_[static_cast<std::size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != host_.neighbors(v))
            throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                                 " is not a permutation of its neighbours");
    }
}

RotationSystem RotationSystem::identity(Graph host)
{
    std::vector<std::vector<Vertex>> rot;
    for (Vertex v = 0; v < host.order(); ++v)
        rot.push_back(host.neighbors(v));
    std::vector<int> signs(host.edge_count(), 1);
    return RotationSystem(std::move(host), std::move(rot), std::move(signs));
}

bool RotationSystem::is_orientable() const
{
    // Switching potential along a spanning forest; every edge must agree with it.
    std::vector<int> potential(static_cast<std::size_t>(host_.order()), 0);
    for (Vertex root = 0; root < host_.order(); ++root) {
        if (potential[static_cast<std::size_t>(root)] != 0)
            continue;
        potential[static_cast<std::size_t>(root)] = 1;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : host_.neighbors(v)) {
                const int want = potential[static_cast<std::size_t>(v)] * sign(host_.edge_index(v, w));
                auto& pw = potential[static_cast<std::size_t>(w)];
                if (pw == 0) {
                    pw = want;
                    stack.push_back(w);
                } else if (pw != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

RotationSystem RotationSystem::normalized() const
{
    auto rot = rotations_;
    for (auto& r : rot)
        if (!r.empty())
            std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    return RotationSystem(host_, std::move(rot), signs_);
}

RotationSystem parse_rotation_system(const Graph& host, std::string_view text)
{
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(host.order()));
    std::vector<char> seen(static_cast<std::size_t>(host.order()), 0);
    std::vector<int> signs(host.edge_count(), 1);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw EmbeddingError("rotation line " + std::to_string(lineno) + ": " + why);
    };
    auto read_int = [&](std::istream& s) {
        long long v = 0;
        if (!(s >> v))
            fail("expected a vertex label");
        if (v < 0 || v >= host.order())
            fail("vertex " + std::to_string(v) + " out of range");
        return static_cast<Vertex>(v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                fail("missing ':'");
            continue;
        }
        std::string head = line.substr(0, colon);
        head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return c == ' ' || c == '\t'; }),
                   head.end());
        std::string body = line.substr(colon + 1);
        if (head == "-") {
            std::istringstream pairs(body);
            for (std::string item; std::getline(pairs, item, ',');) {
                if (item.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                std::istringstream ps(item);
                const Vertex a = read_int(ps);
                const Vertex b = read_int(ps);
                const int id = host.edge_index(a, b);
                if (id < 0)
                    fail("negative edge " + std::to_string(a) + " " + std::to_string(b) + " is not in the graph");
                signs[static_cast<std::size_t>(id)] = -1;
            }
            continue;
        }
        std::istringstream hs(head);
        const Vertex v = read_int(hs);
        if (seen[static_cast<std::size_t>(v)])
            fail("vertex " + std::to_string(v) + " listed twice");
        seen[static_cast<std::size_t>(v)] = 1;
        std::istringstream bs(body);
        for (long long w; bs >> w;) {
            if (w < 0 || w >= host.order())
                fail("vertex " + std::to_string(w) + " out of range");
            rot[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(w));
        }
        if (!bs.eof())
            fail("bad token in rotation");
    }
    for (Vertex v = 0; v < host.order(); ++v)
        if (!seen[static_cast<std::size_t>(v)] && host.degree(v) > 0)
            throw EmbeddingError("rotation for vertex " + std::to_string(v) + " is missing");
    return RotationSystem(host, std::move(rot), std::move(signs));
}

std::string to_text(const RotationSystem& rs)
{
    std::string out;
    for (Vertex v = 0; v < rs.host().order(); ++v) {
        out += std::to_string(v) + ":";
        for (Vertex w : rs.rotation(v))
            out += " " + std::to_string(w);
        out += "\n";
    }
    std::string negatives;
    for (std::size_t i = 0; i < rs.host().edge_count(); ++i) {
        if (rs.sign(static_cast<int>(i)) < 0) {
            const Edge& e = rs.host().edges()[i];
            negatives += (negatives.empty() ? " " : ", ") + std::to_string(e.u) + " " + std::to_string(e.v);
        }
    }
    if (!negatives.empty())
        out += "-:" + negatives + "\n";
    return out;
}

// ---- face tracing ----------------------------------------------------------------

namespace {

// Flat, mutable form of a rotation system. A state is a corner-dart pair with a
// local orientation: id = 2 * dart + (orientation < 0), dart = offset[v] + i for
// the i-th entry of v's rotation.
struct Layout {
    int n = 0;
    int edge_total = 0;
    std::vector<int> offset;     // n+1
    std::vector<Vertex> owner;   // dart -> v
    std::vector<Vertex> rot;     // dart -> neighbour
    std::vector<int> pos;        // n*n: position of w in rot(v)
    std::vector<int> sign;       // n*n: edge sign, symmetric

    explicit Layout(const Graph& g) : n(g.order()), edge_total(static_cast<int>(g.edge_count()))
    {
        offset.assign(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex v = 0; v < n; ++v)
            offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + g.degree(v);
        owner.resize(static_cast<std::size_t>(offset.back()));
        rot.resize(owner.size());
        for (Vertex v = 0; v < n; ++v)
            for (int d = offset[static_cast<std::size_t>(v)]; d < offset[static_cast<std::size_t>(v) + 1]; ++d)
                owner[static_cast<std::size_t>(d)] = v;
        pos.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        sign.assign(pos.size(), 1);
    }

    int degree(Vertex v) const { return offset[static_cast<std::size_t>(v) + 1] - offset[static_cast<std::size_t>(v)]; }
    int state_count() const { return 2 * offset.back(); }

    void set_rotation(Vertex v, const std::vector<Vertex>& order)
    {
        const int base = offset[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < order.size(); ++i) {
            rot[static_cast<std::size_t>(base) + i] = order[i];
            pos[static_cast<std::size_t>(v * n + order[i])] = static_cast<int>(i);
        }
    }

    void set_sign(Vertex a, Vertex b, int s)
    {
        sign[static_cast<std::size_t>(a * n + b)] = s;
        sign[static_cast<std::size_t>(b * n + a)] = s;
    }

    Vertex vertex_of(int state) const { return owner[static_cast<std::size_t>(state / 2)]; }
    Vertex target_of(int state) const { return rot[static_cast<std::size_t>(state / 2)]; }

    int step(int state) const
    {
        const int dart = state / 2;
        const int orient = (state & 1) ? -1 : 1;
        const Vertex v = owner[static_cast<std::size_t>(dart)];
        const Vertex w = rot[static_cast<std::size_t>(dart)];
        const int next_orient = orient * sign[static_cast<std::size_t>(v * n + w)];
        const int j = pos[static_cast<std::size_t>(w * n + v)];
        const int d = degree(w);
        const int i = next_orient > 0 ? (j + 1) % d : (j + d - 1) % d;
        return 2 * (offset[static_cast<std::size_t>(w)] + i) + (next_orient < 0 ? 1 : 0);
    }

    // Same corner traversed in the opposite direction.
    int mirror(int state) const
    {
        const int dart = state / 2;
        const Vertex v = owner[static_cast<std::size_t>(dart)];
        const int i = dart - offset[static_cast<std::size_t>(v)];
        const int d = degree(v);
        const bool positive = (state & 1) == 0;
        const int k = positive ? (i + d - 1) % d : (i + 1) % d;
        return 2 * (offset[static_cast<std::size_t>(v)] + k) + (positive ? 1 : 0);
    }

    static Layout from(const RotationSystem& rs)
    {
        Layout lay(rs.host());
        for (Vertex v = 0; v < lay.n; ++v)
            lay.set_rotation(v, rs.rotation(v));
        for (std::size_t i = 0; i < rs.host().edge_count(); ++i) {
            const Edge& e = rs.host().edges()[i];
            lay.set_sign(e.u, e.v, rs.sign(static_cast<int>(i)));
        }
        return lay;
    }

    RotationSystem to_rotation_system(const Graph& g) const
    {
        std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            rotations[static_cast<std::size_t>(v)].assign(rot.begin() + offset[static_cast<std::size_t>(v)],
                                                          rot.begin() + offset[static_cast<std::size_t>(v) + 1]);
        std::vector<int> signs;
        for (const Edge& e : g.edges())
            signs.push_back(sign[static_cast<std::size_t>(e.u * n + e.v)]);
        return RotationSystem(g, std::move(rotations), std::move(signs));
    }
};

// Orbits of the step map come in mirror pairs; each pair is one face.
int count_faces(const Layout& lay, std::vector<char>& visited)
{
    const int states = lay.state_count();
    visited.assign(static_cast<std::size_t>(states), 0);
    int faces = 0;
    for (int s = 0; s < states; ++s) {
        if (visited[static_cast<std::size_t>(s)])
            continue;
        ++faces;
        int cur = s;
        do {
            visited[static_cast<std::size_t>(cur)] = 1;
            visited[static_cast<std::size_t>(lay.mirror(cur))] = 1;
            cur = lay.step(cur);
        } while (cur != s);
    }
    return faces;
}

// Upper bound on the face count when only `assigned` vertices have rotations (and
// only edges between assigned vertices have signs): walks closed inside the assigned
// part are exact faces; every other corner belongs to a face of size >= 3.
int face_upper_bound(const Layout& lay, const std::vector<char>& assigned, std::vector<char>& visited)
{
    const int states = lay.state_count();
    visited.assign(static_cast<std::size_t>(states), 0);
    int closed_orbits = 0;
    int closed_states = 0;
    for (Vertex v = 0; v < lay.n; ++v) {
        if (!assigned[static_cast<std::size_t>(v)])
            continue;
        for (int s = 2 * lay.offset[static_cast<std::size_t>(v)]; s < 2 * lay.offset[static_cast<std::size_t>(v) + 1]; ++s) {
            if (visited[static_cast<std::size_t>(s)])
                continue;
            int cur = s;
            int length = 0;
            for (;;) {
                visited[static_cast<std::size_t>(cur)] = 1;
                ++length;
                if (!assigned[static_cast<std::size_t>(lay.target_of(cur))])
                    break;
                const int next = lay.step(cur);
                if (next == s) {
                    ++closed_orbits;
                    closed_states += length;
                    break;
                }
                if (visited[static_cast<std::size_t>(next)])
                    break;
                cur = next;
            }
        }
    }
    const int open_corners = 2 * lay.edge_total - closed_states / 2;
    return closed_orbits / 2 + open_corners / 3;
}

void require_traceable(const Graph& g)
{
    if (g.edge_count() == 0)
        throw EmbeddingError("embedding needs a host with at least one edge");
    if (!g.is_connected())
        throw EmbeddingError("embedding needs a connected host");
}

}  // namespace

EmbeddingReport trace_faces(const RotationSystem& rs)
{
    const Graph& g = rs.host();
    require_traceable(g);
    const Layout lay = Layout::from(rs);
    EmbeddingReport report;
    report.order = g.order();
    report.edges = static_cast<int>(g.edge_count());
    report.orientable = rs.is_orientable();
    report.ledger.resize(static_cast<std::size_t>(g.order()));

    const int states = lay.state_count();
    std::vector<char> visited(static_cast<std::size_t>(states), 0);
    std::vector<std::vector<int>> corner_faces(static_cast<std::size_t>(g.order()));
    for (int s = 0; s < states; ++s) {
        if (visited[static_cast<std::size_t>(s)])
            continue;
        Face face;
        int cur = s;
        do {
            if (visited[static_cast<std::size_t>(cur)])
                throw EmbeddingError("face tracing revisited a corner; rotation system is inconsistent");
            visited[static_cast<std::size_t>(cur)] = 1;
            face.walk.push_back(lay.vertex_of(cur));
            cur = lay.step(cur);
        } while (cur != s);
        // Mark the reverse traversal of the same face.
        cur = s;
        do {
            const int m = lay.mirror(cur);
            if (visited[static_cast<std::size_t>(m)])
                throw EmbeddingError("face traversed in both directions by one walk");
            visited[static_cast<std::size_t>(m)] = 1;
            cur = lay.step(cur);
        } while (cur != s);
        const int id = static_cast<int>(report.faces.size());
        for (Vertex v : face.walk)
            corner_faces[static_cast<std::size_t>(v)].push_back(id);
        report.faces.push_back(std::move(face));
    }

    report.chi = g.order() - report.edges + report.face_count();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexLedger& entry = report.ledger[static_cast<std::size_t>(v)];
        entry.degree = g.degree(v);
        entry.phi = Rational(1) - Rational(entry.degree, 2);
        for (int f : corner_faces[static_cast<std::size_t>(v)]) {
            const int size = report.faces[static_cast<std::size_t>(f)].size();
            entry.phi += Rational(1, size);
            if (size == 3)
                ++entry.triangles;
        }
    }
    report.control_points = control_points(report);
    return report;
}

Rational euler_contribution(const EmbeddingReport& report, Vertex v)
{
    if (v < 0 || v >= report.order)
        throw EmbeddingError("vertex out of range");
    return report.ledger[static_cast<std::size_t>(v)].phi;
}

VertexSet control_points(const EmbeddingReport& report)
{
    const Rational threshold(report.chi, report.order);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < report.order; ++v)
        if (report.ledger[static_cast<std::size_t>(v)].phi >= threshold)
            members.push_back(v);
    return VertexSet(std::move(members));
}

Vertex designated_control_point(const EmbeddingReport& report)
{
    Vertex best = 0;
    for (Vertex v = 1; v < report.order; ++v)
        if (report.ledger[static_cast<std::size_t>(v)].phi > report.ledger[static_cast<std::size_t>(best)].phi)
            best = v;
    return best;
}

ControlInequality control_inequality(const EmbeddingReport& report, Vertex v)
{
    const VertexLedger& entry = report.ledger.at(static_cast<std::size_t>(v));
    ControlInequality c;
    c.vertex = v;
    c.lower = Rational(entry.degree, 6);
    c.middle = Rational(entry.degree, 4) - Rational(entry.triangles, 12);
    c.upper = Rational(1) - Rational(report.chi, report.order);
    return c;
}

bool verify_control_lemma(const EmbeddingReport& report)
{
    if (report.order < 3)
        throw EmbeddingError("control-point inequality needs at least 3 vertices");
    for (Vertex v : report.control_points.members())
        if (control_inequality(report, v).holds())
            return true;
    return false;
}

DegreeBoundCheck verify_degree_bound(const Graph& g, int n, int k, const EmbeddingReport& report,
                                     const DeciderOptions& opts)
{
    if (k < 1)
        throw EmbeddingError("degree bound needs k >= 1");
    if (report.order != g.order() || report.edges != static_cast<int>(g.edge_count()))
        throw EmbeddingError("report was not traced on this graph");
    if (!is_nk_graph(g, n, k, opts).holds())
        throw EmbeddingError("graph is not an (" + std::to_string(n) + "," + std::to_string(k) + ")-graph");
    DegreeBoundCheck check;
    for (Vertex v = 0; v < g.order(); ++v) {
        const int x = report.ledger[static_cast<std::size_t>(v)].triangles;
        const int need = x <= 2 * k - 2 ? n + k + 1 + (x + 1) / 2 : n + 2 * k + 1;
        const int d = g.degree(v);
        check.required.push_back(need);
        if (d < need && check.holds) {
            check.holds = false;
            check.first_violation = v;
        }
        if (d != need)
            check.tight_everywhere = false;
    }
    return check;
}

std::int64_t euler_genus_lower_bound(const Graph& g, bool orientable)
{
    if (g.order() < 3 || !g.is_connected())
        throw EmbeddingError("Euler genus bound needs a connected graph on at least 3 vertices");
    const std::int64_t excess = static_cast<std::int64_t>(g.edge_count()) - 3 * g.order() + 6;
    if (orientable)
        return std::max<std::int64_t>(0, ceil_div(excess, 6));
    return std::max<std::int64_t>(1, ceil_div(excess, 3));
}

// ---- search ------------------------------------------------------------------------

namespace {

std::int64_t genus_from_faces(const Graph& g, int faces, bool orientable)
{
    const std::int64_t chi = g.order() - static_cast<std::int64_t>(g.edge_count()) + faces;
    return orientable ? (2 - chi) / 2 : 2 - chi;
}

// Least genus compatible with at most `faces` faces.
std::int64_t genus_floor(const Graph& g, int faces, bool orientable)
{
    const std::int64_t chi = g.order() - static_cast<std::int64_t>(g.edge_count()) + faces;
    return orientable ? ceil_div(2 - chi, 2) : std::max<std::int64_t>(1, 2 - chi);
}

struct SpanningTree {
    std::vector<char> tree_edge;  // by edge index
    std::vector<int> cotree;      // edge indices not in the tree
};

SpanningTree bfs_tree(const Graph& g)
{
    SpanningTree t;
    t.tree_edge.assign(g.edge_count(), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (Vertex w : g.neighbors(queue[h])) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                t.tree_edge[static_cast<std::size_t>(g.edge_index(queue[h], w))] = 1;
                queue.push_back(w);
            }
        }
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!t.tree_edge[i])
            t.cotree.push_back(static_cast<int>(i));
    return t;
}

// Cyclic orders with the smallest neighbour first, remaining entries in lex order.
std::vector<std::vector<Vertex>> cyclic_orders(const std::vector<Vertex>& nbrs)
{
    std::vector<std::vector<Vertex>> out;
    if (nbrs.empty())
        return {{}};
    std::vector<Vertex> rest(nbrs.begin() + 1, nbrs.end());
    do {
        std::vector<Vertex> order{nbrs.front()};
        order.insert(order.end(), rest.begin(), rest.end());
        out.push_back(std::move(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Depth-first assignment of rotations (and cotree signs toward earlier vertices) in
// vertex order, pruned by face_upper_bound.
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, bool orientable)
        : g_(g), orientable_(orientable), tree_(bfs_tree(g)), lower_(euler_genus_lower_bound(g, orientable))
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            candidates_.push_back(cyclic_orders(g.neighbors(v)));
            std::vector<int> back;
            if (!orientable)
                for (Vertex u : g.neighbors(v))
                    if (u < v && !tree_.tree_edge[static_cast<std::size_t>(g.edge_index(u, v))])
                        back.push_back(u);
            back_cotree_.push_back(std::move(back));
        }
    }

    std::int64_t lower_bound() const { return lower_; }
    std::size_t top_level_choices() const { return candidates_[0].size(); }

    struct Outcome {
        std::int64_t genus = std::numeric_limits<std::int64_t>::max();
        std::optional<RotationSystem> witness;
        std::uint64_t nodes = 0;
    };

    // Explores the subtree with vertex 0's rotation fixed to candidate `branch`.
    // Prunes subtrees that cannot beat the local best, or that cannot reach `shared_best`
    // (ties with shared_best are kept so the lowest branch keeps its witness).
    Outcome explore(std::size_t branch, const std::atomic<std::int64_t>& shared_best,
                    const std::function<bool()>& cancelled) const
    {
        Search s{*this, Layout(g_), std::vector<char>(static_cast<std::size_t>(g_.order()), 0), {}, {},
                 shared_best, cancelled, nullptr, 0};
        s.layout.set_rotation(0, candidates_[0][branch]);
        s.assigned[0] = 1;
        s.descend(1);
        return std::move(s.outcome);
    }

    // Randomised dive: candidate order shuffled at every node; stops at `target` genus
    // or after `node_budget` candidate evaluations.
    Outcome dive(std::int64_t target_start, std::uint64_t node_budget, std::mt19937_64& rng) const
    {
        std::atomic<std::int64_t> shared{target_start + 1};
        std::function<bool()> never = [] { return false; };
        Search s{*this, Layout(g_), std::vector<char>(static_cast<std::size_t>(g_.order()), 0), {}, {},
                 shared, never, &rng, node_budget};
        s.descend(0);
        return std::move(s.outcome);
    }

private:
    struct Search {
        const BranchAndBound& bb;
        Layout layout;
        std::vector<char> assigned;
        std::vector<char> scratch;
        Outcome outcome;
        const std::atomic<std::int64_t>& shared_best;
        const std::function<bool()>& cancelled;
        std::mt19937_64* rng;  // randomised dive when set
        std::uint64_t node_budget;  // 0: unlimited

        bool stop() const
        {
            return outcome.genus <= bb.lower_ || (node_budget && outcome.nodes >= node_budget) || cancelled();
        }

        bool prune()
        {
            const int bound = face_upper_bound(layout, assigned, scratch);
            const std::int64_t best_possible = genus_floor(bb.g_, bound, bb.orientable_);
            return best_possible >= outcome.genus || best_possible > shared_best.load(std::memory_order_relaxed) ||
                   (rng && best_possible >= shared_best.load(std::memory_order_relaxed));
        }

        void leaf()
        {
            if (!bb.orientable_) {
                bool any_negative = false;
                for (int id : bb.tree_.cotree) {
                    const Edge& e = bb.g_.edges()[static_cast<std::size_t>(id)];
                    if (layout.sign[static_cast<std::size_t>(e.u * layout.n + e.v)] < 0)
                        any_negative = true;
                }
                if (!any_negative)
                    return;
            }
            const int faces = count_faces(layout, scratch);
            const std::int64_t genus = genus_from_faces(bb.g_, faces, bb.orientable_);
            if (genus < outcome.genus) {
                outcome.genus = genus;
                outcome.witness = layout.to_rotation_system(bb.g_);
            }
        }

        void descend(Vertex v)
        {
            if (stop())
                return;
            if (v == layout.n) {
                leaf();
                return;
            }
            const auto& rotations = bb.candidates_[static_cast<std::size_t>(v)];
            const auto& back = bb.back_cotree_[static_cast<std::size_t>(v)];
            const std::uint64_t sign_choices = std::uint64_t{1} << back.size();
            const std::uint64_t total = rotations.size() * sign_choices;
            std::vector<std::uint64_t> order;
            if (rng) {
                order.resize(total);
                for (std::uint64_t i = 0; i < total; ++i)
                    order[i] = i;
                for (std::uint64_t i = total; i > 1; --i)
                    std::swap(order[i - 1], order[(*rng)() % i]);
            }
            assigned[static_cast<std::size_t>(v)] = 1;
            for (std::uint64_t c = 0; c < total && !stop(); ++c) {
                const std::uint64_t pick = rng ? order[c] : c;
                layout.set_rotation(v, rotations[pick / sign_choices]);
                const std::uint64_t mask = pick % sign_choices;
                for (std::size_t b = 0; b < back.size(); ++b)
                    layout.set_sign(back[b], v, (mask >> b) & 1 ? -1 : 1);
                ++outcome.nodes;
                if (prune())
                    continue;
                descend(v + 1);
            }
            assigned[static_cast<std::size_t>(v)] = 0;
            for (Vertex u : back)
                layout.set_sign(u, v, 1);
        }
    };

    const Graph& g_;
    bool orientable_;
    SpanningTree tree_;
    std::int64_t lower_;
    std::vector<std::vector<std::vector<Vertex>>> candidates_;
    std::vector<std::vector<int>> back_cotree_;
};

GenusResult tree_nonorientable(const Graph& g)
{
    // No cycle can carry a negative sign: there is no cellular non-orientable
    // embedding, but every planar graph embeds in N_1.
    (void)g;
    return GenusResult{1, std::nullopt, 0};
}

}  // namespace

GenusResult min_genus_exhaustive(const Graph& g, bool orientable, const ExhaustiveCaps& caps)
{
    if (!g.is_connected() || g.order() < 3)
        throw EmbeddingError("genus search needs a connected graph on at least 3 vertices");
    const std::size_t cap = orientable ? caps.max_edges_orientable : caps.max_edges_nonorientable;
    if (g.edge_count() > cap)
        throw CapExceeded("exhaustive genus search: " + std::to_string(g.edge_count()) + " edges exceed cap " +
                          std::to_string(cap));
    if (!orientable && g.edge_count() + 1 == static_cast<std::size_t>(g.order()))
        return tree_nonorientable(g);

    const BranchAndBound bb(g, orientable);
    const std::size_t branches = bb.top_level_choices();
    std::vector<BranchAndBound::Outcome> results(branches);
    std::atomic<std::int64_t> shared_best{std::numeric_limits<std::int64_t>::max()};
    std::atomic<std::size_t> first_optimal{branches};
    std::atomic<std::size_t> next_branch{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t b = next_branch.fetch_add(1);
            if (b >= branches || b > first_optimal.load())
                return;
            std::function<bool()> cancelled = [&, b] { return b > first_optimal.load(); };
            results[b] = bb.explore(b, shared_best, cancelled);
            std::int64_t seen = shared_best.load();
            while (results[b].genus < seen && !shared_best.compare_exchange_weak(seen, results[b].genus)) {
            }
            if (results[b].genus == bb.lower_bound()) {
                std::size_t cur = first_optimal.load();
                while (b < cur && !first_optimal.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    const int jobs = std::max(1, caps.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    GenusResult best{std::numeric_limits<std::int64_t>::max(), std::nullopt, 0};
    const std::size_t stop_at = std::min(first_optimal.load(), branches - 1);
    for (std::size_t b = 0; b <= stop_at; ++b) {
        best.nodes += results[b].nodes;
        if (results[b].witness && results[b].genus < best.genus) {
            best.genus = results[b].genus;
            best.witness = results[b].witness;
        }
    }
    if (!best.witness)
        throw EmbeddingError("exhaustive genus search found no embedding");
    return best;
}

GenusResult genus_upper_bound_search(const Graph& g, bool orientable, const SearchBudget& budget,
                                     std::uint64_t seed)
{
    if (!g.is_connected() || g.order() < 3)
        throw EmbeddingError("genus search needs a connected graph on at least 3 vertices");
    const SpanningTree tree = bfs_tree(g);
    if (!orientable && tree.cotree.empty())
        return tree_nonorientable(g);

    const std::int64_t lower = euler_genus_lower_bound(g, orientable);
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t m) { return static_cast<std::size_t>(rng() % m); };

    Layout lay(g);
    std::vector<char> scratch;
    GenusResult best{std::numeric_limits<std::int64_t>::max(), std::nullopt, 0};
    int negatives = 0;

    auto flip = [&](int edge_id) {
        const Edge& e = g.edges()[static_cast<std::size_t>(edge_id)];
        const int s = -lay.sign[static_cast<std::size_t>(e.u * lay.n + e.v)];
        lay.set_sign(e.u, e.v, s);
        negatives += s < 0 ? 1 : -1;
    };
    auto evaluate = [&]() {
        ++best.nodes;
        return count_faces(lay, scratch);
    };
    // Strict improvement stalls on plateaus; a one-face loss is occasionally taken.
    auto accept = [&](int trial, int faces) { return trial >= faces || (trial + 1 == faces && below(32) == 0); };
    auto record = [&](int faces) {
        const std::int64_t genus = genus_from_faces(g, faces, orientable);
        if (genus < best.genus) {
            best.genus = genus;
            best.witness = lay.to_rotation_system(g);
        }
    };

    const int restarts = std::max(1, budget.restarts);
    const std::uint64_t per_restart = std::max<std::uint64_t>(1, budget.evaluations / static_cast<std::uint64_t>(restarts));
    for (int r = 0; r < restarts && best.genus > lower; ++r) {
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<Vertex> order = g.neighbors(v);
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[below(i)]);
            lay.set_rotation(v, order);
        }
        negatives = 0;
        for (const Edge& e : g.edges())
            lay.set_sign(e.u, e.v, 1);
        if (!orientable) {
            for (int id : tree.cotree)
                if (rng() & 1)
                    flip(id);
            if (negatives == 0)
                flip(tree.cotree[below(tree.cotree.size())]);
        }
        int faces = evaluate();
        record(faces);
        for (std::uint64_t step = 1; step < per_restart && best.genus > lower; ++step) {
            const bool sign_move = !orientable && below(4) == 0;
            if (sign_move) {
                const int id = tree.cotree[below(tree.cotree.size())];
                flip(id);
                if (negatives == 0) {
                    flip(id);
                    continue;
                }
                const int trial = evaluate();
                if (accept(trial, faces)) {
                    faces = trial;
                    record(faces);
                } else {
                    flip(id);
                }
                continue;
            }
            const Vertex v = static_cast<Vertex>(below(static_cast<std::uint64_t>(g.order())));
            const int d = lay.degree(v);
            if (d < 3)
                continue;
            const int base = lay.offset[static_cast<std::size_t>(v)];
            std::vector<Vertex> before(lay.rot.begin() + base, lay.rot.begin() + base + d);
            std::vector<Vertex> after = before;
            const std::size_t from = below(static_cast<std::uint64_t>(d));
            std::size_t to = below(static_cast<std::uint64_t>(d - 1));
            if (to >= from)
                ++to;
            const Vertex moved = after[from];
            after.erase(after.begin() + static_cast<std::ptrdiff_t>(from));
            after.insert(after.begin() + static_cast<std::ptrdiff_t>(to), moved);
            lay.set_rotation(v, after);
            const int trial = evaluate();
            if (accept(trial, faces)) {
                faces = trial;
                record(faces);
            } else {
                lay.set_rotation(v, before);
            }
        }
    }

    int max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    if (best.genus > lower && budget.backtrack_nodes > 0 && max_degree <= 8) {
        const BranchAndBound bb(g, orientable);
        auto dived = bb.dive(best.genus - 1, budget.backtrack_nodes, rng);
        best.nodes += dived.nodes;
        if (dived.witness && dived.genus < best.genus) {
            best.genus = dived.genus;
            best.witness = dived.witness;
        }
    }
    if (best.witness)
        best.witness = best.witness->normalized();
    return best;
}

}  // namespace nkg
