#pragma once

// Signed rotation systems: face tracing, Euler contributions, control points, and
// minimum-genus search (exhaustive branch-and-bound and seeded local search).

#include "nkg/extend.hpp"
#include "nkg/graph.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nkg {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cyclic order of neighbours at every vertex plus a +1/-1 sign on every edge.
class RotationSystem {
public:
    /// Rotation at each vertex lists its neighbours in cyclic order; signs are
    /// indexed like host.edges(). Throws EmbeddingError if a rotation is not a
    /// permutation of the vertex's neighbours.
    RotationSystem(Graph host, std::vector<std::vector<Vertex>> rotations, std::vector<int> signs);

    /// Every rotation in increasing neighbour order, all signs positive.
    static RotationSystem identity(Graph host);

    const Graph& host() const { return host_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
    int sign(int edge_index) const { return signs_[static_cast<std::size_t>(edge_index)]; }
    const std::vector<int>& signs() const { return signs_; }

    /// Every cycle has positive sign product (switching-equivalent to all positive).
    bool is_orientable() const;

    /// Rotations with their smallest neighbour first; used for stable output.
    RotationSystem normalized() const;

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

private:
    Graph host_;
    std::vector<std::vector<Vertex>> rotations_;
    std::vector<int> signs_;
};

/// Text format: one line "v: n1 n2 ... nd" per vertex (neighbours in cyclic order),
/// then optionally "-: u1 v1, u2 v2" listing the negative edges. '#' starts a comment.
RotationSystem parse_rotation_system(const Graph& host, std::string_view text);
std::string to_text(const RotationSystem& rs);

struct Face {
    std::vector<Vertex> walk;  // vertex at each corner, in boundary order
    int size() const { return static_cast<int>(walk.size()); }
};

struct VertexLedger {
    int degree = 0;
    int triangles = 0;  // corners of v lying in faces of size 3
    Rational phi;       // Euler contribution
};

struct EmbeddingReport {
    int order = 0;
    int edges = 0;
    std::vector<Face> faces;
    std::int64_t chi = 0;
    bool orientable = true;
    std::vector<VertexLedger> ledger;
    VertexSet control_points;

    int face_count() const { return static_cast<int>(faces.size()); }
    /// Genus of the surface the embedding lives on: (2-chi)/2 or 2-chi.
    std::int64_t genus() const { return orientable ? (2 - chi) / 2 : 2 - chi; }
};

/// Traces boundary walks: leave v along the next edge of its rotation, flipping the
/// local orientation across negative edges. Requires a connected host with at least
/// one edge.
EmbeddingReport trace_faces(const RotationSystem& rs);

Rational euler_contribution(const EmbeddingReport& report, Vertex v);

/// Vertices with phi(v) >= chi / |G|.
VertexSet control_points(const EmbeddingReport& report);

/// Lowest-index vertex maximising phi.
Vertex designated_control_point(const EmbeddingReport& report);

/// d/6 <= d/4 - x/12 <= 1 - chi/|G| evaluated at one vertex.
struct ControlInequality {
    Vertex vertex = 0;
    Rational lower;   // d/6
    Rational middle;  // d/4 - x/12
    Rational upper;   // 1 - chi/|G|
    bool holds() const { return lower <= middle && middle <= upper; }
    bool tight() const { return middle == upper; }
};

ControlInequality control_inequality(const EmbeddingReport& report, Vertex v);

/// True when some control point satisfies the control-point inequality. Requires a
/// host with at least three vertices.
bool verify_control_lemma(const EmbeddingReport& report);

struct DegreeBoundCheck {
    bool holds = true;
    std::vector<int> required;  // per-vertex lower bound on the degree
    int first_violation = -1;
    bool tight_everywhere = true;  // d(v) == required(v) at every vertex
};

/// For an (n,k)-graph (k >= 1) and an embedding of it: every vertex with x triangle
/// corners has d(v) >= n+k+1+ceil(x/2) when x <= 2k-2, and d(v) >= n+2k+1 otherwise.
/// Throws EmbeddingError if g is not an (n,k)-graph or the report is not traced on g.
DegreeBoundCheck verify_degree_bound(const Graph& g, int n, int k, const EmbeddingReport& report,
                                     const DeciderOptions& opts = {});

/// Euler bound with every face of size >= 3: orientable ceil((e-3|G|+6)/6) clamped at 0,
/// non-orientable ceil((e-3|G|+6)/3) clamped at 1.
std::int64_t euler_genus_lower_bound(const Graph& g, bool orientable);

struct GenusResult {
    std::int64_t genus = 0;
    std::optional<RotationSystem> witness;  // absent only for non-orientable trees
    std::uint64_t nodes = 0;                // search nodes or evaluations
};

struct ExhaustiveCaps {
    std::size_t max_edges_orientable = 15;
    std::size_t max_edges_nonorientable = 12;
    int jobs = 1;
};

/// Exact minimum genus over all rotation systems (orientable: all-positive signs;
/// non-orientable: spanning-tree edges positive, cotree signs enumerated, orientable
/// signatures excluded). Returns the first optimum in enumeration order.
GenusResult min_genus_exhaustive(const Graph& g, bool orientable, const ExhaustiveCaps& caps = {});

struct SearchBudget {
    std::uint64_t evaluations = 200'000;  // local-search face tracings
    int restarts = 8;
    std::uint64_t backtrack_nodes = 2'000'000;
};

/// Upper bound on the genus: seeded hill climbing over rotation / sign changes, then a
/// randomised branch-and-bound dive toward the Euler lower bound. Deterministic per seed.
GenusResult genus_upper_bound_search(const Graph& g, bool orientable, const SearchBudget& budget,
                                     std::uint64_t seed);

}  // namespace nkg
