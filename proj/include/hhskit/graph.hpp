#ifndef HHSKIT_GRAPH_HPP
#define HHSKIT_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hhskit/rational.hpp"

namespace hhs {

using VertexId = std::int32_t;
using Dist = std::int64_t;

// Finite connected graph with the BFS metric, or a truncated window of an
// infinite space carrying an exact closed-form metric. Exact metrics keep
// distances near the truncation boundary honest; such windows may be sparse
// (no two vertices at distance 1), in which case the edge set is empty and
// connectivity is not required.
class FiniteGraph {
public:
    using ExactMetric = std::function<Dist(VertexId, VertexId)>;

    FiniteGraph() = default;
    explicit FiniteGraph(std::string name) : name_(std::move(name)) {}

    VertexId add_vertex(const std::string& label);
    VertexId vertex(const std::string& label) const;  // throws if absent
    std::optional<VertexId> find_vertex(const std::string& label) const;
    const std::string& label(VertexId v) const { return labels_.at(static_cast<size_t>(v)); }
    VertexId size() const { return static_cast<VertexId>(labels_.size()); }
    bool contains(VertexId v) const { return v >= 0 && v < size(); }

    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(static_cast<size_t>(v)); }
    std::size_t edge_count() const;

    void set_exact_metric(ExactMetric m) { exact_ = std::move(m); }
    bool has_exact_metric() const { return static_cast<bool>(exact_); }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // Nonnegative integer distance; throws std::domain_error on invalid or
    // unreachable vertices (BFS graphs are required to be connected).
    Dist distance(VertexId u, VertexId v) const;

    // Distance from v to the nearest member of a nonempty set.
    Dist distance_to_set(VertexId v, const std::vector<VertexId>& set) const;
    Dist distance_between_sets(const std::vector<VertexId>& a, const std::vector<VertexId>& b) const;
    Dist set_diameter(const std::vector<VertexId>& set) const;  // 0 for singletons
    Dist hausdorff_distance(const std::vector<VertexId>& a, const std::vector<VertexId>& b) const;

    bool is_connected() const;

    // Vertices lying on some geodesic from p to q (d(p,v)+d(v,q) == d(p,q)).
    std::vector<VertexId> geodesic_dag_vertices(VertexId p, VertexId q) const;

    // All geodesic vertex sequences p -> q. Appends to out; returns false if
    // the enumeration would exceed max_paths (out holds a partial set then).
    bool enumerate_geodesics(VertexId p, VertexId q, std::size_t max_paths,
                             std::vector<std::vector<VertexId>>& out) const;

    // One geodesic p -> q (lexicographically least neighbor choice).
    std::vector<VertexId> some_geodesic(VertexId p, VertexId q) const;

    void clear_metric_cache() const { bfs_rows_.clear(); }

private:
    const std::vector<Dist>& bfs_row(VertexId src) const;

    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, VertexId> by_label_;
    std::vector<std::vector<VertexId>> adj_;
    ExactMetric exact_;
    mutable std::unordered_map<VertexId, std::vector<Dist>> bfs_rows_;
};

// Nonempty set of vertices in a fixed graph.
struct VertexSet {
    const FiniteGraph* space = nullptr;
    std::vector<VertexId> members;  // kept sorted, unique

    VertexSet() = default;
    VertexSet(const FiniteGraph& g, std::vector<VertexId> m);
    Dist diameter() const;
    bool contains(VertexId v) const;
};

Dist set_diameter(const VertexSet& s);

// Discrete (lambda,lambda)-quasigeodesic: for all i<j,
//   |i-j|/lambda - lambda <= d(p_i,p_j) <= lambda*|i-j| + lambda.
// The constructor validates the definition and throws on violation.
struct DiscretePath {
    const FiniteGraph* space = nullptr;
    std::vector<VertexId> points;
    Rational lambda{1};

    DiscretePath() = default;
    DiscretePath(const FiniteGraph& g, std::vector<VertexId> pts, Rational lam);
};

bool is_parametrized_quasigeodesic(const FiniteGraph& g, const std::vector<VertexId>& pts,
                                   const Rational& lambda);

// True iff some monotone reparametrization makes the sequence a
// (lambda,lambda)-quasigeodesic. Decided exactly as a difference-constraint
// feasibility problem over rational time stamps.
bool is_unparametrized_quasigeodesic(const FiniteGraph& g, const std::vector<VertexId>& pts,
                                     const Rational& lambda);

// Minimal delta in the four-point condition, as an exact rational
// (half-integer). Trees give 0. Exhaustive over all 4-tuples.
Rational hyperbolicity_delta(const FiniteGraph& g);

// Thin-triangles constant derived from geodesic DAGs: max over triples
// (x,y,z) and v on some [x,y]-geodesic of d(v, DAG(x,z) u DAG(z,y)).
// Diagnostic companion to the four-point constant.
Dist slim_triangle_constant(const FiniteGraph& g);

struct QuasiconvexityResult {
    Dist constant = 0;       // least R such that geodesics between members stay in N_R
    bool exact = true;       // false when the pair budget was exhausted (sampled bound)
    std::size_t pairs_checked = 0;
    VertexId witness_vertex = -1;  // a vertex realizing the constant
};

// Least R such that every geodesic between members of s stays in the
// R-neighbourhood of s. Exact via the on-some-geodesic vertex test, unless
// the number of (pair, vertex) checks exceeds budget.
QuasiconvexityResult quasiconvexity_constant(const VertexSet& s, std::size_t budget = 200000000);

}  // namespace hhs

#endif
