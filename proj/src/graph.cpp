#include "hhskit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hhs {

VertexId FiniteGraph::add_vertex(const std::string& label) {
    auto it = by_label_.find(label);
    if (it != by_label_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.push_back(label);
    by_label_.emplace(label, id);
    adj_.emplace_back();
    return id;
}

VertexId FiniteGraph::vertex(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw std::domain_error("vertex not in graph: " + label);
    return it->second;
}

std::optional<VertexId> FiniteGraph::find_vertex(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

void FiniteGraph::add_edge(VertexId u, VertexId v) {
    if (!contains(u) || !contains(v)) throw std::domain_error("edge endpoint not in graph");
    if (u == v) return;
    auto& au = adj_[static_cast<size_t>(u)];
    if (std::find(au.begin(), au.end(), v) != au.end()) return;
    au.insert(std::upper_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[static_cast<size_t>(v)];
    av.insert(std::upper_bound(av.begin(), av.end(), u), u);
    bfs_rows_.clear();
}

bool FiniteGraph::has_edge(VertexId u, VertexId v) const {
    const auto& au = adj_.at(static_cast<size_t>(u));
    return std::binary_search(au.begin(), au.end(), v);
}

std::size_t FiniteGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

const std::vector<Dist>& FiniteGraph::bfs_row(VertexId src) const {
    auto it = bfs_rows_.find(src);
    if (it != bfs_rows_.end()) return it->second;
    std::vector<Dist> row(static_cast<size_t>(size()), -1);
    std::deque<VertexId> queue;
    row[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : adj_[static_cast<size_t>(u)]) {
            if (row[static_cast<size_t>(w)] < 0) {
                row[static_cast<size_t>(w)] = row[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return bfs_rows_.emplace(src, std::move(row)).first->second;
}

Dist FiniteGraph::distance(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) throw std::domain_error("distance: vertex not in graph");
    if (u == v) return 0;
    if (exact_) return exact_(u, v);
    Dist d = bfs_row(u)[static_cast<size_t>(v)];
    if (d < 0) throw std::domain_error("distance: vertices not connected in " + name_);
    return d;
}

Dist FiniteGraph::distance_to_set(VertexId v, const std::vector<VertexId>& set) const {
    if (set.empty()) throw std::domain_error("distance_to_set: empty set");
    Dist best = -1;
    for (VertexId m : set) {
        Dist d = distance(v, m);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Dist FiniteGraph::distance_between_sets(const std::vector<VertexId>& a,
                                        const std::vector<VertexId>& b) const {
    if (a.empty() || b.empty()) throw std::domain_error("distance_between_sets: empty set");
    Dist best = -1;
    for (VertexId u : a) {
        Dist d = distance_to_set(u, b);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Dist FiniteGraph::set_diameter(const std::vector<VertexId>& set) const {
    if (set.empty()) throw std::domain_error("set_diameter: empty set");
    Dist best = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            best = std::max(best, distance(set[i], set[j]));
    return best;
}

Dist FiniteGraph::hausdorff_distance(const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& b) const {
    Dist best = 0;
    for (VertexId u : a) best = std::max(best, distance_to_set(u, b));
    for (VertexId v : b) best = std::max(best, distance_to_set(v, a));
    return best;
}

bool FiniteGraph::is_connected() const {
    if (size() == 0) return true;
    const auto& row = bfs_row(0);
    for (Dist d : row)
        if (d < 0) return false;
    return true;
}

std::vector<VertexId> FiniteGraph::geodesic_dag_vertices(VertexId p, VertexId q) const {
    Dist d = distance(p, q);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < size(); ++v)
        if (distance(p, v) + distance(v, q) == d) out.push_back(v);
    return out;
}

bool FiniteGraph::enumerate_geodesics(VertexId p, VertexId q, std::size_t max_paths,
                                      std::vector<std::vector<VertexId>>& out) const {
    Dist d = distance(p, q);
    std::vector<std::vector<VertexId>> stack;
    stack.push_back({p});
    while (!stack.empty()) {
        std::vector<VertexId> path = std::move(stack.back());
        stack.pop_back();
        VertexId tail = path.back();
        if (tail == q) {
            if (out.size() >= max_paths) return false;
            out.push_back(std::move(path));
            continue;
        }
        Dist done = static_cast<Dist>(path.size()) - 1;
        for (auto it = adj_[static_cast<size_t>(tail)].rbegin();
             it != adj_[static_cast<size_t>(tail)].rend(); ++it) {
            VertexId w = *it;
            if (done + 1 + distance(w, q) == d) {
                auto next = path;
                next.push_back(w);
                stack.push_back(std::move(next));
            }
        }
        if (stack.size() > max_paths * 4 + 1024) return false;
    }
    return true;
}

std::vector<VertexId> FiniteGraph::some_geodesic(VertexId p, VertexId q) const {
    Dist d = distance(p, q);
    std::vector<VertexId> path{p};
    VertexId cur = p;
    Dist done = 0;
    while (cur != q) {
        for (VertexId w : adj_[static_cast<size_t>(cur)]) {
            if (done + 1 + distance(w, q) == d) {
                path.push_back(w);
                cur = w;
                ++done;
                break;
            }
        }
        if (path.back() != cur || (path.size() > static_cast<size_t>(d) + 1))
            throw std::domain_error("some_geodesic: no geodesic step found");
    }
    return path;
}

VertexSet::VertexSet(const FiniteGraph& g, std::vector<VertexId> m) : space(&g), members(std::move(m)) {
    if (members.empty()) throw std::domain_error("VertexSet: empty member set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members)
        if (!g.contains(v)) throw std::domain_error("VertexSet: member not in graph");
}

Dist VertexSet::diameter() const { return space->set_diameter(members); }

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Dist set_diameter(const VertexSet& s) { return s.diameter(); }

bool is_parametrized_quasigeodesic(const FiniteGraph& g, const std::vector<VertexId>& pts,
                                   const Rational& lambda) {
    if (lambda < Rational(1)) return false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational gap(static_cast<std::int64_t>(j - i));
            Rational d(g.distance(pts[i], pts[j]));
            if (d > lambda * gap + lambda) return false;
            if (d < gap / lambda - lambda) return false;
        }
    }
    return true;
}

DiscretePath::DiscretePath(const FiniteGraph& g, std::vector<VertexId> pts, Rational lam)
    : space(&g), points(std::move(pts)), lambda(lam) {
    if (points.empty()) throw std::domain_error("DiscretePath: empty point sequence");
    if (lambda < Rational(1)) throw std::domain_error("DiscretePath: lambda must be >= 1");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Rational d(g.distance(points[i], points[i + 1]));
        if (d > lambda + lambda)
            throw std::domain_error("DiscretePath: consecutive points too far apart");
    }
    if (!is_parametrized_quasigeodesic(g, points, lambda))
        throw std::domain_error("DiscretePath: sequence is not a (lambda,lambda)-quasigeodesic");
}

// Feasibility of nondecreasing time stamps t_0 <= ... <= t_{m-1} with
//   (d_ij - lambda)/lambda <= t_j - t_i <= lambda*(d_ij + lambda)  for i < j.
// Solved exactly with Bellman-Ford over the difference-constraint graph.
bool is_unparametrized_quasigeodesic(const FiniteGraph& g, const std::vector<VertexId>& pts,
                                     const Rational& lambda) {
    if (pts.empty()) return false;
    if (lambda < Rational(1)) return false;
    const std::size_t n = pts.size();
    if (n == 1) return true;

    struct Edge { std::size_t from, to; Rational weight; };  // t_to - t_from <= weight
    std::vector<Edge> edges;
    edges.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational d(g.distance(pts[i], pts[j]));
            Rational hi = lambda * (d + lambda);
            Rational lo = (d - lambda) / lambda;
            if (lo < Rational(0)) lo = Rational(0);  // monotone stamps
            if (lo > hi) return false;
            edges.push_back({i, j, hi});        // t_j - t_i <= hi
            edges.push_back({j, i, -lo});       // t_i - t_j <= -lo
        }
    }
    std::vector<Rational> pot(n, Rational(0));
    for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            Rational cand = pot[e.from] + e.weight;
            if (cand < pot[e.to]) { pot[e.to] = cand; changed = true; }
        }
        if (!changed) return true;
    }
    for (const auto& e : edges)
        if (pot[e.from] + e.weight < pot[e.to]) return false;
    return true;
}

Rational hyperbolicity_delta(const FiniteGraph& g) {
    const VertexId n = g.size();
    // Cache distances into a dense matrix for speed.
    std::vector<std::vector<Dist>> d(static_cast<size_t>(n));
    for (VertexId i = 0; i < n; ++i) {
        d[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
        for (VertexId j = 0; j < n; ++j) d[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.distance(i, j);
    }
    Dist worst_twice = 0;  // 2*delta
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x; y < n; ++y)
            for (VertexId z = y; z < n; ++z)
                for (VertexId w = z; w < n; ++w) {
                    Dist s1 = d[x][y] + d[z][w];
                    Dist s2 = d[x][z] + d[y][w];
                    Dist s3 = d[x][w] + d[y][z];
                    Dist hi = std::max({s1, s2, s3});
                    Dist mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
                    worst_twice = std::max(worst_twice, hi - mid);
                }
    return Rational(worst_twice, 2);
}

Dist slim_triangle_constant(const FiniteGraph& g) {
    const VertexId n = g.size();
    Dist worst = 0;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y) {
            auto side_xy = g.geodesic_dag_vertices(x, y);
            for (VertexId z = 0; z < n; ++z) {
                auto other = g.geodesic_dag_vertices(x, z);
                auto third = g.geodesic_dag_vertices(z, y);
                other.insert(other.end(), third.begin(), third.end());
                for (VertexId v : side_xy)
                    worst = std::max(worst, g.distance_to_set(v, other));
            }
        }
    return worst;
}

QuasiconvexityResult quasiconvexity_constant(const VertexSet& s, std::size_t budget) {
    const FiniteGraph& g = *s.space;
    QuasiconvexityResult res;
    std::vector<Dist> to_set(static_cast<size_t>(g.size()));
    for (VertexId v = 0; v < g.size(); ++v)
        to_set[static_cast<size_t>(v)] = g.distance_to_set(v, s.members);
    std::size_t work = 0;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        for (std::size_t j = i + 1; j < s.members.size(); ++j) {
            VertexId p = s.members[i], q = s.members[j];
            Dist dpq = g.distance(p, q);
            for (VertexId v = 0; v < g.size(); ++v) {
                if (++work > budget) {
                    res.exact = false;
                    return res;
                }
                if (to_set[static_cast<size_t>(v)] <= res.constant) continue;
                if (g.distance(p, v) + g.distance(v, q) != dpq) continue;
                res.constant = to_set[static_cast<size_t>(v)];
                res.witness_vertex = v;
            }
            ++res.pairs_checked;
        }
    }
    return res;
}

}  // namespace hhs
