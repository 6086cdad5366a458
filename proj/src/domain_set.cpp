#include "hhskit/domain_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hhs {

namespace {

// Reflexive-transitive closure of the declared nesting pairs, as a dense
// boolean matrix closed[u][v] = (u sqsubseteq v).
std::vector<std::vector<bool>> nesting_closure(std::size_t m,
                                               const std::vector<std::pair<DomainId, DomainId>>& pairs) {
    std::vector<std::vector<bool>> closed(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) closed[i][i] = true;
    for (auto [u, v] : pairs) closed[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (!closed[i][k]) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (closed[k][j]) closed[i][j] = true;
        }
    return closed;
}

std::vector<std::vector<bool>> orth_matrix(std::size_t m,
                                           const std::vector<std::pair<DomainId, DomainId>>& pairs) {
    std::vector<std::vector<bool>> orth(m, std::vector<bool>(m, false));
    for (auto [u, v] : pairs) {
        orth[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        orth[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }
    return orth;
}

int longest_chain(const std::vector<std::vector<bool>>& closed) {
    const std::size_t m = closed.size();
    // DAG longest path over proper nesting.
    std::vector<int> best(m, -1);
    std::vector<int> order;  // topological by number of ancestors
    std::vector<std::size_t> anc(m, 0);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            if (u != v && closed[u][v]) ++anc[u];
    std::vector<std::size_t> by_anc(m);
    for (std::size_t i = 0; i < m; ++i) by_anc[i] = i;
    std::sort(by_anc.begin(), by_anc.end(), [&](std::size_t a, std::size_t b) { return anc[a] < anc[b]; });
    int overall = 0;
    for (std::size_t u : by_anc) {  // ancestors processed first
        int h = 1;
        for (std::size_t v = 0; v < m; ++v)
            if (v != u && closed[u][v] && best[v] > 0) h = std::max(h, best[v] + 1);
        best[u] = h;
        overall = std::max(overall, h);
    }
    return overall;
}

}  // namespace

RelationAuditReport audit_relations(const DomainSetData& data) {
    RelationAuditReport rep;
    const std::size_t m = data.names.size();
    auto closed = nesting_closure(m, data.nesting);
    auto orth = orth_matrix(m, data.orthogonality);
    auto name = [&](std::size_t i) { return data.names[i]; };

    {   // partial order: antisymmetry of the closure
        RelationClauseResult c{"nesting_partial_order", true, ""};
        for (std::size_t u = 0; u < m && c.holds; ++u)
            for (std::size_t v = 0; v < m; ++v)
                if (u != v && closed[u][v] && closed[v][u]) {
                    c.holds = false;
                    c.witness = name(u) + " and " + name(v) + " nested in each other";
                    break;
                }
        rep.clauses.push_back(c);
    }
    {   // unique maximal element
        RelationClauseResult c{"unique_maximal", true, ""};
        std::vector<std::size_t> maxima;
        for (std::size_t u = 0; u < m; ++u) {
            bool is_max = true;
            for (std::size_t v = 0; v < m; ++v)
                if (v != u && closed[u][v] && !closed[v][u]) { is_max = false; break; }
            if (is_max) maxima.push_back(u);
        }
        // With antisymmetry, maxima are domains with no proper superdomain;
        // all domains must be nested in a single one.
        std::size_t tops = 0;
        std::size_t top = 0;
        for (std::size_t u : maxima) {
            bool contains_all = true;
            for (std::size_t v = 0; v < m; ++v)
                if (!closed[v][u]) { contains_all = false; break; }
            if (contains_all) { ++tops; top = u; }
        }
        if (m > 0 && tops != 1) {
            c.holds = false;
            c.witness = tops == 0 ? "no domain contains all others" : "multiple maxima";
        } else if (m > 0) {
            c.witness = "";
            (void)top;
        }
        rep.clauses.push_back(c);
    }
    {   // anti-reflexivity of orthogonality
        RelationClauseResult c{"orthogonality_antireflexive", true, ""};
        for (std::size_t u = 0; u < m; ++u)
            if (orth[u][u]) { c.holds = false; c.witness = name(u) + " orthogonal to itself"; break; }
        rep.clauses.push_back(c);
    }
    {   // orthogonal pairs are not comparable
        RelationClauseResult c{"orthogonal_not_comparable", true, ""};
        for (std::size_t u = 0; u < m && c.holds; ++u)
            for (std::size_t v = 0; v < m; ++v)
                if (u != v && orth[u][v] && (closed[u][v] || closed[v][u])) {
                    c.holds = false;
                    c.witness = name(u) + " orthogonal and comparable to " + name(v);
                    break;
                }
        rep.clauses.push_back(c);
    }
    {   // V nested in U and U orth W  ==>  V orth W
        RelationClauseResult c{"orthogonality_closed_under_nesting", true, ""};
        for (std::size_t v = 0; v < m && c.holds; ++v)
            for (std::size_t u = 0; u < m && c.holds; ++u) {
                if (u == v || !closed[v][u]) continue;
                for (std::size_t w = 0; w < m; ++w)
                    if (orth[u][w] && !orth[v][w]) {
                        c.holds = false;
                        c.witness = name(v) + " nested in " + name(u) + " orth " + name(w) +
                                    " but " + name(v) + " not orth " + name(w);
                        break;
                    }
            }
        rep.clauses.push_back(c);
    }
    {   // container axiom
        RelationClauseResult c{"containers", true, ""};
        for (std::size_t t = 0; t < m && c.holds; ++t) {
            for (std::size_t u = 0; u < m; ++u) {
                if (u == t || !closed[u][t]) continue;
                std::vector<std::size_t> need;
                for (std::size_t v = 0; v < m; ++v)
                    if (closed[v][t] && orth[v][u]) need.push_back(v);
                if (need.empty()) continue;
                bool found = false;
                // Try the declared hint first, then search.
                auto hint = data.containers.find({static_cast<DomainId>(t), static_cast<DomainId>(u)});
                std::vector<std::size_t> candidates;
                if (hint != data.containers.end()) candidates.push_back(static_cast<size_t>(hint->second));
                for (std::size_t w = 0; w < m; ++w) candidates.push_back(w);
                for (std::size_t w : candidates) {
                    if (w == t || !closed[w][t]) continue;
                    bool ok = true;
                    for (std::size_t v : need)
                        if (!closed[v][w]) { ok = false; break; }
                    if (ok) { found = true; break; }
                }
                if (!found) {
                    c.holds = false;
                    c.witness = "no container for " + name(u) + " inside " + name(t);
                    break;
                }
            }
        }
        rep.clauses.push_back(c);
    }
    rep.complexity = longest_chain(closed);
    return rep;
}

DomainSet DomainSet::compile(const DomainSetData& data) {
    auto rep = audit_relations(data);
    if (!rep.all_hold()) {
        std::string why;
        for (const auto& c : rep.clauses)
            if (!c.holds) why += c.clause + ": " + c.witness + "; ";
        throw std::invalid_argument("DomainSet::compile: relation axioms fail: " + why);
    }
    DomainSet ds;
    ds.data_ = data;
    ds.names_ = data.names;
    ds.containers_ = data.containers;
    ds.complexity_ = rep.complexity;
    const std::size_t m = ds.names_.size();
    auto closed = nesting_closure(m, data.nesting);
    auto orth = orth_matrix(m, data.orthogonality);
    ds.rel_.assign(m * m, Rel::Trans);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            Rel r;
            if (u == v) r = Rel::Eq;
            else if (closed[u][v]) r = Rel::NestedIn;
            else if (closed[v][u]) r = Rel::Contains;
            else if (orth[u][v]) r = Rel::Orth;
            else r = Rel::Trans;
            ds.rel_[u * m + v] = r;
        }
    for (std::size_t u = 0; u < m; ++u) {
        bool top = true;
        for (std::size_t v = 0; v < m; ++v)
            if (v != u && !closed[v][u]) { top = false; break; }
        if (top) { ds.maximal_ = static_cast<DomainId>(u); break; }
    }
    ds.proper_sub_.resize(m);
    ds.max_proper_sub_.resize(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            if (u != v && closed[v][u]) ds.proper_sub_[u].push_back(static_cast<DomainId>(v));
    for (std::size_t u = 0; u < m; ++u) {
        for (DomainId v : ds.proper_sub_[u]) {
            bool maximal = true;
            for (DomainId w : ds.proper_sub_[u])
                if (w != v && closed[static_cast<size_t>(v)][static_cast<size_t>(w)]) {
                    maximal = false;
                    break;
                }
            if (maximal) ds.max_proper_sub_[u].push_back(v);
        }
    }
    return ds;
}

std::optional<DomainId> DomainSet::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<DomainId>(i);
    return std::nullopt;
}

std::optional<DomainId> DomainSet::container(DomainId t, DomainId u) const {
    auto it = containers_.find({t, u});
    if (it == containers_.end()) return std::nullopt;
    return it->second;
}

}  // namespace hhs
