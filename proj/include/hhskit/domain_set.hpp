#ifndef HHSKIT_DOMAIN_SET_HPP
#define HHSKIT_DOMAIN_SET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhs {

using DomainId = std::int32_t;

// Raw declared relation data, as found in model files and builders. The
// auditor works on this form so that contradictory declarations are reported
// rather than silently resolved.
struct DomainSetData {
    std::vector<std::string> names;
    std::vector<std::pair<DomainId, DomainId>> nesting;        // (u, v) meaning u is nested in v
    std::vector<std::pair<DomainId, DomainId>> orthogonality;  // unordered pairs
    std::map<std::pair<DomainId, DomainId>, DomainId> containers;  // (T, U) -> W, optional hints
};

struct RelationClauseResult {
    std::string clause;
    bool holds = true;
    std::string witness;  // first violation, empty when clause holds
};

struct RelationAuditReport {
    std::vector<RelationClauseResult> clauses;
    int complexity = 0;  // longest nesting chain length (cardinality)
    bool all_hold() const {
        for (const auto& c : clauses)
            if (!c.holds) return false;
        return true;
    }
};

// Checks the partial-order axioms, unique maximal element, closure of
// orthogonality under nesting, non-comparability of orthogonal pairs, and
// the container axiom. Violations are reported, not thrown.
RelationAuditReport audit_relations(const DomainSetData& data);

// Compiled relation table. Construction requires a clean draft (the audit
// must pass); the derived transversality relation fills every remaining
// non-comparable, non-orthogonal pair.
class DomainSet {
public:
    enum class Rel : std::uint8_t { Eq, NestedIn, Contains, Orth, Trans };

    static DomainSet compile(const DomainSetData& data);

    DomainId count() const { return static_cast<DomainId>(names_.size()); }
    const std::string& name(DomainId d) const { return names_.at(static_cast<size_t>(d)); }
    std::optional<DomainId> find(const std::string& name) const;
    DomainId maximal() const { return maximal_; }
    int complexity() const { return complexity_; }

    Rel relation(DomainId u, DomainId v) const { return rel_[idx(u, v)]; }
    bool nested_in(DomainId u, DomainId v) const {  // u sqsubseteq v (reflexive)
        Rel r = relation(u, v);
        return r == Rel::Eq || r == Rel::NestedIn;
    }
    bool properly_nested_in(DomainId u, DomainId v) const { return relation(u, v) == Rel::NestedIn; }
    bool orthogonal(DomainId u, DomainId v) const { return relation(u, v) == Rel::Orth; }
    bool transverse(DomainId u, DomainId v) const { return relation(u, v) == Rel::Trans; }

    // rho^U_V as a point set exists iff U is properly nested in or transverse to V.
    bool rho_point_defined(DomainId from, DomainId into) const {
        Rel r = relation(from, into);
        return r == Rel::NestedIn || r == Rel::Trans;
    }

    const std::vector<DomainId>& proper_subdomains(DomainId u) const {
        return proper_sub_[static_cast<size_t>(u)];
    }
    // Maximal elements of the proper subdomains of u.
    const std::vector<DomainId>& maximal_proper_subdomains(DomainId u) const {
        return max_proper_sub_[static_cast<size_t>(u)];
    }
    std::optional<DomainId> container(DomainId t, DomainId u) const;

    const DomainSetData& data() const { return data_; }

private:
    size_t idx(DomainId u, DomainId v) const {
        return static_cast<size_t>(u) * names_.size() + static_cast<size_t>(v);
    }

    std::vector<std::string> names_;
    std::vector<Rel> rel_;
    std::vector<std::vector<DomainId>> proper_sub_;
    std::vector<std::vector<DomainId>> max_proper_sub_;
    std::map<std::pair<DomainId, DomainId>, DomainId> containers_;
    DomainId maximal_ = -1;
    int complexity_ = 0;
    DomainSetData data_;
};

}  // namespace hhs

#endif
