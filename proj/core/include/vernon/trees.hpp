#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vernon/naming.hpp"
#include "vernon/signature.hpp"

namespace vernon {

/// An unordered pair of distinct variables; stored with first < second.
struct SpecialPair {
    Variable first;
    Variable second;

    SpecialPair(Variable a, Variable b);

    friend bool operator==(const SpecialPair&, const SpecialPair&) = default;
    friend auto operator<=>(const SpecialPair&, const SpecialPair&) = default;
};

/// A node of a Vernon graph: ordinary (a decorated instance) or special (a
/// bare pair of variables standing for an identity).
class Corolla {
public:
    static Corolla ordinary(DecoratedInstance instance);
    static Corolla special(Variable a, Variable b);

    bool is_special() const noexcept { return std::holds_alternative<SpecialPair>(node_); }
    bool is_ordinary() const noexcept { return !is_special(); }

    const DecoratedInstance& instance() const;
    const SpecialPair& pair() const;

    VarSet free_variables() const;

    friend bool operator==(const Corolla&, const Corolla&) = default;

private:
    explicit Corolla(std::variant<DecoratedInstance, SpecialPair> node) : node_(std::move(node)) {}
    std::variant<DecoratedInstance, SpecialPair> node_;
};

/// A two-cycle of the involution; stored with first < second.
struct Edge {
    Variable first;
    Variable second;

    Edge(Variable a, Variable b);

    const Variable& other(const Variable& v) const { return v == first ? second : first; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite non-empty collection of corollas with pairwise disjoint free
/// variables and an involution (given by its edges) on their union.
class VernonGraph {
public:
    /// Throws ValidationError when a structural invariant is violated.
    VernonGraph(std::vector<Corolla> corollas, std::vector<Edge> edges);

    const std::vector<Corolla>& corollas() const noexcept { return corollas_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// V(g): every variable of every corolla.
    VarSet all_variables() const;
    /// Fixpoints of the involution.
    VarSet free_variables() const;
    /// Edge endpoints.
    VarSet bound_variables() const;

    std::optional<Variable> partner(const Variable& v) const;
    /// Index of the corolla in which `v` occurs; throws DomainError if none.
    std::size_t owner(const Variable& v) const;

    std::size_t special_count() const;
    std::size_t ordinary_count() const { return corollas_.size() - special_count(); }

    friend bool operator==(const VernonGraph&, const VernonGraph&) = default;

private:
    std::vector<Corolla> corollas_;
    std::vector<Edge> edges_;
    std::map<Variable, std::size_t> owner_;
    std::map<Variable, Variable> partner_;
};

enum class TreeShape { Ordinary, Exceptional, Extended, NotATree };
enum class TreeDefect { None, Disconnected, Loop, MultiEdge, Cycle };

struct TreeKind {
    TreeShape shape = TreeShape::Ordinary;
    TreeDefect defect = TreeDefect::None;

    bool is_tree() const noexcept { return shape != TreeShape::NotATree; }
    friend bool operator==(const TreeKind&, const TreeKind&) = default;
};

std::string to_string(TreeShape shape);
std::string to_string(TreeDefect defect);
std::string to_string(const TreeKind& kind);

TreeKind classify(const VernonGraph& g);
VarSet free_vars(const VernonGraph& g);

/// Renames along theta : new -> old. Variables of g outside codomain(theta)
/// are kept; they must not collide with domain(theta).
VernonGraph rename(const VernonGraph& g, const Bijection& theta);

/// The alpha-canonical representative of an (extended) Vernon tree.
class TreeClass {
public:
    const VernonGraph& representative() const noexcept { return canonical_; }
    const TreeKind& kind() const noexcept { return kind_; }
    const VarSet& free_variables() const noexcept { return free_; }
    /// Printed canonical form; equal keys iff equal classes.
    const std::string& key() const noexcept { return key_; }

    bool is_exceptional() const noexcept { return kind_.shape == TreeShape::Exceptional; }

    friend bool operator==(const TreeClass& a, const TreeClass& b) noexcept { return a.key_ == b.key_; }
    friend auto operator<=>(const TreeClass& a, const TreeClass& b) noexcept { return a.key_ <=> b.key_; }

private:
    friend TreeClass canonicalize(const VernonGraph& t);
    TreeClass(VernonGraph canonical, TreeKind kind);

    VernonGraph canonical_;
    TreeKind kind_;
    VarSet free_;
    std::string key_;
};

/// Throws ValidationError if t is not an (extended) tree.
TreeClass canonicalize(const VernonGraph& t);
bool alpha_eq(const VernonGraph& t1, const VernonGraph& t2);

/// The canonical printed form, `{ f(x,y), (p,q) ; (x~p) }`.
std::string to_string(const VernonGraph& g);
std::string to_string(const Corolla& c);
std::string to_string(const DecoratedInstance& f);

/// Convenience: the graph made of one ordinary corolla and no edges.
VernonGraph single_corolla(const DecoratedInstance& f);
/// The exceptional tree {(x,y)}.
VernonGraph exceptional_tree(const Variable& x, const Variable& y);

/// Graph made of the given corollas of g, keeping edges with both endpoints
/// inside and dropping the others (their endpoints become free).
VernonGraph induced_subgraph(const VernonGraph& g, const std::vector<std::size_t>& corolla_indices);

}  // namespace vernon
