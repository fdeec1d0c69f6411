#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "vernon/error.hpp"
#include "vernon/monad.hpp"
#include "vernon/naming.hpp"
#include "vernon/signature.hpp"
#include "vernon/trees.hpp"

namespace vernon {

/// A model of the biased equational theory: carriers indexed by variable
/// sets, renaming, partial composition and units.
template <class M>
concept OperadModel = requires(const M& m, const typename M::Element& e, const Variable& x,
                               const Bijection& sigma, const DecoratedInstance& f) {
    typename M::Element;
    { m.embed(f) } -> std::same_as<typename M::Element>;
    { m.unit(x, x) } -> std::same_as<typename M::Element>;
    { m.act(e, sigma) } -> std::same_as<typename M::Element>;
    { m.compose(e, x, x, e) } -> std::same_as<typename M::Element>;
    { m.free_variables(e) } -> std::convertible_to<VarSet>;
    { m.equal(e, e) } -> std::convertible_to<bool>;
    { m.show(e) } -> std::convertible_to<std::string>;
};

/// [T] acted on by kappa : X' -> FV(T).
TreeClass vt_action(const TreeClass& c, const Bijection& kappa);
/// [T1] x.y [T2]: graft along a new edge (x~y), normalise, canonicalise.
TreeClass vt_compose(const TreeClass& c1, const Variable& x, const Variable& y, const TreeClass& c2);
/// The exceptional class {(x,y)}.
TreeClass vt_unit(const Variable& x, const Variable& y);

/// The operad of tree classes. Parameters decorated by a tree class are
/// either kept as opaque one-corolla trees (Free, the free operad over
/// tree-valued parameters) or interpreted as the class they carry
/// (Flatten, which turns tree classes themselves into the model).
class TreeModel {
public:
    enum class Parameters { Free, Flatten };
    using Element = TreeClass;

    explicit TreeModel(Parameters p = Parameters::Free) : parameters_(p) {}

    Element embed(const DecoratedInstance& f) const;
    Element unit(const Variable& x, const Variable& y) const { return vt_unit(x, y); }
    Element act(const Element& e, const Bijection& sigma) const { return vt_action(e, sigma); }
    Element compose(const Element& a, const Variable& x, const Variable& y, const Element& b) const {
        return vt_compose(a, x, y, b);
    }
    VarSet free_variables(const Element& e) const { return e.free_variables(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string show(const Element& e) const { return e.key(); }

    Parameters parameters() const noexcept { return parameters_; }

private:
    Parameters parameters_;
};

static_assert(OperadModel<TreeModel>);

/// phi : x -> (g_x, entry_x)
template <class E>
struct AssignmentEntry {
    E operand;
    Variable entry;
};

template <class E>
using Assignment = std::map<Variable, AssignmentEntry<E>>;

enum class RenamingPolicy {
    Minimal,   // rename an entry of f only when it would clash with a residue
    FreshAll,  // rename every entry of f apart first
};

struct TotalCompositionOptions {
    RenamingPolicy policy = RenamingPolicy::Minimal;
    /// Order in which the entries of f are consumed; empty means ascending.
    std::vector<Variable> order;
};

/// Checks the shape of an assignment: total on x_set, entries inside the
/// operands, residues FV(g_x)\{entry} pairwise disjoint. Throws otherwise.
void check_assignment(const VarSet& x_set, const std::map<Variable, std::pair<VarSet, Variable>>& operands);

/// The renaming sigma : X' -> X of f(phi) = f^sigma(phi . sigma).
Bijection precautionary_renaming(const VarSet& x_set, const std::map<Variable, VarSet>& residues, RenamingPolicy policy);

/// Consumption order of the entries (validated against x_set).
std::vector<Variable> fold_order(const VarSet& x_set, const std::vector<Variable>& requested);

template <OperadModel M>
typename M::Element total_composition(const M& model, const typename M::Element& f,
                                      const Assignment<typename M::Element>& phi,
                                      const TotalCompositionOptions& options = {}) {
    const VarSet x_set = model.free_variables(f);
    std::map<Variable, std::pair<VarSet, Variable>> shapes;
    std::map<Variable, VarSet> residues;
    for (const auto& [x, e] : phi) {
        VarSet y = model.free_variables(e.operand);
        residues[x] = set_minus(y, e.entry);
        shapes.emplace(x, std::make_pair(std::move(y), e.entry));
    }
    check_assignment(x_set, shapes);
    const Bijection sigma = precautionary_renaming(x_set, residues, options.policy);
    auto current = sigma.is_identity() ? f : model.act(f, sigma);
    for (const auto& x : fold_order(x_set, options.order)) {
        const auto& e = phi.at(x);
        current = model.compose(current, sigma.inverse_at(x), e.entry, e.operand);
    }
    return current;
}

}  // namespace vernon
