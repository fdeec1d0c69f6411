#pragma once

#include <optional>

#include "vernon/combinators.hpp"
#include "vernon/decompose.hpp"
#include "vernon/mu.hpp"
#include "vernon/operad.hpp"
#include "vernon/rewrite.hpp"

namespace vernon {

/// [[c]]. Indices for terms are drawn from the reserved `i#n` names in
/// traversal order; an application becomes the ascending fold of f(phi).
Combinator translate(const MuCommand& c);
/// [[t]]_index; index must not occur in t.
Combinator translate(const MuTerm& t, const Variable& index);

/// interpret . translate in the tree model.
TreeClass phi(const MuCommand& c, const TreeModel& model = TreeModel{});
TreeClass phi(const MuTerm& t, const Variable& index, const TreeModel& model = TreeModel{});

/// The four-clause definition evaluated directly on tree classes.
TreeClass phi_direct(const MuCommand& c, const TreeModel& model = TreeModel{});
TreeClass phi_direct(const MuTerm& t, const Variable& index, const TreeModel& model = TreeModel{});

/// Phi(c1) == Phi(c2); throws TypeError when the types differ.
bool mu_equiv(const MuCommand& c1, const MuCommand& c2);

/// f -> f{x,...}, id -> <x|y>, s x*y t -> <mu x.s | mu y.t>, act -> renaming.
MuCommand comb_to_mu(const Combinator& c);

/// The corolla used for delta when none is requested.
std::size_t default_head(const VernonGraph& normal);

/// Structure map of an algebra: evaluate a command denoting the two-level
/// tree in the model. `head` indexes a corolla of normal_form(t).
template <OperadModel M>
typename M::Element delta(const VernonGraph& t, const M& model, std::optional<std::size_t> head = std::nullopt) {
    const VernonGraph g = normal_form(t);
    const std::size_t at = head ? *head : default_head(g);
    return interpret(translate(command_of(g, at)), model);
}

/// Tree classes with the partial composition recovered from delta: a x.y b
/// is delta of the two-corolla tree {[a], [b]; (x~y)} over the tree model
/// that reads tree decorations as the classes they carry.
class DeltaTreeModel {
public:
    using Element = TreeClass;

    Element embed(const DecoratedInstance& f) const { return inner_.embed(f); }
    Element unit(const Variable& x, const Variable& y) const { return inner_.unit(x, y); }
    Element act(const Element& e, const Bijection& sigma) const { return inner_.act(e, sigma); }
    Element compose(const Element& a, const Variable& x, const Variable& y, const Element& b) const;
    VarSet free_variables(const Element& e) const { return e.free_variables(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string show(const Element& e) const { return e.key(); }

    /// The two-level tree whose delta defines a x.y b.
    static VernonGraph grafting(const Element& a, const Variable& x, const Variable& y, const Element& b);

private:
    TreeModel inner_{TreeModel::Parameters::Flatten};
};

static_assert(OperadModel<DeltaTreeModel>);

}  // namespace vernon
