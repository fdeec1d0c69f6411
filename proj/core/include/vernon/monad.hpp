#pragma once

#include <functional>

#include "vernon/rewrite.hpp"
#include "vernon/signature.hpp"
#include "vernon/trees.hpp"

namespace vernon {

/// Unit: the class of the one-corolla tree {f; id}.
TreeClass eta(const DecoratedInstance& f);

/// The class c used as a parameter over its own free variables.
DecoratedInstance as_parameter(const TreeClass& c);

/// Erases the corolla boundaries of a two-level tree. Every ordinary corolla
/// must carry a tree decoration; inner bound variables are renamed apart
/// from everything else first.
VernonGraph flatten(const VernonGraph& two_level);

/// mu = canonicalize . nf . flat
TreeClass mu(const VernonGraph& two_level);
TreeClass mu(const TreeClass& two_level);

/// Replaces the decoration of every ordinary corolla by f(decoration),
/// keeping attachments. f must preserve the free-variable set.
VernonGraph map_decorations(const VernonGraph& g, const std::function<TreeClass(const TreeClass&)>& f);

/// M eta: wraps every ordinary corolla's instance into its unit class.
VernonGraph wrap_corollas(const VernonGraph& t);

/// Both sides of the associativity square on a three-level tree.
TreeClass mu_after_inner_mu(const VernonGraph& three_level);  // mu . M mu
TreeClass mu_after_outer_mu(const VernonGraph& three_level);  // mu . mu_M

}  // namespace vernon
