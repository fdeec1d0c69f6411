#pragma once

#include <cstddef>
#include <vector>

#include "vernon/mu.hpp"
#include "vernon/trees.hpp"

namespace vernon {

/// The subtree hanging off a corolla entry, with the entry's partner made free.
struct PluckedSubtree {
    VernonGraph tree;
    /// sigma(v), the variable through which the subtree was attached.
    Variable entry;
    /// The corolla entry v it was plucked at.
    Variable at;
    /// Indices of its corollas in the original tree, ascending.
    std::vector<std::size_t> corollas;
};

/// Component across the edge (v, sigma(v)) away from corolla c. Requires an
/// ordinary tree and v in FV(c) \ FV(t).
PluckedSubtree pluck(const VernonGraph& t, std::size_t c, const Variable& v);

struct Decomposition {
    std::size_t center;
    /// One piece per bound entry of the center, in profile order.
    std::vector<PluckedSubtree> pieces;
};

Decomposition decomposition(const VernonGraph& t, std::size_t c);

/// A corolla with exactly one bound variable; the one with the smallest
/// printed form. Requires an ordinary tree with at least two corollas.
std::size_t find_leaf_corolla(const VernonGraph& t);

/// t without the leaf corolla d; the partner of its bound variable becomes free.
VernonGraph remove_leaf(const VernonGraph& t, std::size_t d);

/// A normal-form command denoting t, headed by corolla c. An exceptional
/// tree {(x,y)} gives <x | y> (c must be 0).
MuCommand command_of(const VernonGraph& t, std::size_t c);

/// Folds vt_compose over decomposition(t, c).
TreeClass reconstruct(const VernonGraph& t, std::size_t c);

}  // namespace vernon
