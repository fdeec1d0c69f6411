#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "vernon/trees.hpp"

namespace vernon {

enum class RedexKind { OrdinarySpecial, SpecialSpecial };

/// An edge along which a special corolla can be absorbed. For
/// OrdinarySpecial, `left` is the ordinary corolla and `right` the special
/// one; for SpecialSpecial both are special.
struct Redex {
    RedexKind kind;
    std::size_t left;
    std::size_t right;
    Edge edge;

    friend bool operator==(const Redex&, const Redex&) = default;
};

std::string to_string(const Redex& r, const VernonGraph& g);

/// All redexes of g, ordered by the printed form of the participating corollas.
std::vector<Redex> find_redexes(const VernonGraph& g);

/// One contraction step; throws DomainError if r is not a redex of g.
VernonGraph contract(const VernonGraph& g, const Redex& r);

struct RewriteStep {
    Redex redex;
    std::string before;
    VernonGraph after;
};

/// Contracts the first redex until none is left.
VernonGraph normal_form(const VernonGraph& g, std::vector<RewriteStep>* trace = nullptr);

struct NormalFormSearch {
    std::set<TreeClass> classes;
    /// Lengths of all maximal reduction sequences.
    std::set<std::size_t> lengths;
    std::size_t states = 0;
};

/// Explores every reduction sequence from g. Throws ResourceError once more
/// than `fuel` distinct graphs have been visited.
NormalFormSearch all_normal_forms(const VernonGraph& g, std::size_t fuel = 200000);

}  // namespace vernon
