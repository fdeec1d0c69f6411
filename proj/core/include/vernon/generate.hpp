#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vernon/combinators.hpp"
#include "vernon/mu.hpp"
#include "vernon/signature.hpp"
#include "vernon/trees.hpp"

namespace vernon {

/// p1 : {a} ... p4 : {a,b,c,d}, p5 : {a,b}, p6 : {a,b,c}.
Signature default_signature();

/// Seeded random instances. Every variable handed out is a fresh `v#n`, so
/// separately generated objects never share names.
class Generator {
public:
    explicit Generator(std::uint64_t seed, Signature sig = default_signature());

    std::mt19937_64& rng() noexcept { return rng_; }
    const Signature& signature() const noexcept { return sig_; }

    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool coin(double p = 0.5);

    Variable variable();
    /// A random bijection from fresh variables onto `target`.
    Bijection fresh_renaming(const VarSet& target);

    /// Random graph over the given nodes (nullopt = special corolla), with
    /// a random tree shape. Nullopt if the capacities admit no tree.
    std::optional<VernonGraph> assemble(const std::vector<std::optional<Decoration>>& nodes);

    /// Ordinary tree with `corollas` base-decorated corollas.
    VernonGraph ordinary_tree(std::size_t corollas);
    /// Tree with the given counts of ordinary and special corollas.
    VernonGraph extended_tree(std::size_t ordinary, std::size_t special);
    /// Normal class with 1..max_corollas corollas; exceptional with probability p_unit.
    TreeClass tree_class(std::size_t max_corollas, double p_unit = 0.1);

    /// Outer tree of up to `outer` corollas decorated by classes of up to
    /// `inner` corollas; specials appear in both layers with probability p_special.
    VernonGraph two_level(std::size_t outer, std::size_t inner, double p_special = 0.2);
    VernonGraph three_level(std::size_t outer, std::size_t inner);

    /// A command denoting the class of the ordinary or exceptional tree t,
    /// built from pair splits, applications and identity wrappers.
    MuCommand command(const VernonGraph& t);
    /// A combinator denoting the class of t.
    Combinator combinator(const VernonGraph& t);

private:
    MuTerm wrap(MuTerm s);
    MuTerm term_at(const VernonGraph& t, const Variable& entry);

    std::mt19937_64 rng_;
    Signature sig_;
    std::uint64_t counter_ = 0;
};

/// Ordinary trees with 1..max_corollas corollas over sig, one per class:
/// every labelled tree shape, each corolla decorated by a parameter of
/// arity deg or deg+1, edges attached to the leading profile entries.
std::vector<VernonGraph> enumerate_ordinary_trees(const Signature& sig, std::size_t max_corollas);

}  // namespace vernon
