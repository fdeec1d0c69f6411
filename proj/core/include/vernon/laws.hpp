#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vernon/operad.hpp"

namespace vernon {

struct LawOptions {
    /// Size bound: corollas per generated operand or layer.
    std::size_t bound = 4;
    std::uint64_t seed = 7;
    /// Instances per law.
    std::size_t instances = 250;
};

struct LawResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// First counterexample, empty when none.
    std::string witness;

    bool ok() const noexcept { return failures == 0 && instances > 0; }
};

struct LawReport {
    std::string suite;
    std::vector<LawResult> results;

    bool ok() const noexcept;
    const LawResult& at(const std::string& name) const;
};

/// The operations the axiom checker needs, over tree-class carriers.
struct TreeOperadOps {
    std::string name;
    std::function<TreeClass(const TreeClass&, const Bijection&)> act;
    std::function<TreeClass(const TreeClass&, const Variable&, const Variable&, const TreeClass&)> compose;
    std::function<TreeClass(const Variable&, const Variable&)> unit;
};

template <OperadModel M>
    requires std::same_as<typename M::Element, TreeClass>
TreeOperadOps operad_ops(const M& model, std::string name) {
    return {std::move(name),
            [model](const TreeClass& e, const Bijection& s) { return model.act(e, s); },
            [model](const TreeClass& a, const Variable& x, const Variable& y, const TreeClass& b) {
                return model.compose(a, x, y, b);
            },
            [model](const Variable& x, const Variable& y) { return model.unit(x, y); }};
}

/// A1, A2, EQ, U1, U2, U3, CO on random tree classes.
LawReport check_operad_axioms(const TreeOperadOps& ops, const LawOptions& options);
LawReport check_operad_axioms(const LawOptions& options);

/// Confluence and step counts of the special-corolla rewriting.
LawReport check_rewrite_laws(const LawOptions& options);
/// Unit triangles, associativity square and the flattening identities.
LawReport check_monad_laws(const LawOptions& options);
/// Translation, Phi and delta laws.
LawReport check_translate_laws(const LawOptions& options);
/// Decomposition laws on the enumerated corpus (bound capped at 5) and on random trees.
LawReport check_decompose_laws(const LawOptions& options);

/// `operad`, `rewrite`, `monad`, `translate`, `decompose` or `all`.
std::vector<LawReport> run_suite(const std::string& suite, const LawOptions& options);

void print_report(std::ostream& out, const LawReport& report);

}  // namespace vernon
