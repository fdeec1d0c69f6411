#include "vernon/decompose.hpp"

#include <algorithm>
#include <set>

#include "vernon/error.hpp"
#include "vernon/monad.hpp"
#include "vernon/operad.hpp"

namespace vernon {

namespace {

void require_ordinary(const VernonGraph& t, const char* what) {
    const auto kind = classify(t);
    if (kind.shape != TreeShape::Ordinary) {
        throw ValidationError(std::string(what) + ": expected an ordinary Vernon tree, got " + to_string(kind));
    }
}

void require_index(const VernonGraph& t, std::size_t c, const char* what) {
    if (c >= t.corollas().size()) {
        throw DomainError(std::string(what) + ": corolla index " + std::to_string(c) + " out of range (tree has " +
                          std::to_string(t.corollas().size()) + ")");
    }
}

std::size_t bound_count(const VernonGraph& t, std::size_t i) {
    std::size_t n = 0;
    for (const auto& v : t.corollas()[i].free_variables()) {
        if (t.partner(v)) ++n;
    }
    return n;
}

}  // namespace

PluckedSubtree pluck(const VernonGraph& t, std::size_t c, const Variable& v) {
    require_ordinary(t, "pluck");
    require_index(t, c, "pluck");
    if (t.corollas()[c].free_variables().count(v) == 0) {
        throw DomainError("pluck: '" + v.name() + "' is not a variable of " + to_string(t.corollas()[c]));
    }
    const auto partner = t.partner(v);
    if (!partner) throw DomainError("pluck: '" + v.name() + "' is free in the tree");

    std::set<std::size_t> seen{c};
    std::vector<std::size_t> stack{t.owner(*partner)};
    std::vector<std::size_t> found;
    while (!stack.empty()) {
        std::size_t d = stack.back();
        stack.pop_back();
        if (!seen.insert(d).second) continue;
        found.push_back(d);
        for (const auto& u : t.corollas()[d].free_variables()) {
            if (auto w = t.partner(u)) stack.push_back(t.owner(*w));
        }
    }
    std::sort(found.begin(), found.end());
    return {induced_subgraph(t, found), *partner, v, found};
}

Decomposition decomposition(const VernonGraph& t, std::size_t c) {
    require_ordinary(t, "decomposition");
    require_index(t, c, "decomposition");
    Decomposition out{c, {}};
    for (const auto& v : t.corollas()[c].instance().positional()) {
        if (t.partner(v)) out.pieces.push_back(pluck(t, c, v));
    }
    return out;
}

std::size_t find_leaf_corolla(const VernonGraph& t) {
    require_ordinary(t, "find_leaf_corolla");
    if (t.corollas().size() < 2) throw DomainError("find_leaf_corolla: the tree has a single corolla");
    std::optional<std::size_t> best;
    std::string best_key;
    for (std::size_t i = 0; i < t.corollas().size(); ++i) {
        if (bound_count(t, i) != 1) continue;
        std::string key = to_string(t.corollas()[i]);
        if (!best || key < best_key) {
            best = i;
            best_key = std::move(key);
        }
    }
    return *best;
}

VernonGraph remove_leaf(const VernonGraph& t, std::size_t d) {
    require_index(t, d, "remove_leaf");
    if (t.corollas().size() < 2 || bound_count(t, d) != 1) {
        throw DomainError("remove_leaf: " + to_string(t.corollas()[d]) + " is not a leaf corolla");
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < t.corollas().size(); ++i) {
        if (i != d) keep.push_back(i);
    }
    return induced_subgraph(t, keep);
}

MuCommand command_of(const VernonGraph& t, std::size_t c) {
    const auto kind = classify(t);
    if (kind.shape == TreeShape::Exceptional) {
        if (c != 0) throw DomainError("command_of: an exceptional tree has a single corolla");
        const auto& p = t.corollas()[0].pair();
        return MuCommand::pair(MuTerm::var(p.first), MuTerm::var(p.second));
    }
    require_ordinary(t, "command_of");
    require_index(t, c, "command_of");
    const auto& f = t.corollas()[c].instance();
    std::map<Variable, MuTerm> args;
    for (const auto& v : f.variables()) {
        if (!t.partner(v)) {
            args.emplace(v, MuTerm::var(v));
            continue;
        }
        PluckedSubtree piece = pluck(t, c, v);
        const auto pos = std::find(piece.corollas.begin(), piece.corollas.end(), t.owner(piece.entry));
        const std::size_t head = static_cast<std::size_t>(pos - piece.corollas.begin());
        args.emplace(v, MuTerm::mu(piece.entry, command_of(piece.tree, head)));
    }
    return MuCommand::apply(f, args);
}

TreeClass reconstruct(const VernonGraph& t, std::size_t c) {
    const Decomposition d = decomposition(t, c);
    TreeClass out = eta(t.corollas()[c].instance());
    for (const auto& piece : d.pieces) out = vt_compose(out, piece.at, piece.entry, canonicalize(piece.tree));
    return out;
}

}  // namespace vernon
