#include "vernon/generate.hpp"

#include <algorithm>
#include <set>

#include "vernon/error.hpp"
#include "vernon/monad.hpp"

namespace vernon {

Signature default_signature() {
    Signature sig;
    sig.add("p1", {Variable("a")});
    sig.add("p2", {Variable("a"), Variable("b")});
    sig.add("p3", {Variable("a"), Variable("b"), Variable("c")});
    sig.add("p4", {Variable("a"), Variable("b"), Variable("c"), Variable("d")});
    sig.add("p5", {Variable("a"), Variable("b")});
    sig.add("p6", {Variable("a"), Variable("b"), Variable("c")});
    return sig;
}

namespace {

std::size_t capacity(const std::optional<Decoration>& d) { return d ? d->profile().size() : 2; }

/// Corollas reachable from `start` without crossing `cut`.
std::vector<std::size_t> component(const VernonGraph& t, std::size_t start, const Edge& cut) {
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        if (!seen.insert(c).second) continue;
        for (const auto& v : t.corollas()[c].free_variables()) {
            const auto w = t.partner(v);
            if (!w || Edge(v, *w) == cut) continue;
            stack.push_back(t.owner(*w));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

Generator::Generator(std::uint64_t seed, Signature sig) : rng_(seed), sig_(std::move(sig)) {
    if (sig_.size() == 0) throw DomainError("generator: empty signature");
}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Variable Generator::variable() { return Variable("v#" + std::to_string(counter_++)); }

Bijection Generator::fresh_renaming(const VarSet& target) {
    std::vector<Variable> to(target.begin(), target.end());
    std::shuffle(to.begin(), to.end(), rng_);
    std::vector<std::pair<Variable, Variable>> pairs;
    for (const auto& v : to) pairs.emplace_back(variable(), v);
    return Bijection(pairs);
}

std::optional<VernonGraph> Generator::assemble(const std::vector<std::optional<Decoration>>& nodes) {
    if (nodes.empty()) throw DomainError("assemble: no corollas");
    const std::size_t n = nodes.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);

    std::vector<std::size_t> left(n);
    for (std::size_t i = 0; i < n; ++i) left[i] = capacity(nodes[i]);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < k; ++j) {
            if (left[order[j]] > 0) open.push_back(order[j]);
        }
        if (open.empty()) return std::nullopt;
        const std::size_t parent = open[uniform(0, open.size() - 1)];
        --left[parent];
        --left[order[k]];
        arcs.emplace_back(parent, order[k]);
    }

    std::vector<std::vector<Variable>> vars(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < capacity(nodes[i]); ++k) vars[i].push_back(variable());
        std::shuffle(vars[i].begin(), vars[i].end(), rng_);
    }
    std::vector<std::size_t> used(n, 0);
    std::vector<Edge> edges;
    for (const auto& [a, b] : arcs) edges.emplace_back(vars[a][used[a]++], vars[b][used[b]++]);

    std::vector<Corolla> corollas;
    for (std::size_t i = 0; i < n; ++i) {
        if (!nodes[i]) {
            corollas.push_back(Corolla::special(vars[i][0], vars[i][1]));
            continue;
        }
        std::vector<Variable> profile = nodes[i]->profile_order();
        std::shuffle(profile.begin(), profile.end(), rng_);
        std::vector<std::pair<Variable, Variable>> pairs;
        for (std::size_t k = 0; k < profile.size(); ++k) pairs.emplace_back(vars[i][k], profile[k]);
        corollas.push_back(Corolla::ordinary(DecoratedInstance(*nodes[i], Bijection(pairs))));
    }
    std::shuffle(corollas.begin(), corollas.end(), rng_);
    return VernonGraph(std::move(corollas), std::move(edges));
}

VernonGraph Generator::ordinary_tree(std::size_t corollas) {
    return extended_tree(corollas, 0);
}

VernonGraph Generator::extended_tree(std::size_t ordinary, std::size_t special) {
    if (ordinary + special == 0) throw DomainError("extended_tree: no corollas");
    std::vector<const Decoration*> params;
    for (const auto& [_, d] : sig_.entries()) params.push_back(&d);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::optional<Decoration>> nodes;
        for (std::size_t i = 0; i < ordinary; ++i) nodes.emplace_back(*params[uniform(0, params.size() - 1)]);
        for (std::size_t i = 0; i < special; ++i) nodes.emplace_back(std::nullopt);
        if (auto g = assemble(nodes)) return *g;
    }
    throw ResourceError("extended_tree: no tree found for the requested corolla counts");
}

TreeClass Generator::tree_class(std::size_t max_corollas, double p_unit) {
    if (coin(p_unit)) {
        Variable x = variable();
        return canonicalize(exceptional_tree(x, variable()));
    }
    return canonicalize(ordinary_tree(uniform(1, std::max<std::size_t>(1, max_corollas))));
}

VernonGraph Generator::two_level(std::size_t outer, std::size_t inner, double p_special) {
    const std::size_t k = uniform(1, std::max<std::size_t>(1, outer));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::optional<Decoration>> nodes;
        for (std::size_t i = 0; i < k; ++i) {
            if (coin(p_special)) {
                nodes.emplace_back(std::nullopt);
            } else {
                TreeClass c = tree_class(inner, 0.15);
                while (c.free_variables().empty()) c = tree_class(inner, 0.15);
                nodes.emplace_back(Decoration::tree(std::move(c)));
            }
        }
        if (auto g = assemble(nodes)) return *g;
    }
    throw ResourceError("two_level: no tree found");
}

VernonGraph Generator::three_level(std::size_t outer, std::size_t inner) {
    const std::size_t k = uniform(1, std::max<std::size_t>(1, outer));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::optional<Decoration>> nodes;
        for (std::size_t i = 0; i < k; ++i) {
            if (coin(0.1)) {
                nodes.emplace_back(std::nullopt);
            } else {
                TreeClass c = canonicalize(two_level(inner, inner, 0.1));
                while (c.free_variables().empty()) c = canonicalize(two_level(inner, inner, 0.1));
                nodes.emplace_back(Decoration::tree(std::move(c)));
            }
        }
        if (auto g = assemble(nodes)) return *g;
    }
    throw ResourceError("three_level: no tree found");
}

MuTerm Generator::wrap(MuTerm s) {
    if (!coin(0.2)) return s;
    Variable k = variable();
    MuCommand body = coin() ? MuCommand::pair(std::move(s), MuTerm::var(k)) : MuCommand::pair(MuTerm::var(k), std::move(s));
    return MuTerm::mu(std::move(k), std::move(body));
}

MuTerm Generator::term_at(const VernonGraph& t, const Variable& entry) {
    const auto w = t.partner(entry);
    if (!w) return wrap(MuTerm::var(entry));
    const Edge cut(entry, *w);
    const VernonGraph side = induced_subgraph(t, component(t, t.owner(*w), cut));
    return wrap(MuTerm::mu(*w, command(side)));
}

MuCommand Generator::command(const VernonGraph& t) {
    const auto kind = classify(t);
    if (kind.shape == TreeShape::Exceptional) {
        const auto& p = t.corollas()[0].pair();
        MuTerm a = wrap(MuTerm::var(p.first)), b = wrap(MuTerm::var(p.second));
        return coin() ? MuCommand::pair(a, b) : MuCommand::pair(b, a);
    }
    if (kind.shape != TreeShape::Ordinary) throw ValidationError("command: expected an ordinary or exceptional tree");
    if (!t.edges().empty() && coin(0.4)) {
        const Edge& e = t.edges()[uniform(0, t.edges().size() - 1)];
        const VernonGraph a = induced_subgraph(t, component(t, t.owner(e.first), e));
        const VernonGraph b = induced_subgraph(t, component(t, t.owner(e.second), e));
        MuTerm s = wrap(MuTerm::mu(e.first, command(a)));
        MuTerm r = wrap(MuTerm::mu(e.second, command(b)));
        return coin() ? MuCommand::pair(s, r) : MuCommand::pair(r, s);
    }
    const std::size_t c = uniform(0, t.corollas().size() - 1);
    const auto& f = t.corollas()[c].instance();
    std::map<Variable, MuTerm> args;
    for (const auto& x : f.variables()) args.emplace(x, term_at(t, x));
    return MuCommand::apply(f, args);
}

Combinator Generator::combinator(const VernonGraph& t) {
    const auto kind = classify(t);
    Combinator out = [&] {
        if (kind.shape == TreeShape::Exceptional) {
            const auto& p = t.corollas()[0].pair();
            return coin() ? Combinator::id(p.first, p.second) : Combinator::id(p.second, p.first);
        }
        if (kind.shape != TreeShape::Ordinary) throw ValidationError("combinator: expected an ordinary or exceptional tree");
        if (t.edges().empty()) return Combinator::param(t.corollas()[0].instance());
        const Edge& e = t.edges()[uniform(0, t.edges().size() - 1)];
        Combinator a = combinator(induced_subgraph(t, component(t, t.owner(e.first), e)));
        Combinator b = combinator(induced_subgraph(t, component(t, t.owner(e.second), e)));
        return coin() ? Combinator::comp(a, e.first, e.second, b) : Combinator::comp(b, e.second, e.first, a);
    }();
    if (coin(0.15)) {
        // act[sigma] followed by act[sigma^-1]
        const Bijection sigma = fresh_renaming(free_vars(t));
        out = Combinator::act(Combinator::act(out, sigma), sigma.inverse());
    } else if (!free_vars(t).empty() && coin(0.15)) {
        // x -> z -> x through two units
        const VarSet type = free_vars(t);
        auto it = type.begin();
        std::advance(it, uniform(0, type.size() - 1));
        const Variable x = *it;
        const Variable y1 = variable(), z = variable(), y2 = variable();
        out = Combinator::comp(out, x, y1, Combinator::id(y1, z));
        out = Combinator::comp(Combinator::id(x, y2), y2, z, out);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Parent arrays of the free trees with up to five nodes (one per shape).
const std::vector<std::vector<int>>& tree_shapes() {
    static const std::vector<std::vector<int>> shapes = {
        {-1},
        {-1, 0},
        {-1, 0, 1},
        {-1, 0, 1, 2},
        {-1, 0, 0, 0},
        {-1, 0, 1, 2, 3},
        {-1, 0, 0, 0, 0},
        {-1, 0, 1, 2, 1},
    };
    return shapes;
}

}  // namespace

std::vector<VernonGraph> enumerate_ordinary_trees(const Signature& sig, std::size_t max_corollas) {
    if (max_corollas > 5) throw DomainError("enumerate_ordinary_trees: at most five corollas");
    // One parameter per arity: the first declared.
    std::map<std::size_t, const Decoration*> by_arity;
    for (const auto& [_, d] : sig.entries()) by_arity.emplace(d.profile().size(), &d);

    std::vector<VernonGraph> out;
    std::set<std::string> seen;
    for (const auto& parent : tree_shapes()) {
        const std::size_t n = parent.size();
        if (n > max_corollas) continue;
        std::vector<std::vector<std::size_t>> nbrs(n);
        for (std::size_t i = 1; i < n; ++i) {
            nbrs[i].push_back(static_cast<std::size_t>(parent[i]));
            nbrs[static_cast<std::size_t>(parent[i])].push_back(i);
        }
        // Per corolla: 0 = arity deg, 1 = arity deg+1 with the extra entry last,
        // 2 = arity deg+1 with the extra entry first.
        std::vector<std::size_t> choice(n, 0);
        for (;;) {
            bool ok = true;
            std::vector<const Decoration*> decs(n);
            for (std::size_t i = 0; i < n && ok; ++i) {
                std::size_t arity = nbrs[i].size() + (choice[i] == 0 ? 0 : 1);
                auto it = by_arity.find(arity);
                if (arity == 0 || it == by_arity.end()) ok = false;
                else decs[i] = it->second;
            }
            if (ok) {
                auto name = [](std::size_t i, std::size_t k) {
                    return Variable(std::string(1, static_cast<char>('f' + i)) + std::to_string(k));
                };
                std::vector<Corolla> corollas;
                std::vector<std::size_t> offset(n);
                for (std::size_t i = 0; i < n; ++i) {
                    offset[i] = choice[i] == 2 ? 1 : 0;
                    std::vector<std::pair<Variable, Variable>> pairs;
                    const auto& order = decs[i]->profile_order();
                    for (std::size_t k = 0; k < order.size(); ++k) pairs.emplace_back(name(i, k), order[k]);
                    corollas.push_back(Corolla::ordinary(DecoratedInstance(*decs[i], Bijection(pairs))));
                }
                std::vector<Edge> edges;
                for (std::size_t i = 1; i < n; ++i) {
                    const std::size_t p = static_cast<std::size_t>(parent[i]);
                    auto slot = [&](std::size_t node, std::size_t other) {
                        const auto& ns = nbrs[node];
                        return static_cast<std::size_t>(std::find(ns.begin(), ns.end(), other) - ns.begin()) + offset[node];
                    };
                    edges.emplace_back(name(i, slot(i, p)), name(p, slot(p, i)));
                }
                VernonGraph g(std::move(corollas), std::move(edges));
                if (seen.insert(canonicalize(g).key()).second) out.push_back(std::move(g));
            }
            std::size_t i = 0;
            while (i < n && ++choice[i] == 3) choice[i++] = 0;
            if (i == n) break;
        }
    }
    return out;
}

}  // namespace vernon
