#include "vernon/trees.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "vernon/error.hpp"

namespace vernon {

SpecialPair::SpecialPair(Variable a, Variable b) : first(std::move(a)), second(std::move(b)) {
    if (first == second) throw ValidationError("special corolla (" + first.name() + "," + second.name() + "): endpoints must differ");
    if (second < first) std::swap(first, second);
}

Corolla Corolla::ordinary(DecoratedInstance instance) { return Corolla(std::move(instance)); }

Corolla Corolla::special(Variable a, Variable b) { return Corolla(SpecialPair(std::move(a), std::move(b))); }

const DecoratedInstance& Corolla::instance() const {
    if (const auto* f = std::get_if<DecoratedInstance>(&node_)) return *f;
    throw DomainError("corolla " + to_string(*this) + " is special");
}

const SpecialPair& Corolla::pair() const {
    if (const auto* p = std::get_if<SpecialPair>(&node_)) return *p;
    throw DomainError("corolla " + to_string(*this) + " is ordinary");
}

VarSet Corolla::free_variables() const {
    if (const auto* p = std::get_if<SpecialPair>(&node_)) return {p->first, p->second};
    return std::get<DecoratedInstance>(node_).variables();
}

Edge::Edge(Variable a, Variable b) : first(std::move(a)), second(std::move(b)) {
    if (first == second) throw ValidationError("edge (" + first.name() + "~" + second.name() + "): endpoints must differ");
    if (second < first) std::swap(first, second);
}

VernonGraph::VernonGraph(std::vector<Corolla> corollas, std::vector<Edge> edges)
    : corollas_(std::move(corollas)), edges_(std::move(edges)) {
    if (corollas_.empty()) throw ValidationError("a Vernon graph needs at least one corolla");
    for (std::size_t i = 0; i < corollas_.size(); ++i) {
        for (const auto& v : corollas_[i].free_variables()) {
            if (!owner_.emplace(v, i).second) {
                throw ValidationError("corollas must have disjoint free variables: '" + v.name() + "' occurs twice");
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        for (const auto* v : {&e.first, &e.second}) {
            if (owner_.count(*v) == 0) throw ValidationError("edge endpoint '" + v->name() + "' occurs in no corolla");
        }
        if (!partner_.emplace(e.first, e.second).second || !partner_.emplace(e.second, e.first).second) {
            throw ValidationError("involution: a variable occurs in two edges (" + e.first.name() + "~" + e.second.name() + ")");
        }
    }
}

VarSet VernonGraph::all_variables() const {
    VarSet out;
    for (const auto& [v, _] : owner_) out.insert(out.end(), v);
    return out;
}

VarSet VernonGraph::free_variables() const {
    VarSet out;
    for (const auto& [v, _] : owner_) {
        if (partner_.count(v) == 0) out.insert(out.end(), v);
    }
    return out;
}

VarSet VernonGraph::bound_variables() const {
    VarSet out;
    for (const auto& [v, _] : partner_) out.insert(out.end(), v);
    return out;
}

std::optional<Variable> VernonGraph::partner(const Variable& v) const {
    auto it = partner_.find(v);
    if (it == partner_.end()) return std::nullopt;
    return it->second;
}

std::size_t VernonGraph::owner(const Variable& v) const {
    auto it = owner_.find(v);
    if (it == owner_.end()) throw DomainError("variable '" + v.name() + "' occurs in no corolla");
    return it->second;
}

std::size_t VernonGraph::special_count() const {
    return static_cast<std::size_t>(
        std::count_if(corollas_.begin(), corollas_.end(), [](const Corolla& c) { return c.is_special(); }));
}

std::string to_string(TreeShape shape) {
    switch (shape) {
        case TreeShape::Ordinary: return "ordinary";
        case TreeShape::Exceptional: return "exceptional";
        case TreeShape::Extended: return "extended";
        case TreeShape::NotATree: return "not-a-tree";
    }
    return "?";
}

std::string to_string(TreeDefect defect) {
    switch (defect) {
        case TreeDefect::None: return "none";
        case TreeDefect::Disconnected: return "disconnected";
        case TreeDefect::Loop: return "loop";
        case TreeDefect::MultiEdge: return "multi-edge";
        case TreeDefect::Cycle: return "cycle";
    }
    return "?";
}

std::string to_string(const TreeKind& kind) {
    if (kind.shape == TreeShape::NotATree) return "not-a-tree (" + to_string(kind.defect) + ")";
    return to_string(kind.shape) + " tree";
}

TreeKind classify(const VernonGraph& g) {
    const std::size_t n = g.corollas().size();
    std::set<std::pair<std::size_t, std::size_t>> arcs;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };

    for (const auto& e : g.edges()) {
        if (g.owner(e.first) == g.owner(e.second)) return {TreeShape::NotATree, TreeDefect::Loop};
    }
    for (const auto& e : g.edges()) {
        auto a = g.owner(e.first), b = g.owner(e.second);
        if (!arcs.emplace(std::min(a, b), std::max(a, b)).second) return {TreeShape::NotATree, TreeDefect::MultiEdge};
    }
    std::size_t components = n;
    for (const auto& [a, b] : arcs) {
        auto ra = find(a), rb = find(b);
        if (ra == rb) return {TreeShape::NotATree, TreeDefect::Cycle};
        parent[ra] = rb;
        --components;
    }
    if (components != 1) return {TreeShape::NotATree, TreeDefect::Disconnected};

    const std::size_t specials = g.special_count();
    if (specials == 0) return {TreeShape::Ordinary, TreeDefect::None};
    if (n == 1) return {TreeShape::Exceptional, TreeDefect::None};
    return {TreeShape::Extended, TreeDefect::None};
}

VarSet free_vars(const VernonGraph& g) { return g.free_variables(); }

VernonGraph rename(const VernonGraph& g, const Bijection& theta) {
    const VarSet vars = g.all_variables();
    for (const auto& old : theta.codomain()) {
        if (vars.count(old) == 0) throw ClashError("rename: '" + old.name() + "' does not occur in the graph");
    }
    for (const auto& fresh_name : theta.domain()) {
        if (vars.count(fresh_name) != 0 && !theta.in_codomain(fresh_name)) {
            throw ClashError("rename: new name '" + fresh_name.name() + "' collides with an untouched variable");
        }
    }
    auto to_new = [&](const Variable& old) -> Variable {
        return theta.in_codomain(old) ? theta.inverse_at(old) : old;
    };

    std::vector<Corolla> corollas;
    corollas.reserve(g.corollas().size());
    for (const auto& c : g.corollas()) {
        if (c.is_special()) {
            corollas.push_back(Corolla::special(to_new(c.pair().first), to_new(c.pair().second)));
        } else {
            std::vector<std::pair<Variable, Variable>> local;
            for (const auto& v : c.instance().variables()) local.emplace_back(to_new(v), v);
            corollas.push_back(Corolla::ordinary(act(c.instance(), Bijection(local))));
        }
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.emplace_back(to_new(e.first), to_new(e.second));
    return VernonGraph(std::move(corollas), std::move(edges));
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const DecoratedInstance& f) {
    std::string out = f.decoration().is_tree() ? f.decoration().key() : f.decoration().name();
    out += "(";
    bool first = true;
    for (const auto& v : f.positional()) {
        if (!first) out += ",";
        out += v.name();
        first = false;
    }
    return out + ")";
}

std::string to_string(const Corolla& c) {
    if (c.is_special()) return "(" + c.pair().first.name() + "," + c.pair().second.name() + ")";
    return to_string(c.instance());
}

std::string to_string(const VernonGraph& g) {
    std::string out = "{ ";
    bool first = true;
    for (const auto& c : g.corollas()) {
        if (!first) out += ", ";
        out += to_string(c);
        first = false;
    }
    if (!g.edges().empty()) {
        out += " ; ";
        for (const auto& e : g.edges()) out += "(" + e.first.name() + "~" + e.second.name() + ")";
    }
    return out + " }";
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

/// Center-rooted AHU encoding of the corolla tree. Slots of an ordinary
/// corolla are indexed by profile entry, so the encoding captures where
/// every subtree hangs; the two slots of a special corolla are unordered.
class Encoder {
public:
    explicit Encoder(const VernonGraph& g) : g_(g) {}

    std::vector<Variable> slots(std::size_t i) const {
        const auto& c = g_.corollas()[i];
        if (c.is_special()) return {c.pair().first, c.pair().second};
        std::vector<Variable> out;
        for (const auto& p : c.instance().decoration().profile_order()) out.push_back(c.instance().at_profile(p));
        return out;
    }

    std::string part(const Variable& v, const std::optional<Variable>& parent_var) {
        if (parent_var && v == *parent_var) return "^";
        auto w = g_.partner(v);
        if (!w) return "=" + v.name();
        return "<" + encode(g_.owner(*w), *w) + ">";
    }

    /// Encoding of the subtree rooted at corolla i, entered through parent_var.
    std::string encode(std::size_t i, const std::optional<Variable>& parent_var) {
        const auto memo_key = std::make_pair(i, parent_var ? parent_var->name() : std::string());
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
        const auto& c = g_.corollas()[i];
        std::string out;
        if (c.is_special()) {
            std::string a = part(c.pair().first, parent_var);
            std::string b = part(c.pair().second, parent_var);
            if (b < a) std::swap(a, b);
            out = "~(" + a + "," + b + ")";
        } else {
            out = c.instance().decoration().key() + "(";
            bool first = true;
            for (const auto& v : slots(i)) {
                if (!first) out += ",";
                out += part(v, parent_var);
                first = false;
            }
            out += ")";
        }
        memo_.emplace(memo_key, out);
        return out;
    }

    /// Slot order used for the naming traversal.
    std::vector<Variable> ordered_slots(std::size_t i, const std::optional<Variable>& parent_var) {
        auto s = slots(i);
        if (g_.corollas()[i].is_special() && part(s[1], parent_var) < part(s[0], parent_var)) std::swap(s[0], s[1]);
        return s;
    }

private:
    const VernonGraph& g_;
    std::map<std::pair<std::size_t, std::string>, std::string> memo_;
};

std::vector<std::size_t> centers(const VernonGraph& g) {
    const std::size_t n = g.corollas().size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges()) {
        auto a = g.owner(e.first), b = g.owner(e.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::size_t> degree(n);
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < n; ++i) {
        degree[i] = adj[i].size();
        if (degree[i] <= 1) layer.push_back(i);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        std::vector<std::size_t> next;
        remaining -= layer.size();
        for (auto leaf : layer) {
            for (auto nb : adj[leaf]) {
                if (--degree[nb] == 1) next.push_back(nb);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

TreeClass::TreeClass(VernonGraph canonical, TreeKind kind)
    : canonical_(std::move(canonical)), kind_(kind), free_(canonical_.free_variables()), key_(to_string(canonical_)) {}

TreeClass canonicalize(const VernonGraph& t) {
    const TreeKind kind = classify(t);
    if (!kind.is_tree()) throw ValidationError("canonicalize: " + to_string(kind));

    Encoder enc(t);
    const auto cs = centers(t);
    std::size_t root = cs.front();
    if (cs.size() == 2 && enc.encode(cs[1], std::nullopt) < enc.encode(cs[0], std::nullopt)) root = cs[1];

    const VarSet free = t.free_variables();
    std::uint64_t counter = 0;
    auto next_name = [&] {
        for (;;) {
            Variable v("b#" + std::to_string(counter++));
            if (free.count(v) == 0) return v;
        }
    };

    std::vector<std::pair<Variable, Variable>> theta;
    std::function<void(std::size_t, const std::optional<Variable>&)> visit =
        [&](std::size_t i, const std::optional<Variable>& parent_var) {
            for (const auto& v : enc.ordered_slots(i, parent_var)) {
                if (parent_var && v == *parent_var) continue;
                auto w = t.partner(v);
                if (!w) continue;
                theta.emplace_back(next_name(), v);
                theta.emplace_back(next_name(), *w);
                visit(t.owner(*w), *w);
            }
        };
    visit(root, std::nullopt);

    VernonGraph renamed = rename(t, Bijection(theta));
    std::vector<std::pair<std::string, Corolla>> keyed;
    for (const auto& c : renamed.corollas()) keyed.emplace_back(to_string(c), c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Corolla> sorted;
    for (auto& [_, c] : keyed) sorted.push_back(std::move(c));
    return TreeClass(VernonGraph(std::move(sorted), renamed.edges()), kind);
}

bool alpha_eq(const VernonGraph& t1, const VernonGraph& t2) { return canonicalize(t1) == canonicalize(t2); }

VernonGraph single_corolla(const DecoratedInstance& f) { return VernonGraph({Corolla::ordinary(f)}, {}); }

VernonGraph exceptional_tree(const Variable& x, const Variable& y) {
    return VernonGraph({Corolla::special(x, y)}, {});
}

VernonGraph induced_subgraph(const VernonGraph& g, const std::vector<std::size_t>& corolla_indices) {
    std::vector<Corolla> corollas;
    std::set<std::size_t> kept(corolla_indices.begin(), corolla_indices.end());
    for (auto i : corolla_indices) corollas.push_back(g.corollas().at(i));
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (kept.count(g.owner(e.first)) && kept.count(g.owner(e.second))) edges.push_back(e);
    }
    return VernonGraph(std::move(corollas), std::move(edges));
}

}  // namespace vernon
