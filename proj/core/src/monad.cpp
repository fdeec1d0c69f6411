#include "vernon/monad.hpp"

#include "vernon/error.hpp"

namespace vernon {

TreeClass eta(const DecoratedInstance& f) { return canonicalize(single_corolla(f)); }

DecoratedInstance as_parameter(const TreeClass& c) { return DecoratedInstance(Decoration::tree(c)); }

VernonGraph flatten(const VernonGraph& two_level) {
    VarSet used = two_level.all_variables();
    for (const auto& c : two_level.corollas()) {
        if (c.is_ordinary() && c.instance().decoration().is_tree()) {
            const auto& inner = c.instance().decoration().tree_class().representative();
            for (const auto& v : inner.bound_variables()) used.insert(v);
        }
    }

    std::vector<Corolla> corollas;
    std::vector<Edge> edges = two_level.edges();
    for (const auto& c : two_level.corollas()) {
        if (c.is_special()) {
            corollas.push_back(c);
            continue;
        }
        const auto& f = c.instance();
        if (!f.decoration().is_tree()) {
            throw DomainError("flatten: corolla " + to_string(c) + " is not decorated by a tree");
        }
        const VernonGraph& inner = f.decoration().tree_class().representative();
        std::vector<std::pair<Variable, Variable>> theta;
        for (const auto& p : inner.free_variables()) theta.emplace_back(f.at_profile(p), p);
        for (const auto& b : inner.bound_variables()) {
            Variable nb = fresh("b", used);
            used.insert(nb);
            theta.emplace_back(nb, b);
        }
        VernonGraph renamed = rename(inner, Bijection(theta));
        corollas.insert(corollas.end(), renamed.corollas().begin(), renamed.corollas().end());
        edges.insert(edges.end(), renamed.edges().begin(), renamed.edges().end());
    }
    return VernonGraph(std::move(corollas), std::move(edges));
}

TreeClass mu(const VernonGraph& two_level) { return canonicalize(normal_form(flatten(two_level))); }

TreeClass mu(const TreeClass& two_level) { return mu(two_level.representative()); }

VernonGraph map_decorations(const VernonGraph& g, const std::function<TreeClass(const TreeClass&)>& f) {
    std::vector<Corolla> corollas;
    corollas.reserve(g.corollas().size());
    for (const auto& c : g.corollas()) {
        if (c.is_special()) {
            corollas.push_back(c);
            continue;
        }
        const auto& inst = c.instance();
        TreeClass mapped = f(inst.decoration().tree_class());
        if (mapped.free_variables() != inst.decoration().profile()) {
            throw DomainError("map_decorations: the map changed the free variables of " + inst.decoration().key());
        }
        corollas.push_back(Corolla::ordinary(DecoratedInstance(Decoration::tree(std::move(mapped)), inst.attachment())));
    }
    return VernonGraph(std::move(corollas), g.edges());
}

VernonGraph wrap_corollas(const VernonGraph& t) {
    std::vector<Corolla> corollas;
    corollas.reserve(t.corollas().size());
    for (const auto& c : t.corollas()) {
        if (c.is_special()) {
            corollas.push_back(c);
            continue;
        }
        const auto& inst = c.instance();
        TreeClass unit = eta(DecoratedInstance(inst.decoration()));
        corollas.push_back(Corolla::ordinary(DecoratedInstance(Decoration::tree(std::move(unit)), inst.attachment())));
    }
    return VernonGraph(std::move(corollas), t.edges());
}

TreeClass mu_after_inner_mu(const VernonGraph& three_level) {
    return mu(map_decorations(three_level, [](const TreeClass& c) { return mu(c); }));
}

TreeClass mu_after_outer_mu(const VernonGraph& three_level) {
    return mu(canonicalize(normal_form(flatten(three_level))));
}

}  // namespace vernon
