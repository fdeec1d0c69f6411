#include "vernon/operad.hpp"

#include <algorithm>

#include "vernon/rewrite.hpp"

namespace vernon {

namespace {

/// Renames every bound variable of t to a fresh name avoiding `avoid`, and
/// the free variables through `free_map` (old -> new). Grows `avoid`.
VernonGraph rename_apart(const VernonGraph& t, const std::map<Variable, Variable>& free_map, VarSet& avoid) {
    std::vector<std::pair<Variable, Variable>> theta;
    for (const auto& v : t.all_variables()) {
        if (auto it = free_map.find(v); it != free_map.end()) {
            theta.emplace_back(it->second, v);
        } else if (t.partner(v)) {
            Variable nv = fresh("b", avoid);
            avoid.insert(nv);
            theta.emplace_back(nv, v);
        }
    }
    return rename(t, Bijection(theta));
}

}  // namespace

TreeClass vt_action(const TreeClass& c, const Bijection& kappa) {
    if (kappa.codomain() != c.free_variables()) {
        throw DomainError("vt_action: bijection codomain " + to_string(kappa.codomain()) + " is not FV = " +
                          to_string(c.free_variables()));
    }
    if (kappa.is_identity()) return c;
    const VernonGraph& t = c.representative();
    VarSet avoid = set_union(t.all_variables(), kappa.domain());
    std::map<Variable, Variable> free_map;
    for (const auto& [to, from] : kappa.pairs()) free_map.emplace(from, to);
    return canonicalize(rename_apart(t, free_map, avoid));
}

TreeClass vt_compose(const TreeClass& c1, const Variable& x, const Variable& y, const TreeClass& c2) {
    const VarSet& fv1 = c1.free_variables();
    const VarSet& fv2 = c2.free_variables();
    if (fv1.count(x) == 0) throw DomainError("compose: '" + x.name() + "' is not free in the left operand " + to_string(fv1));
    if (fv2.count(y) == 0) throw DomainError("compose: '" + y.name() + "' is not free in the right operand " + to_string(fv2));
    const VarSet rest1 = set_minus(fv1, x);
    const VarSet rest2 = set_minus(fv2, y);
    if (!disjoint(rest1, rest2)) {
        throw ClashError("compose: residual variables overlap, " + to_string(rest1) + " and " + to_string(rest2));
    }
    const VernonGraph& t1 = c1.representative();
    const VernonGraph& t2 = c2.representative();
    VarSet avoid = set_union(set_union(t1.all_variables(), t2.all_variables()), set_union(fv1, fv2));

    std::map<Variable, Variable> map1, map2;
    for (const auto& v : rest1) map1.emplace(v, v);
    for (const auto& v : rest2) map2.emplace(v, v);
    const Variable x1 = fresh("b", avoid);
    avoid.insert(x1);
    const Variable y2 = fresh("b", avoid);
    avoid.insert(y2);
    map1.emplace(x, x1);
    map2.emplace(y, y2);
    VernonGraph r1 = rename_apart(t1, map1, avoid);
    VernonGraph r2 = rename_apart(t2, map2, avoid);

    std::vector<Corolla> corollas = r1.corollas();
    corollas.insert(corollas.end(), r2.corollas().begin(), r2.corollas().end());
    std::vector<Edge> edges = r1.edges();
    edges.insert(edges.end(), r2.edges().begin(), r2.edges().end());
    edges.emplace_back(x1, y2);
    return canonicalize(normal_form(VernonGraph(std::move(corollas), std::move(edges))));
}

TreeClass vt_unit(const Variable& x, const Variable& y) {
    if (x == y) throw DomainError("unit: id_{" + x.name() + "," + y.name() + "} needs two distinct variables");
    return canonicalize(exceptional_tree(x, y));
}

TreeClass TreeModel::embed(const DecoratedInstance& f) const {
    if (parameters_ == Parameters::Flatten && f.decoration().is_tree()) {
        return vt_action(f.decoration().tree_class(), f.attachment());
    }
    return eta(f);
}

void check_assignment(const VarSet& x_set, const std::map<Variable, std::pair<VarSet, Variable>>& operands) {
    VarSet keys;
    for (const auto& [x, _] : operands) keys.insert(x);
    if (keys != x_set) {
        throw DomainError("assignment: defined on " + to_string(keys) + " but the operation has entries " + to_string(x_set));
    }
    VarSet seen;
    for (const auto& [x, shape] : operands) {
        const auto& [y, entry] = shape;
        if (y.count(entry) == 0) {
            throw DomainError("assignment: entry '" + entry.name() + "' chosen for '" + x.name() + "' is not in " + to_string(y));
        }
        for (const auto& v : y) {
            if (v == entry) continue;
            if (!seen.insert(v).second) {
                throw ClashError("assignment: residual variable '" + v.name() + "' is shared by two operands");
            }
        }
    }
}

Bijection precautionary_renaming(const VarSet& x_set, const std::map<Variable, VarSet>& residues, RenamingPolicy policy) {
    VarSet avoid = x_set;
    for (const auto& [_, r] : residues) avoid.insert(r.begin(), r.end());
    std::vector<std::pair<Variable, Variable>> pairs;
    for (const auto& x : x_set) {
        bool clash = policy == RenamingPolicy::FreshAll;
        for (const auto& [z, r] : residues) {
            if (z != x && r.count(x) != 0) clash = true;
        }
        if (clash) {
            Variable nx = fresh(x.stem(), avoid);
            avoid.insert(nx);
            pairs.emplace_back(nx, x);
        } else {
            pairs.emplace_back(x, x);
        }
    }
    return Bijection(pairs);
}

std::vector<Variable> fold_order(const VarSet& x_set, const std::vector<Variable>& requested) {
    if (requested.empty()) return {x_set.begin(), x_set.end()};
    VarSet as_set(requested.begin(), requested.end());
    if (as_set != x_set || as_set.size() != requested.size()) {
        throw DomainError("total composition: fold order must list every entry of " + to_string(x_set) + " once");
    }
    return requested;
}

}  // namespace vernon
