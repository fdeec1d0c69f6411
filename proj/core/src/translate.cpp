#include "vernon/translate.hpp"

#include "vernon/error.hpp"

namespace vernon {

namespace {

class Translator {
public:
    explicit Translator(VarSet used) : used_(std::move(used)) {}

    Variable index() {
        Variable v = fresh("i", used_);
        used_.insert(v);
        return v;
    }

    Combinator term(const MuTerm& t, const Variable& y) {
        if (t.is_var()) return Combinator::id(t.variable(), y);
        return command(substitute(t.body(), t.binder(), MuTerm::var(y)));
    }

    Combinator command(const MuCommand& c) {
        if (c.is_pair()) {
            Variable x = index();
            Variable y = index();
            Combinator l = term(c.left(), x);
            Combinator r = term(c.right(), y);
            return Combinator::comp(std::move(l), x, y, std::move(r));
        }
        const Decoration& d = c.decoration();
        std::map<Variable, Variable> indices;
        std::map<Variable, VarSet> residues;
        std::map<Variable, Combinator> parts;
        for (const auto& p : d.profile_order()) {
            const MuTerm& t = c.args().at(p);
            Variable ix = index();
            residues[p] = type_of(t);
            parts.emplace(p, term(t, ix));
            indices.emplace(p, ix);
        }
        const Bijection sigma = precautionary_renaming(d.profile(), residues, RenamingPolicy::Minimal);
        Combinator out = Combinator::param(DecoratedInstance(d));
        if (!sigma.is_identity()) out = Combinator::act(out, sigma);
        for (const auto& p : d.profile()) out = Combinator::comp(out, sigma.inverse_at(p), indices.at(p), parts.at(p));
        return out;
    }

private:
    VarSet used_;
};

class DirectPhi {
public:
    DirectPhi(const TreeModel& model, VarSet used) : model_(model), used_(std::move(used)) {}

    Variable index() {
        Variable v = fresh("i", used_);
        used_.insert(v);
        return v;
    }

    TreeClass term(const MuTerm& t, const Variable& y) {
        if (t.is_var()) return vt_unit(t.variable(), y);
        TreeClass body = command(t.body());
        return vt_action(body, Bijection::renaming(y, t.binder(), body.free_variables()));
    }

    TreeClass command(const MuCommand& c) {
        if (c.is_pair()) {
            Variable x = index();
            Variable y = index();
            TreeClass l = term(c.left(), x);
            TreeClass r = term(c.right(), y);
            return vt_compose(l, x, y, r);
        }
        const Decoration& d = c.decoration();
        Assignment<TreeClass> assignment;
        for (const auto& p : d.profile_order()) {
            Variable ix = index();
            assignment.emplace(p, AssignmentEntry<TreeClass>{term(c.args().at(p), ix), ix});
        }
        return total_composition(model_, model_.embed(DecoratedInstance(d)), assignment);
    }

private:
    const TreeModel& model_;
    VarSet used_;
};

}  // namespace

Combinator translate(const MuCommand& c) {
    (void)type_of(c);
    return Translator(all_variables(c)).command(c);
}

Combinator translate(const MuTerm& t, const Variable& index) {
    (void)type_of(t);
    VarSet used = all_variables(t);
    if (used.count(index) != 0) throw ClashError("translate: index '" + index.name() + "' occurs in " + to_string(t));
    used.insert(index);
    return Translator(std::move(used)).term(t, index);
}

TreeClass phi(const MuCommand& c, const TreeModel& model) { return interpret(translate(c), model); }

TreeClass phi(const MuTerm& t, const Variable& index, const TreeModel& model) {
    return interpret(translate(t, index), model);
}

TreeClass phi_direct(const MuCommand& c, const TreeModel& model) {
    (void)type_of(c);
    return DirectPhi(model, all_variables(c)).command(c);
}

TreeClass phi_direct(const MuTerm& t, const Variable& index, const TreeModel& model) {
    (void)type_of(t);
    VarSet used = all_variables(t);
    if (used.count(index) != 0) throw ClashError("phi: index '" + index.name() + "' occurs in " + to_string(t));
    used.insert(index);
    return DirectPhi(model, std::move(used)).term(t, index);
}

bool mu_equiv(const MuCommand& c1, const MuCommand& c2) {
    const VarSet t1 = type_of(c1);
    const VarSet t2 = type_of(c2);
    if (t1 != t2) throw TypeError("equiv: the commands have different types " + to_string(t1) + " and " + to_string(t2));
    return phi(c1) == phi(c2);
}

MuCommand comb_to_mu(const Combinator& c) {
    switch (c.kind()) {
        case Combinator::Kind::Param: {
            std::map<Variable, MuTerm> args;
            for (const auto& x : c.instance().variables()) args.emplace(x, MuTerm::var(x));
            return MuCommand::apply(c.instance(), args);
        }
        case Combinator::Kind::Id: {
            (void)type_of(c);
            return MuCommand::pair(MuTerm::var(c.x()), MuTerm::var(c.y()));
        }
        case Combinator::Kind::Comp: {
            (void)type_of(c);
            return MuCommand::pair(MuTerm::mu(c.x(), comb_to_mu(c.left())), MuTerm::mu(c.y(), comb_to_mu(c.right())));
        }
        case Combinator::Kind::Act: {
            (void)type_of(c);
            return rename_expr(comb_to_mu(c.body()), c.sigma());
        }
    }
    throw TypeError("comb_to_mu: unknown combinator");
}

std::size_t default_head(const VernonGraph& normal) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < normal.corollas().size(); ++i) {
        if (to_string(normal.corollas()[i]) < to_string(normal.corollas()[best])) best = i;
    }
    return best;
}

VernonGraph DeltaTreeModel::grafting(const Element& a, const Variable& x, const Variable& y, const Element& b) {
    const VarSet& xs = a.free_variables();
    const VarSet& ys = b.free_variables();
    if (xs.count(x) == 0) throw DomainError("compose: '" + x.name() + "' is not free in " + a.key());
    if (ys.count(y) == 0) throw DomainError("compose: '" + y.name() + "' is not free in " + b.key());
    if (!disjoint(set_minus(xs, x), set_minus(ys, y))) {
        throw ClashError("compose: residues of " + a.key() + " and " + b.key() + " overlap");
    }
    const VarSet used = set_union(xs, ys);
    const Variable x2 = fresh("x", used);
    const Variable y2 = fresh("y", set_union(used, {x2}));
    auto instance = [](const Element& e, const Variable& from, const Variable& to) {
        return Corolla::ordinary(DecoratedInstance(Decoration::tree(e), Bijection::renaming(to, from, e.free_variables())));
    };
    return VernonGraph({instance(a, x, x2), instance(b, y, y2)}, {Edge(x2, y2)});
}

TreeClass DeltaTreeModel::compose(const Element& a, const Variable& x, const Variable& y, const Element& b) const {
    return delta(grafting(a, x, y, b), inner_);
}

}  // namespace vernon
