#include "vernon/combinators.hpp"

#include "vernon/error.hpp"
#include "vernon/trees.hpp"

namespace vernon {

Combinator Combinator::param(DecoratedInstance f) {
    return Combinator(std::make_shared<const Node>(Node{Kind::Param, std::move(f), {}, {}, {}, {}, {}}));
}

Combinator Combinator::id(Variable x, Variable y) {
    return Combinator(std::make_shared<const Node>(Node{Kind::Id, std::nullopt, std::move(x), std::move(y), {}, {}, {}}));
}

Combinator Combinator::comp(Combinator left, Variable x, Variable y, Combinator right) {
    return Combinator(std::make_shared<const Node>(
        Node{Kind::Comp, std::nullopt, std::move(x), std::move(y), std::move(left), std::move(right), {}}));
}

Combinator Combinator::act(Combinator body, Bijection sigma) {
    return Combinator(std::make_shared<const Node>(
        Node{Kind::Act, std::nullopt, {}, {}, std::move(body), std::nullopt, std::move(sigma)}));
}

const DecoratedInstance& Combinator::instance() const {
    if (kind() != Kind::Param) throw DomainError("combinator is not a parameter");
    return *node_->instance;
}

const Variable& Combinator::x() const {
    if (kind() != Kind::Id && kind() != Kind::Comp) throw DomainError("combinator has no grafting variables");
    return node_->x;
}

const Variable& Combinator::y() const {
    if (kind() != Kind::Id && kind() != Kind::Comp) throw DomainError("combinator has no grafting variables");
    return node_->y;
}

const Combinator& Combinator::left() const {
    if (kind() != Kind::Comp) throw DomainError("combinator is not a composition");
    return *node_->left;
}

const Combinator& Combinator::right() const {
    if (kind() != Kind::Comp) throw DomainError("combinator is not a composition");
    return *node_->right;
}

const Combinator& Combinator::body() const {
    if (kind() != Kind::Act) throw DomainError("combinator is not an action");
    return *node_->left;
}

const Bijection& Combinator::sigma() const {
    if (kind() != Kind::Act) throw DomainError("combinator is not an action");
    return node_->sigma;
}

bool operator==(const Combinator& a, const Combinator& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Combinator::Kind::Param: return a.instance() == b.instance();
        case Combinator::Kind::Id: return a.x() == b.x() && a.y() == b.y();
        case Combinator::Kind::Comp:
            return a.x() == b.x() && a.y() == b.y() && a.left() == b.left() && a.right() == b.right();
        case Combinator::Kind::Act: return a.sigma() == b.sigma() && a.body() == b.body();
    }
    return false;
}

VarSet type_of(const Combinator& c) {
    switch (c.kind()) {
        case Combinator::Kind::Param: return c.instance().variables();
        case Combinator::Kind::Id:
            if (c.x() == c.y()) throw TypeError("id{" + c.x().name() + "," + c.y().name() + "}: the two variables must differ");
            return {c.x(), c.y()};
        case Combinator::Kind::Comp: {
            VarSet xs = type_of(c.left());
            VarSet ys = type_of(c.right());
            if (xs.count(c.x()) == 0) {
                throw TypeError("composition: '" + c.x().name() + "' is not in the left type " + to_string(xs));
            }
            if (ys.count(c.y()) == 0) {
                throw TypeError("composition: '" + c.y().name() + "' is not in the right type " + to_string(ys));
            }
            xs.erase(c.x());
            ys.erase(c.y());
            if (!disjoint(xs, ys)) {
                throw TypeError("composition along " + c.x().name() + "*" + c.y().name() + ": residues " + to_string(xs) +
                                " and " + to_string(ys) + " overlap");
            }
            return set_union(xs, ys);
        }
        case Combinator::Kind::Act: {
            VarSet body = type_of(c.body());
            if (c.sigma().codomain() != body) {
                throw TypeError("action: bijection codomain " + to_string(c.sigma().codomain()) + " is not the type " +
                                to_string(body));
            }
            return c.sigma().domain();
        }
    }
    throw TypeError("unknown combinator");
}

std::size_t size(const Combinator& c) {
    switch (c.kind()) {
        case Combinator::Kind::Param:
        case Combinator::Kind::Id: return 1;
        case Combinator::Kind::Comp: return 1 + size(c.left()) + size(c.right());
        case Combinator::Kind::Act: return 1 + size(c.body());
    }
    return 0;
}

namespace {

std::string bijection_text(const Bijection& sigma) {
    std::string out;
    bool first = true;
    for (const auto& [from, to] : sigma.pairs()) {
        if (!first) out += ", ";
        out += from.name() + "->" + to.name();
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const Combinator& c) {
    switch (c.kind()) {
        case Combinator::Kind::Param: {
            const auto& f = c.instance();
            std::string head = f.decoration().is_tree() ? f.decoration().key() : f.decoration().name();
            if (f.attachment().is_identity()) return head;
            return head + "[" + bijection_text(f.attachment()) + "]";
        }
        case Combinator::Kind::Id: return "id{" + c.x().name() + "," + c.y().name() + "}";
        case Combinator::Kind::Comp:
            return "(" + to_string(c.left()) + " " + c.x().name() + "*" + c.y().name() + " " + to_string(c.right()) + ")";
        case Combinator::Kind::Act: return "act[" + bijection_text(c.sigma()) + "](" + to_string(c.body()) + ")";
    }
    return "?";
}

}  // namespace vernon
