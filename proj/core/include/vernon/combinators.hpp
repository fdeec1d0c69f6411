#pragma once

#include <memory>
#include <string>

#include "vernon/naming.hpp"
#include "vernon/operad.hpp"
#include "vernon/signature.hpp"

namespace vernon {

/// Terms of the biased syntax: parameters, units id_{x,y}, partial
/// compositions (s x.y t) and explicit actions act[sigma](s).
class Combinator {
public:
    enum class Kind { Param, Id, Comp, Act };

    static Combinator param(DecoratedInstance f);
    static Combinator id(Variable x, Variable y);
    static Combinator comp(Combinator left, Variable x, Variable y, Combinator right);
    static Combinator act(Combinator body, Bijection sigma);

    Kind kind() const noexcept;

    const DecoratedInstance& instance() const;
    /// Id: the two variables; Comp: the grafted entries.
    const Variable& x() const;
    const Variable& y() const;
    const Combinator& left() const;
    const Combinator& right() const;
    const Combinator& body() const;
    const Bijection& sigma() const;

    friend bool operator==(const Combinator& a, const Combinator& b);

private:
    struct Node;
    explicit Combinator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Combinator::Node {
    Kind kind;
    std::optional<DecoratedInstance> instance;
    Variable x, y;
    std::optional<Combinator> left, right;
    Bijection sigma;
};

inline Combinator::Kind Combinator::kind() const noexcept { return node_->kind; }

/// The set-type of c; throws TypeError on an ill-typed term.
VarSet type_of(const Combinator& c);

/// Number of constructors in c.
std::size_t size(const Combinator& c);

std::string to_string(const Combinator& c);

/// Homomorphic evaluation into a model; checks typing first.
template <OperadModel M>
typename M::Element interpret(const Combinator& c, const M& model) {
    switch (c.kind()) {
        case Combinator::Kind::Param: return model.embed(c.instance());
        case Combinator::Kind::Id: return model.unit(c.x(), c.y());
        case Combinator::Kind::Comp: {
            (void)type_of(c);
            return model.compose(interpret(c.left(), model), c.x(), c.y(), interpret(c.right(), model));
        }
        case Combinator::Kind::Act: {
            (void)type_of(c);
            return model.act(interpret(c.body(), model), c.sigma());
        }
    }
    throw Error("interpret: unknown combinator");
}

}  // namespace vernon
