#include "vernon/mu.hpp"

#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "vernon/error.hpp"
#include "vernon/trees.hpp"

namespace vernon {

struct MuTerm::Node {
    Kind kind;
    Variable var;
    std::optional<MuCommand> body;
};

struct MuCommand::Node {
    Kind kind;
    std::optional<MuTerm> left, right;
    std::optional<Decoration> decoration;
    std::map<Variable, MuTerm> args;
};

MuTerm MuTerm::var(Variable x) { return MuTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(x), std::nullopt})); }

MuTerm MuTerm::mu(Variable binder, MuCommand body) {
    return MuTerm(std::make_shared<const Node>(Node{Kind::Mu, std::move(binder), std::move(body)}));
}

MuTerm::Kind MuTerm::kind() const noexcept { return node_->kind; }

const Variable& MuTerm::variable() const {
    if (!is_var()) throw DomainError("mu-term is not a variable");
    return node_->var;
}

const Variable& MuTerm::binder() const {
    if (!is_mu()) throw DomainError("mu-term is not an abstraction");
    return node_->var;
}

const MuCommand& MuTerm::body() const {
    if (!is_mu()) throw DomainError("mu-term is not an abstraction");
    return *node_->body;
}

bool operator==(const MuTerm& a, const MuTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.node_->var != b.node_->var) return false;
    return a.is_var() || a.body() == b.body();
}

MuCommand MuCommand::pair(MuTerm left, MuTerm right) {
    return MuCommand(std::make_shared<const Node>(Node{Kind::Pair, std::move(left), std::move(right), std::nullopt, {}}));
}

MuCommand MuCommand::apply(const DecoratedInstance& f, const std::map<Variable, MuTerm>& args) {
    std::map<Variable, MuTerm> by_profile;
    for (const auto& [x, t] : args) {
        if (!f.attachment().in_domain(x)) {
            throw TypeError("application of " + f.decoration().key() + ": '" + x.name() + "' is not one of its entries " +
                            to_string(f.variables()));
        }
        by_profile.emplace(f.attachment()(x), t);
    }
    return apply_profile(f.decoration(), std::move(by_profile));
}

MuCommand MuCommand::apply_profile(Decoration d, std::map<Variable, MuTerm> args) {
    VarSet keys;
    for (const auto& [p, _] : args) keys.insert(p);
    if (keys != d.profile()) {
        throw TypeError("application of " + d.key() + ": arguments given for " + to_string(keys) + ", expected " +
                        to_string(d.profile()));
    }
    return MuCommand(std::make_shared<const Node>(Node{Kind::Apply, std::nullopt, std::nullopt, std::move(d), std::move(args)}));
}

MuCommand::Kind MuCommand::kind() const noexcept { return node_->kind; }

const MuTerm& MuCommand::left() const {
    if (!is_pair()) throw DomainError("command is not a pair");
    return *node_->left;
}

const MuTerm& MuCommand::right() const {
    if (!is_pair()) throw DomainError("command is not a pair");
    return *node_->right;
}

const Decoration& MuCommand::decoration() const {
    if (!is_apply()) throw DomainError("command is not an application");
    return *node_->decoration;
}

const std::map<Variable, MuTerm>& MuCommand::args() const {
    if (!is_apply()) throw DomainError("command is not an application");
    return node_->args;
}

std::vector<MuTerm> MuCommand::positional() const {
    std::vector<MuTerm> out;
    for (const auto& p : decoration().profile_order()) out.push_back(args().at(p));
    return out;
}

MuCommand MuCommand::with_arg(const Variable& p, MuTerm t) const {
    auto a = args();
    a.at(p) = std::move(t);
    return apply_profile(decoration(), std::move(a));
}

bool operator==(const MuCommand& a, const MuCommand& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.is_pair()) return a.left() == b.left() && a.right() == b.right();
    return a.decoration() == b.decoration() && a.args() == b.args();
}

// ---------------------------------------------------------------------------
// Typing and bookkeeping

VarSet type_of(const MuTerm& t) {
    if (t.is_var()) return {t.variable()};
    VarSet body = type_of(t.body());
    if (body.count(t.binder()) == 0) {
        throw TypeError("mu " + t.binder().name() + ". " + to_string(t.body()) + ": the binder does not occur in the body");
    }
    body.erase(t.binder());
    return body;
}

VarSet type_of(const MuCommand& c) {
    if (c.is_pair()) {
        VarSet a = type_of(c.left());
        VarSet b = type_of(c.right());
        if (!disjoint(a, b)) {
            throw TypeError(to_string(c) + ": the two sides share variables " + to_string(set_minus(a, set_minus(a, b))));
        }
        return set_union(a, b);
    }
    VarSet out;
    for (const auto& [p, t] : c.args()) {
        for (const auto& v : type_of(t)) {
            if (!out.insert(v).second) {
                throw TypeError(to_string(c) + ": variable '" + v.name() + "' is used by two arguments");
            }
        }
    }
    return out;
}

namespace {

/// Free variables without the typing checks.
VarSet free_vars(const MuTerm& t);

VarSet free_vars(const MuCommand& c) {
    VarSet out;
    if (c.is_pair()) {
        out = free_vars(c.left());
        auto r = free_vars(c.right());
        out.insert(r.begin(), r.end());
    } else {
        for (const auto& [_, t] : c.args()) {
            auto s = free_vars(t);
            out.insert(s.begin(), s.end());
        }
    }
    return out;
}

VarSet free_vars(const MuTerm& t) {
    if (t.is_var()) return {t.variable()};
    auto out = free_vars(t.body());
    out.erase(t.binder());
    return out;
}

void collect(const MuTerm& t, VarSet& out);

void collect(const MuCommand& c, VarSet& out) {
    if (c.is_pair()) {
        collect(c.left(), out);
        collect(c.right(), out);
    } else {
        for (const auto& [_, t] : c.args()) collect(t, out);
    }
}

void collect(const MuTerm& t, VarSet& out) {
    out.insert(t.is_var() ? t.variable() : t.binder());
    if (t.is_mu()) collect(t.body(), out);
}

}  // namespace

VarSet all_variables(const MuTerm& t) {
    VarSet out;
    collect(t, out);
    return out;
}

VarSet all_variables(const MuCommand& c) {
    VarSet out;
    collect(c, out);
    return out;
}

std::size_t binder_count(const MuTerm& t) { return t.is_var() ? 0 : 1 + binder_count(t.body()); }

std::size_t binder_count(const MuCommand& c) {
    if (c.is_pair()) return binder_count(c.left()) + binder_count(c.right());
    std::size_t n = 0;
    for (const auto& [_, t] : c.args()) n += binder_count(t);
    return n;
}

std::size_t size(const MuCommand& c) {
    std::function<std::size_t(const MuTerm&)> term_size = [&](const MuTerm& t) -> std::size_t {
        return t.is_var() ? 1 : 1 + size(t.body());
    };
    if (c.is_pair()) return 1 + term_size(c.left()) + term_size(c.right());
    std::size_t n = 1;
    for (const auto& [_, t] : c.args()) n += term_size(t);
    return n;
}

// ---------------------------------------------------------------------------
// Substitution and renaming

namespace {

/// Simultaneous capture-avoiding replacement of free variables.
class Replacer {
public:
    Replacer(std::map<Variable, MuTerm> map, VarSet avoid) : map_(std::move(map)), avoid_(std::move(avoid)) {
        for (const auto& [x, t] : map_) {
            avoid_.insert(x);
            auto fv = free_vars(t);
            incoming_.insert(fv.begin(), fv.end());
        }
        avoid_.insert(incoming_.begin(), incoming_.end());
    }

    MuTerm term(const MuTerm& t) {
        if (t.is_var()) {
            auto it = map_.find(t.variable());
            return it == map_.end() ? t : it->second;
        }
        Variable b = t.binder();
        auto saved = map_;
        map_.erase(b);
        MuCommand body = t.body();
        if (incoming_.count(b) != 0) {
            Variable nb = fresh(b.stem(), avoid_);
            avoid_.insert(nb);
            map_.emplace(b, MuTerm::var(nb));
            b = nb;
        }
        MuTerm out = MuTerm::mu(b, command(body));
        map_ = std::move(saved);
        return out;
    }

    MuCommand command(const MuCommand& c) {
        if (c.is_pair()) return MuCommand::pair(term(c.left()), term(c.right()));
        std::map<Variable, MuTerm> args;
        for (const auto& [p, t] : c.args()) args.emplace(p, term(t));
        return MuCommand::apply_profile(c.decoration(), std::move(args));
    }

private:
    std::map<Variable, MuTerm> map_;
    VarSet avoid_;
    VarSet incoming_;
};

template <class E>
E substitute_impl(const E& e, const Variable& x, const MuTerm& s) {
    const VarSet fv = free_vars(e);
    if (fv.count(x) == 0) throw DomainError("substitute: '" + x.name() + "' is not free in " + to_string(e));
    const VarSet rest = set_minus(fv, x);
    const VarSet incoming = free_vars(s);
    if (!disjoint(rest, incoming)) {
        throw ClashError("substitute: " + to_string(s) + " brings variables already used in " + to_string(e));
    }
    VarSet avoid = set_union(all_variables(e), all_variables(s));
    Replacer r({{x, s}}, std::move(avoid));
    if constexpr (std::is_same_v<E, MuTerm>) {
        return r.term(e);
    } else {
        return r.command(e);
    }
}

template <class E>
E rename_impl(const E& e, const Bijection& sigma) {
    const VarSet fv = free_vars(e);
    if (sigma.codomain() != fv) {
        throw DomainError("rename: bijection codomain " + to_string(sigma.codomain()) + " is not the type " + to_string(fv));
    }
    std::map<Variable, MuTerm> map;
    for (const auto& [to, from] : sigma.pairs()) {
        if (to != from) map.emplace(from, MuTerm::var(to));
    }
    if (map.empty()) return e;
    Replacer r(std::move(map), set_union(all_variables(e), sigma.domain()));
    if constexpr (std::is_same_v<E, MuTerm>) {
        return r.term(e);
    } else {
        return r.command(e);
    }
}

}  // namespace

MuCommand substitute(const MuCommand& c, const Variable& x, const MuTerm& s) { return substitute_impl(c, x, s); }
MuTerm substitute(const MuTerm& t, const Variable& x, const MuTerm& s) { return substitute_impl(t, x, s); }

MuCommand rename_expr(const MuCommand& c, const Bijection& sigma) { return rename_impl(c, sigma); }
MuTerm rename_expr(const MuTerm& t, const Bijection& sigma) { return rename_impl(t, sigma); }

// ---------------------------------------------------------------------------
// Reduction

namespace {

std::vector<MuReduct> term_steps(const MuTerm& t) {
    std::vector<MuReduct> out;
    if (t.is_var()) return out;
    for (auto& r : mu_step(t.body())) out.push_back({r.rule, r.result});
    return out;
}

}  // namespace

std::vector<MuReduct> mu_step(const MuCommand& c) {
    std::vector<MuReduct> out;
    if (c.is_pair()) {
        out.push_back({MuRule::MU1, MuCommand::pair(c.right(), c.left())});
        if (c.left().is_mu()) out.push_back({MuRule::MU2, substitute(c.left().body(), c.left().binder(), c.right())});
        for (auto& r : term_steps(c.left())) {
            out.push_back({r.rule, MuCommand::pair(MuTerm::mu(c.left().binder(), r.result), c.right())});
        }
        for (auto& r : term_steps(c.right())) {
            out.push_back({r.rule, MuCommand::pair(c.left(), MuTerm::mu(c.right().binder(), r.result))});
        }
        return out;
    }
    for (const auto& [p, t] : c.args()) {
        for (auto& r : term_steps(t)) out.push_back({r.rule, c.with_arg(p, MuTerm::mu(t.binder(), r.result))});
    }
    return out;
}

bool is_unit_command(const MuCommand& c) { return c.is_pair() && c.left().is_var() && c.right().is_var(); }

bool is_normal_form(const MuTerm& t) { return t.is_var() || is_normal_form(t.body()); }

bool is_normal_form(const MuCommand& c) {
    if (!c.is_apply()) return false;
    for (const auto& [_, t] : c.args()) {
        if (!is_normal_form(t)) return false;
    }
    return true;
}

namespace {

MuTerm nf_term(const MuTerm& t);

MuCommand nf_command(const MuCommand& c) {
    MuCommand current = c;
    while (current.is_pair()) {
        const MuTerm& s = current.left();
        const MuTerm& t = current.right();
        if (s.is_mu()) {
            current = substitute(s.body(), s.binder(), t);
        } else if (t.is_mu()) {
            current = substitute(t.body(), t.binder(), s);
        } else {
            return current;
        }
    }
    std::map<Variable, MuTerm> args;
    for (const auto& [p, t] : current.args()) args.emplace(p, nf_term(t));
    return MuCommand::apply_profile(current.decoration(), std::move(args));
}

MuTerm nf_term(const MuTerm& t) {
    if (t.is_var()) return t;
    MuCommand body = nf_command(t.body());
    // mu x.<x|v> and mu x.<v|x> stand for v.
    if (is_unit_command(body)) {
        if (body.left().variable() == t.binder()) return body.right();
        if (body.right().variable() == t.binder()) return body.left();
    }
    return MuTerm::mu(t.binder(), std::move(body));
}

}  // namespace

MuCommand mu_normal_form(const MuCommand& c) { return nf_command(c); }

// ---------------------------------------------------------------------------
// Rotations

std::vector<MuCommand> prime_step(const MuCommand& c) {
    std::vector<MuCommand> out;
    if (!c.is_apply()) return out;
    const VarSet names = all_variables(c);
    for (const auto& [p, t] : c.args()) {
        if (!t.is_mu() || !t.body().is_apply()) continue;
        const Variable x = names.count(p) == 0 ? p : fresh(p.stem(), names);
        MuTerm head = MuTerm::mu(x, c.with_arg(p, MuTerm::var(x)));
        out.push_back(substitute(t.body(), t.binder(), head));
    }
    return out;
}

namespace {

/// prime_step at the head or inside any mu-subcommand.
std::vector<MuCommand> prime_congruent(const MuCommand& c) {
    std::vector<MuCommand> out = prime_step(c);
    if (!c.is_apply()) return out;
    for (const auto& [p, t] : c.args()) {
        if (!t.is_mu()) continue;
        for (auto& inner : prime_congruent(t.body())) out.push_back(c.with_arg(p, MuTerm::mu(t.binder(), inner)));
    }
    return out;
}

}  // namespace

std::vector<MuCommand> prime_closure(const MuCommand& c, std::size_t limit) {
    std::vector<MuCommand> out;
    std::set<std::string> seen;
    std::deque<MuCommand> queue;
    MuCommand start = alpha_canonical(c);
    seen.insert(to_string(start));
    queue.push_back(start);
    while (!queue.empty()) {
        MuCommand cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        for (auto& next : prime_congruent(cur)) {
            MuCommand canon = alpha_canonical(next);
            if (seen.insert(to_string(canon)).second) {
                if (seen.size() > limit) throw ResourceError("prime_closure: more than " + std::to_string(limit) + " commands");
                queue.push_back(std::move(canon));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Alpha classes

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(VarSet free) : free_(std::move(free)) {}

    MuTerm term(const MuTerm& t, const std::map<Variable, Variable>& env) {
        if (t.is_var()) {
            auto it = env.find(t.variable());
            return it == env.end() ? t : MuTerm::var(it->second);
        }
        Variable nb = next();
        auto inner = env;
        inner[t.binder()] = nb;
        return MuTerm::mu(nb, command(t.body(), inner));
    }

    MuCommand command(const MuCommand& c, const std::map<Variable, Variable>& env) {
        if (c.is_pair()) {
            MuTerm l = term(c.left(), env);
            MuTerm r = term(c.right(), env);
            return MuCommand::pair(std::move(l), std::move(r));
        }
        std::map<Variable, MuTerm> args;
        for (const auto& p : c.decoration().profile_order()) args.emplace(p, term(c.args().at(p), env));
        return MuCommand::apply_profile(c.decoration(), std::move(args));
    }

private:
    Variable next() {
        for (;;) {
            Variable v("m#" + std::to_string(counter_++));
            if (free_.count(v) == 0) return v;
        }
    }

    VarSet free_;
    std::uint64_t counter_ = 0;
};

}  // namespace

MuCommand alpha_canonical(const MuCommand& c) { return Canonicalizer(free_vars(c)).command(c, {}); }
MuTerm alpha_canonical(const MuTerm& t) { return Canonicalizer(free_vars(t)).term(t, {}); }

std::string alpha_key(const MuCommand& c) { return to_string(alpha_canonical(c)); }

bool mu_alpha_eq(const MuCommand& a, const MuCommand& b) { return alpha_canonical(a) == alpha_canonical(b); }
bool mu_alpha_eq(const MuTerm& a, const MuTerm& b) { return alpha_canonical(a) == alpha_canonical(b); }

// ---------------------------------------------------------------------------

std::string to_string(const MuTerm& t) {
    if (t.is_var()) return t.variable().name();
    return "mu " + t.binder().name() + ". " + to_string(t.body());
}

std::string to_string(const MuCommand& c) {
    if (c.is_pair()) return "<" + to_string(c.left()) + " | " + to_string(c.right()) + ">";
    const auto& d = c.decoration();
    std::string out = (d.is_tree() ? d.key() : d.name()) + "{";
    bool first = true;
    for (const auto& t : c.positional()) {
        if (!first) out += ", ";
        out += to_string(t);
        first = false;
    }
    return out + "}";
}

}  // namespace vernon
