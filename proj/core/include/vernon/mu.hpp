#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vernon/naming.hpp"
#include "vernon/signature.hpp"

namespace vernon {

class MuCommand;

/// x | mu x. c
class MuTerm {
public:
    enum class Kind { Var, Mu };

    static MuTerm var(Variable x);
    static MuTerm mu(Variable binder, MuCommand body);

    Kind kind() const noexcept;
    bool is_var() const noexcept { return kind() == Kind::Var; }
    bool is_mu() const noexcept { return kind() == Kind::Mu; }

    /// Var: the variable; Mu: the binder.
    const Variable& variable() const;
    const Variable& binder() const;
    const MuCommand& body() const;

    friend bool operator==(const MuTerm& a, const MuTerm& b);

    struct Node;

private:
    explicit MuTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// <s | t> | f{t_x | x in X}. Applications are stored with their arguments
/// keyed by profile entries, so f^sigma{t_sigma(y)} and f{t_x} are the same
/// value.
class MuCommand {
public:
    enum class Kind { Pair, Apply };

    static MuCommand pair(MuTerm left, MuTerm right);
    /// Arguments keyed by the current variables of f.
    static MuCommand apply(const DecoratedInstance& f, const std::map<Variable, MuTerm>& args);
    /// Arguments keyed by profile entries of d.
    static MuCommand apply_profile(Decoration d, std::map<Variable, MuTerm> args);

    Kind kind() const noexcept;
    bool is_pair() const noexcept { return kind() == Kind::Pair; }
    bool is_apply() const noexcept { return kind() == Kind::Apply; }

    const MuTerm& left() const;
    const MuTerm& right() const;
    const Decoration& decoration() const;
    const std::map<Variable, MuTerm>& args() const;
    /// Arguments in declared profile order.
    std::vector<MuTerm> positional() const;

    /// Same head, argument at profile entry p replaced.
    MuCommand with_arg(const Variable& p, MuTerm t) const;

    friend bool operator==(const MuCommand& a, const MuCommand& b);

    struct Node;

private:
    explicit MuCommand(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Typing; throws TypeError on a disjointness or binder violation.
VarSet type_of(const MuTerm& t);
VarSet type_of(const MuCommand& c);

/// Every variable name occurring anywhere, binders included.
VarSet all_variables(const MuTerm& t);
VarSet all_variables(const MuCommand& c);

std::size_t binder_count(const MuTerm& t);
std::size_t binder_count(const MuCommand& c);
std::size_t size(const MuCommand& c);

/// c[s/x], capture-avoiding. Throws DomainError if x is not free in c and
/// ClashError if type(s) meets type(c)\{x}.
MuCommand substitute(const MuCommand& c, const Variable& x, const MuTerm& s);
MuTerm substitute(const MuTerm& t, const Variable& x, const MuTerm& s);

/// e^sigma for sigma : X' -> type(e).
MuCommand rename_expr(const MuCommand& c, const Bijection& sigma);
MuTerm rename_expr(const MuTerm& t, const Bijection& sigma);

enum class MuRule { MU1, MU2 };

struct MuReduct {
    MuRule rule;
    MuCommand result;
};

/// All one-step reducts under MU1' and MU2', at any depth.
std::vector<MuReduct> mu_step(const MuCommand& c);

/// <u | v> with two variables: the command denoting a unit.
bool is_unit_command(const MuCommand& c);
/// Membership in the normal-form grammar (Apply-headed, arguments are
/// variables or mu-abstractions over normal commands).
bool is_normal_form(const MuCommand& c);
bool is_normal_form(const MuTerm& t);

/// Left-first MU2' normalisation; a unit command is returned as is.
MuCommand mu_normal_form(const MuCommand& c);

/// One rotation of the head corolla per mu-abstracted argument.
std::vector<MuCommand> prime_step(const MuCommand& c);
/// Reflexive-transitive closure of prime_step, also applied under binders,
/// one representative per alpha class. Throws ResourceError above `limit`.
std::vector<MuCommand> prime_closure(const MuCommand& c, std::size_t limit = 100000);

/// Binders renamed to m#0, m#1, ... in leftmost-outermost order.
MuCommand alpha_canonical(const MuCommand& c);
MuTerm alpha_canonical(const MuTerm& t);
std::string alpha_key(const MuCommand& c);
bool mu_alpha_eq(const MuCommand& a, const MuCommand& b);
bool mu_alpha_eq(const MuTerm& a, const MuTerm& b);

std::string to_string(const MuTerm& t);
std::string to_string(const MuCommand& c);

}  // namespace vernon
