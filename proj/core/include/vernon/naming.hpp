#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vernon {

/// A variable name. Plain names are user tokens; names carrying a `#n`
/// suffix come from the fresh-name supply and never collide with user input.
///
/// Ordering is lexicographic on the stem, then plain names before suffixed
/// ones, then suffixes numerically (so `x < x#0 < x#2 < x#10 < y`).
class Variable {
public:
    Variable() = default;
    /// Accepts `stem` or `stem#digits`; throws DomainError otherwise.
    explicit Variable(std::string name);

    /// Rejects any name containing the reserved `#`.
    static Variable user(std::string name);

    const std::string& name() const noexcept { return name_; }
    std::string_view stem() const noexcept;
    std::optional<std::uint64_t> suffix() const noexcept;
    bool is_generated() const noexcept { return hash_pos_ != std::string::npos; }

    friend bool operator==(const Variable& a, const Variable& b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) noexcept;

private:
    std::string name_;
    std::size_t hash_pos_ = std::string::npos;
    std::uint64_t counter_ = 0;
};

using VarSet = std::set<Variable>;

VarSet var_set(std::initializer_list<const char*> names);
std::string to_string(const VarSet& vars);

bool disjoint(const VarSet& a, const VarSet& b);
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_minus(const VarSet& a, const VarSet& b);
VarSet set_minus(const VarSet& a, const Variable& v);

/// Returns `stem(hint)#n` with n minimal such that the result is not in `avoid`.
Variable fresh(std::string_view hint, const VarSet& avoid);

/// A finite bijection between variable sets, stored as (domain, codomain)
/// pairs. A bijection sigma : X' -> X acts on an element over X and yields
/// an element over X' (contravariant action).
class Bijection {
public:
    Bijection() = default;
    /// Throws ClashError if domain or codomain entries repeat.
    explicit Bijection(const std::vector<std::pair<Variable, Variable>>& pairs);
    Bijection(std::initializer_list<std::pair<const char*, const char*>> pairs);

    static Bijection identity(const VarSet& vars);
    /// Maps `to` onto `from` and fixes every other variable of `rest`.
    static Bijection renaming(const Variable& to, const Variable& from, const VarSet& rest);

    std::size_t size() const noexcept { return forward_.size(); }
    bool empty() const noexcept { return forward_.empty(); }

    VarSet domain() const;
    VarSet codomain() const;
    bool in_domain(const Variable& v) const { return forward_.count(v) != 0; }
    bool in_codomain(const Variable& v) const { return backward_.count(v) != 0; }

    /// sigma(v); throws DomainError if v is not in the domain.
    const Variable& operator()(const Variable& v) const;
    /// sigma^{-1}(v); throws DomainError if v is not in the codomain.
    const Variable& inverse_at(const Variable& v) const;

    Bijection inverse() const;
    /// (this o inner)(v) = this(inner(v)); requires codomain(inner) = domain(this).
    Bijection after(const Bijection& inner) const;
    bool is_identity() const;

    /// sigma restricted to the pairs whose codomain element lies in `y`.
    Bijection restrict_to(const VarSet& y) const;
    /// sigma + (y,y).
    Bijection extend_fixpoint(const Variable& y) const;
    /// The pair (old_domain, x) becomes (replacement, x).
    Bijection replace_domain(const Variable& replacement, const Variable& old_domain) const;
    Bijection disjoint_union(const Bijection& other) const;

    const std::map<Variable, Variable>& pairs() const noexcept { return forward_; }

    friend bool operator==(const Bijection& a, const Bijection& b) { return a.forward_ == b.forward_; }
    friend auto operator<=>(const Bijection& a, const Bijection& b) { return a.forward_ <=> b.forward_; }

private:
    void insert(const Variable& from, const Variable& to);

    std::map<Variable, Variable> forward_;
    std::map<Variable, Variable> backward_;
};

/// Free-function spellings of the bijection combinators.
Bijection restrict(const Bijection& sigma, const VarSet& y);
Bijection extend_fixpoint(const Bijection& sigma, const Variable& y);
Bijection replace_domain(const Bijection& sigma, const Variable& y, const Variable& x_prime);
Bijection disjoint_union(const Bijection& sigma, const Bijection& tau);

/// Renders as `u->x, v->y`.
std::string to_string(const Bijection& sigma);

}  // namespace vernon
