#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vernon/naming.hpp"

namespace vernon {

class TreeClass;

/// A parameter that can decorate an ordinary corolla: either a named base
/// parameter with a declared profile, or a tree class (which makes trees of
/// trees representable with the same machinery).
class Decoration {
public:
    enum class Kind { Base, Tree };

    /// `profile` keeps declaration order for positional argument lists.
    static Decoration base(std::string name, std::vector<Variable> profile);
    static Decoration tree(std::shared_ptr<const TreeClass> cls);
    static Decoration tree(const TreeClass& cls);

    Kind kind() const noexcept { return kind_; }
    bool is_base() const noexcept { return kind_ == Kind::Base; }
    bool is_tree() const noexcept { return kind_ == Kind::Tree; }

    /// Base name, empty for tree decorations.
    const std::string& name() const noexcept { return name_; }
    /// The class carried by a tree decoration; throws DomainError for base ones.
    const TreeClass& tree_class() const;
    const std::shared_ptr<const TreeClass>& tree_ptr() const noexcept { return tree_; }

    const VarSet& profile() const noexcept { return profile_; }
    const std::vector<Variable>& profile_order() const noexcept { return order_; }

    /// Total identity key; equal keys mean equal decorations.
    const std::string& key() const noexcept { return key_; }

    friend bool operator==(const Decoration& a, const Decoration& b) noexcept { return a.key_ == b.key_; }
    friend auto operator<=>(const Decoration& a, const Decoration& b) noexcept { return a.key_ <=> b.key_; }

private:
    Kind kind_ = Kind::Base;
    std::string name_;
    std::shared_ptr<const TreeClass> tree_;
    VarSet profile_;
    std::vector<Variable> order_;
    std::string key_;
};

/// f^sigma for the free structure: a decoration together with an attachment
/// bijection from the instance's current variables onto the profile.
class DecoratedInstance {
public:
    DecoratedInstance(Decoration decoration, Bijection attachment);
    /// Identity attachment over the profile.
    explicit DecoratedInstance(Decoration decoration);

    const Decoration& decoration() const noexcept { return decoration_; }
    const Bijection& attachment() const noexcept { return attachment_; }
    VarSet variables() const { return attachment_.domain(); }

    /// Current variable attached to profile entry `p`.
    const Variable& at_profile(const Variable& p) const { return attachment_.inverse_at(p); }
    /// Current variables listed in profile declaration order.
    std::vector<Variable> positional() const;

    friend bool operator==(const DecoratedInstance& a, const DecoratedInstance& b) {
        return a.decoration_ == b.decoration_ && a.attachment_ == b.attachment_;
    }
    friend auto operator<=>(const DecoratedInstance& a, const DecoratedInstance& b) {
        if (auto c = a.decoration_ <=> b.decoration_; c != 0) return c;
        return a.attachment_ <=> b.attachment_;
    }

private:
    Decoration decoration_;
    Bijection attachment_;
};

/// f^sigma: requires codomain(sigma) = variables(f); the result lives over domain(sigma).
DecoratedInstance act(const DecoratedInstance& f, const Bijection& sigma);

/// A finite set of base parameters with unique names.
class Signature {
public:
    /// Throws ClashError on a duplicate name.
    const Decoration& add(std::string name, std::vector<Variable> profile);
    const Decoration* find(const std::string& name) const;
    /// Throws DomainError on an unknown name.
    const Decoration& at(const std::string& name) const;

    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, Decoration>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, Decoration> entries_;
};

}  // namespace vernon
