#include "vernon/signature.hpp"

#include "vernon/error.hpp"
#include "vernon/trees.hpp"

namespace vernon {

Decoration Decoration::base(std::string name, std::vector<Variable> profile) {
    Decoration d;
    d.kind_ = Kind::Base;
    for (const auto& v : profile) {
        if (!d.profile_.insert(v).second) {
            throw ClashError("parameter '" + name + "': profile entry '" + v.name() + "' repeated");
        }
    }
    if (d.profile_.empty()) throw DomainError("parameter '" + name + "' has an empty profile");
    d.order_ = std::move(profile);
    d.key_ = name;
    d.name_ = std::move(name);
    return d;
}

Decoration Decoration::tree(std::shared_ptr<const TreeClass> cls) {
    if (!cls) throw DomainError("tree decoration: null class");
    Decoration d;
    d.kind_ = Kind::Tree;
    d.profile_ = cls->free_variables();
    if (d.profile_.empty()) throw DomainError("tree decoration: closed trees have no entries");
    d.order_.assign(d.profile_.begin(), d.profile_.end());
    d.key_ = "[" + cls->key() + "]";
    d.tree_ = std::move(cls);
    return d;
}

Decoration Decoration::tree(const TreeClass& cls) {
    return tree(std::make_shared<const TreeClass>(cls));
}

const TreeClass& Decoration::tree_class() const {
    if (!tree_) throw DomainError("decoration '" + key_ + "' is not a tree class");
    return *tree_;
}

DecoratedInstance::DecoratedInstance(Decoration decoration, Bijection attachment)
    : decoration_(std::move(decoration)), attachment_(std::move(attachment)) {
    if (attachment_.codomain() != decoration_.profile()) {
        throw DomainError("instance of '" + decoration_.key() + "': attachment codomain " +
                          to_string(attachment_.codomain()) + " is not the profile " +
                          to_string(decoration_.profile()));
    }
}

DecoratedInstance::DecoratedInstance(Decoration decoration)
    : decoration_(std::move(decoration)), attachment_(Bijection::identity(decoration_.profile())) {}

std::vector<Variable> DecoratedInstance::positional() const {
    std::vector<Variable> out;
    out.reserve(decoration_.profile_order().size());
    for (const auto& p : decoration_.profile_order()) out.push_back(at_profile(p));
    return out;
}

DecoratedInstance act(const DecoratedInstance& f, const Bijection& sigma) {
    if (sigma.codomain() != f.variables()) {
        throw DomainError("act: bijection codomain " + to_string(sigma.codomain()) +
                          " does not match the instance variables " + to_string(f.variables()));
    }
    return DecoratedInstance(f.decoration(), f.attachment().after(sigma));
}

const Decoration& Signature::add(std::string name, std::vector<Variable> profile) {
    if (entries_.count(name) != 0) throw ClashError("parameter '" + name + "' declared twice");
    auto d = Decoration::base(name, std::move(profile));
    return entries_.emplace(std::move(name), std::move(d)).first->second;
}

const Decoration* Signature::find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

const Decoration& Signature::at(const std::string& name) const {
    if (const auto* d = find(name)) return *d;
    throw DomainError("unknown parameter '" + name + "'");
}

}  // namespace vernon
