#include "vernon/naming.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vernon/error.hpp"

namespace vernon {

namespace {

bool valid_stem(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

}  // namespace

Variable::Variable(std::string name) : name_(std::move(name)) {
    const auto pos = name_.find('#');
    if (pos == std::string::npos) {
        if (!valid_stem(name_)) throw DomainError("invalid variable name '" + name_ + "'");
        return;
    }
    const std::string_view digits = std::string_view(name_).substr(pos + 1);
    if (!valid_stem(std::string_view(name_).substr(0, pos)) || digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw DomainError("invalid variable name '" + name_ + "'");
    }
    hash_pos_ = pos;
    std::from_chars(digits.data(), digits.data() + digits.size(), counter_);
}

Variable Variable::user(std::string name) {
    if (name.find('#') != std::string::npos) {
        throw DomainError("user variable '" + name + "' uses the reserved character '#'");
    }
    return Variable(std::move(name));
}

std::string_view Variable::stem() const noexcept {
    return std::string_view(name_).substr(0, hash_pos_);
}

std::optional<std::uint64_t> Variable::suffix() const noexcept {
    if (hash_pos_ == std::string::npos) return std::nullopt;
    return counter_;
}

std::strong_ordering operator<=>(const Variable& a, const Variable& b) noexcept {
    if (auto c = a.stem().compare(b.stem()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const bool ga = a.is_generated();
    const bool gb = b.is_generated();
    if (ga != gb) return ga ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.counter_ <=> b.counter_;
}

VarSet var_set(std::initializer_list<const char*> names) {
    VarSet out;
    for (const char* n : names) out.insert(Variable(n));
    return out;
}

std::string to_string(const VarSet& vars) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : vars) {
        if (!first) out += ", ";
        out += v.name();
        first = false;
    }
    return out + "}";
}

bool disjoint(const VarSet& a, const VarSet& b) {
    const VarSet& small = a.size() <= b.size() ? a : b;
    const VarSet& large = a.size() <= b.size() ? b : a;
    return std::none_of(small.begin(), small.end(), [&](const Variable& v) { return large.count(v) != 0; });
}

VarSet set_union(const VarSet& a, const VarSet& b) {
    VarSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VarSet set_minus(const VarSet& a, const VarSet& b) {
    VarSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

VarSet set_minus(const VarSet& a, const Variable& v) {
    VarSet out = a;
    out.erase(v);
    return out;
}

Variable fresh(std::string_view hint, const VarSet& avoid) {
    std::string stem(hint.substr(0, hint.find('#')));
    if (!valid_stem(stem)) stem = "v";
    for (std::uint64_t n = 0;; ++n) {
        Variable candidate(stem + "#" + std::to_string(n));
        if (avoid.count(candidate) == 0) return candidate;
    }
}

// ---------------------------------------------------------------------------

Bijection::Bijection(const std::vector<std::pair<Variable, Variable>>& pairs) {
    for (const auto& [from, to] : pairs) insert(from, to);
}

Bijection::Bijection(std::initializer_list<std::pair<const char*, const char*>> pairs) {
    for (const auto& [from, to] : pairs) insert(Variable(from), Variable(to));
}

void Bijection::insert(const Variable& from, const Variable& to) {
    if (forward_.count(from) != 0) throw ClashError("bijection: domain entry '" + from.name() + "' repeated");
    if (backward_.count(to) != 0) throw ClashError("bijection: codomain entry '" + to.name() + "' repeated");
    forward_.emplace(from, to);
    backward_.emplace(to, from);
}

Bijection Bijection::identity(const VarSet& vars) {
    Bijection out;
    for (const auto& v : vars) out.insert(v, v);
    return out;
}

Bijection Bijection::renaming(const Variable& to, const Variable& from, const VarSet& rest) {
    Bijection out;
    out.insert(to, from);
    for (const auto& v : rest) {
        if (v != from) out.insert(v, v);
    }
    return out;
}

VarSet Bijection::domain() const {
    VarSet out;
    for (const auto& [k, _] : forward_) out.insert(out.end(), k);
    return out;
}

VarSet Bijection::codomain() const {
    VarSet out;
    for (const auto& [k, _] : backward_) out.insert(out.end(), k);
    return out;
}

const Variable& Bijection::operator()(const Variable& v) const {
    auto it = forward_.find(v);
    if (it == forward_.end()) throw DomainError("bijection: '" + v.name() + "' not in domain");
    return it->second;
}

const Variable& Bijection::inverse_at(const Variable& v) const {
    auto it = backward_.find(v);
    if (it == backward_.end()) throw DomainError("bijection: '" + v.name() + "' not in codomain");
    return it->second;
}

Bijection Bijection::inverse() const {
    Bijection out;
    out.forward_ = backward_;
    out.backward_ = forward_;
    return out;
}

Bijection Bijection::after(const Bijection& inner) const {
    if (inner.codomain() != domain()) {
        throw DomainError("bijection composition: " + to_string(inner.codomain()) + " is not " + to_string(domain()));
    }
    Bijection out;
    for (const auto& [from, mid] : inner.forward_) out.insert(from, (*this)(mid));
    return out;
}

bool Bijection::is_identity() const {
    return std::all_of(forward_.begin(), forward_.end(), [](const auto& p) { return p.first == p.second; });
}

Bijection Bijection::restrict_to(const VarSet& y) const {
    Bijection out;
    for (const auto& v : y) {
        auto it = backward_.find(v);
        if (it == backward_.end()) throw DomainError("restrict: '" + v.name() + "' not in codomain");
        out.insert(it->second, v);
    }
    return out;
}

Bijection Bijection::extend_fixpoint(const Variable& y) const {
    if (in_domain(y) || in_codomain(y)) throw ClashError("extend_fixpoint: '" + y.name() + "' already present");
    Bijection out = *this;
    out.insert(y, y);
    return out;
}

Bijection Bijection::replace_domain(const Variable& replacement, const Variable& old_domain) const {
    auto it = forward_.find(old_domain);
    if (it == forward_.end()) throw DomainError("replace_domain: '" + old_domain.name() + "' not in domain");
    if (replacement != old_domain && in_domain(replacement)) {
        throw ClashError("replace_domain: '" + replacement.name() + "' already in domain");
    }
    Bijection out;
    for (const auto& [from, to] : forward_) out.insert(from == old_domain ? replacement : from, to);
    return out;
}

Bijection Bijection::disjoint_union(const Bijection& other) const {
    Bijection out = *this;
    for (const auto& [from, to] : other.forward_) out.insert(from, to);
    return out;
}

Bijection restrict(const Bijection& sigma, const VarSet& y) { return sigma.restrict_to(y); }
Bijection extend_fixpoint(const Bijection& sigma, const Variable& y) { return sigma.extend_fixpoint(y); }
Bijection replace_domain(const Bijection& sigma, const Variable& y, const Variable& x_prime) {
    return sigma.replace_domain(y, x_prime);
}
Bijection disjoint_union(const Bijection& sigma, const Bijection& tau) { return sigma.disjoint_union(tau); }

std::string to_string(const Bijection& sigma) {
    std::string out;
    bool first = true;
    for (const auto& [from, to] : sigma.pairs()) {
        if (!first) out += ", ";
        out += from.name() + "->" + to.name();
        first = false;
    }
    return out;
}

}  // namespace vernon
