#include "vernon/rewrite.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "vernon/error.hpp"

namespace vernon {

std::string to_string(const Redex& r, const VernonGraph& g) {
    std::string out = r.kind == RedexKind::OrdinarySpecial ? "ordinary-special " : "special-special ";
    out += to_string(g.corollas().at(r.left)) + " ~ " + to_string(g.corollas().at(r.right));
    return out + " along (" + r.edge.first.name() + "~" + r.edge.second.name() + ")";
}

std::vector<Redex> find_redexes(const VernonGraph& g) {
    std::vector<std::tuple<std::string, std::string, Redex>> found;
    for (const auto& e : g.edges()) {
        std::size_t a = g.owner(e.first), b = g.owner(e.second);
        if (a == b) continue;
        const auto& ca = g.corollas()[a];
        const auto& cb = g.corollas()[b];
        if (ca.is_ordinary() && cb.is_ordinary()) continue;
        Redex r{RedexKind::SpecialSpecial, a, b, e};
        if (ca.is_ordinary()) {
            r.kind = RedexKind::OrdinarySpecial;
        } else if (cb.is_ordinary()) {
            r = Redex{RedexKind::OrdinarySpecial, b, a, e};
        } else if (to_string(cb) < to_string(ca)) {
            std::swap(r.left, r.right);
        }
        found.emplace_back(to_string(g.corollas()[r.left]), to_string(g.corollas()[r.right]), r);
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
        return std::get<2>(x).edge < std::get<2>(y).edge;
    });
    std::vector<Redex> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::get<2>(f));
    return out;
}

VernonGraph contract(const VernonGraph& g, const Redex& r) {
    const auto& cs = g.corollas();
    if (r.left >= cs.size() || r.right >= cs.size() || r.left == r.right ||
        std::find(g.edges().begin(), g.edges().end(), r.edge) == g.edges().end()) {
        throw DomainError("contract: not a redex of " + to_string(g));
    }
    const auto& left = cs[r.left];
    const auto& right = cs[r.right];
    const Variable* in_left = nullptr;
    for (const auto* v : {&r.edge.first, &r.edge.second}) {
        if (g.owner(*v) == r.left) in_left = v;
    }
    if (in_left == nullptr || !right.is_special() || g.owner(r.edge.other(*in_left)) != r.right) {
        throw DomainError("contract: edge does not join the redex corollas");
    }
    const Variable& x = *in_left;                // endpoint in the left corolla
    const Variable& y = r.edge.other(x);         // endpoint in the special corolla
    const Variable& z = right.pair().first == y ? right.pair().second : right.pair().first;

    Corolla merged = Corolla::special(x, z);
    if (r.kind == RedexKind::OrdinarySpecial) {
        if (!left.is_ordinary()) throw DomainError("contract: ordinary-special redex without an ordinary corolla");
        merged = Corolla::ordinary(act(left.instance(), Bijection::renaming(z, x, left.instance().variables())));
    } else {
        if (!left.is_special()) throw DomainError("contract: special-special redex on an ordinary corolla");
        const Variable& w = left.pair().first == x ? left.pair().second : left.pair().first;
        merged = Corolla::special(w, z);
    }

    std::vector<Corolla> corollas;
    corollas.reserve(cs.size() - 1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i == r.left) {
            corollas.push_back(merged);
        } else if (i != r.right) {
            corollas.push_back(cs[i]);
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!(e == r.edge)) edges.push_back(e);
    }
    return VernonGraph(std::move(corollas), std::move(edges));
}

VernonGraph normal_form(const VernonGraph& g, std::vector<RewriteStep>* trace) {
    VernonGraph current = g;
    for (;;) {
        auto redexes = find_redexes(current);
        if (redexes.empty()) return current;
        VernonGraph next = contract(current, redexes.front());
        if (trace) trace->push_back({redexes.front(), to_string(current), next});
        current = std::move(next);
    }
}

namespace {

class Explorer {
public:
    explicit Explorer(std::size_t fuel) : fuel_(fuel) {}

    const std::pair<std::set<std::string>, std::set<std::size_t>>& visit(const VernonGraph& g) {
        const std::string key = to_string(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (memo_.size() >= fuel_) throw ResourceError("all_normal_forms: fuel exhausted after " + std::to_string(fuel_) + " states");
        std::pair<std::set<std::string>, std::set<std::size_t>> result;
        const auto redexes = find_redexes(g);
        if (redexes.empty()) {
            TreeClass cls = canonicalize(g);
            result.first.insert(cls.key());
            classes_.emplace(cls.key(), std::move(cls));
            result.second.insert(0);
        }
        for (const auto& r : redexes) {
            const auto& sub = visit(contract(g, r));
            result.first.insert(sub.first.begin(), sub.first.end());
            for (auto len : sub.second) result.second.insert(len + 1);
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

    std::size_t states() const { return memo_.size(); }
    const TreeClass& cls(const std::string& key) const { return classes_.at(key); }

private:
    std::size_t fuel_;
    std::map<std::string, std::pair<std::set<std::string>, std::set<std::size_t>>> memo_;
    std::map<std::string, TreeClass> classes_;
};

}  // namespace

NormalFormSearch all_normal_forms(const VernonGraph& g, std::size_t fuel) {
    Explorer explorer(fuel);
    const auto result = explorer.visit(g);
    NormalFormSearch out;
    for (const auto& key : result.first) out.classes.insert(explorer.cls(key));
    out.lengths = result.second;
    out.states = explorer.states();
    return out;
}

}  // namespace vernon
