// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vernon/decompose.hpp"
#include "vernon/error.hpp"
#include "vernon/generate.hpp"
#include "vernon/laws.hpp"
#include "vernon/monad.hpp"
#include "vernon/text.hpp"
#include "vernon/translate.hpp"

using namespace vernon;

namespace {

/// Counts checks and keeps the first failure message.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what();
    }
    void run(const std::function<void()>& body, const std::string& context) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, [&] { return context + ": exception: " + e.what(); });
        }
    }
};

bool report(int n, const std::string& title, const Tally& t, const std::string& detail) {
    const bool ok = t.failures == 0 && t.checks > 0;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << detail << "; " << t.checks
              << " checks, " << t.failures << " failures)";
    if (!ok && !t.first.empty()) std::cout << " first failure: " << t.first;
    std::cout << std::endl;
    return ok;
}

std::string join(std::initializer_list<std::pair<const char*, std::size_t>> counts) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : counts) {
        out << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return out.str();
}

/// The union of two graphs joined by one new edge, with b's bound variables
/// renamed away from a. Built here independently of the library's grafting.
VernonGraph graft(const VernonGraph& a, const Variable& x, const Variable& y, const VernonGraph& b) {
    VarSet used = set_union(a.all_variables(), b.all_variables());
    std::vector<std::pair<Variable, Variable>> theta;
    for (const auto& v : b.bound_variables()) {
        const Variable n = fresh("g", used);
        used.insert(n);
        theta.emplace_back(n, v);
    }
    const VernonGraph b2 = rename(b, Bijection(theta));
    std::vector<Corolla> cs = a.corollas();
    cs.insert(cs.end(), b2.corollas().begin(), b2.corollas().end());
    std::vector<Edge> es = a.edges();
    es.insert(es.end(), b2.edges().begin(), b2.edges().end());
    es.emplace_back(x, y);
    return VernonGraph(std::move(cs), std::move(es));
}

/// Corollas reachable from `start` without crossing `cut`.
VernonGraph side_of(const VernonGraph& t, std::size_t start, const Edge& cut) {
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        if (!seen.insert(k).second) continue;
        for (const auto& v : t.corollas()[k].free_variables()) {
            const auto w = t.partner(v);
            if (w && Edge(v, *w) != cut) stack.push_back(t.owner(*w));
        }
    }
    return induced_subgraph(t, {seen.begin(), seen.end()});
}

bool has_exceptional_decoration(const VernonGraph& g) {
    for (const auto& c : g.corollas()) {
        if (c.is_special() || !c.instance().decoration().is_tree()) continue;
        const TreeClass& d = c.instance().decoration().tree_class();
        if (d.is_exceptional() || has_exceptional_decoration(d.representative())) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

bool criterion1() {
    Tally t;
    const auto kind = [](const char* body) { return classify(parse_tree(fixtures::graphs(body))); };
    t.run([&] {
        const TreeKind multi = kind("{ k5(x,y,z,u,v), k4(a,b,c,d) ; (u~c)(v~b) }");
        t.expect(multi == TreeKind{TreeShape::NotATree, TreeDefect::MultiEdge}, [&] { return "multi-edge: " + to_string(multi); });
        const TreeKind loop = kind("{ k3(x,y,z), k3(a,b,c) ; (x~a)(b~c) }");
        t.expect(loop == TreeKind{TreeShape::NotATree, TreeDefect::Loop}, [&] { return "loop: " + to_string(loop); });
        const TreeKind cycle = kind("{ k5(x,y,z,u,v), k4(a,b,c,d), k3(p,q,r) ; (v~b)(c~q)(r~u) }");
        t.expect(cycle == TreeKind{TreeShape::NotATree, TreeDefect::Cycle}, [&] { return "cycle: " + to_string(cycle); });
        const VernonGraph ok = parse_tree(fixtures::graphs("{ k5(x,y,z,u,v), k4(a,b,c,d), k3(p,q,r) ; (v~b)(c~q) }"));
        const TreeKind k = classify(ok);
        t.expect(k == TreeKind{TreeShape::Ordinary, TreeDefect::None}, [&] { return "tree: " + to_string(k); });
        // Expected free variables: all twelve minus the four edge endpoints.
        VarSet expected = ok.all_variables();
        for (const char* v : {"v", "b", "c", "q"}) expected.erase(Variable(v));
        t.expect(free_vars(ok) == expected && expected.size() == 8, [&] { return "free variables " + to_string(free_vars(ok)); });
    }, "goldens");
    return report(1, "graph classification goldens", t, "4 graphs");
}

bool criterion2() {
    Tally t;
    Generator gen(2024);
    std::size_t instances = 0, max_specials = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const std::size_t ordinary = i % 5, special = 1 + (i / 5) % 6;
        t.run([&] {
            const VernonGraph g = gen.extended_tree(ordinary, special);
            ++instances;
            max_specials = std::max(max_specials, g.special_count());
            const std::size_t removed = ordinary == 0 ? special - 1 : special;
            const NormalFormSearch s = all_normal_forms(g);
            t.expect(s.classes.size() == 1, [&] { return "several normal forms of " + to_string(g); });
            t.expect(s.lengths == std::set<std::size_t>{removed}, [&] { return "sequence lengths of " + to_string(g); });
            const oracle::Reductions r = oracle::reduce_all(g);
            t.expect(r.normal_classes.size() == 1 && r.lengths == std::set<std::size_t>{removed},
                     [&] { return "oracle disagrees on " + to_string(g); });
            t.expect(!s.classes.empty() && r.normal_classes.count(s.classes.begin()->key()) == 1,
                     [&] { return "normal class differs from oracle on " + to_string(g); });
        }, "extended tree " + std::to_string(i));
    }
    return report(2, "rewriting is confluent and terminating", t, join({{"instances", instances}, {"max specials", max_specials}}));
}

bool criterion3() {
    Tally t;
    Generator gen(3031);
    std::size_t assoc = 0, units = 0, exceptional = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        t.run([&] {
            const VernonGraph t3 = gen.three_level(5, 3);
            ++assoc;
            if (has_exceptional_decoration(t3)) ++exceptional;
            const TreeClass lhs = mu_after_inner_mu(t3);
            const TreeClass rhs = mu_after_outer_mu(t3);
            // Third path: erase both layers of boundaries, then normalise once.
            const TreeClass both = canonicalize(normal_form(flatten(flatten(t3))));
            t.expect(lhs == rhs && rhs == both, [&] { return "associativity on " + to_string(t3); });
        }, "three-level " + std::to_string(i));
        t.run([&] {
            const VernonGraph t2 = gen.two_level(5, 5, 0.3);
            ++units;
            if (has_exceptional_decoration(t2)) ++exceptional;
            const TreeClass c = mu(t2);
            if (c.free_variables().empty()) return;
            t.expect(mu(single_corolla(as_parameter(c))) == c, [&] { return "mu.eta_M on " + c.key(); });
            t.expect(mu(wrap_corollas(c.representative())) == c, [&] { return "mu.M eta on " + c.key(); });
            // M eta followed by mu on the two-level input itself.
            t.expect(mu(map_decorations(t2, [](const TreeClass& d) { return mu(wrap_corollas(d.representative())); })) == c,
                     [&] { return "mu.M(mu.M eta) on " + to_string(t2); });
        }, "two-level " + std::to_string(i));
    }
    t.expect(exceptional > 0, [] { return std::string("no instance had an exceptional decoration"); });
    return report(3, "monad laws at bound 5", t,
                  join({{"three-level", assoc}, {"two-level", units}, {"with exceptional decorations", exceptional}}));
}

bool criterion4() {
    Tally t;
    const LawReport r = check_operad_axioms({.bound = 4, .seed = 7, .instances = 200});
    std::size_t min_instances = SIZE_MAX;
    for (const char* law : {"A1", "A2", "EQ", "U1", "U2", "U3", "CO"}) {
        const LawResult& l = r.at(law);
        min_instances = std::min(min_instances, l.instances);
        t.expect(l.ok() && l.instances >= 200, [&] { return std::string(law) + ": " + l.witness; });
    }
    // Partial composition against an independently built grafted graph.
    Generator gen(4);
    std::size_t grafts = 0;
    for (std::size_t i = 0; grafts < 200; ++i) {
        t.run([&] {
            const VernonGraph a = gen.ordinary_tree(gen.uniform(1, 4));
            const VernonGraph b = gen.ordinary_tree(gen.uniform(1, 4));
            const VarSet fa = a.free_variables(), fb = b.free_variables();
            if (fa.empty() || fb.empty()) return;
            const Variable x = *std::next(fa.begin(), gen.uniform(0, fa.size() - 1));
            const Variable y = *std::next(fb.begin(), gen.uniform(0, fb.size() - 1));
            ++grafts;
            const TreeClass got = vt_compose(canonicalize(a), x, y, canonicalize(b));
            t.expect(got == canonicalize(graft(a, x, y, b)), [&] { return "compose " + to_string(a) + " with " + to_string(b); });
        }, "graft " + std::to_string(i));
    }
    return report(4, "operad axioms on tree classes at bound 4", t,
                  join({{"axioms", 7}, {"min instances per axiom", min_instances}, {"graft checks", grafts}}));
}

bool criterion5() {
    Tally t;
    t.run([&] {
        const Document doc = fixtures::fgh("");
        const auto cmd = [&](const char* s) { return parse_mu_command(s, doc.workspace); };
        const TreeClass tree = canonicalize(parse_tree(fixtures::fgh_tree_w, doc.workspace));
        const MuCommand nf = mu_normal_form(cmd(fixtures::star));
        t.expect(mu_alpha_eq(nf, cmd(fixtures::normal_forms[0])), [&] { return "normal form " + to_string(nf); });
        // Alpha-class equality of the normal form, checked on trees too.
        t.expect(phi(nf) == tree, [&] { return "Phi of the normal form"; });
        for (const char* a : fixtures::normal_forms) {
            t.expect(phi(cmd(a)) == tree, [&] { return std::string("Phi of ") + a; });
            for (const char* b : fixtures::normal_forms) t.expect(mu_equiv(cmd(a), cmd(b)), [&] { return std::string(a) + " vs " + b; });
        }
    }, "goldens");
    return report(5, "running example goldens", t, "1 normalisation, 5 commands");
}

bool criterion6() {
    Tally t;
    Generator gen(6061);
    std::size_t steps = 0, renamings = 0, substitutions = 0, commands = 0;
    while (steps < 500) {
        t.run([&] {
            const MuCommand c = gen.command(gen.ordinary_tree(gen.uniform(1, 4)));
            ++commands;
            const TreeClass before = phi(c);
            for (const auto& r : mu_step(c)) {
                ++steps;
                t.expect(phi(r.result) == before, [&] { return to_string(c) + " -> " + to_string(r.result); });
            }
        }, "step " + std::to_string(steps));
    }
    for (std::size_t i = 0; i < 200; ++i) {
        t.run([&] {
            const MuCommand c = gen.command(gen.ordinary_tree(gen.uniform(1, 4)));
            const Bijection sigma = gen.fresh_renaming(type_of(c));
            ++renamings;
            t.expect(phi(rename_expr(c, sigma)) == vt_action(phi(c), sigma), [&] { return "renaming " + to_string(c); });
        }, "renaming " + std::to_string(i));
    }
    for (std::size_t i = 0; i < 200; ++i) {
        t.run([&] {
            const VernonGraph tree = gen.ordinary_tree(gen.uniform(2, 5));
            const Edge& e = tree.edges()[gen.uniform(0, tree.edges().size() - 1)];
            const MuCommand c = gen.command(side_of(tree, tree.owner(e.first), e));
            const MuTerm s = MuTerm::mu(e.second, gen.command(side_of(tree, tree.owner(e.second), e)));
            const Variable v = fresh("v", set_union(all_variables(c), all_variables(s)));
            ++substitutions;
            const TreeClass lhs = phi(substitute(c, e.first, s));
            t.expect(lhs == canonicalize(tree), [&] { return "substitution rebuilds " + to_string(tree); });
            t.expect(lhs == vt_compose(phi(c), e.first, v, phi(s, v)), [&] { return "substitution on " + to_string(c); });
        }, "substitution " + std::to_string(i));
    }
    return report(6, "translation soundness", t,
                  join({{"one-step rewrites", steps}, {"commands", commands}, {"renaming", renamings}, {"substitution", substitutions}}));
}

bool criterion7() {
    Tally t;
    const auto corpus = enumerate_ordinary_trees(default_signature(), 5);
    std::size_t pairs = 0;
    for (const auto& tree : corpus) {
        t.run([&] {
            const TreeClass cls = canonicalize(tree);
            const auto closure = prime_closure(command_of(tree, 0));
            std::set<std::string> keys;
            for (const auto& c : closure) keys.insert(alpha_key(c));
            for (std::size_t c = 0; c < tree.corollas().size(); ++c) {
                ++pairs;
                const MuCommand m = command_of(tree, c);
                t.expect(is_normal_form(m) && phi(m) == cls, [&] { return "surjectivity at corolla " + std::to_string(c) + " of " + to_string(tree); });
                t.expect(keys.count(alpha_key(m)) == 1, [&] { return "rotation closure misses corolla " + std::to_string(c) + " of " + to_string(tree); });
                t.expect(reconstruct(tree, c) == cls, [&] { return "reconstruct at " + std::to_string(c) + " of " + to_string(tree); });
            }
        }, "corpus tree");
    }
    return report(7, "commands from trees on the enumerated corpus", t, join({{"trees", corpus.size()}, {"tree-corolla pairs", pairs}}));
}

bool criterion8() {
    Tally t;
    Generator gen(8081);
    const TreeModel flat(TreeModel::Parameters::Flatten);
    std::size_t two_level = 0, units = 0;
    for (std::size_t i = 0; two_level < 200 || units < 200; ++i) {
        t.run([&] {
            const VernonGraph g = gen.two_level(4, 3, 0.2);
            ++two_level;
            t.expect(delta(g, flat) == mu(g), [&] { return "delta on " + to_string(g); });
        }, "two-level " + std::to_string(i));
        t.run([&] {
            const TreeClass f = gen.tree_class(4, 0.0);
            if (f.free_variables().empty()) return;
            const Bijection sigma = gen.fresh_renaming(f.free_variables());
            ++units;
            const DecoratedInstance inst(Decoration::tree(f), sigma);
            t.expect(delta(single_corolla(inst), flat) == vt_action(f, sigma), [&] { return "delta.eta on " + f.key(); });
        }, "unit " + std::to_string(i));
    }
    t.run([&] {
        // The associativity instance: f over {x,x1}, g over {y,u,y1}, h over {z,z1}.
        const Document doc = parse_document("p2 : {a, b}\np3 : {a, b, c}\n");
        const auto one = [&](const char* s) { return canonicalize(parse_tree(s, doc.workspace)); };
        const TreeClass f = one("{ p2(x,x1) }"), g = one("{ p3(y,u,y1) }"), h = one("{ p2(z,z1) }");
        const DeltaTreeModel dm;
        const Variable x("x"), y("y"), u("u"), z("z");
        const TreeClass left = dm.compose(dm.compose(f, x, y, g), u, z, h);
        const TreeClass right = dm.compose(f, x, y, dm.compose(g, u, z, h));
        const TreeClass whole = one("{ p2(x,x1), p3(y,u,y1), p2(z,z1) ; (x~y)(u~z) }");
        t.expect(left == right, [&] { return "delta-derived compositions differ: " + left.key() + " vs " + right.key(); });
        t.expect(left == whole, [&] { return "delta-derived composition is not the three-corolla tree"; });
    }, "associativity instance");
    return report(8, "delta on the tree model", t, join({{"two-level", two_level}, {"delta.eta", units}, {"associativity instance", 1}}));
}

bool criterion9() {
    Tally t;
    std::size_t plucks = 0, alpha_pairs = 0, alpha_equal = 0, phis = 0;
    for (const auto& tree : enumerate_ordinary_trees(default_signature(), 5)) {
        for (std::size_t c = 0; c < tree.corollas().size(); ++c) {
            for (const auto& v : tree.corollas()[c].free_variables()) {
                if (!tree.partner(v)) continue;
                t.run([&] {
                    ++plucks;
                    const PluckedSubtree p = pluck(tree, c, v);
                    t.expect(std::set<std::size_t>(p.corollas.begin(), p.corollas.end()) == oracle::pluck_by_rules(tree, c, v),
                             [&] { return "pluck at " + v.name() + " of " + to_string(tree); });
                }, "pluck");
            }
        }
    }
    Signature small;
    small.add("s", {Variable("a"), Variable("b")});
    small.add("t", {Variable("a"), Variable("b"), Variable("c")});
    Generator gen(9091, small);
    std::mt19937_64 rng(9);
    for (std::size_t i = 0; i < 600; ++i) {
        t.run([&] {
            const VernonGraph a = gen.ordinary_tree(1 + i % 4);
            VernonGraph b = a;
            switch (i % 3) {
                case 0: {
                    // Bound renaming and corolla shuffle: always equivalent.
                    std::vector<std::pair<Variable, Variable>> theta;
                    for (const auto& v : a.bound_variables()) theta.emplace_back(gen.variable(), v);
                    const VernonGraph r = rename(a, Bijection(theta));
                    std::vector<Corolla> cs = r.corollas();
                    std::shuffle(cs.begin(), cs.end(), rng);
                    b = VernonGraph(cs, r.edges());
                    break;
                }
                case 1: {
                    // Permuting free variables: equivalent only under a symmetry.
                    const VarSet fa = a.free_variables();
                    std::vector<Variable> fv(fa.begin(), fa.end());
                    std::vector<Variable> perm = fv;
                    std::shuffle(perm.begin(), perm.end(), rng);
                    std::vector<std::pair<Variable, Variable>> theta;
                    for (std::size_t k = 0; k < fv.size(); ++k) theta.emplace_back(perm[k], fv[k]);
                    for (const auto& v : a.bound_variables()) theta.emplace_back(v, v);
                    b = rename(a, Bijection(theta));
                    break;
                }
                default: {
                    // An unrelated tree moved onto the same free variables.
                    const VernonGraph o = gen.ordinary_tree(1 + i % 4);
                    if (o.free_variables().size() != a.free_variables().size()) return;
                    std::vector<std::pair<Variable, Variable>> theta;
                    const VarSet fa = a.free_variables();
                    auto it = fa.begin();
                    for (const auto& v : o.free_variables()) theta.emplace_back(*it++, v);
                    b = rename(o, Bijection(theta));
                }
            }
            ++alpha_pairs;
            const bool expected = oracle::alpha_search(a, b);
            if (expected) ++alpha_equal;
            t.expect(alpha_eq(a, b) == expected, [&] { return "alpha_eq on " + to_string(a) + " / " + to_string(b); });
        }, "alpha pair " + std::to_string(i));
    }
    Generator cg(9092);
    while (phis < 500) {
        t.run([&] {
            const VernonGraph tree = cg.ordinary_tree(cg.uniform(1, 5));
            const MuCommand c = cg.command(tree);
            ++phis;
            t.expect(phi_direct(c) == interpret(translate(c), TreeModel{}), [&] { return "direct Phi on " + to_string(c); });
            const auto steps = mu_step(c);
            if (!steps.empty()) {
                ++phis;
                const MuCommand d = steps.front().result;
                t.expect(phi_direct(d) == interpret(translate(d), TreeModel{}), [&] { return "direct Phi on " + to_string(d); });
            }
        }, "phi " + std::to_string(phis));
    }
    return report(9, "oracle equivalences", t,
                  join({{"plucks", plucks}, {"alpha pairs", alpha_pairs}, {"alpha-equivalent", alpha_equal}, {"mu-expressions", phis}}));
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9}) {
        ok = c() && ok;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << " in " << secs << " s" << std::endl;
    return ok ? 0 : 1;
}
