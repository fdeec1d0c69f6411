#include "vernon/laws.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "vernon/decompose.hpp"
#include "vernon/error.hpp"
#include "vernon/generate.hpp"
#include "vernon/monad.hpp"
#include "vernon/mu.hpp"
#include "vernon/rewrite.hpp"
#include "vernon/translate.hpp"

namespace vernon {

bool LawReport::ok() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.ok(); });
}

const LawResult& LawReport::at(const std::string& name) const {
    for (const auto& r : results) {
        if (r.name == name) return r;
    }
    throw DomainError("report '" + suite + "' has no law '" + name + "'");
}

namespace {

/// Runs one instance: `body` returns an empty string on success and a
/// description of the counterexample otherwise.
template <class F>
void check(LawResult& r, F&& body) {
    ++r.instances;
    std::string failure;
    try {
        failure = body();
    } catch (const Error& e) {
        failure = std::string("error: ") + e.what();
    }
    if (failure.empty()) return;
    if (r.failures++ == 0) r.witness = failure;
}

std::string differ(const std::string& what, const std::string& lhs, const std::string& rhs) {
    if (lhs == rhs) return {};
    return what + "\n    lhs " + lhs + "\n    rhs " + rhs;
}

std::string differ(const std::string& what, const TreeClass& lhs, const TreeClass& rhs) {
    return differ(what, lhs.key(), rhs.key());
}

Variable pick(Generator& gen, const VarSet& s) {
    if (s.empty()) throw DomainError("pick: empty set");
    auto it = s.begin();
    std::advance(it, gen.uniform(0, s.size() - 1));
    return *it;
}

/// A class with at least `min_free` free variables.
TreeClass operand(Generator& gen, std::size_t bound, std::size_t min_free = 1) {
    for (;;) {
        TreeClass c = gen.tree_class(bound, 0.15);
        if (c.free_variables().size() >= min_free) return c;
    }
}

/// The same class with its free variable `from` called `to`.
TreeClass rename_free(const TreeOperadOps& ops, const TreeClass& c, const Variable& from, const Variable& to) {
    if (from == to) return c;
    return ops.act(c, Bijection::renaming(to, from, c.free_variables()));
}

}  // namespace

// ---------------------------------------------------------------------------
// operad

LawReport check_operad_axioms(const TreeOperadOps& ops, const LawOptions& o) {
    Generator gen(o.seed * 1000003 + 1);
    LawReport report{"operad:" + ops.name, {}};
    report.results.reserve(32);
    auto law = [&](const char* name) -> LawResult& {
        report.results.push_back({name, 0, 0, {}});
        return report.results.back();
    };
    const std::size_t b = o.bound;

    LawResult& a1 = law("A1");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(a1, [&] {
            TreeClass f = operand(gen, b), g = operand(gen, b, 2), h = operand(gen, b);
            const Variable x = pick(gen, f.free_variables());
            Variable y = pick(gen, g.free_variables());
            const Variable u = pick(gen, set_minus(g.free_variables(), y));
            Variable z = pick(gen, h.free_variables());
            if (gen.coin()) {
                g = rename_free(ops, g, y, x);
                y = x;
            }
            if (gen.coin()) {
                h = rename_free(ops, h, z, u);
                z = u;
            }
            return differ("A1 x=" + x.name() + " y=" + y.name() + " u=" + u.name() + " z=" + z.name(),
                          ops.compose(ops.compose(f, x, y, g), u, z, h), ops.compose(f, x, y, ops.compose(g, u, z, h)));
        });
    }

    LawResult& a2 = law("A2");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(a2, [&] {
            TreeClass f = operand(gen, b, 2), g = operand(gen, b), h = operand(gen, b);
            const Variable x = pick(gen, f.free_variables());
            const Variable u = pick(gen, set_minus(f.free_variables(), x));
            Variable y = pick(gen, g.free_variables());
            Variable z = pick(gen, h.free_variables());
            if (gen.coin()) {
                g = rename_free(ops, g, y, x);
                y = x;
            }
            if (gen.coin()) {
                h = rename_free(ops, h, z, u);
                z = u;
            }
            return differ("A2 x=" + x.name() + " y=" + y.name() + " u=" + u.name() + " z=" + z.name(),
                          ops.compose(ops.compose(f, x, y, g), u, z, h), ops.compose(ops.compose(f, u, z, h), x, y, g));
        });
    }

    LawResult& eq = law("EQ");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(eq, [&] {
            TreeClass f = operand(gen, b), g = operand(gen, b);
            const Variable x = pick(gen, f.free_variables());
            const Variable y = pick(gen, g.free_variables());
            const Bijection s1 = gen.fresh_renaming(f.free_variables());
            const Bijection s2 = gen.fresh_renaming(g.free_variables());
            const Bijection sigma = s1.restrict_to(set_minus(f.free_variables(), x))
                                        .disjoint_union(s2.restrict_to(set_minus(g.free_variables(), y)));
            return differ("EQ x=" + x.name() + " y=" + y.name() + " s1=" + to_string(s1) + " s2=" + to_string(s2),
                          ops.compose(ops.act(f, s1), s1.inverse_at(x), s2.inverse_at(y), ops.act(g, s2)),
                          ops.act(ops.compose(f, x, y, g), sigma));
        });
    }

    LawResult& u1 = law("U1");
    LawResult& u2 = law("U2");
    for (std::size_t i = 0; i < o.instances; ++i) {
        TreeClass f = operand(gen, b);
        const Variable x = pick(gen, f.free_variables());
        const Variable y = gen.coin() ? x : gen.variable();
        const Variable z = gen.variable();
        const TreeClass expected = ops.act(f, Bijection::renaming(z, x, f.free_variables()));
        check(u1, [&] { return differ("U1 x=" + x.name() + " y=" + y.name(), ops.compose(f, x, y, ops.unit(y, z)), expected); });
        check(u2, [&] { return differ("U2 x=" + x.name() + " y=" + y.name(), ops.compose(ops.unit(y, z), y, x, f), expected); });
    }

    LawResult& u3 = law("U3");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(u3, [&] {
            const Variable x = gen.variable(), y = gen.variable(), u = gen.variable(), v = gen.variable();
            const Bijection sigma = gen.coin() ? Bijection({{u, x}, {v, y}}) : Bijection({{u, y}, {v, x}});
            return differ("U3 " + to_string(sigma), ops.act(ops.unit(x, y), sigma), ops.unit(u, v));
        });
    }

    LawResult& co = law("CO");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(co, [&] {
            TreeClass f = operand(gen, b), g = operand(gen, b);
            const Variable x = pick(gen, f.free_variables());
            Variable y = pick(gen, g.free_variables());
            if (gen.coin()) {
                g = rename_free(ops, g, y, x);
                y = x;
            }
            return differ("CO x=" + x.name() + " y=" + y.name(), ops.compose(f, x, y, g), ops.compose(g, y, x, f));
        });
    }
    return report;
}

LawReport check_operad_axioms(const LawOptions& options) {
    return check_operad_axioms(operad_ops(TreeModel{}, "tree"), options);
}

// ---------------------------------------------------------------------------
// rewrite

LawReport check_rewrite_laws(const LawOptions& o) {
    Generator gen(o.seed * 1000003 + 2);
    LawReport report{"rewrite", {{"confluence", 0, 0, {}}, {"step-count", 0, 0, {}}, {"normal-shape", 0, 0, {}}}};
    LawResult& confluence = report.results[0];
    LawResult& steps = report.results[1];
    LawResult& shape = report.results[2];
    const std::size_t max_ordinary = std::min<std::size_t>(o.bound, 4);
    for (std::size_t i = 0; i < o.instances; ++i) {
        const std::size_t special = gen.uniform(1, 6);
        const std::size_t ordinary = gen.uniform(0, max_ordinary);
        const VernonGraph t = gen.extended_tree(ordinary, special);
        const auto search = all_normal_forms(t);
        std::vector<RewriteStep> trace;
        const VernonGraph nf = normal_form(t, &trace);
        const std::size_t expected = special - (ordinary == 0 ? 1 : 0);
        check(confluence, [&] {
            return search.classes.size() == 1 ? std::string()
                                              : std::to_string(search.classes.size()) + " normal forms of " + to_string(t);
        });
        check(steps, [&] {
            std::set<std::size_t> want{expected};
            if (search.lengths == want && trace.size() == expected) return std::string();
            return "reduction lengths differ from " + std::to_string(expected) + " on " + to_string(t);
        });
        check(shape, [&] {
            const auto kind = classify(nf);
            if (nf.free_variables() != t.free_variables()) return "free variables changed on " + to_string(t);
            if (kind.shape != TreeShape::Ordinary && kind.shape != TreeShape::Exceptional) {
                return "normal form " + to_string(nf) + " is " + to_string(kind);
            }
            return differ("normal form is the search result", canonicalize(nf), *search.classes.begin());
        });
    }
    return report;
}

// ---------------------------------------------------------------------------
// monad

LawReport check_monad_laws(const LawOptions& o) {
    Generator gen(o.seed * 1000003 + 3);
    LawReport report{"monad", {}};
    report.results.reserve(32);
    auto law = [&](const char* name) -> LawResult& {
        report.results.push_back({name, 0, 0, {}});
        return report.results.back();
    };
    const std::size_t b = o.bound;

    LawResult& unit_outer = law("unit:mu.etaM");
    LawResult& unit_inner = law("unit:mu.Meta");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const TreeClass t = operand(gen, b);
        check(unit_outer, [&] { return differ("mu(eta_M T) = T", mu(single_corolla(as_parameter(t))), t); });
        check(unit_inner, [&] { return differ("mu(M eta T) = T", mu(wrap_corollas(t.representative())), t); });
    }

    LawResult& assoc = law("associativity");
    const std::size_t middle = std::max<std::size_t>(1, std::min<std::size_t>(b, 3));
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(assoc, [&] {
            const VernonGraph t3 = gen.three_level(b, middle);
            return differ("mu.Mmu vs mu.muM on " + to_string(t3), mu_after_inner_mu(t3), mu_after_outer_mu(t3));
        });
    }

    LawResult& nf_first = law("nf-before-flat");
    LawResult& nf_inner = law("nf-inside-decorations");
    LawResult& monotone = law("one-step-monotone");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const VernonGraph t = gen.two_level(b, b, 0.3);
        const TreeClass expected = mu(t);
        check(nf_first, [&] { return differ("mu(T) = mu(nf T) on " + to_string(t), expected, mu(normal_form(t))); });
        check(nf_inner, [&] {
            const VernonGraph inner_nf = map_decorations(t, [](const TreeClass& c) { return canonicalize(normal_form(c.representative())); });
            return differ("decoration-wise nf on " + to_string(t), expected, mu(inner_nf));
        });
        const auto redexes = find_redexes(t);
        if (redexes.empty()) continue;
        check(monotone, [&] {
            const VernonGraph next = contract(t, redexes[gen.uniform(0, redexes.size() - 1)]);
            return differ("one step on " + to_string(t), expected, mu(next));
        });
    }

    LawResult& flat = law("flat-flat");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(flat, [&] {
            const VernonGraph t3 = gen.three_level(b, middle);
            const VernonGraph direct = flatten(flatten(t3));
            const VernonGraph inner = flatten(map_decorations(t3, [](const TreeClass& c) { return canonicalize(flatten(c.representative())); }));
            return differ("flat.flat vs flat.Mflat on " + to_string(t3), canonicalize(direct), canonicalize(inner));
        });
    }
    return report;
}

// ---------------------------------------------------------------------------
// translate

namespace {

/// Random tree for the command generators: mostly ordinary, sometimes exceptional.
VernonGraph denoted_tree(Generator& gen, std::size_t bound) {
    if (gen.coin(0.08)) {
        const Variable x = gen.variable();
        return exceptional_tree(x, gen.variable());
    }
    return gen.ordinary_tree(gen.uniform(1, bound));
}

}  // namespace

LawReport check_translate_laws(const LawOptions& o) {
    Generator gen(o.seed * 1000003 + 4);
    LawReport report{"translate", {}};
    report.results.reserve(32);
    auto law = [&](const char* name) -> LawResult& {
        report.results.push_back({name, 0, 0, {}});
        return report.results.back();
    };
    const std::size_t b = o.bound;
    const TreeModel model;

    LawResult& direct = law("direct-phi");
    LawResult& denot = law("generated-denotation");
    LawResult& sound = law("reduction-soundness");
    LawResult& subject = law("subject-reduction");
    LawResult& binders = law("binder-decrease");
    LawResult& nf_sound = law("normal-form");
    LawResult& inj = law("injectivity-witness");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const VernonGraph t = denoted_tree(gen, b);
        const MuCommand c = gen.command(t);
        const TreeClass expected = canonicalize(t);
        const TreeClass value = phi(c, model);
        check(direct, [&] { return differ("direct Phi of " + to_string(c), value, phi_direct(c, model)); });
        check(denot, [&] { return differ("Phi of " + to_string(c), value, expected); });
        const VarSet type = type_of(c);
        const std::size_t count = binder_count(c);
        for (const auto& r : mu_step(c)) {
            check(sound, [&] {
                return differ(std::string(r.rule == MuRule::MU1 ? "MU1'" : "MU2'") + " step " + to_string(c) + " -> " + to_string(r.result),
                              value, phi(r.result, model));
            });
            check(subject, [&] { return type_of(r.result) == type ? std::string() : "type changed by " + to_string(r.result); });
            check(binders, [&] {
                const std::size_t want = r.rule == MuRule::MU1 ? count : count - 1;
                return binder_count(r.result) == want ? std::string() : "binder count after " + to_string(r.result);
            });
        }
        const MuCommand n = mu_normal_form(c);
        check(nf_sound, [&] {
            if (!is_normal_form(n) && !is_unit_command(n)) return to_string(n) + " is not in normal form";
            return differ("nf of " + to_string(c), value, phi(n, model));
        });
        check(inj, [&] {
            const MuCommand other = mu_normal_form(gen.command(t));
            if (is_unit_command(n)) return is_unit_command(other) ? std::string() : "unit command vs " + to_string(other);
            const std::string key = alpha_key(other);
            for (const auto& m : prime_closure(n)) {
                if (alpha_key(m) == key) return std::string();
            }
            return to_string(other) + " is not in the rotation closure of " + to_string(n);
        });
    }

    LawResult& renaming = law("renaming");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(renaming, [&] {
            const MuCommand c = gen.command(denoted_tree(gen, b));
            const Bijection sigma = gen.fresh_renaming(type_of(c));
            return differ("renaming " + to_string(sigma) + " of " + to_string(c), phi(rename_expr(c, sigma), model),
                          vt_action(phi(c, model), sigma));
        });
    }

    LawResult& substitution = law("substitution");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(substitution, [&] {
            const VernonGraph t = gen.ordinary_tree(gen.uniform(1, b));
            MuCommand c = gen.command(t);
            Variable x;
            MuTerm s = MuTerm::var(gen.variable());
            if (!t.edges().empty() && (gen.coin(0.7) || t.free_variables().empty())) {
                // c over one side of an edge, s the mu-abstraction of the other
                const Edge& e = t.edges()[gen.uniform(0, t.edges().size() - 1)];
                const auto side = [&](const Variable& from) {
                    std::vector<std::size_t> keep;
                    std::set<std::size_t> seen;
                    std::vector<std::size_t> stack{t.owner(from)};
                    while (!stack.empty()) {
                        const std::size_t k = stack.back();
                        stack.pop_back();
                        if (!seen.insert(k).second) continue;
                        for (const auto& v : t.corollas()[k].free_variables()) {
                            const auto w = t.partner(v);
                            if (w && Edge(v, *w) != e) stack.push_back(t.owner(*w));
                        }
                    }
                    return induced_subgraph(t, {seen.begin(), seen.end()});
                };
                c = gen.command(side(e.first));
                x = e.first;
                s = MuTerm::mu(e.second, gen.command(side(e.second)));
            } else {
                x = pick(gen, type_of(c));
            }
            const Variable v = fresh("v", set_union(all_variables(c), all_variables(s)));
            return differ("substituting " + to_string(s) + " for " + x.name() + " in " + to_string(c),
                          phi(substitute(c, x, s), model), vt_compose(phi(c, model), x, v, phi(s, v, model)));
        });
    }

    LawResult& roundtrip = law("comb-roundtrip");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(roundtrip, [&] {
            const Combinator k = gen.combinator(denoted_tree(gen, b));
            const TreeClass value = interpret(k, model);
            const MuCommand back = comb_to_mu(k);
            const std::string a = differ("comb " + to_string(k), phi(back, model), value);
            if (!a.empty()) return a;
            return differ("mu " + to_string(back), interpret(translate(back), model), value);
        });
    }

    LawResult& delta_mu = law("delta-is-mu");
    LawResult& delta_heads = law("delta-any-head");
    const TreeModel flat{TreeModel::Parameters::Flatten};
    for (std::size_t i = 0; i < o.instances; ++i) {
        const VernonGraph t = gen.two_level(b, std::max<std::size_t>(1, b - 1), 0.2);
        const TreeClass want = mu(t);
        check(delta_mu, [&] { return differ("delta on " + to_string(t), delta(t, flat), want); });
        check(delta_heads, [&] {
            const VernonGraph g = normal_form(t);
            if (classify(g).shape == TreeShape::Exceptional) return std::string();
            for (std::size_t h = 0; h < g.corollas().size(); ++h) {
                auto d = differ("delta at head " + std::to_string(h) + " on " + to_string(t), delta(t, flat, h), want);
                if (!d.empty()) return d;
            }
            return std::string();
        });
    }

    LawResult& delta_unit = law("delta-eta");
    for (std::size_t i = 0; i < o.instances; ++i) {
        check(delta_unit, [&] {
            const TreeClass f = operand(gen, b);
            const DecoratedInstance inst(Decoration::tree(f), gen.fresh_renaming(f.free_variables()));
            return differ("delta(eta f) on " + f.key(), delta(single_corolla(inst), flat), flat.embed(inst));
        });
    }

    // The associativity instance: T1 = {{f(x..), g(y,u..); (x~y)}, {h(z..)}; (u~z)}.
    LawResult& delta_a1 = law("delta-A1");
    {
        const Signature sig = default_signature();
        const auto inst = [&](const char* p, std::vector<const char*> vars) {
            const Decoration& d = sig.at(p);
            std::vector<std::pair<Variable, Variable>> pairs;
            for (std::size_t k = 0; k < vars.size(); ++k) pairs.emplace_back(Variable(vars[k]), d.profile_order()[k]);
            return DecoratedInstance(d, Bijection(pairs));
        };
        const DecoratedInstance fi = inst("p2", {"x", "x1"}), gi = inst("p3", {"y", "u", "y1"}), hi = inst("p2", {"z", "z1"});
        const TreeClass f = eta(fi), g = eta(gi), h = eta(hi);
        const DeltaTreeModel dm;
        const Variable x("x"), y("y"), u("u"), z("z");
        check(delta_a1, [&] {
            return differ("delta-derived A1", dm.compose(dm.compose(f, x, y, g), u, z, h), dm.compose(f, x, y, dm.compose(g, u, z, h)));
        });
        check(delta_a1, [&] {
            const TreeClass fg = canonicalize(VernonGraph({Corolla::ordinary(fi), Corolla::ordinary(gi)}, {Edge(x, y)}));
            const VernonGraph t1({Corolla::ordinary(as_parameter(fg)), Corolla::ordinary(as_parameter(h))}, {Edge(u, z)});
            return differ("delta(T1)", delta(t1, flat), dm.compose(dm.compose(f, x, y, g), u, z, h));
        });
        const LawReport random = check_operad_axioms(operad_ops(dm, "delta"), {std::min<std::size_t>(b, 3), o.seed, std::max<std::size_t>(1, o.instances / 4)});
        const LawResult& r = random.at("A1");
        delta_a1.instances += r.instances;
        delta_a1.failures += r.failures;
        if (delta_a1.witness.empty()) delta_a1.witness = r.witness;
    }
    return report;
}

// ---------------------------------------------------------------------------
// decompose

namespace {

/// The characterisation of a plucked subtree: connected, entry free in the
/// piece, every other free variable of the piece free in the whole tree.
std::string subtree_predicate(const VernonGraph& t, const PluckedSubtree& p) {
    const VarSet fv = p.tree.free_variables();
    if (fv.count(p.entry) == 0) return "entry " + p.entry.name() + " is not free in " + to_string(p.tree);
    for (const auto& v : set_minus(fv, p.entry)) {
        if (t.partner(v)) return "variable " + v.name() + " of " + to_string(p.tree) + " is bound in the tree";
    }
    if (classify(p.tree).shape != TreeShape::Ordinary) return to_string(p.tree) + " is not an ordinary tree";
    if (p.tree.corollas().size() >= t.corollas().size()) return "plucked subtree is not proper";
    return {};
}

}  // namespace

LawReport check_decompose_laws(const LawOptions& o) {
    Generator gen(o.seed * 1000003 + 5);
    LawReport report{"decompose", {}};
    report.results.reserve(32);
    auto law = [&](const char* name) -> LawResult& {
        report.results.push_back({name, 0, 0, {}});
        return report.results.back();
    };
    LawResult& surj = law("surjectivity");
    LawResult& grammar = law("normal-form-grammar");
    LawResult& inj = law("injectivity-witness");
    LawResult& recon = law("reconstruct");
    LawResult& pieces = law("subtree-characterisation");
    LawResult& partition = law("partition");
    LawResult& leaf = law("leaf-removal");

    std::vector<VernonGraph> corpus = enumerate_ordinary_trees(default_signature(), std::min<std::size_t>(o.bound, 5));
    for (std::size_t i = 0; i < o.instances; ++i) corpus.push_back(gen.ordinary_tree(gen.uniform(1, o.bound)));

    for (const auto& t : corpus) {
        const TreeClass cls = canonicalize(t);
        std::vector<MuCommand> commands;
        for (std::size_t c = 0; c < t.corollas().size(); ++c) {
            const MuCommand cmd = command_of(t, c);
            commands.push_back(cmd);
            check(surj, [&] { return differ("Phi(command_of) at " + std::to_string(c) + " of " + to_string(t), phi(cmd), cls); });
            check(grammar, [&] { return is_normal_form(cmd) ? std::string() : to_string(cmd) + " is not normal"; });
            check(recon, [&] { return differ("reconstruct at " + std::to_string(c) + " of " + to_string(t), reconstruct(t, c), cls); });
            check(partition, [&] {
                const Decomposition d = decomposition(t, c);
                std::vector<std::size_t> all{c};
                for (const auto& p : d.pieces) {
                    const std::string s = subtree_predicate(t, p);
                    if (!s.empty()) return s;
                    all.insert(all.end(), p.corollas.begin(), p.corollas.end());
                }
                std::sort(all.begin(), all.end());
                for (std::size_t k = 0; k < all.size(); ++k) {
                    if (all[k] != k) return "pieces do not partition the corollas of " + to_string(t);
                }
                return all.size() == t.corollas().size() ? std::string() : "pieces do not cover " + to_string(t);
            });
            for (const auto& v : t.corollas()[c].free_variables()) {
                if (!t.partner(v)) continue;
                check(pieces, [&] { return subtree_predicate(t, pluck(t, c, v)); });
            }
        }
        check(inj, [&] {
            std::set<std::string> closure;
            for (const auto& m : prime_closure(commands.front())) closure.insert(alpha_key(m));
            for (const auto& m : commands) {
                if (closure.count(alpha_key(m)) == 0) return to_string(m) + " missing from the rotation closure";
            }
            return std::string();
        });
        if (t.corollas().size() >= 2) {
            check(leaf, [&] {
                const std::size_t d = find_leaf_corolla(t);
                const VernonGraph rest = remove_leaf(t, d);
                std::size_t bound = 0;
                for (const auto& v : t.corollas()[d].free_variables()) bound += t.partner(v) ? 1 : 0;
                if (bound != 1) return "corolla " + std::to_string(d) + " is not a leaf of " + to_string(t);
                if (rest.corollas().size() + 1 != t.corollas().size()) return std::string("leaf removal size");
                if (classify(rest).shape != TreeShape::Ordinary) return "removal broke " + to_string(t);
                return std::string();
            });
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

std::vector<LawReport> run_suite(const std::string& suite, const LawOptions& options) {
    std::vector<LawReport> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "operad") {
        out.push_back(check_operad_axioms(options));
        known = true;
    }
    if (all || suite == "rewrite") {
        out.push_back(check_rewrite_laws(options));
        known = true;
    }
    if (all || suite == "monad") {
        out.push_back(check_monad_laws(options));
        known = true;
    }
    if (all || suite == "translate") {
        out.push_back(check_translate_laws(options));
        known = true;
    }
    if (all || suite == "decompose") {
        out.push_back(check_decompose_laws(options));
        known = true;
    }
    if (!known) throw DomainError("unknown suite '" + suite + "'");
    return out;
}

void print_report(std::ostream& out, const LawReport& report) {
    for (const auto& r : report.results) {
        out << (r.ok() ? "ok   " : "FAIL ") << report.suite << "/" << r.name << "  " << r.instances << " instances, "
            << r.failures << " failures\n";
        if (!r.witness.empty()) out << "  first counterexample: " << r.witness << "\n";
    }
}

}  // namespace vernon
