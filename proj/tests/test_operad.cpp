#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "vernon/error.hpp"
#include "vernon/laws.hpp"
#include "vernon/operad.hpp"
#include "vernon/text.hpp"
#include "vernon/translate.hpp"

using namespace vernon;

namespace {

Variable V(const char* s) { return Variable(s); }

}  // namespace

class OperadGolden : public ::testing::Test {
protected:
    Document doc = fixtures::fgh("");
    TreeClass tree(const char* s) const { return canonicalize(parse_tree(s, doc.workspace)); }
};

TEST_F(OperadGolden, PartialComposition) {
    const TreeClass out = vt_compose(tree("{ f(x,y,z,u) }"), V("x"), V("a"), tree("{ g(a,b,c,d) }"));
    EXPECT_EQ(out, tree("{ f(x,y,z,u), g(a,b,c,d) ; (x~a) }"));
    EXPECT_EQ(out.free_variables(), var_set({"y", "z", "u", "b", "c", "d"}));
}

TEST_F(OperadGolden, CompositionWithUnitRenames) {
    const TreeClass f = tree("{ f(x,y,z,u) }");
    EXPECT_EQ(vt_compose(f, V("x"), V("s"), vt_unit(V("s"), V("t"))), tree("{ f(t,y,z,u) }"));
    EXPECT_EQ(vt_compose(vt_unit(V("t"), V("s")), V("s"), V("x"), f), tree("{ f(t,y,z,u) }"));
}

TEST_F(OperadGolden, CompositionErrors) {
    const TreeClass f = tree("{ f(x,y,z,u) }");
    const TreeClass g = tree("{ g(a,b,c,d) }");
    EXPECT_THROW(vt_compose(f, V("q"), V("a"), g), DomainError);
    EXPECT_THROW(vt_compose(f, V("x"), V("a"), tree("{ g(a,y,c,d) }")), ClashError);
}

TEST_F(OperadGolden, Action) {
    const TreeClass t = tree(fixtures::fgh_tree);
    const TreeClass r = vt_action(t, Bijection{{"z1", "z"}, {"u", "u"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"q", "q"}});
    EXPECT_EQ(r, tree("{ f(x,y,z1,u), g(a,b,c,d), h(p,q) ; (x~a)(y~p) }"));
    EXPECT_THROW(vt_action(t, Bijection{{"z1", "z"}}), DomainError);
}

TEST_F(OperadGolden, TotalCompositionBuildsTheThreeCorollaTree) {
    const TreeModel model;
    Assignment<TreeClass> phi;
    phi.emplace(V("x"), AssignmentEntry<TreeClass>{tree("{ g(a,b,c,d) }"), V("a")});
    phi.emplace(V("y"), AssignmentEntry<TreeClass>{tree("{ h(p,q) }"), V("p")});
    phi.emplace(V("z"), AssignmentEntry<TreeClass>{vt_unit(V("z"), V("n1")), V("n1")});
    phi.emplace(V("u"), AssignmentEntry<TreeClass>{vt_unit(V("u"), V("n2")), V("n2")});
    const TreeClass f = tree("{ f(x,y,z,u) }");
    const TreeClass expected = tree(fixtures::fgh_tree);
    EXPECT_EQ(total_composition(model, f, phi), expected);
    EXPECT_EQ(total_composition(model, f, phi, {.policy = RenamingPolicy::FreshAll}), expected);
    EXPECT_EQ(total_composition(model, f, phi, {.order = {V("u"), V("z"), V("y"), V("x")}}), expected);
}

TEST_F(OperadGolden, TotalCompositionRenamesClashingEntries) {
    // The residue of the operand at x is {y}, which is also an entry of f.
    const TreeModel model;
    Assignment<TreeClass> phi;
    phi.emplace(V("x"), AssignmentEntry<TreeClass>{tree("{ g(a,y,c,d) }"), V("a")});
    phi.emplace(V("y"), AssignmentEntry<TreeClass>{vt_unit(V("y0"), V("n")), V("n")});
    phi.emplace(V("z"), AssignmentEntry<TreeClass>{vt_unit(V("z"), V("n")), V("n")});
    phi.emplace(V("u"), AssignmentEntry<TreeClass>{vt_unit(V("u"), V("n")), V("n")});
    const TreeClass out = total_composition(model, tree("{ f(x,y,z,u) }"), phi);
    EXPECT_EQ(out, tree("{ f(x,y0,z,u), g(a,y,c,d) ; (x~a) }"));
}

TEST(Assignment, ShapeChecks) {
    std::map<Variable, std::pair<VarSet, Variable>> ok{{V("x"), {var_set({"a", "b"}), V("a")}}, {V("y"), {var_set({"c"}), V("c")}}};
    EXPECT_NO_THROW(check_assignment(var_set({"x", "y"}), ok));
    EXPECT_THROW(check_assignment(var_set({"x", "y", "z"}), ok), DomainError);
    std::map<Variable, std::pair<VarSet, Variable>> outside{{V("x"), {var_set({"a"}), V("q")}}};
    EXPECT_THROW(check_assignment(var_set({"x"}), outside), DomainError);
    std::map<Variable, std::pair<VarSet, Variable>> clash{{V("x"), {var_set({"a", "b"}), V("a")}}, {V("y"), {var_set({"b", "c"}), V("c")}}};
    EXPECT_THROW(check_assignment(var_set({"x", "y"}), clash), ClashError);
}

TEST(Axioms, TreeModelSmall) {
    const LawReport r = check_operad_axioms({.bound = 3, .seed = 5, .instances = 60});
    for (const char* law : {"A1", "A2", "EQ", "U1", "U2", "U3", "CO"}) {
        EXPECT_TRUE(r.at(law).ok()) << law << ": " << r.at(law).witness;
        EXPECT_EQ(r.at(law).instances, 60u);
    }
}

TEST(Axioms, DeltaModelSmall) {
    const LawReport r = check_operad_axioms(operad_ops(DeltaTreeModel{}, "delta"), {.bound = 3, .seed = 9, .instances = 30});
    EXPECT_TRUE(r.ok());
}
