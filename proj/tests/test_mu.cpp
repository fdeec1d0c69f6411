#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "vernon/error.hpp"
#include "vernon/generate.hpp"
#include "vernon/mu.hpp"
#include "vernon/text.hpp"

using namespace vernon;

class MuTest : public ::testing::Test {
protected:
    Document doc = fixtures::fgh("");
    MuCommand cmd(const char* s) const { return parse_mu_command(s, doc.workspace); }
    MuTerm term(const char* s) const { return parse_mu_term(s, doc.workspace); }

    bool contains_alpha(const std::vector<MuCommand>& cs, const MuCommand& c) const {
        return std::any_of(cs.begin(), cs.end(), [&](const MuCommand& d) { return mu_alpha_eq(c, d); });
    }
};

TEST_F(MuTest, Typing) {
    EXPECT_EQ(type_of(cmd(fixtures::star)), var_set({"b", "c", "d", "q", "z", "w"}));
    EXPECT_EQ(type_of(term("mu x. f{x,y,z,u}")), var_set({"y", "z", "u"}));
    EXPECT_EQ(type_of(cmd("<s|t>")), var_set({"s", "t"}));
    // A variable used twice.
    EXPECT_THROW(type_of(cmd("f{x,x,z,u}")), TypeError);
    // Binder not free in the body.
    EXPECT_THROW(type_of(term("mu n. f{x,y,z,u}")), TypeError);
    EXPECT_THROW(type_of(cmd("<s|s>")), TypeError);
}

TEST_F(MuTest, NamedAndPositionalArgumentsAgree) {
    EXPECT_EQ(cmd("f{u: w, x: s, y: t, z: r}"), cmd("f{s, t, r, w}"));
}

TEST_F(MuTest, SubstitutionTarget) {
    const MuCommand c = cmd("f{mu a. g{a,b,c,d}, y, z, w}");
    const MuCommand out = substitute(c, Variable("y"), term("mu p. h{p,q}"));
    EXPECT_TRUE(mu_alpha_eq(out, cmd(fixtures::normal_forms[0])));
    EXPECT_THROW(substitute(c, Variable("n"), term("s")), DomainError);
    EXPECT_THROW(substitute(c, Variable("y"), term("b")), ClashError);
}

TEST_F(MuTest, SubstitutionAvoidsCapture) {
    // Substituting a term with free a under the binder a must rename the binder.
    const MuCommand c = cmd("f{mu a. g{a,b,c,d}, y, z, w}");
    const MuCommand out = substitute(c, Variable("y"), term("a"));
    EXPECT_EQ(type_of(out), var_set({"a", "b", "c", "d", "z", "w"}));
    EXPECT_TRUE(mu_alpha_eq(out, cmd("f{mu n. g{n,b,c,d}, a, z, w}")));
}

TEST_F(MuTest, StepsOfTheStarCommand) {
    const auto steps = mu_step(cmd(fixtures::star));
    bool mu1 = false, target = false;
    for (const auto& s : steps) {
        if (s.rule == MuRule::MU1) mu1 = true;
        if (s.rule == MuRule::MU2 && mu_alpha_eq(s.result, cmd(fixtures::normal_forms[0]))) target = true;
    }
    EXPECT_TRUE(mu1);
    EXPECT_TRUE(target);
    EXPECT_EQ(binder_count(cmd(fixtures::star)), 3u);
    for (const auto& s : steps) {
        if (s.rule == MuRule::MU2) {
            EXPECT_LT(binder_count(s.result), 3u);
        }
    }
}

TEST_F(MuTest, NormalFormOfTheStarCommand) {
    const MuCommand nf = mu_normal_form(cmd(fixtures::star));
    EXPECT_TRUE(is_normal_form(nf));
    EXPECT_TRUE(mu_alpha_eq(nf, cmd(fixtures::normal_forms[0])));
    EXPECT_FALSE(is_normal_form(cmd(fixtures::star)));
}

TEST_F(MuTest, UnitCommandIsKept) {
    EXPECT_TRUE(is_unit_command(cmd("<s|t>")));
    EXPECT_EQ(mu_normal_form(cmd("<s|t>")), cmd("<s|t>"));
    EXPECT_FALSE(is_normal_form(cmd("<s|t>")));
    // A unit wrapped around a parameter reduces away.
    EXPECT_TRUE(mu_alpha_eq(mu_normal_form(cmd("<mu n. f{n,y,z,u} | s>")), cmd("f{s,y,z,u}")));
}

TEST_F(MuTest, RotationFromTheFirstNormalForm) {
    const auto rotated = prime_step(cmd(fixtures::normal_forms[0]));
    ASSERT_EQ(rotated.size(), 2u);
    EXPECT_TRUE(contains_alpha(rotated, cmd(fixtures::normal_forms[1])));
    EXPECT_TRUE(contains_alpha(rotated, cmd(fixtures::normal_forms[3])));
}

TEST_F(MuTest, ClosureOfEachListedFormContainsAllFive) {
    for (const char* start : fixtures::normal_forms) {
        const auto closure = prime_closure(cmd(start));
        EXPECT_EQ(closure.size(), 5u) << start;
        for (const char* other : fixtures::normal_forms) EXPECT_TRUE(contains_alpha(closure, cmd(other))) << start << " / " << other;
    }
}

TEST_F(MuTest, AlphaCanonicalForm) {
    const MuCommand a = cmd(fixtures::star);
    const MuCommand b = cmd("<mu s. f{mu t. g{t,b,c,d}, s, z, w} | mu r. h{r,q}>");
    EXPECT_TRUE(mu_alpha_eq(a, b));
    EXPECT_EQ(alpha_key(a), alpha_key(b));
    EXPECT_EQ(alpha_canonical(a), alpha_canonical(b));
    EXPECT_FALSE(mu_alpha_eq(a, cmd("<mu y. f{mu a. g{a,b,c,d}, y, w, z} | mu p. h{p,q}>")));
}

TEST_F(MuTest, RenamingFreeVariables) {
    const MuCommand c = cmd(fixtures::normal_forms[0]);
    const MuCommand r = rename_expr(c, Bijection{{"b", "b"}, {"c", "c"}, {"d", "d"}, {"q", "q"}, {"n", "z"}, {"w", "w"}});
    EXPECT_EQ(type_of(r), var_set({"b", "c", "d", "q", "n", "w"}));
    EXPECT_TRUE(mu_alpha_eq(r, cmd("f{mu a. g{a,b,c,d}, mu p. h{p,q}, n, w}")));
}

TEST_F(MuTest, PrintParseRoundTripOnGeneratedCommands) {
    Generator gen(41);
    Workspace ws;
    ws.signature = gen.signature();
    for (int i = 0; i < 100; ++i) {
        const MuCommand c = gen.command(gen.ordinary_tree(1 + i % 4));
        EXPECT_EQ(parse_mu_command(to_string(c), ws), c) << to_string(c);
        EXPECT_TRUE(is_normal_form(mu_normal_form(c)) || is_unit_command(mu_normal_form(c)));
    }
}
