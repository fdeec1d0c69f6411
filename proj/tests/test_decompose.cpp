#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vernon/decompose.hpp"
#include "vernon/error.hpp"
#include "vernon/generate.hpp"
#include "vernon/text.hpp"
#include "vernon/translate.hpp"

using namespace vernon;

class DecomposeTest : public ::testing::Test {
protected:
    Document doc = fixtures::fgh(fixtures::fgh_tree);
    VernonGraph t = parse_tree(doc);
    std::size_t at(const char* name) const {
        for (std::size_t i = 0; i < t.corollas().size(); ++i) {
            if (t.corollas()[i].instance().decoration().name() == name) return i;
        }
        throw std::logic_error("no corolla");
    }
    MuCommand cmd(const char* s) const { return parse_mu_command(s, doc.workspace); }
    Variable V(const char* s) const { return Variable(s); }
};

TEST_F(DecomposeTest, PluckGoldens) {
    const PluckedSubtree hy = pluck(t, at("f"), V("y"));
    EXPECT_EQ(hy.entry, V("p"));
    EXPECT_EQ(hy.corollas, std::vector<std::size_t>{at("h")});
    EXPECT_EQ(free_vars(hy.tree), var_set({"p", "q"}));
    const PluckedSubtree gx = pluck(t, at("f"), V("x"));
    EXPECT_EQ(gx.entry, V("a"));
    EXPECT_EQ(gx.corollas, std::vector<std::size_t>{at("g")});
    for (const auto& p : {hy, gx}) {
        const auto matching = oracle::subtrees_matching(t, at("f"), p.at);
        ASSERT_EQ(matching.size(), 1u);
        EXPECT_EQ(matching[0], std::set<std::size_t>(p.corollas.begin(), p.corollas.end()));
    }
}

TEST_F(DecomposeTest, PluckPreconditions) {
    EXPECT_THROW(pluck(t, at("f"), V("z")), DomainError);
    EXPECT_THROW(pluck(t, at("f"), V("a")), DomainError);
}

TEST_F(DecomposeTest, Decompositions) {
    const Decomposition df = decomposition(t, at("f"));
    EXPECT_EQ(df.pieces.size(), 2u);
    const Decomposition dg = decomposition(t, at("g"));
    ASSERT_EQ(dg.pieces.size(), 1u);
    EXPECT_EQ(dg.pieces[0].corollas.size(), 2u);
    EXPECT_EQ(dg.pieces[0].entry, V("x"));
}

TEST_F(DecomposeTest, LeafRemoval) {
    const std::size_t leaf = find_leaf_corolla(t);
    EXPECT_NE(leaf, at("f"));
    const VernonGraph rest = remove_leaf(t, leaf);
    EXPECT_EQ(rest.corollas().size(), 2u);
    EXPECT_EQ(classify(rest).shape, TreeShape::Ordinary);
    EXPECT_THROW(remove_leaf(t, at("f")), Error);
    EXPECT_THROW(find_leaf_corolla(parse_tree("{ f(x,y,z,u) }", doc.workspace)), Error);
}

TEST_F(DecomposeTest, LeafOfAStarIsNotTheHub) {
    const VernonGraph star = parse_tree(
        "{ f(x,y,z,u), g(a,b,c,d), h(p,q), h(r,s), h(m,n) ; (x~a)(y~p)(z~r)(u~m) }", doc.workspace);
    const std::size_t leaf = find_leaf_corolla(star);
    EXPECT_NE(leaf, 0u);
}

TEST_F(DecomposeTest, CommandsAtEachCorolla) {
    const TreeClass cls = canonicalize(t);
    // The listed commands use w where the tree has u.
    const Bijection u_to_w{{"w", "u"}, {"z", "z"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"q", "q"}};
    EXPECT_TRUE(mu_alpha_eq(rename_expr(command_of(t, at("f")), u_to_w), cmd(fixtures::normal_forms[0])));
    EXPECT_TRUE(mu_alpha_eq(rename_expr(command_of(t, at("h")), u_to_w), cmd(fixtures::normal_forms[3])));
    for (std::size_t c = 0; c < 3; ++c) {
        const MuCommand m = command_of(t, c);
        EXPECT_TRUE(is_normal_form(m));
        EXPECT_EQ(phi(m), cls);
        EXPECT_EQ(reconstruct(t, c), cls);
    }
}

TEST(Decompose, ExceptionalAndSingleCorolla) {
    const VernonGraph u = exceptional_tree(Variable("s"), Variable("t"));
    EXPECT_TRUE(is_unit_command(command_of(u, 0)));
    const Document doc = fixtures::fgh("{ f(x,y,z,u) }");
    const VernonGraph one = parse_tree(doc);
    EXPECT_EQ(command_of(one, 0), parse_mu_command("f{x,y,z,u}", doc.workspace));
    EXPECT_TRUE(decomposition(one, 0).pieces.empty());
    EXPECT_EQ(reconstruct(one, 0), canonicalize(one));
}

TEST(Decompose, PluckMatchesOraclesOnSmallCorpus) {
    for (const auto& t : enumerate_ordinary_trees(default_signature(), 4)) {
        for (std::size_t c = 0; c < t.corollas().size(); ++c) {
            for (const auto& v : t.corollas()[c].free_variables()) {
                if (!t.partner(v)) continue;
                const PluckedSubtree p = pluck(t, c, v);
                const std::set<std::size_t> got(p.corollas.begin(), p.corollas.end());
                EXPECT_EQ(got, oracle::pluck_by_rules(t, c, v));
                const auto matching = oracle::subtrees_matching(t, c, v);
                ASSERT_EQ(matching.size(), 1u);
                EXPECT_EQ(matching[0], got);
            }
        }
    }
}
