#include <gtest/gtest.h>

#include <algorithm>

#include "vernon/error.hpp"
#include "vernon/naming.hpp"

using namespace vernon;

namespace {

Variable V(const char* s) { return Variable(s); }

/// Every bijection from `from` onto `to` (same size).
std::vector<Bijection> all_bijections(const std::vector<Variable>& from, std::vector<Variable> to) {
    std::vector<Bijection> out;
    std::sort(to.begin(), to.end());
    do {
        std::vector<std::pair<Variable, Variable>> pairs;
        for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from[i], to[i]);
        out.emplace_back(pairs);
    } while (std::next_permutation(to.begin(), to.end()));
    return out;
}

}  // namespace

TEST(Variable, OrderPutsGeneratedNamesAfterPlainOnes) {
    EXPECT_LT(V("x"), V("x#0"));
    EXPECT_LT(V("x#2"), V("x#10"));
    EXPECT_LT(V("x#10"), V("y"));
    EXPECT_LT(V("a"), V("b"));
}

TEST(Variable, RejectsMalformedNames) {
    EXPECT_THROW(V(""), DomainError);
    EXPECT_THROW(V("1x"), DomainError);
    EXPECT_THROW(V("x#"), DomainError);
    EXPECT_THROW(V("x#a"), DomainError);
    EXPECT_THROW(Variable::user("x#1"), DomainError);
    EXPECT_TRUE(V("x#3").is_generated());
    EXPECT_EQ(V("x#3").suffix(), 3u);
}

TEST(Bijection, Restrict) {
    EXPECT_EQ(restrict(Bijection{{"a", "x"}, {"b", "y"}}, var_set({"x"})), (Bijection{{"a", "x"}}));
    EXPECT_EQ(restrict(Bijection{{"a", "x"}}, {}), Bijection{});
    EXPECT_EQ(restrict(Bijection{{"a", "x"}, {"b", "y"}, {"c", "z"}}, var_set({"y", "z"})), (Bijection{{"b", "y"}, {"c", "z"}}));
    EXPECT_THROW(restrict(Bijection{{"a", "x"}}, var_set({"q"})), DomainError);
}

TEST(Bijection, ExtendFixpoint) {
    EXPECT_EQ(extend_fixpoint(Bijection{{"a", "x"}}, V("u")), (Bijection{{"a", "x"}, {"u", "u"}}));
    EXPECT_EQ(extend_fixpoint(Bijection{}, V("u")), (Bijection{{"u", "u"}}));
    EXPECT_THROW(extend_fixpoint(Bijection{{"a", "x"}}, V("a")), ClashError);
}

TEST(Bijection, ReplaceDomain) {
    EXPECT_EQ(replace_domain(Bijection{{"a", "x"}}, V("b"), V("a")), (Bijection{{"b", "x"}}));
    EXPECT_EQ(replace_domain(Bijection{{"a", "x"}, {"c", "z"}}, V("b"), V("c")), (Bijection{{"a", "x"}, {"b", "z"}}));
    EXPECT_EQ(replace_domain(Bijection{{"a", "x"}}, V("a"), V("a")), (Bijection{{"a", "x"}}));
    EXPECT_THROW(replace_domain(Bijection{{"a", "x"}}, V("b"), V("q")), DomainError);
    EXPECT_THROW(replace_domain(Bijection{{"a", "x"}, {"c", "z"}}, V("a"), V("c")), ClashError);
}

TEST(Bijection, DisjointUnion) {
    EXPECT_EQ(disjoint_union(Bijection{{"a", "x"}}, Bijection{{"b", "y"}}), (Bijection{{"a", "x"}, {"b", "y"}}));
    EXPECT_EQ(disjoint_union(Bijection{}, Bijection{{"b", "y"}}), (Bijection{{"b", "y"}}));
    EXPECT_THROW(disjoint_union(Bijection{{"a", "x"}}, Bijection{{"a", "y"}}), ClashError);
}

TEST(Fresh, MinimalCounter) {
    EXPECT_EQ(fresh("x", var_set({"x"})), V("x#0"));
    EXPECT_EQ(fresh("x", {V("x"), V("x#0")}), V("x#1"));
    EXPECT_EQ(fresh("v", {}), V("v#0"));
    EXPECT_EQ(fresh("x#4", {}), V("x#0"));
}

TEST(Fresh, InjectiveOverGrowingAvoidSet) {
    VarSet avoid = var_set({"x", "y"});
    for (int i = 0; i < 50; ++i) {
        const Variable v = fresh("x", avoid);
        EXPECT_EQ(avoid.count(v), 0u);
        avoid.insert(v);
    }
    EXPECT_EQ(avoid.size(), 52u);
}

TEST(BijectionProperty, RestrictThenUnionReconstructs) {
    const std::vector<Variable> dom{V("a"), V("b"), V("c"), V("d")};
    const std::vector<Variable> cod{V("w"), V("x"), V("y"), V("z")};
    for (const auto& sigma : all_bijections(dom, cod)) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            VarSet left, right;
            for (unsigned i = 0; i < 4; ++i) ((mask >> i) & 1 ? left : right).insert(cod[i]);
            EXPECT_EQ(disjoint_union(restrict(sigma, left), restrict(sigma, right)), sigma);
        }
    }
}

TEST(BijectionProperty, ReplaceTwiceIsIdentity) {
    const std::vector<Variable> dom{V("a"), V("b"), V("c")};
    for (const auto& sigma : all_bijections(dom, {V("x"), V("y"), V("z")})) {
        for (const auto& x : dom) {
            const Variable y = fresh("n", sigma.domain());
            EXPECT_EQ(replace_domain(replace_domain(sigma, y, x), x, y), sigma);
        }
    }
}

TEST(BijectionProperty, InverseAndComposition) {
    const std::vector<Variable> a{V("a"), V("b"), V("c")};
    const std::vector<Variable> x{V("x"), V("y"), V("z")};
    for (const auto& s : all_bijections(a, x)) {
        EXPECT_TRUE(s.inverse().after(s).is_identity());
        for (const auto& v : a) EXPECT_EQ(s.inverse_at(s(v)), v);
    }
}
