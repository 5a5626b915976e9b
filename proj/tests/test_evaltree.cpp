#include <doctest.h>

#include <random>
#include <set>

#include "golden.hpp"
#include "oracle.hpp"
#include "seqlogic/equiv.hpp"
#include "seqlogic/evaltree.hpp"

using namespace seqlogic;
using golden::F;
using golden::N;
using golden::T;

TEST_CASE("replace") {
    Tree y = N("b", T(), F());
    Tree z = N("c", F(), F());
    CHECK(replace(T(), {{Leaf::T, y}, {Leaf::F, z}}) == y);
    CHECK(replace(F(), {{Leaf::F, T()}}) == T());
    CHECK(replace(N("a", T(), F()), {{Leaf::T, F()}, {Leaf::F, T()}}) == N("a", F(), T()));
    // Unlisted labels stay put.
    CHECK(replace(N("a", T(), F()), {{Leaf::T, y}}) == N("a", y, F()));
    CHECK(replace(N("a", hole(), Tree::leaf(Leaf::Hole2)), {{Leaf::Hole, T()}}) ==
          N("a", T(), Tree::leaf(Leaf::Hole2)));
}

TEST_CASE("fe, se and ce on the published examples") {
    CHECK(fe(parse("T")) == T());
    CHECK(fe(parse("a | b")) == golden::fe_a_or_b());
    CHECK(fe(parse("(a & b) | c")) == golden::fe_and_or());
    CHECK(fe(parse("(a | b) & c")) == golden::fe_or_and());
    CHECK(se(parse("a || b")) == golden::se_a_or_b());
    CHECK(se(parse("(a && b) || c")) == golden::se_and_or());
    CHECK(se(parse("(a || b) && c")) == golden::se_or_and());
    CHECK(se(parse("F")) == F());
    CHECK(ce(parse("b ? a : c")) == N("b", N("a", T(), F()), N("c", T(), F())));
    CHECK(ce(parse("a ? T : F")) == N("a", T(), F()));
    CHECK(ce(parse("a && b")) == se(parse("a && b")));
}

TEST_CASE("evaluators reject foreign connectives") {
    CHECK_THROWS_AS(fe(parse("a && b")), LanguageError);
    CHECK_THROWS_AS(fe(parse("a ? b : c")), LanguageError);
    CHECK_THROWS_AS(se(parse("a & b")), LanguageError);
    CHECK_THROWS_AS(se(parse("a ? b : c")), LanguageError);
    CHECK_NOTHROW(ce(parse("a & b || c ? a : !b")));
}

TEST_CASE("traces") {
    std::vector<std::string> got;
    for (const Trace& t : traces(fe(parse("(a & b) | c")))) got.push_back(format_trace(t));
    CHECK(got == golden::traces_and_or());

    auto leaf = traces(T());
    REQUIRE(leaf.size() == 1);
    CHECK(leaf[0].path.empty());
    CHECK(leaf[0].yield);

    auto two = traces(N("a", T(), F()));
    REQUIRE(two.size() == 2);
    CHECK(format_trace(two[0]) == "aT -> T");
    CHECK(format_trace(two[1]) == "aF -> F");
    CHECK(from_traces(two) == N("a", T(), F()));
}

TEST_CASE("from_traces rejects broken sets") {
    Trace a{{{"a", true}}, true};
    Trace b{{{"b", false}}, false};
    CHECK_THROWS_AS(from_traces({a}), std::invalid_argument);
    CHECK_THROWS_AS(from_traces({a, b}), std::invalid_argument);
    CHECK_THROWS_AS(from_traces({}), std::invalid_argument);
}

TEST_CASE("memorize") {
    CHECK(memorize(T()) == T());
    CHECK(memorize(N("a", T(), F())) == N("a", T(), F()));
    CHECK(memorize(se(parse("a && a"))) == N("a", N("a", T(), T()), F()));
    // a held false on the right: the inner a keeps its right branch.
    CHECK(memorize(N("a", T(), N("a", T(), F()))) == N("a", T(), N("a", F(), F())));
    // Only the nearest knowledge about each atom matters; b is unaffected.
    CHECK(memorize(N("a", N("b", N("a", F(), T()), T()), F())) == N("a", N("b", N("a", F(), F()), T()), F()));
}

TEST_CASE("depth, perfection and leaf queries") {
    CHECK(N("a", T(), F()).depth() == 1);
    CHECK(T().depth() == 0);
    CHECK_FALSE(N("a", T(), T()).contains(Leaf::F));
    CHECK(N("a", T(), F()).contains(Leaf::F));
    CHECK(golden::fe_and_or().is_perfect());
    CHECK_FALSE(golden::se_and_or().is_perfect());
    CHECK(golden::fe_and_or().leaf_count() == 8);
}

TEST_CASE("text format") {
    CHECK(to_text(N("a", T(), F())) == "(T <| a |> F)");
    CHECK(to_text(N("a", Tree::leaf(Leaf::Hole1), N("b", hole(), Tree::leaf(Leaf::Hole2)))) ==
          "([1] <| a |> ([] <| b |> [2]))");
    CHECK(to_text(golden::se_a_or_b()) == "(T <| a |> (T <| b |> F))");
    CHECK(parse_tree("(T <| a |> (T <| b |> F))") == golden::se_a_or_b());
    CHECK(parse_tree(" ( [1]<|a|>[] ) ") == N("a", Tree::leaf(Leaf::Hole1), hole()));
    CHECK_THROWS_AS(parse_tree("(T <| A |> F)"), ParseError);
    CHECK_THROWS_AS(parse_tree("(T <| a |> F"), ParseError);
    CHECK_THROWS_AS(parse_tree("Tx"), ParseError);
    CHECK_THROWS_AS(parse_tree(""), ParseError);
}

TEST_CASE("dot output has one node per position") {
    std::string dot = to_dot(golden::fe_and_or());
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("[label=", pos)) != std::string::npos) {
        ++pos;
        ++nodes;
    }
    pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++pos;
        ++edges;
    }
    CHECK(edges == 14);
    CHECK(nodes == 15 + 14);  // node labels plus edge labels
    CHECK(dot.find("[label=\"T\"]") != std::string::npos);
    CHECK(dot.find("[label=\"F\"]") != std::string::npos);
}

TEST_CASE("property: evaluators agree with the operational interpreter") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        for (Language lang : {Language::ST, Language::FT, Language::CT, Language::MIXED}) {
            Term t = gen_term(lang, 8, 3, seed);
            INFO(print(t));
            Tree expect = oracle::operational_tree(t);
            REQUIRE(ce(t) == expect);
            if (lang == Language::ST) CHECK(se(t) == expect);
            if (lang == Language::FT) CHECK(fe(t) == expect);
        }
    }
}

TEST_CASE("property: sequential substitution lemma") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        Tree x = oracle::random_tree(rng, 4);
        Tree y = oracle::random_tree(rng, 3);
        Tree z = oracle::random_tree(rng, 3);
        Tree both = replace(x, {{Leaf::T, y}, {Leaf::F, z}});
        if (!y.contains(Leaf::F)) CHECK(replace(replace(x, {{Leaf::T, y}}), {{Leaf::F, z}}) == both);
        if (!z.contains(Leaf::T)) CHECK(replace(replace(x, {{Leaf::F, z}}), {{Leaf::T, y}}) == both);
    }
}

TEST_CASE("property: negation and double negation") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Term s = gen_term(Language::ST, 8, 3, seed);
        Term f = gen_term(Language::FT, 8, 3, seed);
        CHECK(se(Term::negate(Term::negate(s))) == se(s));
        CHECK(fe(Term::negate(Term::negate(f))) == fe(f));
        CHECK(se(Term::negate(s)) == replace(se(s), {{Leaf::T, F()}, {Leaf::F, T()}}));
        CHECK(fe(Term::negate(f)) == replace(fe(f), {{Leaf::T, F()}, {Leaf::F, T()}}));
    }
}

TEST_CASE("property: fe trees are perfect with depth equal to atom occurrences") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Term f = gen_term(Language::FT, 10, 3, seed);
        Tree x = fe(f);
        CHECK(x.is_perfect());
        CHECK(x.depth() == f.atom_count());
    }
}

TEST_CASE("property: traces rebuild the tree; text round trips; memorize is idempotent") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Tree x = ce(gen_term(Language::MIXED, 8, 3, seed));
        auto ts = traces(x);
        CHECK(ts.size() == x.leaf_count());
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        for (const Trace& t : ts) CHECK(t.path.size() <= x.depth());
        CHECK(from_traces(ts) == x);
        CHECK(parse_tree(to_text(x)) == x);
        Tree m = memorize(x);
        CHECK(memorize(m) == m);
    }
}
