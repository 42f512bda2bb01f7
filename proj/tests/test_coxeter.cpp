#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "lightleaves/json_io.hpp"
#include "lightleaves/leaves.hpp"

using namespace lightleaves;
using lightleaves::testing::wordsUpTo;

namespace {

Root mk(std::vector<long long> v) {
    Root r;
    for (long long c : v) r.coords.emplace_back(c);
    return r;
}

CoxeterSystem affineA1() {
    return makeCoxeterSystem("affA1", {{1, 0}, {0, 1}}, {{{2, -2}, {-2, 2}}});
}

}  // namespace

TEST_CASE("presets validate and satisfy the braid relations") {
    for (const char* name : {"A1", "A2", "A3", "B2", "G2", "A1xA1"}) {
        CoxeterSystem sys = presetSystem(name);
        for (int s = 0; s < sys.rank; ++s)
            for (int t = s + 1; t < sys.rank; ++t) {
                int m = sys.coxeter[s][t];
                Element st = multiply(sys, generatorElement(sys, s), generatorElement(sys, t));
                Element pow = identityElement(sys);
                for (int i = 0; i < m; ++i) pow = multiply(sys, pow, st);
                CHECK(pow.isIdentity());
            }
    }
    CHECK_THROWS_AS(presetSystem("H3"), ConfigError);
}

TEST_CASE("apply") {
    CoxeterSystem A1 = presetSystem("A1");
    CHECK(apply(A1, generatorElement(A1, 0), mk({1})) == mk({-1}));

    CoxeterSystem A2 = presetSystem("A2");
    CHECK(apply(A2, generatorElement(A2, 0), A2.simpleRoot(1)) == mk({1, 1}));
    CHECK(apply(A2, identityElement(A2), A2.simpleRoot(0)) == mk({1, 0}));
    CHECK_THROWS_AS(apply(A2, identityElement(A2), mk({1})), ConfigError);

    // Group action law on a sample of words.
    for (const Word& uw : wordsUpTo(2, 3))
        for (const Word& vw : wordsUpTo(2, 3)) {
            Element u = wordToElement(A2, uw);
            Element v = wordToElement(A2, vw);
            Root beta = mk({1, -2});
            CHECK(apply(A2, multiply(A2, u, v), beta) == apply(A2, u, apply(A2, v, beta)));
        }
}

TEST_CASE("wordToElement") {
    CoxeterSystem A1 = presetSystem("A1");
    CHECK(wordToElement(A1, {0, 0}).isIdentity());
    CHECK(wordToElement(A1, {}).isIdentity());

    CoxeterSystem A2 = presetSystem("A2");
    CHECK(wordToElement(A2, {0, 1, 0}) == wordToElement(A2, {1, 0, 1}));
    CHECK_THROWS_AS(wordToElement(A2, {2}), ConfigError);
}

TEST_CASE("length") {
    CoxeterSystem A2 = presetSystem("A2");
    CHECK(length(A2, identityElement(A2)) == 0);
    CHECK(length(A2, wordToElement(A2, {0, 1, 0})) == 3);
    CoxeterSystem A1 = presetSystem("A1");
    CHECK(length(A1, wordToElement(A1, {0, 0})) == 0);
}

TEST_CASE("descent sets match brute force over apply") {
    CoxeterSystem A2 = presetSystem("A2");
    CHECK(rightDescents(A2, identityElement(A2)).empty());
    CHECK(rightDescents(A2, wordToElement(A2, {0, 1})) == std::vector<int>{1});
    CHECK(rightDescents(A2, wordToElement(A2, {0, 1, 0})) == std::vector<int>({0, 1}));

    for (const Word& w : wordsUpTo(2, 5)) {
        Element el = wordToElement(A2, w);
        std::vector<int> brute;
        for (int s = 0; s < 2; ++s)
            if (apply(A2, el, A2.simpleRoot(s)).isNegative()) brute.push_back(s);
        CHECK(rightDescents(A2, el) == brute);
        std::vector<int> bruteLeft;
        for (int s = 0; s < 2; ++s)
            if (apply(A2, inverseElement(el), A2.simpleRoot(s)).isNegative()) bruteLeft.push_back(s);
        CHECK(leftDescents(A2, el) == bruteLeft);
    }
}

TEST_CASE("canonical word is ShortLex minimal") {
    CoxeterSystem A3 = presetSystem("A3");
    // s3 s1 = s1 s3; ShortLex picks the s1-first spelling.
    CHECK(canonicalWord(A3, wordToElement(A3, {2, 0})) == Word({0, 2}));
    CoxeterSystem A2 = presetSystem("A2");
    CHECK(canonicalWord(A2, wordToElement(A2, {1, 0, 1})) == Word({0, 1, 0}));
    CHECK(canonicalWord(A2, identityElement(A2)).empty());

    // Minimality against every reduced word (exhaustive over A3 words <= 4).
    for (const Word& w : wordsUpTo(3, 4)) {
        Element el = wordToElement(A3, w);
        Word canon = canonicalWord(A3, el);
        CHECK(static_cast<int>(canon.size()) == length(A3, el));
        CHECK(wordToElement(A3, canon) == el);
        if (w.size() == canon.size()) CHECK(!(w < canon));
        CHECK(multiply(A3, el, inverseElement(el)).isIdentity());
    }
}

TEST_CASE("bruhatLeq agrees with the subword criterion") {
    CoxeterSystem A2 = presetSystem("A2");
    CHECK(bruhatLeq(A2, identityElement(A2), wordToElement(A2, {0, 1})));
    CHECK_FALSE(bruhatLeq(A2, generatorElement(A2, 0), generatorElement(A2, 1)));
    CHECK(bruhatLeq(A2, generatorElement(A2, 1), wordToElement(A2, {0, 1, 0})));

    auto crossCheck = [](const CoxeterSystem& sys, const std::vector<Element>& elements) {
        for (const Element& y : elements) {
            auto endpoints = dimDeltaAll(Expression(sys, canonicalWord(sys, y)));
            for (const Element& x : elements)
                CHECK(bruhatLeq(sys, x, y) == (endpoints.count(x) != 0));
        }
    };
    for (const char* name : {"A2", "B2", "A1xA1"}) {
        CoxeterSystem sys = presetSystem(name);
        crossCheck(sys, *wholeGroup(sys));
    }
    CoxeterSystem aff = affineA1();
    crossCheck(aff, enumerateElements(aff, 5).elements);
}

TEST_CASE("reflectionForRoot") {
    CoxeterSystem A2 = presetSystem("A2");
    CHECK(reflectionForRoot(A2, mk({1, 0})) == generatorElement(A2, 0));
    CHECK(reflectionForRoot(A2, mk({1, 1})) == wordToElement(A2, {0, 1, 0}));
    CoxeterSystem A1 = presetSystem("A1");
    CHECK(reflectionForRoot(A1, mk({1})) == generatorElement(A1, 0));
    CHECK_THROWS_AS(reflectionForRoot(A2, mk({2, 1})), ConfigError);
    CHECK_THROWS_AS(reflectionForRoot(A2, mk({-1, 0})), ConfigError);

    // s_beta negates beta, fixes the complementary inversion count, and is an
    // involution; both factorizations beta = z alpha_s give the same element.
    for (const auto& entry : positiveRootTable(A2, 4)) {
        CHECK(apply(A2, entry.reflection, entry.root) == entry.root.negated());
        CHECK(multiply(A2, entry.reflection, entry.reflection).isIdentity());
    }
    Element viaS1 = multiply(A2, multiply(A2, generatorElement(A2, 0), generatorElement(A2, 1)),
                             generatorElement(A2, 0));
    Element viaS2 = multiply(A2, multiply(A2, generatorElement(A2, 1), generatorElement(A2, 0)),
                             generatorElement(A2, 1));
    CHECK(viaS1 == viaS2);
    CHECK(reflectionForRoot(A2, mk({1, 1})) == viaS1);
}

TEST_CASE("enumeratePositiveRoots") {
    CHECK(enumeratePositiveRoots(presetSystem("A1"), 5).size() == 1);
    CHECK(enumeratePositiveRoots(presetSystem("A1"), 1).size() == 1);
    auto rootsA2 = enumeratePositiveRoots(presetSystem("A2"), 3);
    CHECK(rootsA2 == std::vector<Root>({mk({0, 1}), mk({1, 0}), mk({1, 1})}));
    CHECK(enumeratePositiveRoots(presetSystem("A2"), 9) == rootsA2);
    CHECK(enumeratePositiveRoots(presetSystem("B2"), 5).size() == 4);
    CHECK(enumeratePositiveRoots(presetSystem("G2"), 7).size() == 6);
    CHECK_THROWS_AS(enumeratePositiveRoots(presetSystem("A2"), 0), ConfigError);
    // Affine A1 has infinitely many; the bound caps the depth.
    CoxeterSystem aff = affineA1();
    CHECK(enumeratePositiveRoots(aff, 1).size() == 2);
    CHECK(enumeratePositiveRoots(aff, 2).size() == 4);
    CHECK(enumeratePositiveRoots(aff, 3).size() == 6);
}

TEST_CASE("the realization permutes roots and counts inversions") {
    for (const char* name : {"A2", "B2"}) {
        CoxeterSystem sys = presetSystem(name);
        auto positives = enumeratePositiveRoots(sys, 9);
        for (const Word& w : wordsUpTo(2, 5)) {
            Element el = wordToElement(sys, w);
            for (int s = 0; s < sys.rank; ++s) {
                Root img = apply(sys, el, sys.simpleRoot(s));
                CHECK((img.isPositive() || img.isNegative()));
            }
            int inversions = 0;
            for (const Root& beta : positives)
                if (apply(sys, el, beta).isNegative()) ++inversions;
            CHECK(inversions == length(sys, el));
        }
    }
}

TEST_CASE("system configuration: JSON and validation") {
    CoxeterSystem B2 = presetSystem("B2");
    Json j = systemToJson(B2);
    CoxeterSystem back = systemFromJson(j);
    CHECK(systemToJson(back) == j);
    CHECK(back.cartan == B2.cartan);

    auto fails = [](const char* what, Json j) {
        try {
            systemFromJson(j);
            FAIL_CHECK(what);
            return std::string();
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
    };
    // Every validation error names the offending pair.
    CHECK(fails("m_ss", Json{{"coxeter_matrix", {{2}}}}).find("(s1,s1)") != std::string::npos);
    CHECK(fails("asym", Json{{"coxeter_matrix", {{1, 3}, {2, 1}}}}).find("(s1,s2)") !=
          std::string::npos);
    CHECK(fails("m=5", Json{{"coxeter_matrix", {{1, 5}, {5, 1}}}}).find("(s1,s2)") !=
          std::string::npos);
    CHECK(fails("default m=4", Json{{"coxeter_matrix", {{1, 4}, {4, 1}}}}).find("(s1,s2)") !=
          std::string::npos);
    CHECK(fails("product", Json{{"coxeter_matrix", {{1, 3}, {3, 1}}},
                                {"cartan_matrix", {{2, -1}, {-2, 2}}}})
              .find("(s1,s2)") != std::string::npos);
    // Product fine (0) but the braid relation fails for the lopsided pairing.
    CHECK(fails("braid", Json{{"coxeter_matrix", {{1, 2}, {2, 1}}},
                              {"cartan_matrix", {{2, 0}, {-5, 2}}}})
              .find("braid") != std::string::npos);
    // m = infinity requires an explicit Cartan with product >= 4.
    CHECK_NOTHROW(systemFromJson(Json{{"coxeter_matrix", {{1, 0}, {0, 1}}},
                                      {"cartan_matrix", {{2, -2}, {-2, 2}}}}));
    CHECK(fails("inf product", Json{{"coxeter_matrix", {{1, 0}, {0, 1}}},
                                    {"cartan_matrix", {{2, -1}, {-2, 2}}}})
              .find(">= 4") != std::string::npos);
}

TEST_CASE("affine A1 grows without saturating") {
    CoxeterSystem aff = affineA1();
    GroupSlice slice = enumerateElements(aff, 6);
    CHECK_FALSE(slice.complete);
    CHECK(slice.elements.size() == 13);  // 1 + 2 per length
    CHECK(wholeGroup(aff, 200) == std::nullopt);
    CHECK(wholeGroup(presetSystem("A3"))->size() == 24);
}
