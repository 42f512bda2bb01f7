// Acceptance suite: one pass/fail line per criterion. Exit code = number of
// failed criteria.

#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "lightleaves/decomp.hpp"
#include "lightleaves/json_io.hpp"

using namespace lightleaves;
using lightleaves::testing::detBareiss;
using lightleaves::testing::wordsUpTo;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;

    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

Root mk(std::vector<long long> v) {
    Root r;
    for (long long c : v) r.coords.emplace_back(c);
    return r;
}

SignedRootMonomial mono(int sign, std::vector<std::pair<Root, int>> factors) {
    SignedRootMonomial m;
    m.sign = sign;
    for (auto& [root, exp] : factors) m.multiplyRoot(root, exp);
    return m;
}

using Bits = std::vector<std::uint8_t>;
using Listing = std::set<std::pair<Bits, std::vector<std::string>>>;

Listing listing(const Expression& expr, const Element& y) {
    Listing out;
    for (const auto& rec : tab(expr, y)) {
        std::vector<std::string> syms;
        for (Symbol m : rec.symbols) syms.emplace_back(symbolName(m));
        out.insert({rec.bits, syms});
    }
    return out;
}

Listing expected(std::vector<std::pair<Bits, std::vector<std::string>>> rows) {
    return Listing(rows.begin(), rows.end());
}

// The corpus of criterion 3: every word of length <= 8 over the rank-2
// systems and <= 6 over A3. Criteria 4, 5 and the structural parts of 9 run
// over the same sweep.
struct SweepOutcome {
    long long words = 0;
    long long shapChecked = 0;
    long long separationPairs = 0;
    long long branchingChecked = 0;
    long long epsPolynomials = 0;
    long long reducedGammas = 0;
    bool shapOk = true;
    bool separationOk = true;
    bool branchingOk = true;
    bool epsOk = true;
    bool gammaOk = true;
};

void sweepSystem(const CoxeterSystem& sys, int maxLen, SweepOutcome& out) {
    for (const Word& w : wordsUpTo(sys.rank, maxLen)) {
        ++out.words;
        Expression expr(sys, w);
        const int k = expr.size();

        // (3) the Shapovalov identity, every expressible target.
        auto eps = detEpsilonProductAll(expr);
        auto shap = detShapovalovAll(expr);
        for (const auto& [y, m] : eps) {
            ++out.shapChecked;
            if (!m.sameMagnitude(shap.at(y))) out.shapOk = false;
            if (!m.isPolynomial()) out.epsOk = false;  // (9) exponents >= 0
            ++out.epsPolynomials;
        }

        // (9) gamma = +1 on the all-ones subexpression of reduced words.
        auto allOnes = symbols(expr, Bits(k, 1));
        if (length(sys, allOnes.endpoint()) == k) {
            ++out.reducedGammas;
            if (!(gammaOf(allOnes) == SignedRootMonomial::one())) out.gammaOk = false;
        }

        // (5) branching against the word with the last letter dropped.
        {
            Expression prefix(sys, Word(w.begin(), w.end() - 1));
            Element gen = generatorElement(sys, w.back());
            auto dims = dimDeltaAll(expr);
            auto sub = dimDeltaAll(prefix);
            auto get = [&](const Element& y) {
                auto it = sub.find(y);
                return it == sub.end() ? Int(0) : it->second;
            };
            for (const auto& [y, d] : dims) {
                ++out.branchingChecked;
                if (d != get(y) + get(multiply(sys, y, gen))) out.branchingOk = false;
            }
        }

        // (4) separation at the first differing index, all pairs.
        auto records = enumerateSubexpressions(expr);
        std::map<Root, int> intern;
        std::vector<std::vector<int>> ids(records.size());
        std::vector<std::uint32_t> masks(records.size(), 0);
        for (std::size_t r = 0; r < records.size(); ++r) {
            ids[r].resize(k);
            for (int a = 0; a < k; ++a) {
                if (records[r].bits[a]) {
                    masks[r] |= (1u << a);
                    ids[r][a] = 0;
                } else {
                    auto [it, fresh] = intern.emplace(*contentAt(records[r], a),
                                                      static_cast<int>(intern.size()) + 1);
                    ids[r][a] = it->second;
                }
            }
        }
        for (std::size_t i = 0; i < records.size(); ++i)
            for (std::size_t j = i + 1; j < records.size(); ++j) {
                ++out.separationPairs;
                int a = std::countr_zero(masks[i] ^ masks[j]);
                if (ids[i][a] == ids[j][a]) out.separationOk = false;
            }
    }
}

std::vector<std::vector<Element>> allIdeals(const CoxeterSystem& sys) {
    auto group = *wholeGroup(sys);
    const std::size_t n = group.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = bruhatLeq(sys, group[i], group[j]);
    std::vector<std::vector<Element>> out;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool closed = true;
        for (std::size_t j = 0; j < n && closed; ++j) {
            if (!(mask & (1ull << j))) continue;
            for (std::size_t i = 0; i < n && closed; ++i)
                if (leq[i][j] && !(mask & (1ull << i))) closed = false;
        }
        if (!closed) continue;
        std::vector<Element> members;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) members.push_back(group[j]);
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

int main() {
    auto started = std::chrono::steady_clock::now();
    std::vector<Criterion> criteria;

    CoxeterSystem A1 = presetSystem("A1");
    CoxeterSystem A2 = presetSystem("A2");
    CoxeterSystem A3 = presetSystem("A3");
    Element w0A2 = wordToElement(A2, {0, 1, 0});

    // ---- 1: determinant pins, exact ------------------------------------
    {
        Criterion c{1, "determinant pins (ss, sss)"};
        Expression ss(A1, {0, 0});
        Expression sss(A1, {0, 0, 0});
        Element one = identityElement(A1);
        Element s = generatorElement(A1, 0);
        c.expect(detEpsilonProduct(ss, one) == mono(-1, {{mk({1}), 2}}), "det(ss,1) != -a^2");
        c.expect(detEpsilonProduct(sss, one) == mono(1, {{mk({1}), 4}}), "det(sss,1) != +a^4");
        SignedRootMonomial detS2 = detEpsilonProduct(ss, s);
        c.expect(detS2.exponents.empty() && detS2.sign == -1, "det(ss,s) != -1");
        SignedRootMonomial detS3 = detEpsilonProduct(sss, s);
        c.expect(detS3.exponents.empty() && detS3.sign == 1, "det(sss,s) != +1");
        criteria.push_back(c);
    }

    // ---- 2: Tab/symbol listings verbatim --------------------------------
    {
        Criterion c{2, "Tab listings match the pinned tables"};
        Expression ss(A1, {0, 0});
        c.expect(listing(ss, identityElement(A1)) ==
                     expected({{{0, 0}, {"U0", "U0"}}, {{1, 1}, {"U1", "D1"}}}),
                 "Tab_ss(1)");
        c.expect(listing(ss, generatorElement(A1, 0)) ==
                     expected({{{0, 1}, {"U0", "U1"}}, {{1, 0}, {"U1", "D0"}}}),
                 "Tab_ss(s)");
        Expression sss(A1, {0, 0, 0});
        c.expect(listing(sss, identityElement(A1)) ==
                     expected({{{0, 0, 0}, {"U0", "U0", "U0"}},
                               {{1, 1, 0}, {"U1", "D1", "U0"}},
                               {{0, 1, 1}, {"U0", "U1", "D1"}},
                               {{1, 0, 1}, {"U1", "D0", "D1"}}}),
                 "Tab_sss(1)");
        c.expect(listing(sss, generatorElement(A1, 0)) ==
                     expected({{{0, 0, 1}, {"U0", "U0", "U1"}},
                               {{1, 1, 1}, {"U1", "D1", "U1"}},
                               {{0, 1, 0}, {"U0", "U1", "D0"}},
                               {{1, 0, 0}, {"U1", "D0", "D0"}}}),
                 "Tab_sss(s)");
        Expression w0(A2, {0, 1, 0});
        c.expect(listing(w0, identityElement(A2)) ==
                     expected({{{0, 0, 0}, {"U0", "U0", "U0"}}, {{1, 0, 1}, {"U1", "U0", "D1"}}}),
                 "Tab_s1s2s1(1)");
        c.expect(listing(w0, generatorElement(A2, 0)) ==
                     expected({{{1, 0, 0}, {"U1", "U0", "D0"}}, {{0, 0, 1}, {"U0", "U0", "U1"}}}),
                 "Tab_s1s2s1(s1)");
        c.expect(listing(w0, wordToElement(A2, {0, 1})) == expected({{{1, 1, 0}, {"U1", "U1", "U0"}}}),
                 "Tab_s1s2s1(s1s2)");
        c.expect(listing(w0, w0A2) == expected({{{1, 1, 1}, {"U1", "U1", "U1"}}}),
                 "Tab_s1s2s1(s1s2s1)");
        criteria.push_back(c);
    }

    // ---- 3/4/5 + structural parts of 9: the corpus sweep ----------------
    SweepOutcome sweep;
    sweepSystem(A1, 8, sweep);
    sweepSystem(A2, 8, sweep);
    sweepSystem(presetSystem("B2"), 8, sweep);
    sweepSystem(presetSystem("A1xA1"), 8, sweep);
    sweepSystem(A3, 6, sweep);
    {
        Criterion c{3, "Shapovalov identity, exhaustive"};
        c.expect(sweep.shapOk, "exponent multisets differ somewhere");
        c.detail = std::to_string(sweep.shapChecked) + " (word,target) pairs over " +
                   std::to_string(sweep.words) + " words";
        criteria.push_back(c);

        Criterion c4{4, "separation at the first differing index"};
        c4.expect(sweep.separationOk, "equal contents at a first differing index");
        c4.detail = std::to_string(sweep.separationPairs) + " pairs";
        criteria.push_back(c4);

        Criterion c5{5, "branching recursion"};
        c5.expect(sweep.branchingOk, "dim recursion fails");
        c5.detail = std::to_string(sweep.branchingChecked) + " (word,target) pairs";
        criteria.push_back(c5);
    }

    // ---- 6: sum formulas ------------------------------------------------
    {
        Criterion c{6, "sum formulas on A2 with pi = W"};
        BruhatIdeal full = idealFromElement(A2, w0A2);
        auto atS2 = sumFormulaRHS(full, generatorElement(A2, 1), Valuation::char0());
        GrothendieckVector wantS2;
        wantS2.add(wordToElement(A2, {0, 1}), 1);
        wantS2.add(wordToElement(A2, {1, 0}), 1);
        c.expect(atS2 == wantS2, "RHS at s2");
        auto atS2S1 = sumFormulaRHS(full, wordToElement(A2, {1, 0}), Valuation::char0());
        GrothendieckVector wantS2S1;
        wantS2S1.add(w0A2, 1);
        c.expect(atS2S1 == wantS2S1, "RHS at s2s1");
        for (int p : {3, 5, 7})
            for (const auto& [y, word] : full.words)
                c.expect(sumFormulaRHS(full, y, Valuation::charP(p)).coeffs ==
                             sumFormulaRHS(full, y, Valuation::char0()).coeffs,
                         "char-p coefficients differ at p = " + std::to_string(p));
        criteria.push_back(c);
    }

    // ---- 7: decomposition solver ----------------------------------------
    {
        Criterion c{7, "decomposition solver on A2"};
        BruhatIdeal full = idealFromElement(A2, w0A2);
        DecompositionBounds bounds = solveBounds(full, Valuation::char0());
        Element e = identityElement(A2);
        Element s1 = generatorElement(A2, 0);
        Element s2 = generatorElement(A2, 1);
        Element s1s2 = wordToElement(A2, {0, 1});
        Element s2s1 = wordToElement(A2, {1, 0});
        std::set<std::pair<Element, Element>> expectedOpen = {
            {s1, w0A2}, {s2, w0A2}, {e, s1s2}, {e, s2s1}, {e, w0A2}};
        for (const auto& [key, value] : bounds.entries) {
            bool shouldBeOpen = expectedOpen.count(key) != 0;
            c.expect(value.settled() == !shouldBeOpen,
                     "settled pattern differs at (" +
                         wordToString(full.words.at(key.first)) + "," +
                         wordToString(full.words.at(key.second)) + ")");
            c.expect(value.lo <= 1 && 1 <= value.hi, "interval misses 1");
        }
        c.expect(bounds.entries.size() == 19, "entry count");

        KLCache cache("A2");
        OracleReport report = klOracleCompare(full, bounds, cache);
        c.expect(report.consistent(), "oracle conflict");
        for (const OracleRow& row : report.rows)
            c.expect(row.oracle == 1, "an A2 oracle value differs from 1");

        for (int p : {5, 7})
            c.expect(solveBounds(full, Valuation::charP(p)).entries == bounds.entries,
                     "char-p intervals differ at p = " + std::to_string(p));
        criteria.push_back(c);
    }

    // ---- 8: KL oracle ----------------------------------------------------
    {
        Criterion c{8, "KL oracle properties"};
        for (const char* name : {"A2", "B2", "A3"}) {
            CoxeterSystem sys = presetSystem(name);
            KLCache cache(name);
            auto group = *wholeGroup(sys);
            for (const Element& w : group) {
                if (length(sys, w) > 6) continue;
                HeckeElement bw = klBasisElement(sys, w, cache);
                c.expect(barInvolution(sys, bw) == bw,
                         std::string("bar-self-duality fails in ") + name);
                for (const auto& [y, p] : bw.terms) {
                    if (y == w)
                        c.expect(p == LaurentPoly::one(), "leading coefficient");
                    else
                        c.expect(p.inQZq(), std::string("h outside qZ[q] in ") + name);
                }
            }
        }
        KLCache cacheA3("A3");
        c.expect(klEvalAtOne(A3, generatorElement(A3, 1), wordToElement(A3, {1, 0, 2, 1}),
                             cacheA3) == 2,
                 "h_{s2, s2s1s3s2}(1) != 2");
        KLCache cacheA2("A2");
        auto groupA2 = *wholeGroup(A2);
        for (const Element& y : groupA2)
            for (const Element& w : groupA2) {
                Int expect = bruhatLeq(A2, y, w) ? 1 : 0;
                c.expect(klEvalAtOne(A2, y, w, cacheA2) == expect, "A2 oracle value != 1");
            }
        criteria.push_back(c);
    }

    // ---- 9: structural properties ----------------------------------------
    {
        Criterion c{9, "structural properties"};
        c.expect(sweep.epsOk, "negative exponent in an epsilon-product determinant");
        c.expect(sweep.gammaOk, "gamma != +1 on an all-ones reduced subexpression");
        c.detail = std::to_string(sweep.reducedGammas) + " reduced words; ";
        std::size_t idealsChecked = 0;
        for (const char* name : {"A2", "B2"}) {
            CoxeterSystem sys = presetSystem(name);
            for (const auto& members : allIdeals(sys)) {
                BruhatIdeal ideal = idealFromMembers(sys, members);
                Int det = detBareiss(phiMatrix(ideal));
                c.expect(det == 1 || det == -1, std::string("Phi not unimodular in ") + name);
                ++idealsChecked;
            }
        }
        c.detail += std::to_string(idealsChecked) + " ideals";
        criteria.push_back(c);
    }

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::cout << "criterion " << c.id << " [" << c.name << "]: "
                  << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        if (!c.pass) ++failures;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
              << " in " << elapsed << " ms\n";
    return failures;
}
