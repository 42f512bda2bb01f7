#pragma once

// Hecke algebra over Z[q, q^{-1}] and the Kazhdan-Lusztig basis, used as the
// characteristic-zero decomposition oracle.
//
// Normalization: the standard basis {H_w} satisfies
//     H_w H_s = H_{ws}                    if ws > w,
//     H_w H_s = H_{ws} + (q^{-1} - q) H_w if ws < w,
// so b_s := H_s + q is fixed by the bar involution (q -> q^{-1},
// H_s -> H_s^{-1} = H_s + (q - q^{-1})). The KL basis element b_w is the
// unique bar-invariant H_w + sum_{y<w} h_{y,w} H_y with h_{y,w} in qZ[q];
// h_{y,w}(1) equals the classical P_{y,w}(1).

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "lightleaves/coxeter.hpp"

namespace lightleaves {

struct LaurentPoly {
    std::map<int, Int> coeffs;  // exponent -> coefficient, zeros omitted

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, Int c);

    bool isZero() const { return coeffs.empty(); }
    Int coeff(int exp) const;
    void add(int exp, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator*(const Int& c) const;

    LaurentPoly bar() const;  // q -> q^{-1}
    Int evalOne() const;
    // All exponents >= 1, i.e. the polynomial lies in qZ[q].
    bool inQZq() const;
    std::string toString() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs == b.coeffs;
    }
};

struct HeckeElement {
    std::map<Element, LaurentPoly> terms;  // zero polynomials omitted

    void add(const Element& w, const LaurentPoly& p);
    LaurentPoly coeff(const Element& w) const;
    bool isZero() const { return terms.empty(); }

    HeckeElement& operator+=(const HeckeElement& other);
    HeckeElement& operator-=(const HeckeElement& other);
    HeckeElement scaled(const LaurentPoly& p) const;

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.terms == b.terms;
    }
};

enum class Side { Left, Right };

HeckeElement heckeUnit(const CoxeterSystem& sys);
HeckeElement heckeGenerator(const CoxeterSystem& sys, int s);
HeckeElement multiplyByGenerator(const CoxeterSystem& sys, const HeckeElement& h, int s,
                                 Side side);
// H_{s_1} ... H_{s_k}; equals H_w when the word is reduced.
HeckeElement heckeProductOfWord(const CoxeterSystem& sys, const Word& word);

HeckeElement barInvolution(const CoxeterSystem& sys, const HeckeElement& h);

// Cache of KL basis elements; concurrent reads, serialized writes.
class KLCache {
public:
    KLCache() = default;
    explicit KLCache(std::string systemName) : systemName_(std::move(systemName)) {}

    std::optional<HeckeElement> get(const Element& w) const;
    void put(const Element& w, HeckeElement h);
    std::size_t size() const;
    const std::string& systemName() const { return systemName_; }
    std::map<Element, HeckeElement> snapshot() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<Element, HeckeElement> store_;
    std::string systemName_;
};

// b_w via the mu-recursion b_s b_{sw} = b_w + sum mu(y, sw) b_y, cached.
HeckeElement klBasisElement(const CoxeterSystem& sys, const Element& w, KLCache& cache);

// h_{y,w}; zero when y is not below w.
LaurentPoly klPolynomial(const CoxeterSystem& sys, const Element& y, const Element& w,
                         KLCache& cache);

// h_{y,w}(1), the ungraded oracle value.
Int klEvalAtOne(const CoxeterSystem& sys, const Element& y, const Element& w, KLCache& cache);

}  // namespace lightleaves
