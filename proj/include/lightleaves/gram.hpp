#pragma once

// Signed Laurent monomials in the positive roots, per-subexpression epsilon
// factors and the two factorizations of the Gram determinant of a cell
// module: the epsilon product over Tab(y) (exact sign) and the
// Shapovalov-style product over reflections (sign undetermined).

#include <map>
#include <string>
#include <vector>

#include "lightleaves/leaves.hpp"

namespace lightleaves {

struct SignedRootMonomial {
    // sign: +1 or -1; when signKnown is false the monomial renders as "±".
    int sign = 1;
    bool signKnown = true;
    // Keys are positive roots in canonical all-nonnegative form; inserting a
    // negative root flips the sign once per unit of odd exponent. Exponents
    // may be negative in intermediate products; zero exponents are erased.
    std::map<Root, int> exponents;

    static SignedRootMonomial one() { return {}; }
    static SignedRootMonomial minusOne();
    static SignedRootMonomial unknownSign();

    void multiplyRoot(const Root& r, int exp);
    SignedRootMonomial& operator*=(const SignedRootMonomial& other);

    bool isPolynomial() const;  // all exponents >= 0
    long long totalDegree() const;
    // Exponent maps agree, signs ignored.
    bool sameMagnitude(const SignedRootMonomial& other) const;
    std::string toString() const;

    friend bool operator==(const SignedRootMonomial& a, const SignedRootMonomial& b) {
        return a.sign == b.sign && a.signKnown == b.signKnown && a.exponents == b.exponents;
    }
};

// Per-position factors: U0 -> w^{<i} alpha, D0 -> (w^{<i} alpha)^{-1},
// U1 -> 1, D1 -> -1.
std::vector<SignedRootMonomial> epsilonFactors(const SubexpressionRecord& rec);

// The seminormal norm gamma_e: product of the epsilon factors; +1 on the
// all-ones subexpression of a reduced word.
SignedRootMonomial gammaOf(const SubexpressionRecord& rec);

// det<.,.>_y as the product of gamma_e over e in Tab(y); carries an exact
// sign and, on valid data, only nonnegative exponents after cancellation.
SignedRootMonomial detEpsilonProduct(const Expression& expr, const Element& y, int guard = 20);
std::map<Element, SignedRootMonomial> detEpsilonProductAll(const Expression& expr, int guard = 20);

// det<.,.>_y as +- prod beta^{dim Delta_w(s_beta y)} over positive roots with
// s_beta y > y. Roots are enumerated up to depth k+1, which covers every
// contributing reflection; a bound defect would surface as a mismatch with
// the epsilon product.
SignedRootMonomial detShapovalov(const Expression& expr, const Element& y);
std::map<Element, SignedRootMonomial> detShapovalovAll(const Expression& expr);

// Equality of the exponent maps of the two factorizations.
bool checkShapovalov(const Expression& expr, const Element& y, int guard = 20);

}  // namespace lightleaves
