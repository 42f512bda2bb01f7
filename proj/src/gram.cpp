#include "lightleaves/gram.hpp"

#include <functional>
#include <sstream>

namespace lightleaves {

SignedRootMonomial SignedRootMonomial::minusOne() {
    SignedRootMonomial m;
    m.sign = -1;
    return m;
}

SignedRootMonomial SignedRootMonomial::unknownSign() {
    SignedRootMonomial m;
    m.signKnown = false;
    return m;
}

void SignedRootMonomial::multiplyRoot(const Root& r, int exp) {
    if (exp == 0) return;
    Root key = r;
    if (r.isNegative()) {
        key = r.negated();
        if (exp % 2 != 0) sign = -sign;
    } else if (!r.isPositive()) {
        throw InternalError("SignedRootMonomial: mixed-sign vector is not a root: " +
                            rootToString(r));
    }
    auto it = exponents.find(key);
    if (it == exponents.end()) {
        exponents.emplace(std::move(key), exp);
    } else if ((it->second += exp) == 0) {
        exponents.erase(it);
    }
}

SignedRootMonomial& SignedRootMonomial::operator*=(const SignedRootMonomial& other) {
    sign *= other.sign;
    signKnown = signKnown && other.signKnown;
    for (const auto& [root, exp] : other.exponents) {
        auto it = exponents.find(root);
        if (it == exponents.end()) {
            exponents.emplace(root, exp);
        } else if ((it->second += exp) == 0) {
            exponents.erase(it);
        }
    }
    return *this;
}

bool SignedRootMonomial::isPolynomial() const {
    for (const auto& [root, exp] : exponents)
        if (exp < 0) return false;
    return true;
}

long long SignedRootMonomial::totalDegree() const {
    long long d = 0;
    for (const auto& [root, exp] : exponents) d += exp;
    return d;
}

bool SignedRootMonomial::sameMagnitude(const SignedRootMonomial& other) const {
    return exponents == other.exponents;
}

std::string SignedRootMonomial::toString() const {
    std::ostringstream os;
    os << (signKnown ? (sign < 0 ? "-" : "+") : "±");
    if (exponents.empty()) {
        os << "1";
        return os.str();
    }
    bool first = true;
    for (const auto& [root, exp] : exponents) {
        if (!first) os << "·";
        std::string r = rootToString(root);
        if (r.find('+') != std::string::npos || r.find('-') != std::string::npos)
            os << "(" << r << ")";
        else
            os << r;
        if (exp != 1) os << "^" << exp;
        first = false;
    }
    return os.str();
}

std::vector<SignedRootMonomial> epsilonFactors(const SubexpressionRecord& rec) {
    std::vector<SignedRootMonomial> out;
    out.reserve(rec.bits.size());
    for (int i = 0; i < static_cast<int>(rec.bits.size()); ++i) {
        SignedRootMonomial factor;
        switch (rec.symbols[i]) {
            case Symbol::U1:
                break;
            case Symbol::D1:
                factor.sign = -1;
                break;
            case Symbol::U0:
            case Symbol::D0: {
                Root r = apply(rec.expr.system, rec.prefixEndpoints[i],
                               rec.expr.system.simpleRoot(rec.expr.word[i]));
                factor.multiplyRoot(r, rec.symbols[i] == Symbol::U0 ? 1 : -1);
                break;
            }
        }
        out.push_back(std::move(factor));
    }
    return out;
}

SignedRootMonomial gammaOf(const SubexpressionRecord& rec) {
    SignedRootMonomial g;
    for (const auto& factor : epsilonFactors(rec)) g *= factor;
    return g;
}

std::map<Element, SignedRootMonomial> detEpsilonProductAll(const Expression& expr, int guard) {
    if (expr.size() > guard)
        throw GuardError("enumeration guard: word length " + std::to_string(expr.size()) +
                         " exceeds " + std::to_string(guard));
    std::map<Element, SignedRootMonomial> acc;
    const int k = expr.size();
    // Depth-first over bit vectors, accumulating the partial gamma along the
    // prefix; one root application per tree node serves both branches.
    std::function<void(int, const Element&, const SignedRootMonomial&)> walk =
        [&](int j, const Element& w, const SignedRootMonomial& g) {
            if (j == k) {
                acc[w] *= g;
                return;
            }
            Root r = apply(expr.system, w, expr.system.simpleRoot(expr.word[j]));
            bool up = r.isPositive();
            {
                SignedRootMonomial g0 = g;
                g0.multiplyRoot(r, up ? 1 : -1);
                walk(j + 1, w, g0);
            }
            {
                SignedRootMonomial g1 = g;
                if (!up) g1.sign = -g1.sign;
                walk(j + 1, multiply(expr.system, w, generatorElement(expr.system, expr.word[j])),
                     g1);
            }
        };
    walk(0, identityElement(expr.system), SignedRootMonomial::one());
    return acc;
}

SignedRootMonomial detEpsilonProduct(const Expression& expr, const Element& y, int guard) {
    auto all = detEpsilonProductAll(expr, guard);
    auto it = all.find(y);
    if (it == all.end())
        throw ConfigError("detEpsilonProduct: target is not expressible in the word");
    return it->second;
}

std::map<Element, SignedRootMonomial> detShapovalovAll(const Expression& expr) {
    auto dims = dimDeltaAll(expr);
    std::map<Element, int> lengths;
    for (const auto& [w, c] : dims) lengths.emplace(w, length(expr.system, w));
    auto table = positiveRootTable(expr.system, expr.size() + 1);

    std::map<Element, SignedRootMonomial> out;
    for (const auto& [y, cy] : dims) {
        SignedRootMonomial det = SignedRootMonomial::unknownSign();
        int ly = lengths.at(y);
        for (const auto& entry : table) {
            Element z = multiply(expr.system, entry.reflection, y);
            auto it = dims.find(z);
            if (it == dims.end() || it->second == 0) continue;
            if (lengths.at(z) <= ly) continue;  // need s_beta y > y
            // dim fits an int exponent at desk scale
            det.multiplyRoot(entry.root, static_cast<int>(it->second));
        }
        out.emplace(y, std::move(det));
    }
    return out;
}

SignedRootMonomial detShapovalov(const Expression& expr, const Element& y) {
    auto all = detShapovalovAll(expr);
    auto it = all.find(y);
    if (it == all.end())
        throw ConfigError("detShapovalov: target is not expressible in the word");
    return it->second;
}

bool checkShapovalov(const Expression& expr, const Element& y, int guard) {
    return detEpsilonProduct(expr, y, guard).sameMagnitude(detShapovalov(expr, y));
}

}  // namespace lightleaves
