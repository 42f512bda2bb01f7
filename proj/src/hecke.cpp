#include "lightleaves/hecke.hpp"

#include <mutex>
#include <sstream>

namespace lightleaves {

LaurentPoly LaurentPoly::monomial(int exp, Int c) {
    LaurentPoly p;
    if (c != 0) p.coeffs.emplace(exp, std::move(c));
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs.find(exp);
    return it == coeffs.end() ? Int(0) : it->second;
}

void LaurentPoly::add(int exp, const Int& c) {
    if (c == 0) return;
    auto it = coeffs.find(exp);
    if (it == coeffs.end()) {
        coeffs.emplace(exp, c);
    } else if ((it->second += c) == 0) {
        coeffs.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs) add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs) add(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : coeffs)
        for (const auto& [e2, c2] : other.coeffs) out.add(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, k] : coeffs) out.coeffs.emplace(e, k * c);
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs) out.coeffs.emplace(-e, c);
    return out;
}

Int LaurentPoly::evalOne() const {
    Int total = 0;
    for (const auto& [e, c] : coeffs) total += c;
    return total;
}

bool LaurentPoly::inQZq() const {
    for (const auto& [e, c] : coeffs)
        if (e < 1) return false;
    return true;
}

std::string LaurentPoly::toString() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        Int a = c < 0 ? Int(-c) : c;
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

void HeckeElement::add(const Element& w, const LaurentPoly& p) {
    if (p.isZero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, p);
    } else {
        it->second += p;
        if (it->second.isZero()) terms.erase(it);
    }
}

LaurentPoly HeckeElement::coeff(const Element& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? LaurentPoly::zero() : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
    for (const auto& [w, p] : other.terms) add(w, p);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
    for (const auto& [w, p] : other.terms) add(w, p * Int(-1));
    return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& p) const {
    HeckeElement out;
    for (const auto& [w, c] : terms) out.add(w, c * p);
    return out;
}

HeckeElement heckeUnit(const CoxeterSystem& sys) {
    HeckeElement h;
    h.add(identityElement(sys), LaurentPoly::one());
    return h;
}

HeckeElement heckeGenerator(const CoxeterSystem& sys, int s) {
    HeckeElement h;
    h.add(generatorElement(sys, s), LaurentPoly::one());
    return h;
}

HeckeElement multiplyByGenerator(const CoxeterSystem& sys, const HeckeElement& h, int s,
                                 Side side) {
    if (s < 0 || s >= sys.rank)
        throw ConfigError("multiplyByGenerator: generator index out of range");
    Element gen = generatorElement(sys, s);
    // q^{-1} - q
    LaurentPoly low = LaurentPoly::monomial(-1, 1);
    low.add(1, -1);
    HeckeElement out;
    for (const auto& [w, c] : h.terms) {
        bool ascends = side == Side::Right
                           ? apply(sys, w, sys.simpleRoot(s)).isPositive()
                           : apply(sys, inverseElement(w), sys.simpleRoot(s)).isPositive();
        Element ws = side == Side::Right ? multiply(sys, w, gen) : multiply(sys, gen, w);
        out.add(ws, c);
        if (!ascends) out.add(w, c * low);
    }
    return out;
}

HeckeElement heckeProductOfWord(const CoxeterSystem& sys, const Word& word) {
    HeckeElement h = heckeUnit(sys);
    for (int s : word) h = multiplyByGenerator(sys, h, s, Side::Right);
    return h;
}

HeckeElement barInvolution(const CoxeterSystem& sys, const HeckeElement& h) {
    // bar(H_s) = H_s^{-1} = H_s + (q - q^{-1}); bar is multiplicative, so
    // bar(H_w) is the product of bar(H_{s_i}) over any reduced word of w.
    LaurentPoly high = LaurentPoly::monomial(1, 1);
    high.add(-1, -1);
    HeckeElement out;
    for (const auto& [w, c] : h.terms) {
        HeckeElement barHw = heckeUnit(sys);
        for (int s : canonicalWord(sys, w)) {
            HeckeElement next = multiplyByGenerator(sys, barHw, s, Side::Right);
            next += barHw.scaled(high);
            barHw = std::move(next);
        }
        out += barHw.scaled(c.bar());
    }
    return out;
}

std::optional<HeckeElement> KLCache::get(const Element& w) const {
    std::shared_lock lock(mutex_);
    auto it = store_.find(w);
    if (it == store_.end()) return std::nullopt;
    return it->second;
}

void KLCache::put(const Element& w, HeckeElement h) {
    std::unique_lock lock(mutex_);
    store_.insert_or_assign(w, std::move(h));
}

std::size_t KLCache::size() const {
    std::shared_lock lock(mutex_);
    return store_.size();
}

std::map<Element, HeckeElement> KLCache::snapshot() const {
    std::shared_lock lock(mutex_);
    return store_;
}

HeckeElement klBasisElement(const CoxeterSystem& sys, const Element& w, KLCache& cache) {
    if (auto hit = cache.get(w)) return *hit;
    HeckeElement result;
    if (w.isIdentity()) {
        result = heckeUnit(sys);
    } else {
        auto lefts = leftDescents(sys, w);
        int s = lefts.front();
        Element v = multiply(sys, generatorElement(sys, s), w);  // sw, shorter
        HeckeElement bv = klBasisElement(sys, v, cache);
        // b_s b_v = b_w + sum over y with sy < y of mu(y, v) b_y
        result = multiplyByGenerator(sys, bv, s, Side::Left);
        result += bv.scaled(LaurentPoly::monomial(1, 1));
        for (const auto& [y, hy] : bv.terms) {
            if (y == v) continue;
            Int mu = hy.coeff(1);
            if (mu == 0) continue;
            if (apply(sys, inverseElement(y), sys.simpleRoot(s)).isPositive()) continue;  // sy > y
            result -= klBasisElement(sys, y, cache).scaled(LaurentPoly::monomial(0, mu));
        }
        for (const auto& [y, hy] : result.terms) {
            if (y == w) {
                if (!(hy == LaurentPoly::one()))
                    throw InternalError("klBasisElement: leading coefficient is not 1");
            } else if (!hy.inQZq()) {
                throw InternalError("klBasisElement: coefficient escapes qZ[q] at " +
                                    wordToString(canonicalWord(sys, y)));
            }
        }
    }
    cache.put(w, result);
    return result;
}

LaurentPoly klPolynomial(const CoxeterSystem& sys, const Element& y, const Element& w,
                         KLCache& cache) {
    return klBasisElement(sys, w, cache).coeff(y);
}

Int klEvalAtOne(const CoxeterSystem& sys, const Element& y, const Element& w, KLCache& cache) {
    return klPolynomial(sys, y, w, cache).evalOne();
}

}  // namespace lightleaves
