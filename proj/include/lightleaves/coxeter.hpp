#pragma once

// Exact crystallographic realizations of Coxeter systems.
//
// A system is given by its Coxeter matrix (m_st, with 0 standing for infinity)
// and an integer Cartan matrix a_st = <alpha_s^vee, alpha_t>. Group elements
// are stored as exact integer matrices acting on the root lattice in the
// simple-root basis (column t = image of alpha_t), together with the matrix of
// the inverse. All arithmetic is arbitrary precision: coordinates grow without
// bound in infinite systems.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lightleaves/errors.hpp"

namespace lightleaves {

using Int = boost::multiprecision::cpp_int;

// A word in the generators, 0-based indices. Not necessarily reduced.
using Word = std::vector<int>;

// Vector in the root lattice, simple-root coordinates.
struct Root {
    std::vector<Int> coords;

    Root() = default;
    explicit Root(std::vector<Int> c) : coords(std::move(c)) {}

    bool isZero() const;
    // Nonzero with all coordinates >= 0 (resp. <= 0).
    bool isPositive() const;
    bool isNegative() const;
    Root negated() const;
    // Coordinate sum.
    Int height() const;

    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
};

struct CoxeterSystem {
    std::string name;
    int rank = 0;
    // m_st; m_ss = 1, m_st = m_ts, 0 encodes infinity.
    std::vector<std::vector<int>> coxeter;
    // a_st = <alpha_s^vee, alpha_t>; a_ss = 2, a_st <= 0 off diagonal.
    std::vector<std::vector<int>> cartan;

    Root simpleRoot(int s) const;
};

// Builds and validates a system. When cartan is absent the simply-laced
// default applies (a_st = -1 for m_st = 3, 0 for m_st = 2); any m in
// {4, 6, infinity} then raises ConfigError. Validation errors name the
// offending (s,t) pair and include the braid relation check
// (sigma_s sigma_t)^{m_st} = id for every finite m_st.
CoxeterSystem makeCoxeterSystem(const std::string& name,
                                std::vector<std::vector<int>> coxeter,
                                std::optional<std::vector<std::vector<int>>> cartan = std::nullopt);

// Named presets: A1, A2, A3, B2, G2, A1xA1.
CoxeterSystem presetSystem(const std::string& name);

// Group element as matrix on the root lattice plus the matrix of its inverse.
// Two elements are equal iff their matrices are; the canonical word is a pure
// function of the matrix (see canonicalWord).
struct Element {
    int rank = 0;
    std::vector<Int> mat;  // row-major rank x rank
    std::vector<Int> inv;  // matrix of the inverse element

    bool isIdentity() const;

    friend bool operator==(const Element& a, const Element& b) { return a.mat == b.mat; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    friend bool operator<(const Element& a, const Element& b) { return a.mat < b.mat; }
};

Element identityElement(const CoxeterSystem& sys);
Element generatorElement(const CoxeterSystem& sys, int s);
Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b);
Element inverseElement(const Element& a);

// Product of generator matrices in word order; the empty word is the identity.
Element wordToElement(const CoxeterSystem& sys, const Word& word);

// Matrix-vector action on the root lattice.
Root apply(const CoxeterSystem& sys, const Element& w, const Root& beta);

// Length by right-descent stripping (s is a right descent iff w alpha_s < 0,
// i.e. column s of the matrix is nonpositive).
int length(const CoxeterSystem& sys, const Element& w);

std::vector<int> rightDescents(const CoxeterSystem& sys, const Element& w);
std::vector<int> leftDescents(const CoxeterSystem& sys, const Element& w);

// ShortLex-minimal reduced word: repeatedly strip the smallest left descent.
Word canonicalWord(const CoxeterSystem& sys, const Element& w);

bool bruhatLeq(const CoxeterSystem& sys, const Element& x, const Element& y);

// Positive roots u * alpha_s with length(u) < lengthBound, deduplicated, each
// with the associated reflection u s u^{-1}. The walk stops early once the
// group is exhausted, so for finite W and a large enough bound this is the
// full positive system.
struct ReflectionEntry {
    Root root;
    Element reflection;
};
std::vector<ReflectionEntry> positiveRootTable(const CoxeterSystem& sys, int lengthBound);

std::vector<Root> enumeratePositiveRoots(const CoxeterSystem& sys, int lengthBound);

// The element acting as the reflection in a positive root beta; searches the
// reflection orbit up to searchBound (default: 1 + height of beta in small
// steps, capped). Throws ConfigError if beta is not recognized as a root.
Element reflectionForRoot(const CoxeterSystem& sys, const Root& beta, int searchBound = -1);

// All elements of length <= maxLength (BFS, deduplicated). complete is true
// when the group was exhausted before the bound.
struct GroupSlice {
    std::vector<Element> elements;
    bool complete = false;
};
GroupSlice enumerateElements(const CoxeterSystem& sys, int maxLength, std::size_t cap = 100000);

// Convenience: the whole group if it is finite within cap, nullopt otherwise.
std::optional<std::vector<Element>> wholeGroup(const CoxeterSystem& sys, std::size_t cap = 100000);

// 1-based generator label, "s1"..."sn".
std::string generatorName(int s);
// Pretty form of a word, e.g. "s1s2s1"; "e" for the empty word.
std::string wordToString(const Word& w);
// Pretty form of a root, e.g. "a1+2a2" with alpha spelled out in UTF-8.
std::string rootToString(const Root& r);

}  // namespace lightleaves
