#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lightleaves/decomp.hpp"
#include "lightleaves/json_io.hpp"

namespace py = pybind11;
using namespace lightleaves;

namespace {

std::vector<long long> rootToPy(const Root& r) {
    std::vector<long long> out;
    out.reserve(r.coords.size());
    for (const Int& c : r.coords) out.push_back(toInt64(c));
    return out;
}

Root rootFromPy(const std::vector<long long>& coords) {
    Root r;
    for (long long c : coords) r.coords.emplace_back(c);
    return r;
}

py::dict polyToPy(const LaurentPoly& p) {
    py::dict d;
    for (const auto& [e, c] : p.coeffs) d[py::int_(e)] = py::int_(toInt64(c));
    return d;
}

py::dict coeffsToPy(const std::map<Element, Int>& coeffs) {
    py::dict d;
    for (const auto& [w, c] : coeffs) d[py::cast(w)] = py::int_(toInt64(c));
    return d;
}

std::size_t elementHash(const Element& w) {
    std::size_t h = 1469598103934665603ull;
    for (const Int& v : w.mat) {
        h ^= std::hash<std::string>{}(v.str());
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Coxeter/Bruhat combinatorics: light-leaves indexing data, Gram "
              "determinant factorizations, Jantzen-type sum formulas and a "
              "Kazhdan-Lusztig oracle.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<CoxeterSystem>(m, "CoxeterSystem")
        .def_readonly("name", &CoxeterSystem::name)
        .def_readonly("rank", &CoxeterSystem::rank)
        .def_readonly("coxeter_matrix", &CoxeterSystem::coxeter)
        .def_readonly("cartan_matrix", &CoxeterSystem::cartan)
        .def("simple_root", [](const CoxeterSystem& s, int i) { return rootToPy(s.simpleRoot(i)); })
        .def("to_json", [](const CoxeterSystem& s) { return systemToJson(s).dump(); })
        .def("__repr__", [](const CoxeterSystem& s) {
            return "<CoxeterSystem " + s.name + " rank " + std::to_string(s.rank) + ">";
        });

    m.def("preset_system", &presetSystem, py::arg("name"));
    m.def("make_system", &makeCoxeterSystem, py::arg("name"), py::arg("coxeter_matrix"),
          py::arg("cartan_matrix") = std::nullopt);
    m.def("system_from_json",
          [](const std::string& text) { return systemFromJson(Json::parse(text)); });

    py::class_<Element>(m, "Element")
        .def("is_identity", &Element::isIdentity)
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__lt__", [](const Element& a, const Element& b) { return a < b; })
        .def("__hash__", &elementHash)
        .def("__repr__", [](const Element& w) { return "<Element rank " + std::to_string(w.rank) + ">"; });

    m.def("identity", &identityElement, py::arg("system"));
    m.def("generator", &generatorElement, py::arg("system"), py::arg("s"));
    m.def("multiply", &multiply);
    m.def("inverse", &inverseElement);
    m.def("word_to_element", &wordToElement, py::arg("system"), py::arg("word"));
    m.def("apply", [](const CoxeterSystem& sys, const Element& w, const std::vector<long long>& beta) {
        return rootToPy(apply(sys, w, rootFromPy(beta)));
    });
    m.def("length", &length);
    m.def("canonical_word", &canonicalWord);
    m.def("word_string",
          [](const CoxeterSystem& sys, const Element& w) { return wordToString(canonicalWord(sys, w)); });
    m.def("right_descents", &rightDescents);
    m.def("left_descents", &leftDescents);
    m.def("bruhat_leq", &bruhatLeq);
    m.def("reflection_for_root",
          [](const CoxeterSystem& sys, const std::vector<long long>& beta, int bound) {
              return reflectionForRoot(sys, rootFromPy(beta), bound);
          },
          py::arg("system"), py::arg("root"), py::arg("search_bound") = -1);
    m.def("positive_roots", [](const CoxeterSystem& sys, int bound) {
        std::vector<std::vector<long long>> out;
        for (const Root& r : enumeratePositiveRoots(sys, bound)) out.push_back(rootToPy(r));
        return out;
    });

    py::class_<Expression>(m, "Expression")
        .def(py::init<CoxeterSystem, Word>(), py::arg("system"), py::arg("word"))
        .def_readonly("system", &Expression::system)
        .def_readonly("word", &Expression::word)
        .def("__len__", &Expression::size);

    py::class_<SubexpressionRecord>(m, "SubexpressionRecord")
        .def_property_readonly("bits",
                               [](const SubexpressionRecord& r) {
                                   std::vector<int> out(r.bits.begin(), r.bits.end());
                                   return out;
                               })
        .def_property_readonly("symbols",
                               [](const SubexpressionRecord& r) {
                                   std::vector<std::string> out;
                                   for (Symbol s : r.symbols) out.emplace_back(symbolName(s));
                                   return out;
                               })
        .def_property_readonly("endpoint", &SubexpressionRecord::endpoint)
        .def_property_readonly("prefix_endpoints",
                               [](const SubexpressionRecord& r) { return r.prefixEndpoints; })
        .def("content",
             [](const SubexpressionRecord& r) {
                 py::list out;
                 for (const ContentEntry& e : content(r))
                     out.append(e ? py::object(py::cast(rootToPy(*e))) : py::none());
                 return out;
             })
        .def("to_json", [](const SubexpressionRecord& r) { return recordToJson(r).dump(); });

    m.def("symbols", [](const Expression& expr, const std::vector<int>& bits) {
        return symbols(expr, std::vector<std::uint8_t>(bits.begin(), bits.end()));
    });
    m.def("enumerate_subexpressions", &enumerateSubexpressions, py::arg("expr"),
          py::arg("guard") = 20);
    m.def("tab", &tab, py::arg("expr"), py::arg("target"), py::arg("guard") = 20);
    m.def("dim_delta",
          [](const Expression& expr, const Element& y) { return toInt64(dimDelta(expr, y)); });
    m.def("dim_delta_all",
          [](const Expression& expr) { return coeffsToPy(dimDeltaAll(expr)); });
    m.def("path_dominance_leq", &pathDominanceLeq);
    m.def("separation_witness", &separationWitness);

    py::class_<SignedRootMonomial>(m, "SignedRootMonomial")
        .def_property_readonly("sign",
                               [](const SignedRootMonomial& s) -> py::object {
                                   if (!s.signKnown) return py::none();
                                   return py::int_(s.sign);
                               })
        .def_property_readonly("exponents",
                               [](const SignedRootMonomial& s) {
                                   std::vector<std::pair<std::vector<long long>, int>> out;
                                   for (const auto& [root, exp] : s.exponents)
                                       out.emplace_back(rootToPy(root), exp);
                                   return out;
                               })
        .def("is_polynomial", &SignedRootMonomial::isPolynomial)
        .def("total_degree", &SignedRootMonomial::totalDegree)
        .def("same_magnitude", &SignedRootMonomial::sameMagnitude)
        .def("to_json", [](const SignedRootMonomial& s) { return monomialToJson(s).dump(); })
        .def("__eq__", [](const SignedRootMonomial& a, const SignedRootMonomial& b) { return a == b; })
        .def("__str__", &SignedRootMonomial::toString)
        .def("__repr__", &SignedRootMonomial::toString);

    m.def("epsilon_factors", &epsilonFactors);
    m.def("gamma_of", &gammaOf);
    m.def("det_epsilon_product", &detEpsilonProduct, py::arg("expr"), py::arg("target"),
          py::arg("guard") = 20);
    m.def("det_shapovalov", &detShapovalov, py::arg("expr"), py::arg("target"));
    m.def("check_shapovalov", &checkShapovalov, py::arg("expr"), py::arg("target"),
          py::arg("guard") = 20);

    py::class_<BruhatIdeal>(m, "BruhatIdeal")
        .def_readonly("system", &BruhatIdeal::system)
        .def("__len__", &BruhatIdeal::size)
        .def("contains", &BruhatIdeal::contains)
        .def("members", &BruhatIdeal::membersSorted)
        .def("word_of", [](const BruhatIdeal& ideal, const Element& w) { return ideal.words.at(w); });

    m.def("ideal_from_element", &idealFromElement);

    py::class_<Valuation>(m, "Valuation")
        .def_static("char0", &Valuation::char0)
        .def_static("char_p", &Valuation::charP, py::arg("p"))
        .def("__call__", [](const Valuation& v, const std::vector<long long>& beta) {
            return toInt64(v(rootFromPy(beta)));
        });

    py::class_<GrothendieckVector>(m, "GrothendieckVector")
        .def_property_readonly("basis",
                               [](const GrothendieckVector& v) {
                                   return v.basis == GrothendieckVector::Basis::Delta ? "Delta" : "L";
                               })
        .def_property_readonly("coeffs",
                               [](const GrothendieckVector& v) { return coeffsToPy(v.coeffs); })
        .def("to_json", [](const GrothendieckVector& v, const CoxeterSystem& sys) {
            return grVectorToJson(sys, v).dump();
        });

    m.def("dim_delta_pi", [](const BruhatIdeal& ideal, const Element& y) {
        return toInt64(dimDeltaPi(ideal, y));
    });
    m.def("sum_formula_rhs", &sumFormulaRHS, py::arg("ideal"), py::arg("target"),
          py::arg("valuation"));
    m.def("phi_map", [](const BruhatIdeal& ideal, const GrothendieckVector& v) {
        return coeffsToPy(phiMap(ideal, v));
    });
    m.def("phi_matrix", [](const BruhatIdeal& ideal) {
        std::vector<std::vector<long long>> out;
        for (const auto& row : phiMatrix(ideal)) {
            std::vector<long long> r;
            for (const Int& v : row) r.push_back(toInt64(v));
            out.push_back(std::move(r));
        }
        return out;
    });

    py::class_<DecompositionBounds>(m, "DecompositionBounds")
        .def("at",
             [](const DecompositionBounds& b, const Element& y, const Element& u) {
                 Interval iv = b.at(y, u);
                 return std::make_pair(toInt64(iv.lo), toInt64(iv.hi));
             })
        .def("entries",
             [](const DecompositionBounds& b) {
                 std::vector<std::tuple<Element, Element, long long, long long>> out;
                 for (const auto& [key, iv] : b.entries)
                     out.emplace_back(key.first, key.second, toInt64(iv.lo), toInt64(iv.hi));
                 return out;
             })
        .def("to_json", [](const DecompositionBounds& b) { return boundsToJson(b).dump(); });

    m.def("solve_bounds",
          [](const BruhatIdeal& ideal, const Valuation& val) { return solveBounds(ideal, val); });

    py::class_<OracleRow>(m, "OracleRow")
        .def_readonly("y", &OracleRow::y)
        .def_readonly("u", &OracleRow::u)
        .def_property_readonly("lo", [](const OracleRow& r) { return toInt64(r.interval.lo); })
        .def_property_readonly("hi", [](const OracleRow& r) { return toInt64(r.interval.hi); })
        .def_property_readonly("settled", [](const OracleRow& r) { return r.interval.settled(); })
        .def_property_readonly("oracle", [](const OracleRow& r) { return toInt64(r.oracle); })
        .def_readonly("status", &OracleRow::status);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("rows", &OracleReport::rows)
        .def_readonly("settled", &OracleReport::settled)
        .def_readonly("conflicts", &OracleReport::conflicts)
        .def("consistent", &OracleReport::consistent);

    m.def("kl_oracle_compare", &klOracleCompare, py::arg("ideal"), py::arg("bounds"),
          py::arg("cache"));

    py::class_<KLCache>(m, "KLCache")
        .def(py::init<std::string>(), py::arg("system_name") = std::string())
        .def("__len__", &KLCache::size);

    m.def("kl_basis_element", [](const CoxeterSystem& sys, const Element& w, KLCache& cache) {
        py::dict out;
        for (const auto& [y, p] : klBasisElement(sys, w, cache).terms)
            out[py::cast(y)] = polyToPy(p);
        return out;
    });
    m.def("kl_polynomial", [](const CoxeterSystem& sys, const Element& y, const Element& w,
                              KLCache& cache) { return polyToPy(klPolynomial(sys, y, w, cache)); });
    m.def("kl_eval_at_one", [](const CoxeterSystem& sys, const Element& y, const Element& w,
                               KLCache& cache) { return toInt64(klEvalAtOne(sys, y, w, cache)); });
    m.def("save_kl_cache", &saveKLCache);
    m.def("load_kl_cache", &loadKLCache);
}
