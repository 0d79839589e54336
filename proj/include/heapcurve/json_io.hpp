#pragma once

#include "heapcurve/axioms.hpp"
#include "heapcurve/curve.hpp"
#include "heapcurve/finite_field.hpp"
#include "heapcurve/lattice.hpp"
#include "heapcurve/rational.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace heapcurve {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
    return Json(v.str());
}

inline Json to_json(const Rational& r) { return Json(r.str()); }

inline Json to_json(const QuadraticNumber& z) {
    return Json{{"re", z.re().str()}, {"im", z.im().str()}, {"d", big_to_json(z.d())}};
}

inline Json to_json(const FieldElement& e) {
    if (!e.field().is_extension()) return Json(std::to_string(e.c0()));
    return Json::array({std::to_string(e.c0()), std::to_string(e.c1())});
}

inline Json to_json(const CurvePoint& p) {
    if (p.is_infinity()) return Json("infinity");
    return Json{{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

inline Json to_json(const WeierstrassCurve& c) {
    Json j{{"p", c.field().characteristic()}, {"a", to_json(c.a())}, {"b", to_json(c.b())}};
    if (c.field().is_extension()) j["nonresidue"] = c.field().nonresidue();
    return j;
}

inline Json to_json(const TorusPoint& t) { return Json{{"u", t.u().str()}, {"v", t.v().str()}}; }

inline Json to_json(const Multiplier& m) {
    return Json{{"m", big_to_json(m.m())}, {"n", big_to_json(m.n())}};
}

inline Json to_json(const CrossedElement& x) {
    return Json{{"r", to_json(x.r())}, {"point", to_json(x.point())}};
}

inline Json to_json(const AxiomReport& r) {
    Json verdict;
    if (r.pass) {
        verdict = "pass";
    } else {
        verdict = Json{{"fail", r.counterexample}};
    }
    return Json{{"axiom", r.axiom}, {"mode", r.mode}, {"cases", r.cases}, {"verdict", verdict}};
}

inline Json to_json(const std::vector<AxiomReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

inline Json to_json(const LawCheck& c) {
    return Json{{"component", c.component},
                {"reference", c.reference},
                {"derived", c.derived},
                {"verdict", c.match ? "MATCH" : "MISMATCH"}};
}

inline Json to_json(const ExampleRow& row) {
    Json j{{"label", row.label},
           {"p", row.p.str()},
           {"q", row.q.str()},
           {"d", big_to_json(row.d)},
           {"generator", big_to_json(row.generator_formula)},
           {"lattice_valid", row.lattice_valid}};
    if (row.oracle_available) {
        j["oracle_agrees"] = row.oracle_agrees;
        if (row.oracle_generator) j["oracle_generator"] = big_to_json(*row.oracle_generator);
    }
    Json checks = Json::array();
    for (const auto& c : row.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    return j;
}

inline Json to_json(const ExamplesReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    return Json{{"rows", rows}, {"any_mismatch", report.any_mismatch}};
}

}  // namespace heapcurve
