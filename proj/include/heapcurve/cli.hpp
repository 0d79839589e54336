#pragma once

#include "heapcurve/axioms.hpp"
#include "heapcurve/curve.hpp"
#include "heapcurve/endo.hpp"
#include "heapcurve/json_io.hpp"
#include "heapcurve/lattice.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace heapcurve::cli {

namespace detail {

struct CurveOptions {
    std::uint32_t p = 0;
    std::string a = "0";
    std::string b = "0";
    std::optional<std::uint32_t> ext_nonresidue;
};

inline void add_curve_options(CLI::App* cmd, CurveOptions& opts) {
    cmd->add_option("--p", opts.p, "field characteristic (prime, 3 < p < 65536)")->required();
    cmd->add_option("--a", opts.a, "curve coefficient a");
    cmd->add_option("--b", opts.b, "curve coefficient b");
    cmd->add_option("--ext-nonresidue", opts.ext_nonresidue,
                    "work over F_p^2 = F_p[t]/(t^2 - c) for this non-residue c");
}

struct LatticeOptions {
    std::string p;
    std::string q;
    long long d = 0;
};

inline void add_lattice_options(CLI::App* cmd, LatticeOptions& opts) {
    cmd->add_option("--tau-p", opts.p, "rational part p of tau = p + q*sqrt(-d)")->required();
    cmd->add_option("--tau-q", opts.q, "coefficient q > 0 of tau = p + q*sqrt(-d)")->required();
    cmd->add_option("--d", opts.d, "positive integer d of tau = p + q*sqrt(-d)")->required();
}

struct CheckOptions {
    bool exhaustive = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    bool samples_given = false;
};

inline void add_check_options(CLI::App* cmd, CheckOptions& opts) {
    auto* exhaustive = cmd->add_flag("--exhaustive", opts.exhaustive, "scan every tuple");
    auto* samples = cmd->add_option("--samples", opts.samples, "number of sampled tuples")
                        ->check(CLI::PositiveNumber)
                        ->each([&opts](const std::string&) { opts.samples_given = true; });
    exhaustive->excludes(samples);
    cmd->add_option("--seed", opts.seed, "seed for sampled tuples");
}

inline CheckMode to_mode(const CheckOptions& opts) {
    if (opts.exhaustive) return CheckMode::exhaustive();
    if (opts.samples_given) return CheckMode::sampled(opts.samples, opts.seed);
    CheckMode m = CheckMode::automatic(opts.samples, opts.seed);
    return m;
}

struct Diagnostic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Field make_field(const CurveOptions& opts) {
    if (opts.ext_nonresidue) return Field::quadratic_extension(opts.p, *opts.ext_nonresidue);
    return Field::prime(opts.p);
}

inline FieldElement parse_field_element(const Field& field, const std::string& text,
                                        const std::string& what) {
    try {
        const auto colon = text.find(':');
        if (colon == std::string::npos) return field.element(std::stoll(text));
        return field.element(std::stoll(text.substr(0, colon)),
                             std::stoll(text.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
        throw Diagnostic(what + ": " + e.what());
    } catch (const std::exception&) {
        throw Diagnostic(what + ": malformed field element '" + text + "'");
    }
}

inline WeierstrassCurve make_curve(const CurveOptions& opts) {
    const Field field = make_field(opts);
    return WeierstrassCurve(parse_field_element(field, opts.a, "--a"),
                            parse_field_element(field, opts.b, "--b"));
}

inline CurvePoint parse_point(const WeierstrassCurve& curve, const std::string& text,
                              const std::string& what) {
    if (text == "infinity") return CurvePoint::infinity();
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Diagnostic(what + ": expected 'x,y' or 'infinity', got '" + text + "'");
    const FieldElement x = parse_field_element(curve.field(), text.substr(0, comma), what);
    const FieldElement y = parse_field_element(curve.field(), text.substr(comma + 1), what);
    try {
        return curve.point(x, y);
    } catch (const std::invalid_argument& e) {
        throw Diagnostic(what + ": " + e.what());
    }
}

inline LatticeSpec make_lattice(const LatticeOptions& opts) {
    try {
        return LatticeSpec(Rational::parse(opts.p), Rational::parse(opts.q), BigInt(opts.d));
    } catch (const std::exception& e) {
        throw Diagnostic(std::string("--tau-p/--tau-q/--d: ") + e.what());
    }
}

inline TorusPoint parse_torus_point(const LatticeSpec& lattice, const std::string& text,
                                    const std::string& what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Diagnostic(what + ": expected 'u,v' rationals, got '" + text + "'");
    try {
        return TorusPoint(Rational::parse(text.substr(0, comma)),
                          Rational::parse(text.substr(comma + 1)), lattice);
    } catch (const std::exception& e) {
        throw Diagnostic(what + ": " + e.what());
    }
}

/// Literal "m,n;u,v" for an element (m + n*tau, [u + v*tau]).
inline CrossedElement parse_crossed(const LatticeSpec& lattice, const std::string& text,
                                    const std::string& what) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw Diagnostic(what + ": expected 'm,n;u,v', got '" + text + "'");
    const std::string mult = text.substr(0, semi);
    const auto comma = mult.find(',');
    if (comma == std::string::npos)
        throw Diagnostic(what + ": expected 'm,n;u,v', got '" + text + "'");
    try {
        Multiplier r(BigInt(mult.substr(0, comma)), BigInt(mult.substr(comma + 1)), lattice);
        return CrossedElement(r, parse_torus_point(lattice, text.substr(semi + 1), what));
    } catch (const std::exception& e) {
        throw Diagnostic(what + ": " + e.what());
    }
}

inline std::string curve_banner(const WeierstrassCurve& c) {
    return "curve: y^2 = x^3 + " + c.a().str() + "*x + " + c.b().str() + " over " +
           c.field().str();
}

inline int emit_reports(const std::vector<AxiomReport>& reports, const std::string& banner,
                        std::uint64_t seed, bool json, std::ostream& out) {
    if (json) {
        std::string subject = banner;
        std::replace(subject.begin(), subject.end(), '\n', ';');
        Json j{{"seed", seed}, {"reports", to_json(reports)}, {"pass", all_pass(reports)}};
        if (!subject.empty()) j["subject"] = subject;
        out << j.dump(2) << "\n";
    } else {
        if (!banner.empty()) out << banner << "\n";
        out << "seed: " << seed << "\n";
        for (const auto& r : reports) out << r.verdict_line() << "\n";
        out << (all_pass(reports) ? "all axioms hold" : "AXIOM VIOLATION FOUND") << "\n";
    }
    return all_pass(reports) ? 0 : 1;
}

// --------------------------------------------------------------- curve ----

inline int cmd_curve_points(const CurveOptions& copts, bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    const std::vector<CurvePoint> pts = curve.points();
    if (json) {
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(to_json(p));
        out << Json{{"curve", to_json(curve)}, {"count", pts.size()}, {"points", arr}}.dump(2)
            << "\n";
    } else {
        out << curve_banner(curve) << "\n";
        out << "points: " << pts.size() << "\n";
        for (const auto& p : pts) out << p.str() << "\n";
    }
    return 0;
}

inline int cmd_curve_heap(const CurveOptions& copts, const std::vector<std::string>& abc,
                          bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    const CurvePoint A = parse_point(curve, abc[0], "A");
    const CurvePoint B = parse_point(curve, abc[1], "B");
    const CurvePoint C = parse_point(curve, abc[2], "C");
    const CurvePoint R = heap_op(curve, A, B, C);
    if (json)
        out << Json{{"curve", to_json(curve)}, {"result", to_json(R)}}.dump(2) << "\n";
    else
        out << R.str() << "\n";
    return 0;
}

inline int cmd_curve_add(const CurveOptions& copts, const std::string& base,
                         const std::vector<std::string>& ab, bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    const CurvePoint O = parse_point(curve, base, "--base");
    const CurvePoint A = parse_point(curve, ab[0], "A");
    const CurvePoint B = parse_point(curve, ab[1], "B");
    const CurvePoint R = retract_add(curve, O, A, B);
    if (json)
        out << Json{{"curve", to_json(curve)}, {"base", to_json(O)}, {"result", to_json(R)}}
                   .dump(2)
            << "\n";
    else
        out << R.str() << "\n";
    return 0;
}

inline Carrier<CurvePoint> curve_heap_carrier(const WeierstrassCurve& curve) {
    Carrier<CurvePoint> c;
    c.elements = curve.points();
    c.ternary = [curve](const CurvePoint& a, const CurvePoint& b, const CurvePoint& d) {
        return heap_op(curve, a, b, d);
    };
    c.equal = [](const CurvePoint& a, const CurvePoint& b) { return a == b; };
    c.label = [](const CurvePoint& a) { return a.str(); };
    return c;
}

inline int cmd_curve_check_heap(const CurveOptions& copts, const CheckOptions& chk, bool json,
                                std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    const auto reports = check_heap_axioms(curve_heap_carrier(curve), to_mode(chk));
    return emit_reports(reports, curve_banner(curve), chk.seed, json, out);
}

// ---------------------------------------------------------------- endo ----

inline int cmd_endo_gen(const CurveOptions& copts, const std::string& base, int depth,
                        bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    auto sp = EndoSpace::make(curve);
    const CurvePoint O = parse_point(curve, base, "--base");
    const std::vector<Endo> endos = generate_endo_set(sp, O, depth);
    if (json) {
        Json arr = Json::array();
        for (const auto& e : endos) arr.push_back(e.str());
        out << Json{{"curve", to_json(curve)},
                    {"base", to_json(O)},
                    {"depth", depth},
                    {"count", endos.size()},
                    {"endos", arr}}
                   .dump(2)
            << "\n";
    } else {
        out << curve_banner(curve) << "\n";
        out << "base: " << O.str() << "  depth: " << depth << "\n";
        out << "generated endomorphisms: " << endos.size() << "\n";
        for (std::size_t i = 0; i < endos.size(); ++i)
            out << i << ": " << endos[i].str() << "\n";
    }
    return 0;
}

inline Carrier<Endo> endo_truss_carrier(std::vector<Endo> endos) {
    Carrier<Endo> c;
    c.elements = std::move(endos);
    c.ternary = [](const Endo& a, const Endo& b, const Endo& d) { return endo_heap(a, b, d); };
    c.mul = [](const Endo& a, const Endo& b) { return compose(a, b); };
    c.equal = [](const Endo& a, const Endo& b) { return a == b; };
    c.label = [](const Endo& a) { return a.str(); };
    return c;
}

inline int cmd_endo_check_truss(const CurveOptions& copts, const std::string& base, int depth,
                                const CheckOptions& chk, bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    auto sp = EndoSpace::make(curve);
    const CurvePoint O = parse_point(curve, base, "--base");
    const std::vector<Endo> endos = generate_endo_set(sp, O, depth);
    const auto reports = check_truss_axioms(endo_truss_carrier(endos), to_mode(chk));
    const std::string banner = curve_banner(curve) + "\nendo set: " +
                               std::to_string(endos.size()) + " maps (depth " +
                               std::to_string(depth) + ", base " + O.str() + ")";
    return emit_reports(reports, banner, chk.seed, json, out);
}

inline int cmd_endo_decompose(const CurveOptions& copts, const std::string& expr_text,
                              const std::string& base, bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    auto sp = EndoSpace::make(curve);
    const CurvePoint O = parse_point(curve, base, "--base");
    Endo f = [&] {
        try {
            return parse_endo_expr(sp, expr_text, O);
        } catch (const std::invalid_argument& e) {
            throw Diagnostic(std::string("--f: ") + e.what());
        }
    }();
    const auto [phi, T] = decompose(f, O);
    if (json) {
        Json table = Json::array();
        for (std::uint16_t i = 0; i < sp->size(); ++i)
            table.push_back(Json::array(
                {to_json(sp->points()[i]), to_json(sp->points()[phi.endo().map_index(i)])}));
        out << Json{{"curve", to_json(curve)},
                    {"f", f.str()},
                    {"base", to_json(O)},
                    {"translation", to_json(T)},
                    {"isogeny_table", table}}
                   .dump(2)
            << "\n";
    } else {
        out << "f = " << f.str() << "\n";
        out << "translation: f(" << O.str() << ") = " << T.str() << "\n";
        out << "isogeny (fixes " << O.str() << "):\n";
        for (std::uint16_t i = 0; i < sp->size(); ++i)
            out << "  " << sp->points()[i].str() << " -> "
                << sp->points()[phi.endo().map_index(i)].str() << "\n";
    }
    return 0;
}

inline int cmd_endo_no_ring(const CurveOptions& copts, const std::string& theta_text,
                            bool json, std::ostream& out) {
    const WeierstrassCurve curve = make_curve(copts);
    auto sp = EndoSpace::make(curve);
    Endo theta = [&]() -> Endo {
        if (theta_text.rfind("const:", 0) == 0) {
            const CurvePoint P = parse_point(curve, theta_text.substr(6), "--theta");
            return Endo::constant(sp, P);
        }
        try {
            return parse_endo_expr(sp, theta_text, std::nullopt);
        } catch (const std::invalid_argument& e) {
            throw Diagnostic(std::string("--theta: ") + e.what());
        }
    }();
    const std::optional<Endo> witness = no_ring_witness(sp, theta);
    if (!witness) {
        out << "no witness exists\n";
        return 1;
    }
    std::string reason;
    if (theta.is_constant()) {
        const CurvePoint O = sp->points()[theta.map_index(0)];
        reason = "witness moves the absorber value: f(" + O.str() + ") = " +
                 (*witness)(O).str() + " != " + O.str();
    } else {
        reason = "candidate is not constant, so theta o f != theta for f = " + witness->str();
    }
    if (json) {
        out << Json{{"curve", to_json(curve)},
                    {"theta", theta.str()},
                    {"witness", witness->str()},
                    {"reason", reason}}
                   .dump(2)
            << "\n";
    } else {
        out << "theta = " << theta.str() << "\n";
        out << "witness = " << witness->str() << "\n";
        out << reason << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- lattice ----

inline int cmd_lattice_ring(const LatticeOptions& lopts, bool json, std::ostream& out) {
    const LatticeSpec L = make_lattice(lopts);
    const BigInt g = z_pqd_generator(L);
    const LawPoly first = lattice_law_first(L);
    const LawPoly second = lattice_law_second(L);
    if (json) {
        out << Json{{"p", L.p().str()},
                    {"q", L.q().str()},
                    {"d", big_to_json(L.d())},
                    {"tau", to_json(L.tau())},
                    {"norm", L.norm().str()},
                    {"two_p", L.two_p().str()},
                    {"generator", big_to_json(g)},
                    {"law_first", first.str()},
                    {"law_second", second.str()}}
                   .dump(2)
            << "\n";
    } else {
        out << "lattice: " << L.str() << "\n";
        out << "norm N = " << L.norm().str() << ", 2p = " << L.two_p().str() << "\n";
        out << "Z(p,q,d) = " << g.str() << "Z  =>  R(tau) = { m + n*tau : m in Z, " << g.str()
            << " | n }\n";
        out << "multiplication: (m,n)(m',n') = (" << first.str() << ", " << second.str()
            << ")\n";
    }
    return 0;
}

inline int cmd_lattice_heap(const LatticeOptions& lopts, const std::vector<std::string>& abc,
                            bool json, std::ostream& out) {
    const LatticeSpec L = make_lattice(lopts);
    const TorusPoint A = parse_torus_point(L, abc[0], "A");
    const TorusPoint B = parse_torus_point(L, abc[1], "B");
    const TorusPoint C = parse_torus_point(L, abc[2], "C");
    const TorusPoint R = torus_heap(A, B, C);
    if (json)
        out << Json{{"result", to_json(R)}}.dump(2) << "\n";
    else
        out << R.str() << "\n";
    return 0;
}

inline int cmd_lattice_crossed_mul(const LatticeOptions& lopts,
                                   const std::vector<std::string>& xy, bool json,
                                   std::ostream& out) {
    const LatticeSpec L = make_lattice(lopts);
    const CrossedElement X = parse_crossed(L, xy[0], "X");
    const CrossedElement Y = parse_crossed(L, xy[1], "Y");
    const CrossedElement R = crossed_mul(X, Y);
    if (json)
        out << Json{{"result", to_json(R)}}.dump(2) << "\n";
    else
        out << R.str() << "\n";
    return 0;
}

inline int cmd_lattice_check_examples(const std::optional<std::array<Rational, 2>>& custom_pq,
                                      const std::optional<BigInt>& custom_d, bool errata_ok,
                                      bool json, std::ostream& out) {
    const ExamplesReport report = examples_report(custom_pq, custom_d);
    if (json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << "reference-law cross-check\n";
        for (const auto& row : report.rows) {
            out << "row: " << row.label << "\n";
            out << "  Z(p,q,d) generator (formula): " << row.generator_formula.str();
            if (row.oracle_available) {
                out << "  stability oracle: "
                    << (row.oracle_generator ? row.oracle_generator->str() : std::string("-"))
                    << "  agreement over n in [-24,24]: " << (row.oracle_agrees ? "ok" : "FAIL");
            } else {
                out << "  (no lattice: formula reading only)";
            }
            out << "\n";
            for (const auto& c : row.checks) {
                out << "  " << (c.match ? "[MATCH]   " : "[MISMATCH]") << " " << c.component
                    << ": reference " << c.reference << " | derived " << c.derived << "\n";
            }
        }
        out << (report.any_mismatch
                    ? "result: MISMATCHES PRESENT (documented reference-law deviations)"
                    : "result: all reference laws match")
            << "\n";
    }
    if (report.any_mismatch && !errata_ok) return 1;
    return 0;
}

// -------------------------------------------------------------- axioms ----

inline int cmd_axioms(const std::string& spec, const std::string& check, long long zero,
                      const CheckOptions& chk, bool json, std::ostream& out) {
    Carrier<long long> carrier;
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::vector<long long> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        try {
            while (pos < rest.size()) {
                const auto next = rest.find(':', pos);
                const std::string tok =
                    rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
                params.push_back(std::stoll(tok));
                if (next == std::string::npos) break;
                pos = next + 1;
            }
        } catch (const std::exception&) {
            throw Diagnostic("carrier-spec: malformed parameters in '" + spec + "'");
        }
    }
    if (kind == "zmod" && params.size() == 1) {
        carrier = zmod_carrier(params[0]);
    } else if (kind == "zmod-add3" && params.size() == 1) {
        carrier = zmod_sum_carrier(params[0]);
    } else if (kind == "int" && params.size() == 2) {
        carrier = integer_carrier(params[0], params[1]);
    } else if (kind == "int-sq" && params.size() == 2) {
        carrier = integer_square_carrier(params[0], params[1]);
    } else {
        throw Diagnostic("carrier-spec: expected zmod:N, zmod-add3:N, int:LO:HI or int-sq:LO:HI, "
                         "got '" + spec + "'");
    }
    std::vector<AxiomReport> reports;
    if (check == "heap") {
        reports = check_heap_axioms(carrier, to_mode(chk));
    } else if (check == "truss") {
        reports = check_truss_axioms(carrier, to_mode(chk));
    } else if (check == "ring") {
        reports = check_ring_axioms(carrier, zero, to_mode(chk));
    } else {
        throw Diagnostic("--check: expected heap, truss or ring, got '" + check + "'");
    }
    return emit_reports(reports, "carrier: " + spec + " (" +
                                     std::to_string(carrier.elements.size()) + " elements)",
                        chk.seed, json, out);
}

}  // namespace detail

/// Parses and runs one invocation. Returns the process exit code: 0 on
/// success / all axioms pass, 1 on an axiom violation or reference-law
/// mismatch, 2 on a usage or input error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"chord-tangent heap and endomorphism-truss toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json = false;
    app.add_flag("--json", json, "emit a single JSON document on stdout");

    // ---- curve ----
    CLI::App* curve = app.add_subcommand("curve", "Weierstrass curve heap operations");
    curve->require_subcommand(1);

    CurveOptions pts_opts;
    CLI::App* curve_points = curve->add_subcommand("points", "enumerate all rational points");
    add_curve_options(curve_points, pts_opts);

    CurveOptions heap_opts;
    std::vector<std::string> heap_args;
    CLI::App* curve_heap = curve->add_subcommand("heap", "evaluate [A,B,C]");
    add_curve_options(curve_heap, heap_opts);
    curve_heap->add_option("points", heap_args, "three points A B C")->expected(3)->required();

    CurveOptions add_opts;
    std::string add_base;
    std::vector<std::string> add_args;
    CLI::App* curve_add = curve->add_subcommand("add", "retract addition A + B at a base point");
    add_curve_options(curve_add, add_opts);
    curve_add->add_option("--base", add_base, "base point O of the retract")->required();
    curve_add->add_option("points", add_args, "two points A B")->expected(2)->required();

    CurveOptions chk_opts;
    CheckOptions chk_mode;
    CLI::App* curve_check = curve->add_subcommand("check-heap", "verify the heap axioms");
    add_curve_options(curve_check, chk_opts);
    add_check_options(curve_check, chk_mode);

    // ---- endo ----
    CLI::App* endo = app.add_subcommand("endo", "endomorphism truss of a finite curve");
    endo->require_subcommand(1);

    CurveOptions gen_opts;
    std::string gen_base = "infinity";
    int gen_depth = 2;
    CLI::App* endo_gen = endo->add_subcommand("gen", "generate the endomorphism set");
    add_curve_options(endo_gen, gen_opts);
    endo_gen->add_option("--base", gen_base, "base point for translations and scalars");
    endo_gen->add_option("--depth", gen_depth, "closure depth under compose/heap")
        ->check(CLI::NonNegativeNumber);

    CurveOptions truss_opts;
    std::string truss_base = "infinity";
    int truss_depth = 2;
    CheckOptions truss_mode;
    CLI::App* endo_truss = endo->add_subcommand("check-truss", "verify the truss axioms");
    add_curve_options(endo_truss, truss_opts);
    endo_truss->add_option("--base", truss_base, "base point for translations and scalars");
    endo_truss->add_option("--depth", truss_depth, "closure depth under compose/heap")
        ->check(CLI::NonNegativeNumber);
    add_check_options(endo_truss, truss_mode);

    CurveOptions dec_opts;
    std::string dec_expr;
    std::string dec_base = "infinity";
    CLI::App* endo_dec = endo->add_subcommand("decompose", "split f into isogeny + translation");
    add_curve_options(endo_dec, dec_opts);
    endo_dec->add_option("--f", dec_expr, "endomorphism expression")->required();
    endo_dec->add_option("--base", dec_base, "base point O");

    CurveOptions nor_opts;
    std::string nor_theta;
    CLI::App* endo_nor =
        endo->add_subcommand("no-ring", "witness that no absorber candidate works");
    add_curve_options(endo_nor, nor_opts);
    endo_nor->add_option("--theta", nor_theta, "candidate, e.g. const:infinity or an expression")
        ->required();

    // ---- lattice ----
    CLI::App* lattice = app.add_subcommand("lattice", "exact lattice-quotient model");
    lattice->require_subcommand(1);

    LatticeOptions ring_opts;
    CLI::App* lattice_ring =
        lattice->add_subcommand("ring", "multiplier ring R(tau) and its product law");
    add_lattice_options(lattice_ring, ring_opts);

    LatticeOptions lheap_opts;
    std::vector<std::string> lheap_args;
    CLI::App* lattice_heap = lattice->add_subcommand("heap", "evaluate [A,B,C] on the torus");
    add_lattice_options(lattice_heap, lheap_opts);
    lattice_heap->add_option("points", lheap_args, "three torus points u,v")
        ->expected(3)
        ->required();

    LatticeOptions cm_opts;
    std::vector<std::string> cm_args;
    CLI::App* lattice_cm =
        lattice->add_subcommand("crossed-mul", "crossed-product multiplication");
    add_lattice_options(lattice_cm, cm_opts);
    lattice_cm->add_option("elements", cm_args, "two elements m,n;u,v")->expected(2)->required();

    std::string custom_p, custom_q;
    long long custom_d = 0;
    bool errata_ok = false;
    CLI::App* lattice_ce =
        lattice->add_subcommand("check-examples", "cross-check the known reference laws");
    lattice_ce->add_option("--custom-p", custom_p, "extra row: rational p");
    lattice_ce->add_option("--custom-q", custom_q, "extra row: rational q > 0");
    lattice_ce->add_option("--custom-d", custom_d, "extra row: positive integer d");
    lattice_ce->add_flag("--paper-errata-ok", errata_ok,
                         "exit 0 even when documented mismatches are present");

    // ---- axioms ----
    std::string ax_spec;
    std::string ax_check = "heap";
    long long ax_zero = 0;
    CheckOptions ax_mode;
    CLI::App* axioms = app.add_subcommand("axioms", "axiom oracle over a builtin carrier");
    axioms->add_option("carrier-spec", ax_spec,
                       "zmod:N | zmod-add3:N | int:LO:HI | int-sq:LO:HI")
        ->required();
    axioms->add_option("--check", ax_check, "heap | truss | ring");
    axioms->add_option("--zero", ax_zero, "zero element for ring checks");
    add_check_options(axioms, ax_mode);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (curve_points->parsed()) return cmd_curve_points(pts_opts, json, out);
        if (curve_heap->parsed()) return cmd_curve_heap(heap_opts, heap_args, json, out);
        if (curve_add->parsed()) return cmd_curve_add(add_opts, add_base, add_args, json, out);
        if (curve_check->parsed()) return cmd_curve_check_heap(chk_opts, chk_mode, json, out);
        if (endo_gen->parsed()) return cmd_endo_gen(gen_opts, gen_base, gen_depth, json, out);
        if (endo_truss->parsed())
            return cmd_endo_check_truss(truss_opts, truss_base, truss_depth, truss_mode, json,
                                        out);
        if (endo_dec->parsed()) return cmd_endo_decompose(dec_opts, dec_expr, dec_base, json, out);
        if (endo_nor->parsed()) return cmd_endo_no_ring(nor_opts, nor_theta, json, out);
        if (lattice_ring->parsed()) return cmd_lattice_ring(ring_opts, json, out);
        if (lattice_heap->parsed()) return cmd_lattice_heap(lheap_opts, lheap_args, json, out);
        if (lattice_cm->parsed()) return cmd_lattice_crossed_mul(cm_opts, cm_args, json, out);
        if (lattice_ce->parsed()) {
            std::optional<std::array<Rational, 2>> pq;
            std::optional<BigInt> d;
            if (!custom_p.empty() || !custom_q.empty() || custom_d != 0) {
                if (custom_p.empty() || custom_q.empty() || custom_d == 0)
                    throw Diagnostic("--custom-p/--custom-q/--custom-d must be given together");
                pq = std::array<Rational, 2>{Rational::parse(custom_p), Rational::parse(custom_q)};
                d = BigInt(custom_d);
            }
            return cmd_lattice_check_examples(pq, d, errata_ok, json, out);
        }
        if (axioms->parsed()) return cmd_axioms(ax_spec, ax_check, ax_zero, ax_mode, json, out);
    } catch (const Diagnostic& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace heapcurve::cli
