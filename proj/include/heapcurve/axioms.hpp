#pragma once

#include "heapcurve/parallel.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heapcurve {

/// A finite carrier with its operations, the common input of every axiom
/// check. `ternary` and `mul` may be left empty when a check does not need
/// them; operations must be total on Elem (results may fall outside
/// `elements`, quantifiers only range over `elements`).
template <typename Elem>
struct Carrier {
    std::vector<Elem> elements;
    std::function<Elem(const Elem&, const Elem&, const Elem&)> ternary;
    std::function<Elem(const Elem&, const Elem&)> mul;
    std::function<bool(const Elem&, const Elem&)> equal;
    std::function<std::string(const Elem&)> label;
};

struct CheckMode {
    enum class Kind { Exhaustive, Sampled, Auto };
    Kind kind = Kind::Auto;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;

    static CheckMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static CheckMode sampled(std::uint64_t n, std::uint64_t seed) {
        return {Kind::Sampled, n, seed};
    }
    static CheckMode automatic(std::uint64_t n = 10000, std::uint64_t seed = 0) {
        return {Kind::Auto, n, seed};
    }
};

struct AxiomReport {
    std::string axiom;
    std::string mode;  // "exhaustive" or "sampled(N, seed=S)"
    bool pass = true;
    std::uint64_t cases = 0;
    std::vector<std::size_t> counterexample_indices;
    std::vector<std::string> counterexample;

    std::string verdict_line() const {
        std::string s = (pass ? "pass  " : "FAIL  ") + axiom + "  [" + mode + ", " +
                        std::to_string(cases) + " cases]";
        if (!pass) {
            s += "  counterexample: (";
            for (std::size_t i = 0; i < counterexample.size(); ++i) {
                if (i) s += ", ";
                s += counterexample[i];
            }
            s += ")";
        }
        return s;
    }
};

namespace detail {

// Cutovers for Auto mode: full 5-tuple scans only up to 20 elements, full
// triple/quadruple scans up to 60, pairs essentially always.
inline bool auto_exhaustive(std::size_t carrier_size, unsigned arity) {
    if (arity >= 5) return carrier_size <= 20;
    if (arity >= 3) return carrier_size <= 60;
    return carrier_size <= 1000;
}

template <typename Elem>
AxiomReport run_axiom(const Carrier<Elem>& carrier, const std::string& name, unsigned arity,
                      const std::function<bool(const std::vector<const Elem*>&)>& holds,
                      CheckMode mode) {
    const std::size_t n = carrier.elements.size();
    AxiomReport report;
    report.axiom = name;
    if (n == 0) {
        report.mode = "exhaustive";
        return report;
    }

    bool exhaustive = mode.kind == CheckMode::Kind::Exhaustive ||
                      (mode.kind == CheckMode::Kind::Auto && auto_exhaustive(n, arity));

    auto record_fail = [&](const std::vector<std::size_t>& tuple) {
        report.pass = false;
        report.counterexample_indices = tuple;
        for (std::size_t idx : tuple)
            report.counterexample.push_back(carrier.label ? carrier.label(carrier.elements[idx])
                                                          : std::to_string(idx));
    };

    if (exhaustive) {
        report.mode = "exhaustive";
        std::uint64_t total = 1;
        for (unsigned i = 0; i < arity; ++i) total *= n;
        // Workers scan disjoint rank ranges; the smallest failing rank wins so
        // the reported counterexample is independent of scheduling.
        const unsigned workers = thread_budget();
        std::vector<std::uint64_t> first_fail(workers ? workers : 1,
                                              std::numeric_limits<std::uint64_t>::max());
        std::vector<std::uint64_t> counted(workers ? workers : 1, 0);
        parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
            std::vector<std::size_t> tuple(arity);
            std::vector<const Elem*> args(arity);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                std::uint64_t r = rank;
                for (unsigned i = arity; i-- > 0;) {
                    tuple[i] = std::size_t(r % n);
                    r /= n;
                }
                for (unsigned i = 0; i < arity; ++i) args[i] = &carrier.elements[tuple[i]];
                ++counted[w];
                if (first_fail[w] == std::numeric_limits<std::uint64_t>::max() && !holds(args))
                    first_fail[w] = rank;
            }
        });
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t f : first_fail) best = std::min(best, f);
        for (std::uint64_t c : counted) report.cases += c;
        if (report.cases != total)
            throw std::logic_error("axiom scan visited " + std::to_string(report.cases) +
                                   " of " + std::to_string(total) + " tuples");
        if (best != std::numeric_limits<std::uint64_t>::max()) {
            std::vector<std::size_t> tuple(arity);
            std::uint64_t r = best;
            for (unsigned i = arity; i-- > 0;) {
                tuple[i] = std::size_t(r % n);
                r /= n;
            }
            record_fail(tuple);
        }
        return report;
    }

    report.mode = "sampled(" + std::to_string(mode.samples) +
                  ", seed=" + std::to_string(mode.seed) + ")";
    std::mt19937_64 rng(mode.seed);
    std::vector<std::size_t> tuple(arity);
    std::vector<const Elem*> args(arity);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
        for (unsigned i = 0; i < arity; ++i) {
            tuple[i] = std::size_t(rng() % n);
            args[i] = &carrier.elements[tuple[i]];
        }
        ++report.cases;
        if (report.pass && !holds(args)) record_fail(tuple);
    }
    return report;
}

}  // namespace detail

/// The abelian-heap axioms for `ternary`: para-associativity, the Mal'cev
/// identities and symmetry of the outer arguments.
template <typename Elem>
std::vector<AxiomReport> check_heap_axioms(const Carrier<Elem>& carrier, CheckMode mode) {
    if (!carrier.ternary) throw std::invalid_argument("check_heap_axioms: no ternary operation");
    const auto& t = carrier.ternary;
    const auto& eq = carrier.equal;
    std::vector<AxiomReport> out;
    out.push_back(detail::run_axiom<Elem>(
        carrier, "para-associativity", 5,
        [&](const std::vector<const Elem*>& a) {
            return eq(t(t(*a[0], *a[1], *a[2]), *a[3], *a[4]),
                      t(*a[0], *a[1], t(*a[2], *a[3], *a[4])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "malcev-identities", 2,
        [&](const std::vector<const Elem*>& a) {
            return eq(t(*a[0], *a[1], *a[1]), *a[0]) && eq(t(*a[1], *a[1], *a[0]), *a[0]);
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "heap-symmetry", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(t(*a[0], *a[1], *a[2]), t(*a[2], *a[1], *a[0]));
        },
        mode));
    return out;
}

/// The truss axioms: heap axioms plus associativity of `mul` and both
/// distributivity laws of `mul` over the ternary operation.
template <typename Elem>
std::vector<AxiomReport> check_truss_axioms(const Carrier<Elem>& carrier, CheckMode mode) {
    if (!carrier.ternary || !carrier.mul)
        throw std::invalid_argument("check_truss_axioms: ternary and mul operations required");
    std::vector<AxiomReport> out = check_heap_axioms(carrier, mode);
    const auto& t = carrier.ternary;
    const auto& m = carrier.mul;
    const auto& eq = carrier.equal;
    out.push_back(detail::run_axiom<Elem>(
        carrier, "mul-associativity", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(m(*a[0], *a[1]), *a[2]), m(*a[0], m(*a[1], *a[2])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "left-distributivity", 4,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(*a[0], t(*a[1], *a[2], *a[3])),
                      t(m(*a[0], *a[1]), m(*a[0], *a[2]), m(*a[0], *a[3])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "right-distributivity", 4,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(t(*a[0], *a[1], *a[2]), *a[3]),
                      t(m(*a[0], *a[3]), m(*a[1], *a[3]), m(*a[2], *a[3])));
        },
        mode));
    return out;
}

/// Ring axioms for the retract at `zero`: addition is a + b = [a, zero, b]
/// and negation -a = [zero, a, zero]. Checks the abelian-group axioms of +,
/// associativity of mul, and both distributivity laws of mul over +.
template <typename Elem>
std::vector<AxiomReport> check_ring_axioms(const Carrier<Elem>& carrier, const Elem& zero,
                                           CheckMode mode) {
    if (!carrier.ternary || !carrier.mul)
        throw std::invalid_argument("check_ring_axioms: ternary and mul operations required");
    const auto& t = carrier.ternary;
    const auto& m = carrier.mul;
    const auto& eq = carrier.equal;
    bool zero_found = false;
    for (const Elem& e : carrier.elements)
        if (eq(e, zero)) {
            zero_found = true;
            break;
        }
    if (!zero_found) throw std::invalid_argument("check_ring_axioms: zero not in carrier");

    auto add = [&](const Elem& a, const Elem& b) { return t(a, zero, b); };
    auto neg = [&](const Elem& a) { return t(zero, a, zero); };

    std::vector<AxiomReport> out;
    out.push_back(detail::run_axiom<Elem>(
        carrier, "add-associativity", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(add(add(*a[0], *a[1]), *a[2]), add(*a[0], add(*a[1], *a[2])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "add-commutativity", 2,
        [&](const std::vector<const Elem*>& a) {
            return eq(add(*a[0], *a[1]), add(*a[1], *a[0]));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "zero-identity", 1,
        [&](const std::vector<const Elem*>& a) {
            return eq(add(*a[0], zero), *a[0]) && eq(add(zero, *a[0]), *a[0]);
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "additive-inverses", 1,
        [&](const std::vector<const Elem*>& a) { return eq(add(*a[0], neg(*a[0])), zero); },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "mul-associativity", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(m(*a[0], *a[1]), *a[2]), m(*a[0], m(*a[1], *a[2])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "left-distributivity", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(*a[0], add(*a[1], *a[2])), add(m(*a[0], *a[1]), m(*a[0], *a[2])));
        },
        mode));
    out.push_back(detail::run_axiom<Elem>(
        carrier, "right-distributivity", 3,
        [&](const std::vector<const Elem*>& a) {
            return eq(m(add(*a[0], *a[1]), *a[2]), add(m(*a[0], *a[2]), m(*a[1], *a[2])));
        },
        mode));
    return out;
}

inline bool all_pass(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

/// Integers with the group heap [a,b,c] = a-b+c and ordinary multiplication,
/// quantified over [lo, hi].
inline Carrier<long long> integer_carrier(long long lo, long long hi) {
    Carrier<long long> c;
    for (long long v = lo; v <= hi; ++v) c.elements.push_back(v);
    c.ternary = [](const long long& a, const long long& b, const long long& d) {
        return a - b + d;
    };
    c.mul = [](const long long& a, const long long& b) { return a * b; };
    c.equal = [](const long long& a, const long long& b) { return a == b; };
    c.label = [](const long long& a) { return std::to_string(a); };
    return c;
}

/// Z/N with [a,b,c] = a-b+c and multiplication mod N.
inline Carrier<long long> zmod_carrier(long long n) {
    if (n < 1) throw std::invalid_argument("zmod_carrier: modulus must be positive");
    Carrier<long long> c;
    for (long long v = 0; v < n; ++v) c.elements.push_back(v);
    c.ternary = [n](const long long& a, const long long& b, const long long& d) {
        return (((a - b + d) % n) + n) % n;
    };
    c.mul = [n](const long long& a, const long long& b) { return a * b % n; };
    c.equal = [](const long long& a, const long long& b) { return a == b; };
    c.label = [](const long long& a) { return std::to_string(a); };
    return c;
}

/// Z/N with the non-heap candidate [a,b,c] = a+b+c mod N (Mal'cev fails for
/// N > 1; useful as a deliberate counterexample source).
inline Carrier<long long> zmod_sum_carrier(long long n) {
    Carrier<long long> c = zmod_carrier(n);
    c.ternary = [n](const long long& a, const long long& b, const long long& d) {
        return (a + b + d) % n;
    };
    return c;
}

/// Integers with [a,b,c] = a-b+c and the non-distributive candidate
/// multiplication a*b = a^2 (right distributivity fails).
inline Carrier<long long> integer_square_carrier(long long lo, long long hi) {
    Carrier<long long> c = integer_carrier(lo, hi);
    c.mul = [](const long long& a, const long long&) { return a * a; };
    return c;
}

}  // namespace heapcurve
