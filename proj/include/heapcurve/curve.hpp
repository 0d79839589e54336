#pragma once

#include "heapcurve/finite_field.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace heapcurve {

/// A point of a Weierstrass curve: affine (x, y) or the point at infinity.
/// Affine points are created through WeierstrassCurve::point so the curve
/// equation is checked at construction.
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return infinity_; }

    const FieldElement& x() const {
        require_affine();
        return x_;
    }
    const FieldElement& y() const {
        require_affine();
        return y_;
    }

    bool operator==(const CurvePoint& o) const {
        if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
        return x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

    /// Deterministic ordering: infinity first, then lexicographic by (x, y).
    bool operator<(const CurvePoint& o) const {
        if (infinity_ != o.infinity_) return infinity_;
        if (infinity_) return false;
        if (x_.key() != o.x_.key()) return x_.key() < o.x_.key();
        return y_.key() < o.y_.key();
    }

    std::string str() const {
        if (infinity_) return "infinity";
        return x_.str() + "," + y_.str();
    }

private:
    friend class WeierstrassCurve;
    CurvePoint() : infinity_(true) {}
    CurvePoint(FieldElement x, FieldElement y) : infinity_(false), x_(x), y_(y) {}

    void require_affine() const {
        if (infinity_) throw std::logic_error("CurvePoint: infinity has no coordinates");
    }

    bool infinity_;
    FieldElement x_;
    FieldElement y_;
};

/// The curve y^2 = x^3 + a x + b over a finite field of characteristic > 3.
/// Construction rejects singular curves (4a^3 + 27b^2 = 0).
class WeierstrassCurve {
public:
    WeierstrassCurve(FieldElement a, FieldElement b) : a_(a), b_(b) {
        if (a.field() != b.field())
            throw std::invalid_argument("WeierstrassCurve: coefficients from different fields");
        const Field f = a.field();
        FieldElement disc = f.element(4) * a * a * a + f.element(27) * b * b;
        if (disc.is_zero())
            throw std::invalid_argument("WeierstrassCurve: singular curve (4a^3 + 27b^2 = 0)");
    }

    /// Converts y^2 = 4x^3 - g2 x - g3 to short form by y -> 2Y, giving
    /// Y^2 = x^3 - (g2/4) x - (g3/4). Points correspond via (x, y) -> (x, y/2).
    static WeierstrassCurve from_long_form(FieldElement g2, FieldElement g3) {
        if (g2.field() != g3.field())
            throw std::invalid_argument("WeierstrassCurve: coefficients from different fields");
        const Field f = g2.field();
        const FieldElement quarter = f.element(4).inverse();
        return WeierstrassCurve(-(g2 * quarter), -(g3 * quarter));
    }

    const Field& field() const { return a_.field(); }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }

    bool operator==(const WeierstrassCurve& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const WeierstrassCurve& o) const { return !(*this == o); }

    FieldElement rhs(const FieldElement& x) const { return x * x * x + a_ * x + b_; }

    bool contains(const FieldElement& x, const FieldElement& y) const {
        return y * y == rhs(x);
    }

    bool contains(const CurvePoint& p) const {
        return p.is_infinity() || contains(p.x(), p.y());
    }

    CurvePoint infinity() const { return CurvePoint::infinity(); }

    CurvePoint point(const FieldElement& x, const FieldElement& y) const {
        if (x.field() != field() || y.field() != field())
            throw std::invalid_argument("WeierstrassCurve: coordinates from the wrong field");
        if (!contains(x, y))
            throw std::invalid_argument("WeierstrassCurve: (" + x.str() + "," + y.str() +
                                        ") is not on the curve");
        return CurvePoint(x, y);
    }

    CurvePoint point(std::int64_t x, std::int64_t y) const {
        return point(field().element(x), field().element(y));
    }

    /// All rational points: infinity first, then sorted by (x, y).
    /// The count is checked against the Hasse bound.
    std::vector<CurvePoint> points() const {
        const Field f = field();
        std::vector<CurvePoint> out;
        out.push_back(CurvePoint::infinity());
        if (!f.is_extension()) {
            const std::uint32_t p = f.characteristic();
            // One pass building y^2 -> {y} lists keeps this linear in p.
            std::vector<std::vector<std::uint32_t>> roots(p);
            for (std::uint32_t y = 0; y < p; ++y)
                roots[std::uint64_t(y) * y % p].push_back(y);
            for (std::uint32_t x = 0; x < p; ++x) {
                const std::uint32_t target = rhs(f.element(x)).c0();
                for (std::uint32_t y : roots[target])
                    out.push_back(CurvePoint(f.element(x), f.element(y)));
            }
        } else {
            if (f.order() > 1000000)
                throw std::invalid_argument(
                    "WeierstrassCurve: extension-field enumeration capped at 10^6 elements");
            const std::vector<FieldElement> elems = f.elements();
            std::map<std::uint64_t, std::vector<FieldElement>> roots;
            for (const FieldElement& y : elems) roots[(y * y).key()].push_back(y);
            for (const FieldElement& x : elems) {
                const auto it = roots.find(rhs(x).key());
                if (it == roots.end()) continue;
                for (const FieldElement& y : it->second) out.push_back(CurvePoint(x, y));
            }
        }
        std::sort(out.begin() + 1, out.end());
        const std::int64_t q = std::int64_t(f.order());
        const std::int64_t t = std::int64_t(out.size()) - (q + 1);
        if (t * t > 4 * q)
            throw std::logic_error("WeierstrassCurve: point count violates the Hasse bound");
        return out;
    }

private:
    FieldElement a_;
    FieldElement b_;
};

namespace detail {
inline void require_on_curve(const WeierstrassCurve& curve, const CurvePoint& p,
                             const char* op) {
    if (!curve.contains(p))
        throw std::invalid_argument(std::string(op) + ": point " + p.str() +
                                    " is not on the curve");
}
}  // namespace detail

/// The third point in which the line through P and Q (tangent when P = Q)
/// meets the curve, multiplicities included and without any reflection.
inline CurvePoint third_intersection(const WeierstrassCurve& curve, const CurvePoint& P,
                                     const CurvePoint& Q) {
    detail::require_on_curve(curve, P, "third_intersection");
    detail::require_on_curve(curve, Q, "third_intersection");
    // The line at infinity meets the curve at infinity three times.
    if (P.is_infinity() && Q.is_infinity()) return CurvePoint::infinity();
    // Vertical line through (x, y) and infinity.
    if (P.is_infinity()) return curve.point(Q.x(), -Q.y());
    if (Q.is_infinity()) return curve.point(P.x(), -P.y());
    const Field f = curve.field();
    FieldElement lambda = f.zero();
    if (P == Q) {
        if (P.y().is_zero()) return CurvePoint::infinity();  // vertical tangent
        lambda = (f.element(3) * P.x() * P.x() + curve.a()) / (f.element(2) * P.y());
    } else if (P.x() == Q.x()) {
        return CurvePoint::infinity();  // vertical chord
    } else {
        lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    const FieldElement x3 = lambda * lambda - P.x() - Q.x();
    const FieldElement y3 = P.y() + lambda * (x3 - P.x());
    return curve.point(x3, y3);
}

/// The ternary chord-tangent operation [A, B, C]: draw the line through A
/// and C to get the auxiliary point D, then the line through D and B.
inline CurvePoint heap_op(const WeierstrassCurve& curve, const CurvePoint& A,
                          const CurvePoint& B, const CurvePoint& C) {
    return third_intersection(curve, third_intersection(curve, A, C), B);
}

/// Group addition of the retract at base point O: A + B = [A, O, B].
inline CurvePoint retract_add(const WeierstrassCurve& curve, const CurvePoint& O,
                              const CurvePoint& A, const CurvePoint& B) {
    return heap_op(curve, A, O, B);
}

/// Group negation of the retract at O: -A = [O, A, O].
inline CurvePoint retract_neg(const WeierstrassCurve& curve, const CurvePoint& O,
                              const CurvePoint& A) {
    return heap_op(curve, O, A, O);
}

/// n-fold sum of A in the retract at O, by double-and-add.
inline CurvePoint scalar_mul(const WeierstrassCurve& curve, const CurvePoint& O, long long n,
                             const CurvePoint& A) {
    detail::require_on_curve(curve, O, "scalar_mul");
    detail::require_on_curve(curve, A, "scalar_mul");
    CurvePoint base = A;
    if (n < 0) {
        base = retract_neg(curve, O, A);
        n = -n;
    }
    CurvePoint acc = O;
    unsigned long long e = static_cast<unsigned long long>(n);
    while (e) {
        if (e & 1) acc = retract_add(curve, O, acc, base);
        base = retract_add(curve, O, base, base);
        e >>= 1;
    }
    return acc;
}

/// Translation A -> [A, O, O']: the canonical isomorphism from the retract
/// group at O to the retract group at O'.
inline CurvePoint translation_iso(const WeierstrassCurve& curve, const CurvePoint& O,
                                  const CurvePoint& O2, const CurvePoint& A) {
    return heap_op(curve, A, O, O2);
}

}  // namespace heapcurve
