#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heapcurve {

class FieldElement;

/// A prime field F_p (3 < p < 2^16, primality checked by trial division) or
/// its quadratic extension F_p[t]/(t^2 - c) for a non-residue c.
///
/// Field specs are small immutable values; elements carry a copy of their
/// spec and arithmetic refuses to mix distinct fields.
class Field {
public:
    static Field prime(std::uint32_t p) { return Field(p, 0, false); }

    static Field quadratic_extension(std::uint32_t p, std::uint32_t nonresidue) {
        return Field(p, nonresidue, true);
    }

    std::uint32_t characteristic() const { return p_; }
    bool is_extension() const { return ext_; }
    std::uint32_t nonresidue() const {
        if (!ext_) throw std::logic_error("Field: nonresidue only defined for extensions");
        return c_;
    }
    std::uint64_t order() const { return ext_ ? std::uint64_t(p_) * p_ : p_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && c_ == o.c_ && ext_ == o.ext_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElement element(std::int64_t v) const;
    FieldElement element(std::int64_t c0, std::int64_t c1) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// All elements in canonical order (constant term major).
    std::vector<FieldElement> elements() const;

    std::string str() const {
        if (!ext_) return "F_" + std::to_string(p_);
        return "F_" + std::to_string(p_) + "^2 (t^2=" + std::to_string(c_) + ")";
    }

private:
    Field(std::uint32_t p, std::uint32_t c, bool ext) : p_(p), c_(c), ext_(ext) {
        if (p < 5 || p >= 65536 || !is_prime(p))
            throw std::invalid_argument("Field: p must be a prime with 3 < p < 65536, got " +
                                        std::to_string(p));
        if (ext_) {
            c_ %= p_;
            if (!is_nonresidue(c_)) {
                throw std::invalid_argument("Field: " + std::to_string(c) +
                                            " is a square mod " + std::to_string(p) +
                                            ", cannot define a quadratic extension");
            }
        }
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t k = 2; k * k <= n; ++k)
            if (n % k == 0) return false;
        return true;
    }

    // Euler criterion: c is a non-residue iff c^((p-1)/2) = -1.
    bool is_nonresidue(std::uint64_t c) const {
        if (c == 0) return false;
        std::uint64_t acc = 1, base = c % p_, e = (p_ - 1) / 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return acc == p_ - 1;
    }

    std::uint32_t p_;
    std::uint32_t c_;
    bool ext_;
};

/// Value c0 (prime field) or c0 + c1*t (quadratic extension), with canonical
/// representatives in [0, p).
class FieldElement {
public:
    FieldElement() : c0_(0), c1_(0), field_(Field::prime(5)) {}

    const Field& field() const { return field_; }
    std::uint32_t c0() const { return c0_; }
    std::uint32_t c1() const { return c1_; }

    /// Prime-field value; rejects extension elements with a t component.
    std::uint32_t value() const {
        if (c1_ != 0) throw std::logic_error("FieldElement: not a base-field value");
        return c0_;
    }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }

    /// Total order key used for deterministic enumeration.
    std::uint64_t key() const { return std::uint64_t(c0_) * field_.characteristic() + c1_; }

    FieldElement operator-() const {
        const std::uint64_t p = field_.characteristic();
        return with((p - c0_) % p, (p - c1_) % p);
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same_field(o);
        const std::uint64_t p = field_.characteristic();
        return with((std::uint64_t(c0_) + o.c0_) % p, (std::uint64_t(c1_) + o.c1_) % p);
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_same_field(o);
        const std::uint64_t p = field_.characteristic();
        if (!field_.is_extension()) return with(std::uint64_t(c0_) * o.c0_ % p, 0);
        // (a0 + a1 t)(b0 + b1 t) = a0 b0 + c a1 b1 + (a0 b1 + a1 b0) t
        const std::uint64_t c = field_.nonresidue();
        const std::uint64_t r0 = (std::uint64_t(c0_) * o.c0_ + c % p * (std::uint64_t(c1_) * o.c1_ % p)) % p;
        const std::uint64_t r1 = (std::uint64_t(c0_) * o.c1_ + std::uint64_t(c1_) * o.c0_) % p;
        return with(r0, r1);
    }

    FieldElement operator/(const FieldElement& o) const {
        check_same_field(o);
        return *this * o.inverse();
    }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: division by zero");
        const std::uint64_t p = field_.characteristic();
        if (!field_.is_extension()) return with(pow_mod(c0_, p - 2, p), 0);
        // (a0 - a1 t) / (a0^2 - c a1^2); the denominator is nonzero because c
        // is a non-residue.
        const std::uint64_t c = field_.nonresidue();
        std::uint64_t n = (std::uint64_t(c0_) * c0_ % p + p - c * (std::uint64_t(c1_) * c1_ % p) % p) % p;
        const std::uint64_t ninv = pow_mod(n, p - 2, p);
        return with(std::uint64_t(c0_) * ninv % p, (p - c1_) % p * ninv % p);
    }

    FieldElement pow(std::uint64_t e) const {
        FieldElement acc = field_.one();
        FieldElement base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && c0_ == o.c0_ && c1_ == o.c1_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const {
        if (!field_.is_extension()) return std::to_string(c0_);
        return std::to_string(c0_) + ":" + std::to_string(c1_);
    }

private:
    friend class Field;
    FieldElement(std::uint32_t c0, std::uint32_t c1, Field f) : c0_(c0), c1_(c1), field_(f) {}

    FieldElement with(std::uint64_t c0, std::uint64_t c1) const {
        return FieldElement(std::uint32_t(c0), std::uint32_t(c1), field_);
    }

    void check_same_field(const FieldElement& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("FieldElement: mixed fields " + field_.str() + " and " +
                                        o.field_.str());
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
        std::uint64_t acc = 1;
        b %= p;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    }

    std::uint32_t c0_;
    std::uint32_t c1_;
    Field field_;
};

inline FieldElement Field::element(std::int64_t v) const {
    const std::int64_t p = p_;
    return FieldElement(std::uint32_t(((v % p) + p) % p), 0, *this);
}

inline FieldElement Field::element(std::int64_t c0, std::int64_t c1) const {
    if (!ext_ && c1 != 0)
        throw std::invalid_argument("Field: t component given for a prime field element");
    const std::int64_t p = p_;
    return FieldElement(std::uint32_t(((c0 % p) + p) % p), std::uint32_t(((c1 % p) + p) % p),
                        *this);
}

inline FieldElement Field::zero() const { return FieldElement(0, 0, *this); }
inline FieldElement Field::one() const { return FieldElement(1, 0, *this); }

inline std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (std::uint32_t a = 0; a < p_; ++a) {
        if (!ext_) {
            out.push_back(FieldElement(a, 0, *this));
        } else {
            for (std::uint32_t b = 0; b < p_; ++b) out.push_back(FieldElement(a, b, *this));
        }
    }
    return out;
}

/// Both square roots {y, -y} of x in a prime field, found by exhaustive scan,
/// or nullopt when x is a non-residue. For x = 0 both entries are 0.
inline std::optional<std::pair<FieldElement, FieldElement>> sqrt(const FieldElement& x) {
    if (x.field().is_extension())
        throw std::invalid_argument("sqrt: only defined over prime fields");
    const std::uint32_t p = x.field().characteristic();
    for (std::uint32_t y = 0; y < p; ++y) {
        if (std::uint64_t(y) * y % p == x.c0()) {
            FieldElement root = x.field().element(y);
            return std::make_pair(root, -root);
        }
    }
    return std::nullopt;
}

/// x ^ p: the identity on F_p, the nontrivial automorphism on F_{p^2}.
inline FieldElement frobenius(const FieldElement& x) {
    return x.pow(x.field().characteristic());
}

}  // namespace heapcurve
