#pragma once

// Exact arithmetic in Z_n and the group of affine symmetries e^a b of Z_n.

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace counterpoint {

/// An integer modulo n, canonicalized to [0, n) on construction.
class Residue {
public:
    Residue(long long value, int modulus) : modulus_(modulus) {
        if (modulus < 1)
            throw std::invalid_argument("invalid-modulus: modulus must be positive, got " +
                                        std::to_string(modulus));
        long long v = value % modulus;
        if (v < 0) v += modulus;
        value_ = static_cast<int>(v);
    }

    int value() const { return value_; }
    int modulus() const { return modulus_; }

    bool is_unit() const { return std::gcd(value_, modulus_) == 1; }

    /// Multiplicative inverse; requires gcd(value, n) = 1.
    Residue inverse() const {
        if (!is_unit())
            throw std::domain_error(std::to_string(value_) + " is not a unit mod " +
                                    std::to_string(modulus_));
        // extended Euclid
        long long r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            std::swap(r0 -= q * r1, r1);
            std::swap(s0 -= q * s1, s1);
        }
        return Residue(s0, modulus_);
    }

    friend Residue operator+(Residue a, Residue b) {
        check_same(a, b);
        return Residue(static_cast<long long>(a.value_) + b.value_, a.modulus_);
    }
    friend Residue operator-(Residue a, Residue b) {
        check_same(a, b);
        return Residue(static_cast<long long>(a.value_) - b.value_, a.modulus_);
    }
    friend Residue operator*(Residue a, Residue b) {
        check_same(a, b);
        return Residue(static_cast<long long>(a.value_) * b.value_, a.modulus_);
    }
    Residue operator-() const { return Residue(-static_cast<long long>(value_), modulus_); }

    friend bool operator==(Residue a, Residue b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend bool operator!=(Residue a, Residue b) { return !(a == b); }
    friend bool operator<(Residue a, Residue b) {
        if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
        return a.value_ < b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value_; }

private:
    static void check_same(Residue a, Residue b) {
        if (a.modulus_ != b.modulus_)
            throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus_) +
                                        " vs " + std::to_string(b.modulus_));
    }

    int value_;
    int modulus_;
};

/// The units of Z_n, sorted ascending. Note units(12) = {1,5,7,11}: 3 divides 12,
/// so 3 is not invertible despite occasionally appearing in informal listings.
inline std::vector<Residue> units(int n) {
    if (n < 2)
        throw std::invalid_argument("invalid-modulus: units require n >= 2, got " +
                                    std::to_string(n));
    std::vector<Residue> out;
    for (int b = 0; b < n; ++b)
        if (std::gcd(b, n) == 1) out.emplace_back(b, n);
    return out;
}

/// Affine automorphism e^a b : r |-> b r + a of Z_n, with b a unit.
class AffineSymmetry {
public:
    AffineSymmetry(Residue translate, Residue scale)
        : translate_(translate), scale_(scale) {
        if (translate.modulus() != scale.modulus())
            throw std::invalid_argument("modulus mismatch in affine symmetry");
        if (!scale.is_unit())
            throw std::invalid_argument("scale " + std::to_string(scale.value()) +
                                        " is not a unit mod " + std::to_string(scale.modulus()));
    }

    static AffineSymmetry identity(int n) { return {Residue(0, n), Residue(1, n)}; }
    static AffineSymmetry translation(Residue a) { return {a, Residue(1, a.modulus())}; }

    Residue translate() const { return translate_; }
    Residue scale() const { return scale_; }
    int modulus() const { return translate_.modulus(); }

    Residue apply(Residue r) const { return scale_ * r + translate_; }

    /// Function composition: (*this) after other.
    AffineSymmetry compose(const AffineSymmetry& other) const {
        return {scale_ * other.translate_ + translate_, scale_ * other.scale_};
    }

    AffineSymmetry inverse() const {
        Residue s = scale_.inverse();
        return {-(s * translate_), s};
    }

    friend bool operator==(const AffineSymmetry& a, const AffineSymmetry& b) {
        return a.translate_ == b.translate_ && a.scale_ == b.scale_;
    }
    friend bool operator!=(const AffineSymmetry& a, const AffineSymmetry& b) { return !(a == b); }
    friend bool operator<(const AffineSymmetry& a, const AffineSymmetry& b) {
        if (a.translate_ != b.translate_) return a.translate_ < b.translate_;
        return a.scale_ < b.scale_;
    }

    std::string to_string() const {
        return "e^" + std::to_string(translate_.value()) + " " + std::to_string(scale_.value());
    }

private:
    Residue translate_;  // a
    Residue scale_;      // b
};

/// All n * |units(n)| affine symmetries of Z_n, lexicographic by (a, b).
inline std::vector<AffineSymmetry> enumerate_symmetries(int n) {
    std::vector<Residue> us = units(n);
    std::vector<AffineSymmetry> out;
    out.reserve(static_cast<std::size_t>(n) * us.size());
    for (int a = 0; a < n; ++a)
        for (Residue b : us) out.emplace_back(Residue(a, n), b);
    return out;
}

}  // namespace counterpoint
