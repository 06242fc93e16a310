#pragma once

// The rings Z_n[t] with t^2 = 0 (nilpotent flavor, t written "e") or t^2 = t
// (idempotent flavor, t written "x"), and their groups of affine symmetries
// e^{u+vt}(c+dt). A dual number a+bt models a contrapuntal interval: cantus
// firmus a, interval b to the discantus.

#include <counterpoint/residue.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace counterpoint {

enum class Flavor { nilpotent, idempotent };

inline const char* flavor_name(Flavor f) {
    return f == Flavor::nilpotent ? "nilpotent" : "idempotent";
}

/// Rendering token for the adjoined element: "e" when t^2=0, "x" when t^2=t.
inline const char* flavor_token(Flavor f) { return f == Flavor::nilpotent ? "e" : "x"; }

class DualNumber {
public:
    DualNumber(Residue base, Residue delta, Flavor flavor)
        : base_(base), delta_(delta), flavor_(flavor) {
        if (base.modulus() != delta.modulus())
            throw std::invalid_argument("modulus mismatch in dual number");
    }

    Residue base() const { return base_; }
    Residue delta() const { return delta_; }
    Flavor flavor() const { return flavor_; }
    int modulus() const { return base_.modulus(); }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
        check_compatible(a, b);
        return {a.base_ + b.base_, a.delta_ + b.delta_, a.flavor_};
    }

    /// (a+bt)(a'+b't) = aa' + (ab'+a'b)t, plus bb't when t is idempotent.
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        check_compatible(a, b);
        Residue cross = a.base_ * b.delta_ + b.base_ * a.delta_;
        if (a.flavor_ == Flavor::idempotent) cross = cross + a.delta_ * b.delta_;
        return {a.base_ * b.base_, cross, a.flavor_};
    }

    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.flavor_ == b.flavor_ && a.base_ == b.base_ && a.delta_ == b.delta_;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }
    friend bool operator<(const DualNumber& a, const DualNumber& b) {
        if (a.base_ != b.base_) return a.base_ < b.base_;
        return a.delta_ < b.delta_;
    }

    std::string to_string() const {
        return std::to_string(base_.value()) + "+" + std::to_string(delta_.value()) +
               flavor_token(flavor_);
    }

private:
    static void check_compatible(const DualNumber& a, const DualNumber& b) {
        if (a.flavor_ != b.flavor_)
            throw std::invalid_argument("flavor mismatch in dual arithmetic");
        if (a.modulus() != b.modulus())
            throw std::invalid_argument("modulus mismatch in dual arithmetic");
    }

    Residue base_;
    Residue delta_;
    Flavor flavor_;
};

/// Affine symmetry e^{u+vt}(c+dt) : x+yt |-> (c+dt)(x+yt) + (u+vt).
/// Invertibility: c must be a unit; for the idempotent flavor c+d as well.
class DualSymmetry {
public:
    DualSymmetry(Residue u, Residue v, Residue c, Residue d, Flavor flavor)
        : u_(u), v_(v), c_(c), d_(d), flavor_(flavor) {
        if (u.modulus() != v.modulus() || u.modulus() != c.modulus() ||
            u.modulus() != d.modulus())
            throw std::invalid_argument("modulus mismatch in dual symmetry");
        if (!c.is_unit())
            throw std::invalid_argument("dual symmetry: c = " + std::to_string(c.value()) +
                                        " is not a unit mod " + std::to_string(c.modulus()));
        if (flavor == Flavor::idempotent && !(c + d).is_unit())
            throw std::invalid_argument("dual symmetry: c+d = " +
                                        std::to_string((c + d).value()) +
                                        " is not a unit mod " + std::to_string(c.modulus()));
    }

    static DualSymmetry identity(int n, Flavor f) {
        return {Residue(0, n), Residue(0, n), Residue(1, n), Residue(0, n), f};
    }
    /// The translation e^z.
    static DualSymmetry translation(Residue z, Flavor f) {
        int n = z.modulus();
        return {z, Residue(0, n), Residue(1, n), Residue(0, n), f};
    }

    Residue u() const { return u_; }
    Residue v() const { return v_; }
    Residue c() const { return c_; }
    Residue d() const { return d_; }
    Flavor flavor() const { return flavor_; }
    int modulus() const { return u_.modulus(); }

    DualNumber linear_part() const { return {c_, d_, flavor_}; }
    DualNumber offset() const { return {u_, v_, flavor_}; }

    DualNumber apply(const DualNumber& x) const {
        if (x.flavor() != flavor_)
            throw std::invalid_argument("flavor mismatch in dual symmetry application");
        return linear_part() * x + offset();
    }

    /// Function composition: (*this) after other.
    DualSymmetry compose(const DualSymmetry& other) const {
        DualNumber lin = linear_part() * other.linear_part();
        DualNumber off = linear_part() * other.offset() + offset();
        return {off.base(), off.delta(), lin.base(), lin.delta(), flavor_};
    }

    DualSymmetry inverse() const {
        Residue ci = c_.inverse();
        // (c+dt)^-1 = c^-1 + et with e = -d c^-2 (nilpotent) or -d c^-1 (c+d)^-1.
        Residue e = flavor_ == Flavor::nilpotent ? -(d_ * ci * ci)
                                                 : -(d_ * ci * (c_ + d_).inverse());
        DualNumber lin_inv(ci, e, flavor_);
        DualNumber off = lin_inv * offset();
        return {-off.base(), -off.delta(), lin_inv.base(), lin_inv.delta(), flavor_};
    }

    friend bool operator==(const DualSymmetry& a, const DualSymmetry& b) {
        return a.flavor_ == b.flavor_ && a.u_ == b.u_ && a.v_ == b.v_ && a.c_ == b.c_ &&
               a.d_ == b.d_;
    }
    friend bool operator!=(const DualSymmetry& a, const DualSymmetry& b) { return !(a == b); }
    friend bool operator<(const DualSymmetry& a, const DualSymmetry& b) {
        if (a.u_ != b.u_) return a.u_ < b.u_;
        if (a.v_ != b.v_) return a.v_ < b.v_;
        if (a.c_ != b.c_) return a.c_ < b.c_;
        return a.d_ < b.d_;
    }

    /// Renders as e.g. "e^{8+2e}(5+0e)" with the flavor's token.
    std::string to_string() const {
        const char* t = flavor_token(flavor_);
        return "e^{" + std::to_string(u_.value()) + "+" + std::to_string(v_.value()) + t +
               "}(" + std::to_string(c_.value()) + "+" + std::to_string(d_.value()) + t + ")";
    }

private:
    Residue u_, v_;  // offset u + vt
    Residue c_, d_;  // linear part c + dt
    Flavor flavor_;
};

/// All valid (u,v,c,d) for the flavor, sorted by (u,v,c,d); zero_u restricts
/// to the subgroup fixing the fiber over 0 (u = 0).
inline std::vector<DualSymmetry> enumerate_dual_symmetries(int n, Flavor flavor,
                                                           bool zero_u = false) {
    std::vector<Residue> us = units(n);
    std::vector<char> is_unit(static_cast<std::size_t>(n), 0);
    for (Residue b : us) is_unit[static_cast<std::size_t>(b.value())] = 1;

    std::vector<DualSymmetry> out;
    const int u_hi = zero_u ? 1 : n;
    for (int u = 0; u < u_hi; ++u)
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < n; ++c) {
                if (!is_unit[static_cast<std::size_t>(c)]) continue;
                for (int d = 0; d < n; ++d) {
                    if (flavor == Flavor::idempotent &&
                        !is_unit[static_cast<std::size_t>((c + d) % n)])
                        continue;
                    out.emplace_back(Residue(u, n), Residue(v, n), Residue(c, n), Residue(d, n),
                                     flavor);
                }
            }
    return out;
}

/// Dense subset of Z_n[t], indexed by (base, delta). Flavor-agnostic: it is a
/// set of coordinate pairs, not of ring elements.
class DualSet {
public:
    explicit DualSet(int n)
        : n_(n), bits_(static_cast<std::size_t>(n * n + 63) / 64, 0) {}

    int modulus() const { return n_; }

    void insert(int base, int delta) {
        std::size_t i = index(base, delta);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    bool contains(int base, int delta) const {
        std::size_t i = index(base, delta);
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }
    bool contains(const DualNumber& x) const { return contains(x.base().value(), x.delta().value()); }

    int size() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    DualSet operator&(const DualSet& other) const {
        DualSet out(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & other.bits_[i];
        return out;
    }
    DualSet operator|(const DualSet& other) const {
        DualSet out(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] | other.bits_[i];
        return out;
    }
    DualSet& operator|=(const DualSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
        return *this;
    }

    friend bool operator==(const DualSet& a, const DualSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const DualSet& a, const DualSet& b) { return !(a == b); }

    /// Visits members in (base, delta) ascending order.
    void for_each(const std::function<void(int, int)>& fn) const {
        for (int base = 0; base < n_; ++base)
            for (int delta = 0; delta < n_; ++delta)
                if (contains(base, delta)) fn(base, delta);
    }

private:
    std::size_t index(int base, int delta) const {
        return static_cast<std::size_t>(base) * n_ + delta;
    }

    int n_;
    std::vector<std::uint64_t> bits_;
};

/// Image of a coordinate set under g, i.e. { g(x) : x in s }.
inline DualSet image(const DualSymmetry& g, const DualSet& s) {
    const int n = s.modulus();
    DualSet out(n);
    const int c = g.c().value(), d = g.d().value(), u = g.u().value(), v = g.v().value();
    const bool idem = g.flavor() == Flavor::idempotent;
    s.for_each([&](int x, int y) {
        int base = (c * x + u) % n;
        int cross = c * y + d * x + (idem ? d * y : 0);
        out.insert(base, (cross + v) % n);
    });
    return out;
}

}  // namespace counterpoint
