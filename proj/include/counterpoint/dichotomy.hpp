#pragma once

// Consonance/dissonance dichotomies of Z_n, their polarity symmetries, the
// local characterization of the induced partition of Z_n[t], and the
// polarization test for progressions of contrapuntal consonances.

#include <counterpoint/dual.hpp>
#include <counterpoint/residue.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace counterpoint {

/// A partition {K, D} of Z_n into consonances and dissonances, |K| = |D|.
class Dichotomy {
public:
    Dichotomy(std::vector<int> consonances, std::vector<int> dissonances, int n)
        : n_(n), consonances_(std::move(consonances)), dissonances_(std::move(dissonances)) {
        if (n < 2) throw std::invalid_argument("dichotomy: modulus must be >= 2");
        std::sort(consonances_.begin(), consonances_.end());
        std::sort(dissonances_.begin(), dissonances_.end());
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (int k : consonances_) {
            if (k < 0 || k >= n)
                throw std::invalid_argument("dichotomy: consonance " + std::to_string(k) +
                                            " outside [0, " + std::to_string(n) + ")");
            seen[static_cast<std::size_t>(k)] += 1;
        }
        for (int d : dissonances_) {
            if (d < 0 || d >= n)
                throw std::invalid_argument("dichotomy: dissonance " + std::to_string(d) +
                                            " outside [0, " + std::to_string(n) + ")");
            if (seen[static_cast<std::size_t>(d)])
                throw std::invalid_argument("dichotomy: K and D intersect at " +
                                            std::to_string(d));
            seen[static_cast<std::size_t>(d)] += 2;
        }
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("dichotomy: K union D misses " + std::to_string(v));
        if (consonances_.size() != dissonances_.size())
            throw std::invalid_argument("dichotomy: |K| = " +
                                        std::to_string(consonances_.size()) + " and |D| = " +
                                        std::to_string(dissonances_.size()) + " must be equal");
        is_consonance_.assign(static_cast<std::size_t>(n), 0);
        for (int k : consonances_) is_consonance_[static_cast<std::size_t>(k)] = 1;
    }

    /// The standard partition of Z_12: K = {0,3,4,7,8,9}, D = {1,2,5,6,10,11}.
    static const Dichotomy& standard() {
        static const Dichotomy d({0, 3, 4, 7, 8, 9}, {1, 2, 5, 6, 10, 11}, 12);
        return d;
    }

    int modulus() const { return n_; }
    const std::vector<int>& consonances() const { return consonances_; }
    const std::vector<int>& dissonances() const { return dissonances_; }

    bool is_consonance(int v) const {
        return is_consonance_[static_cast<std::size_t>(((v % n_) + n_) % n_)] != 0;
    }
    bool is_consonance(Residue r) const { return is_consonance(r.value()); }

    /// K[t] (consonant = true) or D[t]: all base + delta t with delta in the half.
    DualSet lifted(bool consonant) const {
        DualSet out(n_);
        const std::vector<int>& half = consonant ? consonances_ : dissonances_;
        for (int base = 0; base < n_; ++base)
            for (int delta : half) out.insert(base, delta);
        return out;
    }

    friend bool operator==(const Dichotomy& a, const Dichotomy& b) {
        return a.n_ == b.n_ && a.consonances_ == b.consonances_;
    }

private:
    int n_;
    std::vector<int> consonances_;
    std::vector<int> dissonances_;
    std::vector<char> is_consonance_;
};

/// All p in Sym(Z_n) with p(K) = D, exhaustively, sorted by (a, b).
/// The dichotomy is *strong* when exactly one such p exists.
inline std::vector<AffineSymmetry> polarity_search(const Dichotomy& dich) {
    const int n = dich.modulus();
    std::vector<AffineSymmetry> out;
    for (const AffineSymmetry& p : enumerate_symmetries(n)) {
        bool maps = true;
        for (int k : dich.consonances())
            if (dich.is_consonance(p.apply(Residue(k, n)))) {
                maps = false;
                break;
            }
        if (maps) out.push_back(p);
    }
    return out;
}

inline bool is_strong(const Dichotomy& dich) { return polarity_search(dich).size() == 1; }

/// The unique polarity of a strong dichotomy; error otherwise.
inline AffineSymmetry polarity(const Dichotomy& dich) {
    std::vector<AffineSymmetry> ps = polarity_search(dich);
    if (ps.size() != 1)
        throw std::invalid_argument("dichotomy is not strong: " + std::to_string(ps.size()) +
                                    " polarity symmetries (need exactly 1)");
    return ps.front();
}

/// The local polarity at cantus firmus z: e^z o e^{at}b o e^{-z} where
/// e^a b is the dichotomy's polarity. It fixes the fiber z + Z_n t and sends
/// K[t] to D[t]; for the standard dichotomy it is e^{8z+2t}5.
inline DualSymmetry local_polarity(const Dichotomy& dich, Residue z, Flavor flavor) {
    AffineSymmetry p = polarity(dich);
    DualSymmetry lift(Residue(0, dich.modulus()), p.translate(), p.scale(),
                      Residue(0, dich.modulus()), flavor);
    DualSymmetry shift = DualSymmetry::translation(z, flavor);
    return shift.compose(lift).compose(shift.inverse());
}

/// All symmetries of Z_n[t] that fix the fiber z + Z_n t and map K[t] onto
/// D[t], by exhaustive search over the whole symmetry group.
inline std::vector<DualSymmetry> fiber_polarity_search(const Dichotomy& dich, Residue z,
                                                       Flavor flavor) {
    const int n = dich.modulus();
    const DualSet kt = dich.lifted(true);
    const DualSet dt = dich.lifted(false);
    DualSet fiber(n);
    for (int y = 0; y < n; ++y) fiber.insert(z.value(), y);

    std::vector<DualSymmetry> found;
    for (const DualSymmetry& g : enumerate_dual_symmetries(n, flavor)) {
        if (image(g, fiber) != fiber) continue;
        if (image(g, kt) == dt) found.push_back(g);
    }
    return found;
}

/// True iff exactly one symmetry of Z_n[t] fixes the fiber z + Z_n t and maps
/// K[t] onto D[t].
inline bool verify_local_uniqueness(const Dichotomy& dich, Residue z, Flavor flavor) {
    return fiber_polarity_search(dich, z, flavor).size() == 1;
}

struct Polarization {
    bool polarized = false;
    std::optional<DualSymmetry> witness;  // first g in (u,v,c,d) order, when polarized
};

/// A progression (xi, eta) of contrapuntal consonances is polarized when some
/// symmetry g has xi in g(D[t]) and eta in g(K[t]). Exhaustive witness search.
inline Polarization is_polarized(const Dichotomy& dich, const DualNumber& xi,
                                 const DualNumber& eta) {
    if (!dich.is_consonance(xi.delta()) || !dich.is_consonance(eta.delta()))
        throw std::invalid_argument("is_polarized: both members must be consonant");
    if (xi.flavor() != eta.flavor())
        throw std::invalid_argument("flavor mismatch in progression");
    // xi in g(D[t])  <=>  g^-1(xi) has dissonant interval part.
    for (const DualSymmetry& g : enumerate_dual_symmetries(dich.modulus(), xi.flavor())) {
        DualSymmetry ginv = g.inverse();
        if (!dich.is_consonance(ginv.apply(xi).delta()) &&
            dich.is_consonance(ginv.apply(eta).delta()))
            return {true, g};
    }
    return {false, std::nullopt};
}

/// The deformed-partition condition at fiber z: applying the local polarity to
/// g(K[t]) yields exactly g(D[t]).
inline bool deformed_condition(const Dichotomy& dich, const DualSymmetry& g, Residue z) {
    DualSymmetry pz = local_polarity(dich, z, g.flavor());
    return image(pz, image(g, dich.lifted(true))) == image(g, dich.lifted(false));
}

}  // namespace counterpoint
