#pragma once

// The counterpoint model: contrapuntal symmetries, admitted successors, and
// verdicts, in four variants. A successor eta of a consonance xi = z + kt is
// admitted when eta lies in e^z(h(K[t]) n K[t]) for some symmetry h of the
// fiber-preserving subgroup H that (1) pulls xi into the deformed dissonances,
// (2) satisfies the deformed-partition condition at the cantus firmus, and
// (3) maximizes the deformed-consonance intersection. The local-global
// variants strengthen (2) to every fiber; the idempotent variants run the
// same machinery over Z_n[x] with x^2 = x.
//
// Two independent computation routes exist on purpose: a fast closed-form
// search (linear conditions plus a gcd-class cardinality count) used for the
// built-in dichotomy, and a direct set-image search (the oracle) used for
// everything else and as the authority the fast route is tested against.

#include <counterpoint/dichotomy.hpp>
#include <counterpoint/reduction.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace counterpoint {

enum class Variant { classical, idempotent, local_global_nilpotent, local_global_idempotent };

inline Flavor flavor_of(Variant v) {
    return (v == Variant::classical || v == Variant::local_global_nilpotent)
               ? Flavor::nilpotent
               : Flavor::idempotent;
}

inline bool is_local_global(Variant v) {
    return v == Variant::local_global_nilpotent || v == Variant::local_global_idempotent;
}

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::classical: return "classical";
        case Variant::idempotent: return "idempotent";
        case Variant::local_global_nilpotent: return "local-global-nilpotent";
        case Variant::local_global_idempotent: return "local-global-idempotent";
    }
    return "?";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "classical") return Variant::classical;
    if (s == "idempotent") return Variant::idempotent;
    if (s == "local-global-nilpotent") return Variant::local_global_nilpotent;
    if (s == "local-global-idempotent") return Variant::local_global_idempotent;
    throw std::invalid_argument("unknown variant: " + s);
}

inline const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> vs{Variant::classical, Variant::idempotent,
                                         Variant::local_global_nilpotent,
                                         Variant::local_global_idempotent};
    return vs;
}

enum class VerdictValue { allowed, forbidden, non_polarized };

inline const char* verdict_name(VerdictValue v) {
    switch (v) {
        case VerdictValue::allowed: return "allowed";
        case VerdictValue::forbidden: return "forbidden";
        case VerdictValue::non_polarized: return "non-polarized";
    }
    return "?";
}

struct Verdict {
    VerdictValue value = VerdictValue::forbidden;
    std::vector<DualSymmetry> witnesses;  // contrapuntal symmetries admitting the successor
};

class ModelEngine {
public:
    explicit ModelEngine(Dichotomy dich)
        : dich_(std::move(dich)),
          polarity_(polarity(dich_)),
          lifted_cons_(dich_.lifted(true)),
          lifted_diss_(dich_.lifted(false)),
          standard_(dich_ == Dichotomy::standard()) {}

    const Dichotomy& dichotomy() const { return dich_; }
    const AffineSymmetry& dichotomy_polarity() const { return polarity_; }
    int modulus() const { return dich_.modulus(); }

    /// All maximizers of the variant's conditions over H, sorted by (u,v,c,d).
    std::vector<DualSymmetry> contrapuntal_symmetries(Residue k, Variant variant) const {
        require_consonance(k);
        const Flavor flavor = flavor_of(variant);
        std::vector<DualSymmetry> maximizers;
        int best = -1;
        for (const DualSymmetry& h : subgroup_h(flavor)) {
            if (!conditions_hold(h, k, variant)) continue;
            const int card = standard_ ? successor_cardinality(h)
                                       : (image(h, lifted_cons_) & lifted_cons_).size();
            if (card > best) {
                best = card;
                maximizers.clear();
            }
            if (card == best) maximizers.push_back(h);
        }
        return maximizers;
    }

    /// h(K[t]) n K[t] by the per-fiber formula: the disjoint union over r of
    /// c r + ((c_eff K + v + d r) n K) t, with c_eff = c or c+d by flavor.
    DualSet successor_set(const DualSymmetry& h) const {
        require_zero_u(h);
        const int n = modulus();
        const int c = h.c().value(), v = h.v().value(), d = h.d().value();
        const int ce = effective_scale(h);
        DualSet out(n);
        for (int r = 0; r < n; ++r)
            for (int k : dich_.consonances()) {
                const int delta = (ce * k + v + d * r) % n;
                if (dich_.is_consonance(delta)) out.insert((c * r) % n, delta);
            }
        return out;
    }

    /// |h(K[t]) n K[t]| as rho * sum |K_i| |K_{(c_eff i + v) mod rho}| with
    /// rho = gcd(d, n); d = 0 gives rho = n with singleton or empty classes.
    int successor_cardinality(const DualSymmetry& h) const {
        require_zero_u(h);
        const int n = modulus();
        const int rho = std::gcd(h.d().value(), n) == 0 ? n : std::gcd(h.d().value(), n);
        const int ce = effective_scale(h);
        std::vector<int> class_size(static_cast<std::size_t>(rho), 0);
        for (int k : dich_.consonances()) ++class_size[static_cast<std::size_t>(k % rho)];
        int total = 0;
        for (int i = 0; i < rho; ++i)
            total += class_size[static_cast<std::size_t>(i)] *
                     class_size[static_cast<std::size_t>((ce * i + h.v().value()) % rho)];
        return rho * total;
    }

    /// The deformed-consonance intersection of h, by the route matching the
    /// engine's dichotomy: per-fiber formula on the calibrated built-in
    /// dichotomy, direct set image otherwise.
    DualSet intersection_for(const DualSymmetry& h) const {
        return standard_ ? successor_set(h) : (image(h, lifted_cons_) & lifted_cons_);
    }

    /// Union of e^z(h(K[t]) n K[t]) over the contrapuntal symmetries for
    /// delta(xi), where z = base(xi).
    DualSet admitted_successors(const DualNumber& xi, Variant variant) const {
        require_consonance(xi.delta());
        const int n = modulus();
        DualSet at_zero(n);
        for (const DualSymmetry& h : contrapuntal_symmetries(xi.delta(), variant))
            at_zero |= intersection_for(h);
        DualSet out(n);
        const int z = xi.base().value();
        at_zero.for_each([&](int base, int delta) { out.insert((base + z) % n, delta); });
        return out;
    }

    /// Non-polarized when no symmetry polarizes the pair; otherwise allowed
    /// exactly when eta is an admitted successor of xi.
    Verdict verdict(const DualNumber& xi, const DualNumber& eta, Variant variant) const {
        require_consonance(xi.delta());
        require_consonance(eta.delta());
        if (!is_polarized(dich_, xi, eta).polarized) return {VerdictValue::non_polarized, {}};
        const DualNumber eta_at_zero(eta.base() - xi.base(), eta.delta(), eta.flavor());
        std::vector<DualSymmetry> witnesses;
        for (const DualSymmetry& h : contrapuntal_symmetries(xi.delta(), variant))
            if (intersection_for(h).contains(eta_at_zero)) witnesses.push_back(h);
        if (!witnesses.empty()) return {VerdictValue::allowed, std::move(witnesses)};
        return {VerdictValue::forbidden, {}};
    }

    Verdict verdict(const ReducedProgression& prog, Variant variant) const {
        return verdict(prog.first, prog.second, variant);
    }

    struct OracleResult {
        std::vector<DualSymmetry> symmetries;
        DualSet successors;
    };

    /// Independent recomputation with no closed forms: direct set images for
    /// every condition and the direct intersection cardinality. For the
    /// local-global variants this runs the fiberwise-filtered maximization
    /// (the filter applied both to the score and to the successor sets).
    OracleResult oracle_successors(Residue k, Variant variant) const {
        require_consonance(k);
        const Flavor flavor = flavor_of(variant);
        const int n = modulus();
        const bool fiberwise = is_local_global(variant);
        const DualNumber xi(Residue(0, n), k, flavor);

        std::vector<DualSymmetry> maximizers;
        std::vector<DualSet> contributions;
        int best = -1;
        for (const DualSymmetry& h : subgroup_h(flavor)) {
            const DualSet hk = image(h, lifted_cons_);
            const DualSet hd = image(h, lifted_diss_);
            if (!hd.contains(xi)) continue;                                  // alternation
            if (image(local_polarity_cached(0, flavor), hk) != hd) continue; // local dissonance
            DualSet inter = hk & lifted_cons_;
            if (fiberwise) {
                // keep only successors whose own fiber satisfies the
                // deformed-partition condition
                DualSet filtered(n);
                for (int z = 0; z < n; ++z) {
                    bool fiber_ok = image(local_polarity_cached(z, flavor), hk) == hd;
                    if (!fiber_ok) continue;
                    for (int delta : dich_.consonances())
                        if (inter.contains(z, delta)) filtered.insert(z, delta);
                }
                inter = filtered;
            }
            const int card = inter.size();
            if (card > best) {
                best = card;
                maximizers.clear();
                contributions.clear();
            }
            if (card == best) {
                maximizers.push_back(h);
                contributions.push_back(inter);
            }
        }
        DualSet succ(n);
        for (const DualSet& s : contributions) succ |= s;
        return {std::move(maximizers), std::move(succ)};
    }

private:
    void require_consonance(Residue k) const {
        if (k.modulus() != modulus())
            throw std::invalid_argument("modulus mismatch with the model's dichotomy");
        if (!dich_.is_consonance(k))
            throw std::invalid_argument(std::to_string(k.value()) + " is not a consonance");
    }
    static void require_zero_u(const DualSymmetry& h) {
        if (h.u().value() != 0)
            throw std::invalid_argument("successor formula requires u = 0, got u = " +
                                        std::to_string(h.u().value()));
    }

    int effective_scale(const DualSymmetry& h) const {
        return h.flavor() == Flavor::nilpotent ? h.c().value()
                                               : (h.c().value() + h.d().value()) % modulus();
    }

    const std::vector<DualSymmetry>& subgroup_h(Flavor flavor) const {
        std::vector<DualSymmetry>& cache =
            flavor == Flavor::nilpotent ? h_nilpotent_ : h_idempotent_;
        if (cache.empty()) cache = enumerate_dual_symmetries(modulus(), flavor, true);
        return cache;
    }

    DualSymmetry local_polarity_cached(int z, Flavor flavor) const {
        std::vector<DualSymmetry>& cache =
            flavor == Flavor::nilpotent ? pz_nilpotent_ : pz_idempotent_;
        if (cache.empty())
            for (int w = 0; w < modulus(); ++w)
                cache.push_back(local_polarity(dich_, Residue(w, modulus()), flavor));
        return cache[static_cast<std::size_t>(z)];
    }

    /// Search conditions. The closed route (built-in dichotomy) uses the
    /// linear identities with polarity e^a b: v in k - c_eff D,
    /// b v + a = c_eff a + v, and for local-global (b-1) d = 0. The generic
    /// route evaluates the set conditions directly.
    bool conditions_hold(const DualSymmetry& h, Residue k, Variant variant) const {
        const int n = modulus();
        if (standard_) {
            const int ce = effective_scale(h);
            const int v = h.v().value(), d = h.d().value();
            const int a = polarity_.translate().value(), b = polarity_.scale().value();
            bool cond1 = false;
            for (int diss : dich_.dissonances())
                if (((k.value() - ce * diss) % n + n) % n == v) {
                    cond1 = true;
                    break;
                }
            if (!cond1) return false;
            if ((b * v + a) % n != (ce * a + v) % n) return false;
            if (is_local_global(variant) && ((b - 1) * d) % n != 0) return false;
            return true;
        }
        const Flavor flavor = h.flavor();
        const DualSet hk = image(h, lifted_cons_);
        const DualSet hd = image(h, lifted_diss_);
        if (!hd.contains(0, k.value())) return false;
        const int z_hi = is_local_global(variant) ? n : 1;
        for (int z = 0; z < z_hi; ++z)
            if (image(local_polarity_cached(z, flavor), hk) != hd) return false;
        return true;
    }

    Dichotomy dich_;
    AffineSymmetry polarity_;
    DualSet lifted_cons_;
    DualSet lifted_diss_;
    bool standard_;
    mutable std::vector<DualSymmetry> h_nilpotent_, h_idempotent_;
    mutable std::vector<DualSymmetry> pz_nilpotent_, pz_idempotent_;
};

/// Precomputed per-consonance results for one variant.
struct ContrapuntalEntry {
    int k = 0;
    std::vector<DualSymmetry> symmetries;
    DualSet successors = DualSet(1);  // at cantus firmus 0
    int max_cardinality = 0;
};

struct VariantModel {
    Variant variant = Variant::classical;
    std::vector<ContrapuntalEntry> entries;

    const ContrapuntalEntry& entry_for(int k) const {
        for (const ContrapuntalEntry& e : entries)
            if (e.k == k) return e;
        throw std::invalid_argument(std::to_string(k) + " is not a consonance");
    }
};

inline VariantModel build_model(const ModelEngine& engine, Variant variant) {
    VariantModel m{variant, {}};
    for (int k : engine.dichotomy().consonances()) {
        Residue rk(k, engine.modulus());
        DualNumber xi(Residue(0, engine.modulus()), rk, flavor_of(variant));
        ContrapuntalEntry e;
        e.k = k;
        e.symmetries = engine.contrapuntal_symmetries(rk, variant);
        e.successors = engine.admitted_successors(xi, variant);
        e.max_cardinality =
            e.symmetries.empty() ? 0 : engine.intersection_for(e.symmetries.front()).size();
        m.entries.push_back(std::move(e));
    }
    return m;
}

/// Verdict against a precomputed VariantModel (batch-friendly).
inline Verdict verdict_with_model(const ModelEngine& engine, const VariantModel& model,
                                  const DualNumber& xi, const DualNumber& eta) {
    if (!engine.dichotomy().is_consonance(xi.delta()) ||
        !engine.dichotomy().is_consonance(eta.delta()))
        throw std::invalid_argument("verdict requires consonant members");
    if (!is_polarized(engine.dichotomy(), xi, eta).polarized)
        return {VerdictValue::non_polarized, {}};
    const ContrapuntalEntry& entry = model.entry_for(xi.delta().value());
    const DualNumber eta0(eta.base() - xi.base(), eta.delta(), eta.flavor());
    std::vector<DualSymmetry> witnesses;
    for (const DualSymmetry& h : entry.symmetries)
        if (engine.intersection_for(h).contains(eta0)) witnesses.push_back(h);
    if (!witnesses.empty()) return {VerdictValue::allowed, std::move(witnesses)};
    return {VerdictValue::forbidden, {}};
}

/// The progression domain for verdict tables: (k t, c' + k' t) for consonant
/// k, k', filtered by diatonic occurrence when a scale is supplied.
inline std::vector<ReducedProgression> verdict_domain(const ModelEngine& engine, Flavor flavor,
                                                      const Scale* scale) {
    std::vector<ReducedProgression> out;
    const int n = engine.modulus();
    for (int k : engine.dichotomy().consonances())
        for (int cp = 0; cp < n; ++cp)
            for (int kp : engine.dichotomy().consonances()) {
                if (scale != nullptr && !occurs_diatonically(k, cp, kp, *scale)) continue;
                out.push_back(make_reduced(k, cp, kp, flavor, n));
            }
    return out;
}

}  // namespace counterpoint
