#pragma once

// The reduced strict style: projection of strict progressions modulo 12,
// enumeration of the diatonically occurring reduced progressions, and their
// classification by preimage (plus the refined sub-classification of good
// progressions and the derived closed-form rule crosscheck).

#include <counterpoint/dichotomy.hpp>
#include <counterpoint/dual.hpp>
#include <counterpoint/strict.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace counterpoint {

/// A progression of contrapuntal intervals modulo the octave, first member
/// rebased to cantus firmus 0: (k t, c' + k' t).
struct ReducedProgression {
    DualNumber first;
    DualNumber second;

    int k() const { return first.delta().value(); }
    int cp() const { return second.base().value(); }
    int kp() const { return second.delta().value(); }
    Flavor flavor() const { return first.flavor(); }

    friend bool operator==(const ReducedProgression& a, const ReducedProgression& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(const ReducedProgression& a, const ReducedProgression& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    }
};

inline ReducedProgression make_reduced(int k, int cp, int kp, Flavor flavor = Flavor::nilpotent,
                                       int n = 12) {
    return {DualNumber(Residue(0, n), Residue(k, n), flavor),
            DualNumber(Residue(cp, n), Residue(kp, n), flavor)};
}

/// Reduce all four pitches mod 12 and re-express relative to cantus base 0.
inline ReducedProgression project(const StrictProgression& p,
                                  Flavor flavor = Flavor::nilpotent) {
    return make_reduced(((p.k() % 12) + 12) % 12, (((p.cp - p.c) % 12) + 12) % 12,
                        ((p.kp() % 12) + 12) % 12, flavor);
}

/// Diatonic occurrence: some translation places cantus, discantus, next
/// cantus, and next discantus inside the scale.
inline bool occurs_diatonically(int k, int cp, int kp, const Scale& scale = Scale::diatonic()) {
    const int n = scale.modulus();
    for (int t = 0; t < n; ++t)
        if (scale.contains(t) && scale.contains(t + k) && scale.contains(t + cp) &&
            scale.contains(t + cp + kp))
            return true;
    return false;
}

enum class ReducedCategory { inadmissible, bad, good };

enum class ReducedKind {
    parallel_fifth,
    parallel_unison,
    hidden_fifth_from_sixth,
    tritone,
    projected_imperfect_similar,
    hidden_tritone,
    none,
};

enum class Refined { good_good, good_bad, ambiguous, not_applicable };

inline const char* category_name(ReducedCategory c) {
    switch (c) {
        case ReducedCategory::inadmissible: return "inadmissible";
        case ReducedCategory::bad: return "bad";
        case ReducedCategory::good: return "good";
    }
    return "?";
}

inline const char* kind_name(ReducedKind k) {
    switch (k) {
        case ReducedKind::parallel_fifth: return "parallel-5th";
        case ReducedKind::parallel_unison: return "parallel-unison";
        case ReducedKind::hidden_fifth_from_sixth: return "hidden-5th-from-6th";
        case ReducedKind::tritone: return "tritone";
        case ReducedKind::projected_imperfect_similar: return "proj-imp-cons";
        case ReducedKind::hidden_tritone: return "hidden-tritone";
        case ReducedKind::none: return "none";
    }
    return "?";
}

inline const char* refined_name(Refined r) {
    switch (r) {
        case Refined::good_good: return "good-good";
        case Refined::good_bad: return "good-bad";
        case Refined::ambiguous: return "ambiguous";
        case Refined::not_applicable: return "n/a";
    }
    return "?";
}

struct ReducedLabel {
    ReducedCategory category = ReducedCategory::good;
    ReducedKind kind = ReducedKind::none;
    Refined refined = Refined::not_applicable;
};

/// Kind clauses evaluated independently within the category; like the strict
/// clauses they overlap (a parallel unison by tritone skip is also a tritone).
struct ReducedKindFlags {
    bool parallel_fifth = false;
    bool parallel_unison = false;
    bool hidden_fifth_from_sixth = false;
    bool tritone = false;
    bool projected_imperfect_similar = false;
    bool hidden_tritone = false;
};

struct ReducedSummary {
    int total = 0;
    int inadmissible = 0;
    int bad = 0;
    int good = 0;
    int parallel_fifths = 0;
    int parallel_unisons = 0;
    int hidden_fifths_from_sixth = 0;
    int tritones = 0;
    int projected_imperfect_similar = 0;
    int hidden_tritones = 0;
    int good_good = 0;
    int good_bad = 0;
    int ambiguous = 0;
};

struct CrosscheckClause {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct CrosscheckReport {
    std::vector<CrosscheckClause> clauses;
    std::vector<std::string> disagreements;
    bool all_agree() const {
        if (!disagreements.empty()) return false;
        for (const CrosscheckClause& c : clauses)
            if (!c.holds) return false;
        return true;
    }
};

/// The reduced strict style over the 287 diatonically occurring progressions,
/// classified through the strict preimages. Built once; immutable afterwards.
class ReducedStyle {
public:
    static ReducedStyle build(const Scale& scale = Scale::diatonic()) {
        ReducedStyle rs;
        const std::vector<int>& cons = Dichotomy::standard().consonances();

        std::map<std::tuple<int, int, int>, std::vector<StrictCategory>> preimages;
        for (const auto& [p, label] : enumerate_strict_representatives(scale)) {
            ReducedProgression r = project(p);
            preimages[{r.k(), r.cp(), r.kp()}].push_back(label.category);
        }

        for (int k : cons)
            for (int cp = 0; cp < 12; ++cp)
                for (int kp : cons) {
                    if (!occurs_diatonically(k, cp, kp, scale)) continue;
                    auto it = preimages.find({k, cp, kp});
                    if (it == preimages.end() || it->second.empty())
                        throw std::logic_error(
                            "reduced progression without strict preimage: (" +
                            std::to_string(k) + "," + std::to_string(cp) + "," +
                            std::to_string(kp) + ")");
                    rs.index_[{k, cp, kp}] = static_cast<int>(rs.progressions_.size());
                    rs.progressions_.push_back(make_reduced(k, cp, kp));
                    rs.labels_.push_back(label_from_preimages(k, cp, kp, it->second));
                }
        return rs;
    }

    const std::vector<ReducedProgression>& progressions() const { return progressions_; }

    const ReducedLabel& label(const ReducedProgression& r) const { return label(r.k(), r.cp(), r.kp()); }
    const ReducedLabel& label(int k, int cp, int kp) const {
        auto it = index_.find({k, cp, kp});
        if (it == index_.end())
            throw std::invalid_argument("progression (" + std::to_string(k) + "," +
                                        std::to_string(cp) + "," + std::to_string(kp) +
                                        ") does not occur diatonically");
        return labels_[static_cast<std::size_t>(it->second)];
    }

    bool contains(int k, int cp, int kp) const { return index_.count({k, cp, kp}) > 0; }

    ReducedKindFlags kind_flags(const ReducedProgression& r) const {
        const ReducedLabel& l = label(r);
        const int k = r.k(), cp = r.cp(), kp = r.kp();
        ReducedKindFlags f;
        const bool inad = l.category == ReducedCategory::inadmissible;
        const bool bad = l.category == ReducedCategory::bad;
        f.parallel_fifth = inad && k == 7 && kp == 7 && cp != 0;
        f.parallel_unison = inad && k == 0 && kp == 0 && cp != 0;
        f.hidden_fifth_from_sixth = inad && (k == 8 || k == 9) && kp == 7;
        f.tritone = inad && (cp == 6 || ((cp + kp - k) % 12 + 12) % 12 == 6);
        f.hidden_tritone = bad && (((cp + kp) % 12 == 6) || (((k - cp) % 12 + 12) % 12 == 6));
        f.projected_imperfect_similar = bad && !f.hidden_tritone;
        return f;
    }

    ReducedSummary summary() const {
        ReducedSummary s;
        s.total = static_cast<int>(progressions_.size());
        for (std::size_t i = 0; i < progressions_.size(); ++i) {
            const ReducedLabel& l = labels_[i];
            const ReducedKindFlags f = kind_flags(progressions_[i]);
            switch (l.category) {
                case ReducedCategory::inadmissible: ++s.inadmissible; break;
                case ReducedCategory::bad: ++s.bad; break;
                case ReducedCategory::good: ++s.good; break;
            }
            s.parallel_fifths += f.parallel_fifth;
            s.parallel_unisons += f.parallel_unison;
            s.hidden_fifths_from_sixth += f.hidden_fifth_from_sixth;
            s.tritones += f.tritone;
            s.projected_imperfect_similar += f.projected_imperfect_similar;
            s.hidden_tritones += f.hidden_tritone;
            s.good_good += l.refined == Refined::good_good;
            s.good_bad += l.refined == Refined::good_bad;
            s.ambiguous += l.refined == Refined::ambiguous;
        }
        return s;
    }

    /// Verifies the preimage-based classification against the closed-form
    /// clauses of the derived rule system; disagreements are report content.
    CrosscheckReport crosscheck() const;

private:
    static ReducedLabel label_from_preimages(int k, int cp, int kp,
                                             const std::vector<StrictCategory>& pre) {
        bool any_good = false, any_bad = false, any_inad = false;
        for (StrictCategory c : pre) {
            any_good |= c == StrictCategory::good;
            any_bad |= c == StrictCategory::bad;
            any_inad |= c == StrictCategory::inadmissible;
        }
        ReducedLabel l;
        if (any_good) {
            l.category = ReducedCategory::good;
            l.refined = any_inad  ? Refined::ambiguous
                        : any_bad ? Refined::good_bad
                                  : Refined::good_good;
        } else if (any_bad) {
            l.category = ReducedCategory::bad;
        } else {
            l.category = ReducedCategory::inadmissible;
        }
        l.kind = row_kind(k, cp, kp, l.category);
        return l;
    }

    /// Single row label, first matching clause in table row order.
    static ReducedKind row_kind(int k, int cp, int kp, ReducedCategory cat) {
        const bool trit = cp == 6 || ((cp + kp - k) % 12 + 12) % 12 == 6;
        const bool hidtrit = (cp + kp) % 12 == 6 || ((k - cp) % 12 + 12) % 12 == 6;
        switch (cat) {
            case ReducedCategory::inadmissible:
                if (k == 7 && kp == 7 && cp != 0) return ReducedKind::parallel_fifth;
                if (k == 0 && kp == 0 && cp != 0) return ReducedKind::parallel_unison;
                if ((k == 8 || k == 9) && kp == 7) return ReducedKind::hidden_fifth_from_sixth;
                if (trit) return ReducedKind::tritone;
                return ReducedKind::none;
            case ReducedCategory::bad:
                return hidtrit ? ReducedKind::hidden_tritone
                               : ReducedKind::projected_imperfect_similar;
            case ReducedCategory::good:
                return ReducedKind::none;
        }
        return ReducedKind::none;
    }

    std::vector<ReducedProgression> progressions_;
    std::vector<ReducedLabel> labels_;
    std::map<std::tuple<int, int, int>, int> index_;
};

/// All diatonically occurring reduced progressions, in (k, c', k') order.
inline std::vector<ReducedProgression> enumerate_reduced(const Scale& scale = Scale::diatonic()) {
    return ReducedStyle::build(scale).progressions();
}

inline CrosscheckReport ReducedStyle::crosscheck() const {
    CrosscheckReport rep;
    const auto add = [&rep](std::string name, bool holds, std::string detail) {
        rep.clauses.push_back({std::move(name), holds, std::move(detail)});
    };

    // Closed-form category predictions where the derived rules state one.
    int checked = 0;
    bool par5_all_inad = true, trit_all_inad = true, paru_match = true, hidtrit_never_good = true;
    for (std::size_t i = 0; i < progressions_.size(); ++i) {
        const ReducedProgression& r = progressions_[i];
        const ReducedCategory cat = labels_[i].category;
        const int k = r.k(), cp = r.cp(), kp = r.kp();
        const bool trit = cp == 6 || ((cp + kp - k) % 12 + 12) % 12 == 6;
        const bool hidtrit = (cp + kp) % 12 == 6 || ((k - cp) % 12 + 12) % 12 == 6;

        if (k == 7 && kp == 7 && cp != 0) {
            ++checked;
            if (cat != ReducedCategory::inadmissible) {
                par5_all_inad = false;
                rep.disagreements.push_back("parallel fifth (" + std::to_string(cp) +
                                            " skip) classified " + category_name(cat));
            }
        }
        if (trit) {
            ++checked;
            if (cat != ReducedCategory::inadmissible) {
                trit_all_inad = false;
                rep.disagreements.push_back("tritone (" + std::to_string(k) + "," +
                                            std::to_string(cp) + "," + std::to_string(kp) +
                                            ") classified " + category_name(cat));
            }
        }
        if (k == 0 && kp == 0 && cp != 0) {
            ++checked;
            const bool want_inad = cp == 6 || (cp != 5 && cp != 7);
            if (want_inad != (cat == ReducedCategory::inadmissible)) {
                paru_match = false;
                rep.disagreements.push_back("parallel unison skip " + std::to_string(cp) +
                                            " classified " + category_name(cat));
            }
        }
        if (hidtrit && cat == ReducedCategory::good) {
            hidtrit_never_good = false;
            rep.disagreements.push_back("hidden tritone (" + std::to_string(k) + "," +
                                        std::to_string(cp) + "," + std::to_string(kp) +
                                        ") classified good");
        }
    }
    add("parallel-fifths-inadmissible", par5_all_inad, "all reduced parallel fifths inadmissible");
    add("tritones-inadmissible", trit_all_inad, "all reduced tritones inadmissible");
    add("parallel-unisons-inadmissible-set", paru_match,
        "parallel unisons inadmissible exactly for skips {1,2,3,4,6,8,9,10,11}");
    add("hidden-tritones-never-good", hidtrit_never_good,
        "hidden-tritone clause never yields a good progression");

    // The single bad progression that is not a hidden tritone.
    std::vector<ReducedProgression> lone_bad;
    for (std::size_t i = 0; i < progressions_.size(); ++i)
        if (labels_[i].category == ReducedCategory::bad &&
            kind_flags(progressions_[i]).projected_imperfect_similar)
            lone_bad.push_back(progressions_[i]);
    const bool unique_impc =
        lone_bad.size() == 1 && lone_bad[0] == make_reduced(7, 5, 9);
    add("unique-projected-imperfect", unique_impc,
        "the only non-hidden-tritone bad progression is (7t, 5+9t)");

    // Generality: only parallel fifths and tritones are inadmissible without
    // exception; the remaining strict prohibitions have non-inadmissible
    // projections sharing the same clause shape.
    const auto has_noninad_with = [&](auto pred) {
        for (std::size_t i = 0; i < progressions_.size(); ++i)
            if (labels_[i].category != ReducedCategory::inadmissible && pred(progressions_[i]))
                return true;
        return false;
    };
    const bool paru_sibling =
        has_noninad_with([](const ReducedProgression& r) { return r.k() == 0 && r.kp() == 0; });
    const bool hid_sibling = has_noninad_with(
        [](const ReducedProgression& r) { return r.k() != r.kp() && (r.kp() == 7 || r.kp() == 0); });
    add("parallel-unison-rule-not-general", paru_sibling,
        "some parallel-unison shapes are not inadmissible");
    add("hidden-perfect-rule-not-general", hid_sibling,
        "some hidden-perfect shapes are not inadmissible");
    add("clauses-checked", checked > 0, std::to_string(checked) + " clause instances checked");
    return rep;
}

}  // namespace counterpoint
