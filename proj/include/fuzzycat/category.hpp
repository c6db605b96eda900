#ifndef FUZZYCAT_CATEGORY_HPP
#define FUZZYCAT_CATEGORY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzycat/degree.hpp"

namespace fuzzycat {

enum class LawMode { Strict, Lax };

struct Arrow {
    std::string id;
    std::string dom;
    std::string cod;
    Degree plausibility;

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.id == b.id && a.dom == b.dom && a.cod == b.cod &&
               a.plausibility == b.plausibility;
    }
};

/// Pair key (g, f) for the composite g after f.
using ComposePair = std::pair<std::string, std::string>;

/// Finite fuzzy category: explicit arrow set and composition table.
/// Composition is a table, not a rule, so every law is checkable by
/// exhaustive enumeration.
struct FuzzyCategory {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::map<std::string, std::string> identities;   // object -> arrow id
    std::map<ComposePair, std::string> composition;  // (g, f) -> composite id
    LawMode law_mode = LawMode::Strict;
    TNorm tnorm = TNorm::min();

    bool has_object(const std::string& name) const;
    const Arrow* find_arrow(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const; // throws ArrowError

    friend bool operator==(const FuzzyCategory& a, const FuzzyCategory& b) {
        return a.objects == b.objects && a.arrows == b.arrows &&
               a.identities == b.identities && a.composition == b.composition &&
               a.law_mode == b.law_mode && a.tnorm == b.tnorm;
    }
};

enum class Law { DomCod, DegreeLaw, Assoc, IdentityLaw, IdentityDegree, Totality };

std::string law_name(Law law);

struct Violation {
    Law law;
    std::vector<std::string> arrows; // offending arrow (or object) ids
    std::string expected;
    std::string found;
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Looks up g∘f in the composition table.
/// Throws ComposabilityError when dom g != cod f, TotalityError when the
/// pair is composable but has no table entry.
const Arrow& compose(const FuzzyCategory& c, const Arrow& g, const Arrow& f);
const Arrow& compose(const FuzzyCategory& c, const std::string& g_id,
                     const std::string& f_id);

/// The designated identity arrow on b. Access only; degree defects are
/// validate_axioms' business.
const Arrow& identity_of(const FuzzyCategory& c, const std::string& b);

/// Exhaustive check of every law over the finite structure:
/// totality and dom/cod bookkeeping, the degree law per law_mode/tnorm,
/// associativity over all composable triples, the identity law, and
/// identity degrees. Report order is deterministic (law tag, then ids).
ViolationReport validate_axioms(const FuzzyCategory& c);

/// Fills in the composition entries forced by the identity law, for every
/// designated identity, without touching existing entries.
void add_identity_compositions(FuzzyCategory& c);

/// Opposite category: every arrow reversed, composition table transposed.
FuzzyCategory transpose(const FuzzyCategory& c);

} // namespace fuzzycat

#endif
