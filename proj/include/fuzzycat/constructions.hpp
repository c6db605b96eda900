#ifndef FUZZYCAT_CONSTRUCTIONS_HPP
#define FUZZYCAT_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzycat/category.hpp"
#include "fuzzycat/graph.hpp"

namespace fuzzycat {

/// Square degree matrix over a finite element set; total by construction
/// (missing entries read as 0 only at the file-format layer, never here).
struct FuzzyRelation {
    std::vector<std::string> elements;
    std::map<std::pair<std::string, std::string>, Degree> matrix;

    const Degree& at(const std::string& x, const std::string& y) const;
};

struct MembershipTable {
    std::vector<std::string> carrier;
    std::map<std::string, Degree> membership;

    const Degree& at(const std::string& x) const; // throws TableError
};

struct FunctionTable {
    std::vector<std::string> source;
    std::vector<std::string> target;
    std::map<std::string, std::string> map;

    const std::string& at(const std::string& x) const; // throws TableError
};

struct SostakAnnotation {
    std::map<std::string, Degree> omega; // object -> degree
    std::map<std::string, Degree> mu;    // arrow id -> degree
    TNorm star = TNorm::min();
};

// ---------------------------------------------------------------------------
// free category over a fuzzy graph

struct FreeCategoryResult {
    FuzzyCategory category;
    /// Composable pairs whose concatenation exceeds max_len and therefore
    /// has no table entry.
    std::vector<ComposePair> truncated;
};

/// Materializes the path category of g up to max_len: objects are nodes,
/// arrows are identities (empty paths, degree 1) plus every path of length
/// <= max_len with its min-aggregated plausibility, composition is path
/// concatenation. Strict/Min mode.
FreeCategoryResult free_fuzzy_category(const FuzzyGraph& g, int max_len);

// ---------------------------------------------------------------------------
// *-fuzzy preorder categories

enum class PreorderViolationKind { Reflexivity, Transitivity };

struct PreorderViolation {
    PreorderViolationKind kind;
    std::vector<std::string> elements; // {x} or {x, y, z}
    std::string expected;
    std::string found;
};

struct PreorderReport {
    std::vector<PreorderViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks R(x,x) = 1 for all x and R(x,y) * R(y,z) <= R(x,z) for all
/// triples.
PreorderReport validate_preorder(const FuzzyRelation& r, const TNorm& t);

/// One object per element; an arrow x->y at R(x,y) for every pair with
/// positive degree; composition follows the unique pairing; Lax mode.
/// Throws PreorderError unless validate_preorder(r, t) is empty.
FuzzyCategory preorder_category(const FuzzyRelation& r, const TNorm& t);

// ---------------------------------------------------------------------------
// one-object unit-interval category

/// Single object "^" with one endo-arrow per degree, composition = min,
/// identity is the arrow 1. Throws IdentityError when 1 is absent.
FuzzyCategory unit_interval_category(const std::vector<Degree>& degrees);

// ---------------------------------------------------------------------------
// FSet

/// Largest admissible lambda with B(f(x)) - A(x) >= lambda for all x, or
/// nullopt when no such lambda exists in [0,1].
std::optional<Degree> fset_arrow_degree(const FunctionTable& f,
                                        const MembershipTable& a,
                                        const MembershipTable& b);

struct FSetObject {
    std::string name;
    MembershipTable membership; // carrier doubles as the crisp set
};

struct FSetArrowSpec {
    std::string id;
    FunctionTable function;
    size_t src; // index into the object list
    size_t dst;
};

/// Builds FSet on the listed objects and arrows. Identity functions are
/// designated identities at degree 1 (exempt from the difference rule);
/// every other arrow is graded by fset_arrow_degree, then composites are
/// lowered to the min of their constituents. Strict/Min mode.
FuzzyCategory fset_category(const std::vector<FSetObject>& objects,
                            const std::vector<FSetArrowSpec>& arrows);

// ---------------------------------------------------------------------------
// Sostak comparison

struct SostakViolation {
    int condition; // 1, 2 or 3
    std::vector<std::string> ids;
    std::string expected;
    std::string found;
};

struct SostakReport {
    std::vector<SostakViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the three L-fuzzy category conditions over c's underlying crisp
/// category: mu(f) <= omega(dom f) ∧ omega(cod f); mu(g∘f) >= mu(g) * mu(f)
/// for every tabulated composite; mu(identity on X) = omega(X).
SostakReport sostak_check(const FuzzyCategory& c, const SostakAnnotation& ann);

} // namespace fuzzycat

#endif
