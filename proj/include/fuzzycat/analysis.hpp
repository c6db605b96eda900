#ifndef FUZZYCAT_ANALYSIS_HPP
#define FUZZYCAT_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzycat/category.hpp"

namespace fuzzycat {

/// A chained arrow sequence inside one category, in application order
/// (first-applied first).
struct CategoryPath {
    std::vector<std::string> arrow_ids;
};

struct CommutationResult {
    std::string composite1;
    std::string composite2;
    Degree min1;
    Degree min2;
    bool strong = false;
    bool commutes = false;
    Degree nu; // min(min1, min2), reported regardless of commutation
};

/// Composites are left folds of the composition table; strong iff the
/// composites coincide and the two minima are equal.
CommutationResult commutation(const FuzzyCategory& c, const CategoryPath& p1,
                              const CategoryPath& p2);

struct IsoWitness {
    std::string f; // a -> b
    std::string g; // b -> a
    Degree degree; // min(p f, p g)
};

/// Best mutually inverse pair between a and b, maximizing min(p f, p g);
/// ties broken lexicographically by (f id, g id). Absent when no pair
/// inverts.
std::optional<IsoWitness> isomorphism_degree(const FuzzyCategory& c,
                                             const std::string& a,
                                             const std::string& b);

struct MonicEpicResult {
    std::string arrow;
    bool holds = false;
    Degree nu;
    std::optional<std::pair<std::string, std::string>> counterexample;
};

/// Universal cancellation test: f is monic when f∘g = f∘h forces g = h over
/// every tabulated pair into dom f. nu is min(p f, p g, p h) of the
/// counterexample, or the min over all tested squares when f holds
/// (1 when vacuous).
MonicEpicResult is_monic(const FuzzyCategory& c, const std::string& f_id);

/// Dual of is_monic: g∘f = h∘f over pairs out of cod f.
MonicEpicResult is_epic(const FuzzyCategory& c, const std::string& f_id);

enum class LimitMode { ExactlyOneArrow, ExactlyOneDegreeOneArrow };

/// ExactlyOneArrow: T qualifies iff every object has exactly one arrow into
/// T, of degree 1. ExactlyOneDegreeOneArrow: exactly one degree-1 arrow,
/// lower-degree ones permitted alongside. Output in object declaration
/// order.
std::vector<std::string> find_terminal(const FuzzyCategory& c, LimitMode mode);

std::vector<std::string> find_initial(const FuzzyCategory& c, LimitMode mode);

} // namespace fuzzycat

#endif
