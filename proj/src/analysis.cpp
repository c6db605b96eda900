#include "fuzzycat/analysis.hpp"

#include <algorithm>

#include "fuzzycat/errors.hpp"

namespace fuzzycat {

namespace {

struct ResolvedPath {
    std::vector<const Arrow*> arrows;
    std::string start, end;
    Degree min;
};

ResolvedPath resolve_path(const FuzzyCategory& c, const CategoryPath& p) {
    if (p.arrow_ids.empty()) throw PathError("empty category path");
    ResolvedPath r;
    std::vector<Degree> degrees;
    for (const auto& id : p.arrow_ids) {
        const Arrow& a = c.arrow(id);
        if (!r.arrows.empty() && r.arrows.back()->cod != a.dom)
            throw PathError("broken chain at " + r.arrows.back()->id + " -> " + a.id);
        r.arrows.push_back(&a);
        degrees.push_back(a.plausibility);
    }
    r.start = r.arrows.front()->dom;
    r.end = r.arrows.back()->cod;
    r.min = degree_min(degrees);
    return r;
}

const Arrow& fold_composite(const FuzzyCategory& c, const ResolvedPath& p) {
    const Arrow* acc = p.arrows.front();
    for (size_t i = 1; i < p.arrows.size(); ++i)
        acc = &compose(c, *p.arrows[i], *acc);
    return *acc;
}

std::vector<const Arrow*> arrows_sorted(const FuzzyCategory& c) {
    std::vector<const Arrow*> v;
    for (const auto& a : c.arrows) v.push_back(&a);
    std::sort(v.begin(), v.end(),
              [](const Arrow* x, const Arrow* y) { return x->id < y->id; });
    return v;
}

} // namespace

CommutationResult commutation(const FuzzyCategory& c, const CategoryPath& p1,
                              const CategoryPath& p2) {
    ResolvedPath r1 = resolve_path(c, p1);
    ResolvedPath r2 = resolve_path(c, p2);
    if (r1.start != r2.start || r1.end != r2.end)
        throw PathError("paths do not share endpoints: " + r1.start + " -> " + r1.end +
                        " vs " + r2.start + " -> " + r2.end);

    CommutationResult result;
    result.composite1 = fold_composite(c, r1).id;
    result.composite2 = fold_composite(c, r2).id;
    result.min1 = r1.min;
    result.min2 = r2.min;
    result.commutes = result.composite1 == result.composite2;
    result.strong = result.commutes && result.min1 == result.min2;
    result.nu = result.min1 <= result.min2 ? result.min1 : result.min2;
    return result;
}

std::optional<IsoWitness> isomorphism_degree(const FuzzyCategory& c,
                                             const std::string& a,
                                             const std::string& b) {
    if (!c.has_object(a)) throw ObjectError("unknown object: " + a);
    if (!c.has_object(b)) throw ObjectError("unknown object: " + b);
    auto id_a = c.identities.find(a);
    auto id_b = c.identities.find(b);
    if (id_a == c.identities.end() || id_b == c.identities.end()) return std::nullopt;

    auto entry = [&](const std::string& g, const std::string& f) -> const std::string* {
        auto it = c.composition.find({g, f});
        return it == c.composition.end() ? nullptr : &it->second;
    };

    std::optional<IsoWitness> best;
    for (const Arrow* f : arrows_sorted(c)) {
        if (f->dom != a || f->cod != b) continue;
        for (const Arrow* g : arrows_sorted(c)) {
            if (g->dom != b || g->cod != a) continue;
            const std::string* gf = entry(g->id, f->id);
            const std::string* fg = entry(f->id, g->id);
            if (!gf || !fg || *gf != id_a->second || *fg != id_b->second) continue;
            Degree d = f->plausibility <= g->plausibility ? f->plausibility
                                                         : g->plausibility;
            if (!best || d > best->degree) best = IsoWitness{f->id, g->id, d};
        }
    }
    return best;
}

namespace {

MonicEpicResult cancellation_scan(const FuzzyCategory& c, const std::string& f_id,
                                  bool monic) {
    const Arrow& f = c.arrow(f_id);
    auto entry = [&](const std::string& g, const std::string& h) -> const std::string* {
        auto it = c.composition.find({g, h});
        return it == c.composition.end() ? nullptr : &it->second;
    };
    auto composite_with_f = [&](const Arrow& g) {
        return monic ? entry(f.id, g.id) : entry(g.id, f.id);
    };
    auto eligible = [&](const Arrow& g) {
        return monic ? g.cod == f.dom : g.dom == f.cod;
    };
    auto same_far_end = [&](const Arrow& g, const Arrow& h) {
        return monic ? g.dom == h.dom : g.cod == h.cod;
    };

    MonicEpicResult result;
    result.arrow = f_id;
    result.holds = true;
    result.nu = Degree::one(); // vacuous default

    bool any_square = false;
    Degree square_min = Degree::one();
    auto sorted = arrows_sorted(c);
    for (const Arrow* g : sorted) {
        if (!eligible(*g)) continue;
        for (const Arrow* h : sorted) {
            if (h->id <= g->id || !eligible(*h) || !same_far_end(*g, *h)) continue;
            const std::string* fg = composite_with_f(*g);
            const std::string* fh = composite_with_f(*h);
            if (!fg || !fh) continue;
            Degree nu = degree_min(std::vector<Degree>{
                f.plausibility, g->plausibility, h->plausibility});
            any_square = true;
            if (nu < square_min) square_min = nu;
            if (*fg == *fh) {
                // first violating pair in lexicographic order wins
                result.holds = false;
                result.counterexample = {g->id, h->id};
                result.nu = nu;
                return result;
            }
        }
    }
    if (any_square) result.nu = square_min;
    return result;
}

} // namespace

MonicEpicResult is_monic(const FuzzyCategory& c, const std::string& f_id) {
    return cancellation_scan(c, f_id, true);
}

MonicEpicResult is_epic(const FuzzyCategory& c, const std::string& f_id) {
    return cancellation_scan(c, f_id, false);
}

namespace {

std::vector<std::string> find_limit_objects(const FuzzyCategory& c, LimitMode mode,
                                            bool terminal) {
    std::vector<std::string> found;
    for (const auto& candidate : c.objects) {
        bool ok = true;
        for (const auto& other : c.objects) {
            int total = 0, degree_one = 0;
            for (const auto& a : c.arrows) {
                const std::string& from = terminal ? a.dom : a.cod;
                const std::string& to = terminal ? a.cod : a.dom;
                if (from != other || to != candidate) continue;
                ++total;
                if (a.plausibility == Degree::one()) ++degree_one;
            }
            bool qualifies = mode == LimitMode::ExactlyOneArrow
                                 ? (total == 1 && degree_one == 1)
                                 : degree_one == 1;
            if (!qualifies) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(candidate);
    }
    return found;
}

} // namespace

std::vector<std::string> find_terminal(const FuzzyCategory& c, LimitMode mode) {
    return find_limit_objects(c, mode, true);
}

std::vector<std::string> find_initial(const FuzzyCategory& c, LimitMode mode) {
    return find_limit_objects(c, mode, false);
}

} // namespace fuzzycat
