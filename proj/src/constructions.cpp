#include "fuzzycat/constructions.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "fuzzycat/errors.hpp"

namespace fuzzycat {

const Degree& FuzzyRelation::at(const std::string& x, const std::string& y) const {
    auto it = matrix.find({x, y});
    if (it == matrix.end())
        throw TableError("relation has no entry (" + x + ", " + y + ")");
    return it->second;
}

const Degree& MembershipTable::at(const std::string& x) const {
    auto it = membership.find(x);
    if (it == membership.end())
        throw TableError("membership table has no entry for " + x);
    return it->second;
}

const std::string& FunctionTable::at(const std::string& x) const {
    auto it = map.find(x);
    if (it == map.end())
        throw TableError("function table has no entry for " + x);
    return it->second;
}

// ---------------------------------------------------------------------------

namespace {

std::string identity_id(const std::string& obj) { return "1_" + obj; }

// composition-order id for a path stored in application order
std::string path_arrow_id(const std::vector<std::string>& application_order) {
    std::string id;
    for (auto it = application_order.rbegin(); it != application_order.rend(); ++it) {
        if (!id.empty()) id += '.';
        id += *it;
    }
    return id;
}

} // namespace

FreeCategoryResult free_fuzzy_category(const FuzzyGraph& g, int max_len) {
    if (max_len < 1) throw GraphError("max_len must be positive");
    if (!validate_graph(g).ok())
        throw GraphError("graph fails validation; see validate_graph");

    FreeCategoryResult result;
    FuzzyCategory& c = result.category;
    c.objects = g.nodes;
    c.law_mode = LawMode::Strict;
    c.tnorm = TNorm::min();

    for (const auto& n : g.nodes) {
        c.arrows.push_back({identity_id(n), n, n, Degree::one()});
        c.identities[n] = identity_id(n);
    }

    // every path up to the bound, keyed by its application-order sequence
    struct PathArrow {
        std::vector<std::string> seq;
        std::string dom, cod;
        Degree degree;
    };
    std::vector<PathArrow> paths;
    for (const auto& from : g.nodes)
        for (const auto& to : g.nodes)
            for (auto& [p, d] : enumerate_paths(g, from, to, max_len))
                paths.push_back({p.arrow_ids, from, to, d});
    std::sort(paths.begin(), paths.end(),
              [](const PathArrow& a, const PathArrow& b) { return a.seq < b.seq; });

    std::map<std::vector<std::string>, std::string> id_of_seq;
    for (const auto& p : paths) {
        std::string id = path_arrow_id(p.seq);
        c.arrows.push_back({id, p.dom, p.cod, p.degree});
        id_of_seq[p.seq] = id;
    }

    add_identity_compositions(c);

    for (const auto& p : paths) {
        for (const auto& q : paths) {
            if (p.cod != q.dom) continue; // q after p
            std::vector<std::string> seq = p.seq;
            seq.insert(seq.end(), q.seq.begin(), q.seq.end());
            ComposePair key{id_of_seq.at(q.seq), id_of_seq.at(p.seq)};
            if (static_cast<int>(seq.size()) <= max_len)
                c.composition[key] = id_of_seq.at(seq);
            else
                result.truncated.push_back(key);
        }
    }
    std::sort(result.truncated.begin(), result.truncated.end());
    return result;
}

// ---------------------------------------------------------------------------

PreorderReport validate_preorder(const FuzzyRelation& r, const TNorm& t) {
    PreorderReport report;
    for (const auto& x : r.elements) {
        if (r.at(x, x) != Degree::one())
            report.violations.push_back({PreorderViolationKind::Reflexivity,
                                         {x},
                                         "1",
                                         r.at(x, x).str()});
    }
    for (const auto& x : r.elements)
        for (const auto& y : r.elements)
            for (const auto& z : r.elements) {
                Degree lower = t.apply(r.at(x, y), r.at(y, z));
                if (lower > r.at(x, z))
                    report.violations.push_back({PreorderViolationKind::Transitivity,
                                                 {x, y, z},
                                                 "<= " + r.at(x, z).str(),
                                                 lower.str()});
            }
    return report;
}

namespace {

std::string pair_arrow_id(const std::string& x, const std::string& y) {
    return x + "->" + y;
}

} // namespace

FuzzyCategory preorder_category(const FuzzyRelation& r, const TNorm& t) {
    if (!validate_preorder(r, t).ok())
        throw PreorderError("relation is not a *-fuzzy preorder for t-norm " + t.name());

    FuzzyCategory c;
    c.objects = r.elements;
    c.law_mode = LawMode::Lax;
    c.tnorm = t;

    for (const auto& x : r.elements)
        for (const auto& y : r.elements) {
            const Degree& d = r.at(x, y);
            if (d == Degree::zero()) continue; // zero-degree pairs carry no arrow
            c.arrows.push_back({pair_arrow_id(x, y), x, y, d});
        }
    for (const auto& x : r.elements) c.identities[x] = pair_arrow_id(x, x);

    // unique composition: <p,p'> then <p',p''> is <p,p''>
    for (const auto& f : c.arrows)
        for (const auto& g : c.arrows) {
            if (g.dom != f.cod) continue;
            if (c.find_arrow(pair_arrow_id(f.dom, g.cod)))
                c.composition[{g.id, f.id}] = pair_arrow_id(f.dom, g.cod);
        }
    return c;
}

// ---------------------------------------------------------------------------

FuzzyCategory unit_interval_category(const std::vector<Degree>& degrees) {
    std::set<Degree> set(degrees.begin(), degrees.end());
    if (!set.count(Degree::one()))
        throw IdentityError("unit-interval category needs the arrow 1");

    FuzzyCategory c;
    c.objects = {"^"};
    c.law_mode = LawMode::Strict;
    c.tnorm = TNorm::min();

    for (const auto& d : set) c.arrows.push_back({d.str(), "^", "^", d});
    c.identities["^"] = Degree::one().str();

    for (const auto& a : set)
        for (const auto& b : set) {
            const Degree& m = a <= b ? a : b;
            c.composition[{a.str(), b.str()}] = m.str();
        }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_carrier(const std::vector<std::string>& a,
                          const std::vector<std::string>& b,
                          const std::string& what) {
    if (std::set<std::string>(a.begin(), a.end()) !=
        std::set<std::string>(b.begin(), b.end()))
        throw TableError("carrier mismatch: " + what);
}

} // namespace

std::optional<Degree> fset_arrow_degree(const FunctionTable& f,
                                        const MembershipTable& a,
                                        const MembershipTable& b) {
    if (f.source.empty()) throw TableError("function has empty source");
    require_same_carrier(f.source, a.carrier, "function source vs domain membership");
    require_same_carrier(f.target, b.carrier, "function target vs codomain membership");

    bool first = true;
    Rational lambda;
    for (const auto& x : f.source) {
        const std::string& y = f.at(x);
        if (std::find(f.target.begin(), f.target.end(), y) == f.target.end())
            throw TableError("image outside target: " + y);
        Rational diff = b.at(y).value() - a.at(x).value();
        if (first || diff < lambda) lambda = diff;
        first = false;
    }
    if (lambda < 0) return std::nullopt;
    return Degree{lambda};
}

FuzzyCategory fset_category(const std::vector<FSetObject>& objects,
                            const std::vector<FSetArrowSpec>& arrows) {
    FuzzyCategory c;
    c.law_mode = LawMode::Strict;
    c.tnorm = TNorm::min();

    for (const auto& obj : objects) c.objects.push_back(obj.name);

    struct Entry {
        std::string id;
        FunctionTable fn;
        size_t src, dst;
        bool is_identity;
    };
    std::vector<Entry> entries;

    // designated identities: identity functions, exempt from the degree rule
    for (size_t i = 0; i < objects.size(); ++i) {
        FunctionTable id_fn;
        id_fn.source = objects[i].membership.carrier;
        id_fn.target = id_fn.source;
        for (const auto& x : id_fn.source) id_fn.map[x] = x;
        std::string id = identity_id(objects[i].name);
        entries.push_back({id, std::move(id_fn), i, i, true});
        c.arrows.push_back({id, objects[i].name, objects[i].name, Degree::one()});
        c.identities[objects[i].name] = id;
    }

    for (const auto& spec : arrows) {
        if (spec.src >= objects.size() || spec.dst >= objects.size())
            throw TableError("arrow " + spec.id + " references unknown object index");
        auto lambda = fset_arrow_degree(spec.function, objects[spec.src].membership,
                                        objects[spec.dst].membership);
        if (!lambda)
            throw ArrowDegreeError("no admissible degree for arrow " + spec.id);
        entries.push_back({spec.id, spec.function, spec.src, spec.dst, false});
        c.arrows.push_back(
            {spec.id, objects[spec.src].name, objects[spec.dst].name, *lambda});
    }

    // closure under composition of the underlying functions
    for (const auto& f : entries)
        for (const auto& g : entries) {
            if (f.dst != g.src) continue;
            if (f.is_identity) {
                c.composition[{g.id, f.id}] = g.id;
                continue;
            }
            if (g.is_identity) {
                c.composition[{g.id, f.id}] = f.id;
                continue;
            }
            FunctionTable composite;
            composite.source = f.fn.source;
            composite.target = g.fn.target;
            for (const auto& x : f.fn.source) composite.map[x] = g.fn.at(f.fn.at(x));

            const Entry* match = nullptr;
            for (const auto& h : entries)
                if (h.src == f.src && h.dst == g.dst && h.fn.map == composite.map) {
                    match = &h;
                    break;
                }
            if (!match)
                throw ClosureError("missing composite of " + f.id + " then " + g.id);
            c.composition[{g.id, f.id}] = match->id;
        }

    // record each composite at the min of its constituents (identities stay 1)
    auto degree_of = [&](const std::string& id) -> Degree& {
        for (auto& a : c.arrows)
            if (a.id == id) return a.plausibility;
        throw ArrowError("unknown arrow: " + id);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [pair, h_id] : c.composition) {
            if (c.identities.count(c.arrow(h_id).dom) &&
                c.identities.at(c.arrow(h_id).dom) == h_id)
                continue;
            Degree m = degree_min(std::vector<Degree>{degree_of(pair.first),
                                                      degree_of(pair.second)});
            Degree& h = degree_of(h_id);
            if (h > m) {
                h = m;
                changed = true;
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

SostakReport sostak_check(const FuzzyCategory& c, const SostakAnnotation& ann) {
    for (const auto& obj : c.objects)
        if (!ann.omega.count(obj))
            throw AnnotationError("omega not defined on object " + obj);
    for (const auto& a : c.arrows)
        if (!ann.mu.count(a.id))
            throw AnnotationError("mu not defined on arrow " + a.id);

    SostakReport report;
    auto omega = [&](const std::string& obj) { return ann.omega.at(obj); };
    auto mu = [&](const std::string& id) { return ann.mu.at(id); };

    for (const auto& f : c.arrows) {
        Degree cap = degree_min(std::vector<Degree>{omega(f.dom), omega(f.cod)});
        if (mu(f.id) > cap)
            report.violations.push_back(
                {1, {f.id}, "<= " + cap.str(), mu(f.id).str()});
    }
    for (const auto& [pair, h_id] : c.composition) {
        if (!c.find_arrow(pair.first) || !c.find_arrow(pair.second) ||
            !c.find_arrow(h_id))
            continue; // malformed table; validate_axioms' business
        Degree lower = ann.star.apply(mu(pair.first), mu(pair.second));
        if (mu(h_id) < lower)
            report.violations.push_back({2,
                                         {pair.first, pair.second, h_id},
                                         ">= " + lower.str(),
                                         mu(h_id).str()});
    }
    for (const auto& [obj, e_id] : c.identities) {
        if (!c.find_arrow(e_id)) continue;
        if (mu(e_id) != omega(obj))
            report.violations.push_back(
                {3, {obj, e_id}, omega(obj).str(), mu(e_id).str()});
    }

    std::sort(report.violations.begin(), report.violations.end(),
              [](const SostakViolation& a, const SostakViolation& b) {
                  return std::tie(a.condition, a.ids) < std::tie(b.condition, b.ids);
              });
    return report;
}

} // namespace fuzzycat
