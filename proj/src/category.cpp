#include "fuzzycat/category.hpp"

#include <algorithm>
#include <tuple>

#include "fuzzycat/errors.hpp"

namespace fuzzycat {

bool FuzzyCategory::has_object(const std::string& name) const {
    return std::find(objects.begin(), objects.end(), name) != objects.end();
}

const Arrow* FuzzyCategory::find_arrow(const std::string& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return &a;
    return nullptr;
}

const Arrow& FuzzyCategory::arrow(const std::string& id) const {
    const Arrow* a = find_arrow(id);
    if (!a) throw ArrowError("unknown arrow: " + id);
    return *a;
}

std::string law_name(Law law) {
    switch (law) {
        case Law::DomCod: return "DomCod";
        case Law::DegreeLaw: return "DegreeLaw";
        case Law::Assoc: return "Assoc";
        case Law::IdentityLaw: return "IdentityLaw";
        case Law::IdentityDegree: return "IdentityDegree";
        case Law::Totality: return "Totality";
    }
    throw Error("unreachable law tag");
}

const Arrow& compose(const FuzzyCategory& c, const Arrow& g, const Arrow& f) {
    if (g.dom != f.cod)
        throw ComposabilityError("arrows not composable: " + g.id + " after " + f.id);
    auto it = c.composition.find({g.id, f.id});
    if (it == c.composition.end())
        throw TotalityError("no composition entry for (" + g.id + ", " + f.id + ")");
    const Arrow* h = c.find_arrow(it->second);
    if (!h)
        throw TotalityError("composition entry names unknown arrow: " + it->second);
    return *h;
}

const Arrow& compose(const FuzzyCategory& c, const std::string& g_id,
                     const std::string& f_id) {
    return compose(c, c.arrow(g_id), c.arrow(f_id));
}

const Arrow& identity_of(const FuzzyCategory& c, const std::string& b) {
    if (!c.has_object(b)) throw ObjectError("unknown object: " + b);
    auto it = c.identities.find(b);
    if (it == c.identities.end())
        throw ObjectError("no designated identity on object: " + b);
    return c.arrow(it->second);
}

namespace {

void sort_report(ViolationReport& report) {
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.law, a.arrows, a.expected, a.found) <
                         std::tie(b.law, b.arrows, b.expected, b.found);
              });
}

} // namespace

ViolationReport validate_axioms(const FuzzyCategory& c) {
    ViolationReport report;
    auto add = [&](Law law, std::vector<std::string> ids, std::string expected,
                   std::string found) {
        report.violations.push_back({law, std::move(ids), std::move(expected), std::move(found)});
    };

    // endpoint bookkeeping of declared arrows
    for (const auto& a : c.arrows) {
        if (!c.has_object(a.dom))
            add(Law::DomCod, {a.id}, "declared domain object", "unknown object " + a.dom);
        if (!c.has_object(a.cod))
            add(Law::DomCod, {a.id}, "declared codomain object", "unknown object " + a.cod);
    }

    // composition totality, endpoints and degree law
    for (const auto& g : c.arrows) {
        for (const auto& f : c.arrows) {
            if (g.dom != f.cod) continue;
            auto it = c.composition.find({g.id, f.id});
            if (it == c.composition.end()) {
                add(Law::Totality, {g.id, f.id}, "composition entry", "missing");
                continue;
            }
            const Arrow* h = c.find_arrow(it->second);
            if (!h) {
                add(Law::Totality, {g.id, f.id}, "existing composite arrow",
                    "unknown arrow " + it->second);
                continue;
            }
            if (h->dom != f.dom || h->cod != g.cod)
                add(Law::DomCod, {g.id, f.id, h->id},
                    f.dom + " -> " + g.cod, h->dom + " -> " + h->cod);

            Degree bound = c.tnorm.apply(f.plausibility, g.plausibility);
            bool degree_ok = c.law_mode == LawMode::Strict
                                 ? h->plausibility == bound
                                 : h->plausibility >= bound;
            if (!degree_ok)
                add(Law::DegreeLaw, {g.id, f.id, h->id},
                    (c.law_mode == LawMode::Strict ? "= " : ">= ") + bound.str(),
                    h->plausibility.str());
        }
    }

    // entries for pairs that are not composable at all
    for (const auto& [pair, h_id] : c.composition) {
        const Arrow* g = c.find_arrow(pair.first);
        const Arrow* f = c.find_arrow(pair.second);
        if (!g || !f)
            add(Law::Totality, {pair.first, pair.second}, "entry over declared arrows",
                "unknown arrow id");
        else if (g->dom != f->cod)
            add(Law::DomCod, {pair.first, pair.second}, "composable pair",
                "cod " + f->cod + " != dom " + g->dom);
        (void)h_id;
    }

    // associativity over every fully tabulated triple
    auto table = [&](const std::string& g, const std::string& f) -> const std::string* {
        auto it = c.composition.find({g, f});
        return it == c.composition.end() ? nullptr : &it->second;
    };
    for (const auto& h : c.arrows) {
        for (const auto& g : c.arrows) {
            if (h.dom != g.cod) continue;
            for (const auto& f : c.arrows) {
                if (g.dom != f.cod) continue;
                const std::string* gf = table(g.id, f.id);
                const std::string* hg = table(h.id, g.id);
                if (!gf || !hg) continue; // already a Totality violation
                const std::string* left = table(h.id, *gf);
                const std::string* right = table(*hg, f.id);
                if (!left || !right) continue;
                if (*left != *right)
                    add(Law::Assoc, {h.id, g.id, f.id},
                        "h∘(g∘f) = (h∘g)∘f", *left + " != " + *right);
            }
        }
    }

    // identity designation, degree and the identity law
    for (const auto& obj : c.objects) {
        auto it = c.identities.find(obj);
        if (it == c.identities.end()) {
            add(Law::IdentityLaw, {obj}, "designated identity arrow", "missing");
            continue;
        }
        const Arrow* e = c.find_arrow(it->second);
        if (!e) {
            add(Law::IdentityLaw, {obj}, "existing identity arrow",
                "unknown arrow " + it->second);
            continue;
        }
        if (e->dom != obj || e->cod != obj)
            add(Law::DomCod, {e->id}, obj + " -> " + obj, e->dom + " -> " + e->cod);
        if (e->plausibility != Degree::one())
            add(Law::IdentityDegree, {e->id}, "1", e->plausibility.str());

        for (const auto& f : c.arrows) {
            if (f.cod == obj) {
                if (const std::string* ef = table(e->id, f.id); ef && *ef != f.id)
                    add(Law::IdentityLaw, {e->id, f.id}, f.id, *ef);
            }
            if (f.dom == obj) {
                if (const std::string* fe = table(f.id, e->id); fe && *fe != f.id)
                    add(Law::IdentityLaw, {f.id, e->id}, f.id, *fe);
            }
        }
    }

    sort_report(report);
    return report;
}

void add_identity_compositions(FuzzyCategory& c) {
    for (const auto& [obj, e_id] : c.identities) {
        for (const auto& f : c.arrows) {
            if (f.cod == obj) c.composition.try_emplace({e_id, f.id}, f.id);
            if (f.dom == obj) c.composition.try_emplace({f.id, e_id}, f.id);
        }
    }
}

FuzzyCategory transpose(const FuzzyCategory& c) {
    FuzzyCategory op = c;
    for (auto& a : op.arrows) std::swap(a.dom, a.cod);
    op.composition.clear();
    for (const auto& [pair, h] : c.composition)
        op.composition[{pair.second, pair.first}] = h;
    return op;
}

} // namespace fuzzycat
