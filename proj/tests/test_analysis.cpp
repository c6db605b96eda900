#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzycat/analysis.hpp"

#include "fuzzycat/constructions.hpp"
#include "support.hpp"

using namespace fuzzycat;
namespace ft = fuzzycat::testing;

namespace {

// square A -f-> B, A -h-> C -k-> B with both routes composing to the same
// diagonal arrow d
FuzzyCategory commuting_square(const std::string& f_deg, const std::string& h_deg,
                               const std::string& k_deg, const std::string& d_deg) {
    FuzzyCategory c;
    c.objects = {"A", "B", "C"};
    c.arrows = {{"f", "A", "B", parse_degree(f_deg)},
                {"h", "A", "C", parse_degree(h_deg)},
                {"k", "C", "B", parse_degree(k_deg)},
                {"d", "A", "B", parse_degree(d_deg)}};
    for (const auto& obj : c.objects) {
        c.arrows.push_back({"1_" + obj, obj, obj, Degree::one()});
        c.identities[obj] = "1_" + obj;
    }
    add_identity_compositions(c);
    c.composition[{"k", "h"}] = "d";
    return c;
}

} // namespace

TEST_CASE("commutation: strong when composites and minima coincide") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    // route 1: h then k (degrees 0.8, 0.5); route 2: the arrow d alone, but
    // the strong case from the paper compares {0.8, 0.5} with {0.5}
    auto r = commutation(c, {{"h", "k"}}, {{"d"}});
    CHECK(r.commutes);
    CHECK(r.strong);
    CHECK(r.nu == parse_degree("0.5"));
    CHECK(r.composite1 == "d");
    CHECK(r.composite2 == "d");
}

TEST_CASE("commutation: commutes but not strong") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.6");
    auto r = commutation(c, {{"h", "k"}}, {{"d"}});
    CHECK(r.commutes);
    CHECK(!r.strong);
    CHECK(r.min1 == parse_degree("0.5"));
    CHECK(r.min2 == parse_degree("0.6"));
    CHECK(r.nu == parse_degree("0.5"));
}

TEST_CASE("commutation: equal degrees, different composites") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    auto r = commutation(c, {{"h", "k"}}, {{"f"}});
    CHECK(!r.commutes);
    CHECK(!r.strong);
    CHECK(r.nu == parse_degree("0.5"));
}

TEST_CASE("commutation error paths") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    CHECK_THROWS_AS(commutation(c, {{"h"}}, {{"f"}}), PathError); // endpoints differ
    CHECK_THROWS_AS(commutation(c, {{"f", "h"}}, {{"d"}}), PathError); // broken chain
    c.composition.erase({"k", "h"});
    CHECK_THROWS_AS(commutation(c, {{"h", "k"}}, {{"d"}}), TotalityError);
}

TEST_CASE("commutation invariants on random path pairs") {
    ft::Rng rng(6001);
    int checked = 0;
    for (int trial = 0; trial < 30 || checked < 50; ++trial) {
        FuzzyGraph g = ft::random_dag(rng);
        int max_len = std::max<int>(1, static_cast<int>(g.nodes.size()));
        FuzzyCategory c = free_fuzzy_category(g, max_len).category;
        REQUIRE(validate_axioms(c).ok());

        // all single-arrow paths vs all two-step factorizations
        for (const auto& mid : c.arrows)
            for (const auto& tail : c.arrows) {
                if (tail.dom != mid.cod) continue;
                for (const auto& single : c.arrows) {
                    if (single.dom != mid.dom || single.cod != tail.cod) continue;
                    auto r = commutation(c, {{mid.id, tail.id}}, {{single.id}});
                    ++checked;
                    CHECK(r.nu == (r.min1 <= r.min2 ? r.min1 : r.min2));
                    if (r.strong) {
                        CHECK(r.commutes);
                        CHECK(r.min1 == r.min2);
                    }
                    if (r.commutes && !r.strong) CHECK(r.min1 != r.min2);
                }
            }
        if (trial > 500) break;
    }
    CHECK(checked >= 50);
}

TEST_CASE("isomorphism_degree: self-isomorphism is the identity at 1") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    auto w = isomorphism_degree(c, "A", "A");
    REQUIRE(w);
    CHECK(w->f == "1_A");
    CHECK(w->g == "1_A");
    CHECK(w->degree == Degree::one());
}

TEST_CASE("isomorphism_degree: mutually inverse pair") {
    FuzzyCategory c;
    c.objects = {"A", "B"};
    c.arrows = {{"f", "A", "B", parse_degree("0.6")},
                {"g", "B", "A", parse_degree("0.9")},
                {"1_A", "A", "A", Degree::one()},
                {"1_B", "B", "B", Degree::one()}};
    c.identities = {{"A", "1_A"}, {"B", "1_B"}};
    add_identity_compositions(c);
    c.composition[{"g", "f"}] = "1_A";
    c.composition[{"f", "g"}] = "1_B";

    auto w = isomorphism_degree(c, "A", "B");
    REQUIRE(w);
    CHECK(w->f == "f");
    CHECK(w->g == "g");
    CHECK(w->degree == parse_degree("0.6"));

    // symmetric in value with witnesses swapped
    auto back = isomorphism_degree(c, "B", "A");
    REQUIRE(back);
    CHECK(back->degree == w->degree);
    CHECK(back->f == "g");
    CHECK(back->g == "f");
}

TEST_CASE("isomorphism_degree: absent without a return arrow") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    CHECK(!isomorphism_degree(c, "A", "B"));
    CHECK_THROWS_AS(isomorphism_degree(c, "A", "Z"), ObjectError);
}

TEST_CASE("isomorphism symmetry across the random suite") {
    ft::Rng rng(6002);
    for (const auto& c : ft::random_category_suite(rng, 20)) {
        for (const auto& a : c.objects) {
            auto self = isomorphism_degree(c, a, a);
            REQUIRE(self);
            CHECK(self->degree == Degree::one());
            for (const auto& b : c.objects) {
                auto there = isomorphism_degree(c, a, b);
                auto back = isomorphism_degree(c, b, a);
                CHECK(there.has_value() == back.has_value());
                if (there) CHECK(there->degree == back->degree);
            }
        }
    }
}

TEST_CASE("is_monic: identities cancel") {
    FuzzyCategory c = commuting_square("0.5", "0.8", "0.5", "0.5");
    auto r = is_monic(c, "1_B");
    CHECK(r.holds);
}

TEST_CASE("is_monic: counterexample with its degree") {
    // f after both g and h lands on the same composite
    FuzzyCategory c;
    c.objects = {"C", "A", "B"};
    c.arrows = {{"f", "A", "B", parse_degree("0.7")},
                {"g", "C", "A", parse_degree("0.6")},
                {"h", "C", "A", parse_degree("0.9")},
                {"k", "C", "B", parse_degree("0.6")}};
    for (const auto& obj : c.objects) {
        c.arrows.push_back({"1_" + obj, obj, obj, Degree::one()});
        c.identities[obj] = "1_" + obj;
    }
    add_identity_compositions(c);
    c.composition[{"f", "g"}] = "k";
    c.composition[{"f", "h"}] = "k";

    auto r = is_monic(c, "f");
    CHECK(!r.holds);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == std::pair<std::string, std::string>{"g", "h"});
    CHECK(r.nu == parse_degree("0.6")); // min{0.7, 0.6, 0.9}
}

TEST_CASE("is_monic: vacuous when nothing composes in") {
    FuzzyCategory c;
    c.objects = {"A", "B"};
    c.arrows = {{"f", "A", "B", parse_degree("0.4")},
                {"1_A", "A", "A", Degree::one()},
                {"1_B", "B", "B", Degree::one()}};
    c.identities = {{"A", "1_A"}, {"B", "1_B"}};
    add_identity_compositions(c);
    // only 1_A composes into f and it has no distinct partner
    auto r = is_monic(c, "f");
    CHECK(r.holds);
    CHECK(r.nu == Degree::one());
    CHECK_THROWS_AS(is_monic(c, "nope"), ArrowError);
}

TEST_CASE("is_epic: dual counterexample") {
    FuzzyCategory c;
    c.objects = {"A", "B", "C"};
    c.arrows = {{"f", "A", "B", parse_degree("0.7")},
                {"g", "B", "C", parse_degree("0.6")},
                {"h", "B", "C", parse_degree("0.9")},
                {"k", "A", "C", parse_degree("0.6")}};
    for (const auto& obj : c.objects) {
        c.arrows.push_back({"1_" + obj, obj, obj, Degree::one()});
        c.identities[obj] = "1_" + obj;
    }
    add_identity_compositions(c);
    c.composition[{"g", "f"}] = "k";
    c.composition[{"h", "f"}] = "k";

    auto r = is_epic(c, "f");
    CHECK(!r.holds);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == std::pair<std::string, std::string>{"g", "h"});
    CHECK(r.nu == parse_degree("0.6"));

    CHECK(is_epic(c, "1_A").holds);
}

TEST_CASE("crisp monic/epic agree with a brute-force classical oracle") {
    ft::Rng rng(6003);
    for (const auto& c : ft::random_category_suite(rng, 25)) {
        for (const auto& f : c.arrows) {
            // independent classical oracle, straight from the definition
            bool mono = true;
            for (const auto& g : c.arrows)
                for (const auto& h : c.arrows) {
                    if (g.id == h.id || g.cod != f.dom || h.cod != f.dom ||
                        g.dom != h.dom)
                        continue;
                    auto fg = c.composition.find({f.id, g.id});
                    auto fh = c.composition.find({f.id, h.id});
                    if (fg != c.composition.end() && fh != c.composition.end() &&
                        fg->second == fh->second)
                        mono = false;
                }
            bool epi = true;
            for (const auto& g : c.arrows)
                for (const auto& h : c.arrows) {
                    if (g.id == h.id || g.dom != f.cod || h.dom != f.cod ||
                        g.cod != h.cod)
                        continue;
                    auto gf = c.composition.find({g.id, f.id});
                    auto hf = c.composition.find({h.id, f.id});
                    if (gf != c.composition.end() && hf != c.composition.end() &&
                        gf->second == hf->second)
                        epi = false;
                }
            auto monic = is_monic(c, f.id);
            auto epic = is_epic(c, f.id);
            CHECK(monic.holds == mono);
            CHECK(epic.holds == epi);
        }
    }
}

TEST_CASE("find_terminal / find_initial on unit-interval categories") {
    FuzzyCategory one = unit_interval_category({Degree::one()});
    CHECK(find_terminal(one, LimitMode::ExactlyOneArrow) ==
          std::vector<std::string>{"^"});
    CHECK(find_initial(one, LimitMode::ExactlyOneArrow) ==
          std::vector<std::string>{"^"});

    FuzzyCategory two = unit_interval_category({Degree::ratio(1, 2), Degree::one()});
    CHECK(find_terminal(two, LimitMode::ExactlyOneArrow).empty());
    CHECK(find_terminal(two, LimitMode::ExactlyOneDegreeOneArrow) ==
          std::vector<std::string>{"^"});
}

TEST_CASE("find_initial on a two-element preorder") {
    FuzzyRelation r;
    r.elements = {"x", "y"};
    r.matrix[{"x", "x"}] = Degree::one();
    r.matrix[{"y", "y"}] = Degree::one();
    r.matrix[{"y", "x"}] = Degree::zero();

    SUBCASE("degree-1 arrow to y") {
        r.matrix[{"x", "y"}] = Degree::one();
        FuzzyCategory c = preorder_category(r, TNorm::min());
        CHECK(find_initial(c, LimitMode::ExactlyOneArrow) ==
              std::vector<std::string>{"x"});
    }
    SUBCASE("arrow to y below degree 1") {
        r.matrix[{"x", "y"}] = parse_degree("0.7");
        FuzzyCategory c = preorder_category(r, TNorm::min());
        CHECK(find_initial(c, LimitMode::ExactlyOneArrow).empty());
    }
}

TEST_CASE("terminal misses when an arrow is absent") {
    FuzzyCategory c;
    c.objects = {"A", "T"};
    c.arrows = {{"1_A", "A", "A", Degree::one()}, {"1_T", "T", "T", Degree::one()}};
    c.identities = {{"A", "1_A"}, {"T", "1_T"}};
    add_identity_compositions(c);
    CHECK(find_terminal(c, LimitMode::ExactlyOneArrow).empty());
}

TEST_CASE("initial/terminal duality over the random suite") {
    ft::Rng rng(6004);
    for (const auto& c : ft::random_category_suite(rng, 30)) {
        FuzzyCategory op = transpose(c);
        for (LimitMode mode :
             {LimitMode::ExactlyOneArrow, LimitMode::ExactlyOneDegreeOneArrow}) {
            CHECK(find_initial(c, mode) == find_terminal(op, mode));
            CHECK(find_terminal(c, mode) == find_initial(op, mode));
        }
    }
}
