#include "fuzzycat/formats.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

#include "fuzzycat/errors.hpp"

namespace fuzzycat {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Degree parse_degree_at(const std::string& text, int line) {
    try {
        return parse_degree(text);
    } catch (const RangeError& e) {
        throw RangeError(std::string(e.what()) + " (line " + std::to_string(line) + ")");
    } catch (const ParseError& e) {
        throw SyntaxError(e.what(), line);
    }
}

void expect(const Line& line, size_t index, const std::string& literal) {
    if (index >= line.tokens.size() || line.tokens[index] != literal)
        throw SyntaxError("expected '" + literal + "'", line.number);
}

void expect_size(const Line& line, size_t n) {
    if (line.tokens.size() != n)
        throw SyntaxError("malformed '" + line.tokens[0] + "' line", line.number);
}

} // namespace

FuzzyCategory parse_category_file(std::string_view text) {
    FuzzyCategory c;
    struct Ref {
        std::string id;
        int line;
    };
    std::vector<std::pair<Ref, Ref>> identity_decls;        // object, arrow
    std::vector<std::tuple<Ref, Ref, Ref>> compose_decls;   // g, f, h
    std::vector<std::pair<Arrow, int>> arrow_decls;

    for (const auto& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "mode") {
            expect_size(line, 2);
            if (t[1] == "strict")
                c.law_mode = LawMode::Strict;
            else if (t[1] == "lax")
                c.law_mode = LawMode::Lax;
            else
                throw SyntaxError("unknown mode: " + t[1], line.number);
        } else if (t[0] == "tnorm") {
            expect_size(line, 2);
            auto tn = TNorm::from_name(t[1]);
            if (!tn) throw SyntaxError("unknown t-norm: " + t[1], line.number);
            c.tnorm = *tn;
        } else if (t[0] == "object") {
            expect_size(line, 2);
            if (c.has_object(t[1]))
                throw SyntaxError("object declared twice: " + t[1], line.number);
            c.objects.push_back(t[1]);
        } else if (t[0] == "arrow") {
            // arrow f : A -> B @ 0.7
            expect_size(line, 8);
            expect(line, 2, ":");
            expect(line, 4, "->");
            expect(line, 6, "@");
            arrow_decls.push_back(
                {{t[1], t[3], t[5], parse_degree_at(t[7], line.number)}, line.number});
        } else if (t[0] == "identity") {
            // identity A = f
            expect_size(line, 4);
            expect(line, 2, "=");
            identity_decls.push_back({{t[1], line.number}, {t[3], line.number}});
        } else if (t[0] == "compose") {
            // compose g . f = h
            expect_size(line, 6);
            expect(line, 2, ".");
            expect(line, 4, "=");
            compose_decls.push_back(
                {{t[1], line.number}, {t[3], line.number}, {t[5], line.number}});
        } else {
            throw SyntaxError("unknown directive: " + t[0], line.number);
        }
    }

    for (auto& [arrow, line] : arrow_decls) {
        if (c.find_arrow(arrow.id))
            throw SyntaxError("arrow declared twice: " + arrow.id, line);
        if (!c.has_object(arrow.dom))
            throw ReferenceError("unknown object: " + arrow.dom, line);
        if (!c.has_object(arrow.cod))
            throw ReferenceError("unknown object: " + arrow.cod, line);
        c.arrows.push_back(arrow);
    }
    for (const auto& [obj, arr] : identity_decls) {
        if (!c.has_object(obj.id)) throw ReferenceError("unknown object: " + obj.id, obj.line);
        if (!c.find_arrow(arr.id)) throw ReferenceError("unknown arrow: " + arr.id, arr.line);
        c.identities[obj.id] = arr.id;
    }
    // auto-complete identities for objects without a declared one, so
    // compose lines may reference them
    for (const auto& obj : c.objects) {
        if (c.identities.count(obj)) continue;
        std::string id = "1_" + obj;
        if (!c.find_arrow(id)) c.arrows.push_back({id, obj, obj, Degree::one()});
        c.identities[obj] = id;
    }
    for (const auto& [g, f, h] : compose_decls) {
        for (const auto& r : {g, f, h})
            if (!c.find_arrow(r.id))
                throw ReferenceError("unknown arrow: " + r.id, r.line);
        c.composition[{g.id, f.id}] = h.id;
    }
    add_identity_compositions(c);
    return c;
}

std::string render_category(const FuzzyCategory& c) {
    std::ostringstream out;
    out << "mode " << (c.law_mode == LawMode::Strict ? "strict" : "lax") << "\n";
    out << "tnorm " << c.tnorm.name() << "\n";
    for (const auto& obj : c.objects) out << "object " << obj << "\n";
    for (const auto& a : c.arrows)
        out << "arrow " << a.id << " : " << a.dom << " -> " << a.cod << " @ "
            << a.plausibility.str() << "\n";
    for (const auto& [obj, id] : c.identities)
        out << "identity " << obj << " = " << id << "\n";
    for (const auto& [pair, h] : c.composition)
        out << "compose " << pair.first << " . " << pair.second << " = " << h << "\n";
    return out.str();
}

FuzzyGraph parse_graph_file(std::string_view text) {
    FuzzyGraph g;
    for (const auto& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "node") {
            expect_size(line, 2);
            g.nodes.push_back(t[1]);
        } else if (t[0] == "arrow") {
            expect_size(line, 8);
            expect(line, 2, ":");
            expect(line, 4, "->");
            expect(line, 6, "@");
            g.arrows.push_back({t[1], t[3], t[5], parse_degree_at(t[7], line.number)});
        } else {
            throw SyntaxError("unknown directive: " + t[0], line.number);
        }
    }
    return g;
}

FuzzyRelation parse_relation_file(std::string_view text) {
    FuzzyRelation r;
    bool have_elements = false;
    std::vector<std::tuple<std::string, std::string, Degree, int>> entries;
    for (const auto& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "elements:") {
            if (have_elements)
                throw SyntaxError("duplicate elements header", line.number);
            if (t.size() < 2) throw SyntaxError("empty elements header", line.number);
            r.elements.assign(t.begin() + 1, t.end());
            have_elements = true;
        } else if (t[0] == "rel") {
            // rel x y = 0.7
            expect_size(line, 5);
            expect(line, 3, "=");
            entries.push_back({t[1], t[2], parse_degree_at(t[4], line.number), line.number});
        } else {
            throw SyntaxError("unknown directive: " + t[0], line.number);
        }
    }
    if (!have_elements) throw SyntaxError("missing elements header", 1);

    auto known = [&](const std::string& e) {
        return std::find(r.elements.begin(), r.elements.end(), e) != r.elements.end();
    };
    // defaults: diagonal 1, everything else 0
    for (const auto& x : r.elements)
        for (const auto& y : r.elements)
            r.matrix[{x, y}] = x == y ? Degree::one() : Degree::zero();
    for (const auto& [x, y, d, line] : entries) {
        if (!known(x)) throw ReferenceError("unknown element: " + x, line);
        if (!known(y)) throw ReferenceError("unknown element: " + y, line);
        r.matrix[{x, y}] = d;
    }
    return r;
}

SostakAnnotation parse_annotation_file(std::string_view text) {
    SostakAnnotation ann;
    for (const auto& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "star") {
            expect_size(line, 2);
            auto tn = TNorm::from_name(t[1]);
            if (!tn) throw SyntaxError("unknown t-norm: " + t[1], line.number);
            ann.star = *tn;
        } else if (t[0] == "omega" || t[0] == "mu") {
            expect_size(line, 4);
            expect(line, 2, "=");
            auto& table = t[0] == "omega" ? ann.omega : ann.mu;
            table[t[1]] = parse_degree_at(t[3], line.number);
        } else {
            throw SyntaxError("unknown directive: " + t[0], line.number);
        }
    }
    return ann;
}

} // namespace fuzzycat
