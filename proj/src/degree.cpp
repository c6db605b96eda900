#include "fuzzycat/degree.hpp"

#include <algorithm>
#include <cctype>

namespace fuzzycat {

Degree TNorm::apply(const Degree& a, const Degree& b) const {
    switch (kind) {
        case TNormKind::Min:
            return a <= b ? a : b;
        case TNormKind::Product:
            return Degree{a.value() * b.value()};
        case TNormKind::Lukasiewicz: {
            Rational s = a.value() + b.value() - 1;
            return s < 0 ? Degree::zero() : Degree{s};
        }
    }
    throw Error("unreachable t-norm kind");
}

std::string TNorm::name() const {
    switch (kind) {
        case TNormKind::Min: return "min";
        case TNormKind::Product: return "product";
        case TNormKind::Lukasiewicz: return "lukasiewicz";
    }
    throw Error("unreachable t-norm kind");
}

std::optional<TNorm> TNorm::from_name(std::string_view name) {
    if (name == "min") return TNorm::min();
    if (name == "product") return TNorm::product();
    if (name == "lukasiewicz") return TNorm::lukasiewicz();
    return std::nullopt;
}

Degree tnorm_apply(const TNorm& t, const Degree& a, const Degree& b) {
    return t.apply(a, b);
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

boost::multiprecision::cpp_int parse_uint(std::string_view s) {
    return boost::multiprecision::cpp_int(std::string(s));
}

} // namespace

Degree parse_degree(std::string_view text) {
    if (text.empty()) throw ParseError("empty degree literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: " + std::string(text));
        auto q = parse_uint(den);
        if (q == 0) throw ParseError("zero denominator: " + std::string(text));
        return Degree{Rational(parse_uint(num), q)};
    }

    auto whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac = text.substr(dot + 1);
        if (frac.empty() || !all_digits(frac))
            throw ParseError("malformed decimal: " + std::string(text));
        if (frac.size() > 12)
            throw ParseError("more than 12 fractional digits: " + std::string(text));
    }
    if (!all_digits(whole))
        throw ParseError("malformed degree literal: " + std::string(text));

    Rational value(parse_uint(whole));
    if (!frac.empty()) {
        boost::multiprecision::cpp_int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value += Rational(parse_uint(frac), scale);
    }
    return Degree{value}; // RangeError if outside [0,1]
}

Degree degree_min(std::span<const Degree> values) {
    if (values.empty())
        throw EmptyAggregateError("minimum of an empty degree list");
    return *std::min_element(values.begin(), values.end());
}

} // namespace fuzzycat
