#ifndef FUZZYCAT_DEGREE_HPP
#define FUZZYCAT_DEGREE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuzzycat/errors.hpp"

namespace fuzzycat {

using Rational = boost::multiprecision::cpp_rational;

/// A plausibility degree: an exact rational in [0,1]. All comparisons are
/// exact; no floating point enters the kernel.
class Degree {
public:
    Degree() : value_(0) {}

    explicit Degree(Rational v) : value_(std::move(v)) {
        if (value_ < 0 || value_ > 1)
            throw RangeError("degree out of [0,1]: " + value_.str());
    }

    static Degree zero() { return Degree{}; }
    static Degree one() { return Degree{Rational(1)}; }

    /// num/den as an exact degree; den must be positive.
    static Degree ratio(long long num, long long den) {
        if (den <= 0) throw RangeError("nonpositive denominator");
        return Degree{Rational(num, den)};
    }

    const Rational& value() const { return value_; }

    /// Canonical lowest-terms rendering: "0", "1", "2/5", ...
    std::string str() const { return value_.str(); }

    friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Degree& a, const Degree& b) { return a.value_ != b.value_; }
    friend bool operator<(const Degree& a, const Degree& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Degree& a, const Degree& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Degree& a, const Degree& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Degree& a, const Degree& b) { return a.value_ >= b.value_; }

private:
    Rational value_;
};

enum class TNormKind { Min, Product, Lukasiewicz };

/// Triangular norm on [0,1]: commutative, associative, monotone, unit 1.
struct TNorm {
    TNormKind kind = TNormKind::Min;

    static TNorm min() { return {TNormKind::Min}; }
    static TNorm product() { return {TNormKind::Product}; }
    static TNorm lukasiewicz() { return {TNormKind::Lukasiewicz}; }

    Degree apply(const Degree& a, const Degree& b) const;

    std::string name() const;
    static std::optional<TNorm> from_name(std::string_view name);

    friend bool operator==(const TNorm& a, const TNorm& b) { return a.kind == b.kind; }
};

Degree tnorm_apply(const TNorm& t, const Degree& a, const Degree& b);

/// Parses a decimal literal (up to 12 fractional digits) or a fraction "p/q".
/// Decimals convert exactly ("0.4" -> 2/5).
Degree parse_degree(std::string_view text);

/// Exact minimum of a nonempty list.
Degree degree_min(std::span<const Degree> values);

} // namespace fuzzycat

#endif
