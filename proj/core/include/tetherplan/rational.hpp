#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace tetherplan {

// Exact rational with a small-value fast path.
//
// Values whose reduced numerator/denominator fit in int64 are stored inline;
// anything larger is promoted to a heap mpq_class. Results are demoted back
// when they fit, so the representation of a value is unique (canonical,
// reduced, den > 0) and hashing/comparison never depend on history.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d);
    explicit Rat(const mpq_class& q);

    // Accepts "42", "-7", "3.25", "5/3", "-1.5" (exact decimal expansion).
    // Throws ParseError on anything else, including scientific notation.
    static Rat parse(const std::string& s);

    // Exact value num/den from wide intermediates (den != 0).
    static Rat from_i128(__int128 num, __int128 den);

    Rat(const Rat& o);
    Rat(Rat&& o) noexcept = default;
    Rat& operator=(const Rat& o);
    Rat& operator=(Rat&& o) noexcept = default;

    bool is_small() const { return big_ == nullptr; }
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }
    mpq_class to_mpq() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    Rat abs() const;

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;  // throws ParseError on div by zero
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    int compare(const Rat& o) const;
    bool operator==(const Rat& o) const { return compare(o) == 0; }
    bool operator!=(const Rat& o) const { return compare(o) != 0; }
    bool operator<(const Rat& o) const { return compare(o) < 0; }
    bool operator<=(const Rat& o) const { return compare(o) <= 0; }
    bool operator>(const Rat& o) const { return compare(o) > 0; }
    bool operator>=(const Rat& o) const { return compare(o) >= 0; }

    // Canonical exact rendering: "7", "3.25" when the denominator is
    // 2^a * 5^b, otherwise "5/3". parse(to_string(x)) == x.
    std::string to_string() const;

    // Fixed-point decimal approximation with `digits` fractional digits,
    // rounded half away from zero. Deterministic across platforms.
    std::string to_decimal(int digits) const;

    std::size_t hash() const;

    static const Rat& zero();
    static const Rat& one();

private:
    void set_from_mpq(const mpq_class& q);  // canonicalizes + demotes

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

// Vertical clearance derived from a tether of length `tether` and a
// perpendicular separation `sep` between the two travel lines:
// budget^2 = tether^2 - sep^2. The root is kept symbolically; `root` is
// present only when the value is an exact rational, and comparisons
// against rationals go through the square.
struct BudgetValue {
    Rat square;
    std::optional<Rat> root;

    bool is_rational() const { return root.has_value(); }
    int compare(const Rat& r) const;  // compares this (>=0) against r
};

// Throws TetherTooShort when sep >= tether.
BudgetValue effective_budget(const Rat& tether, const Rat& sep);

// Exact rational square root when one exists.
std::optional<Rat> exact_sqrt(const Rat& v);

}  // namespace tetherplan

template <>
struct std::hash<tetherplan::Rat> {
    std::size_t operator()(const tetherplan::Rat& r) const { return r.hash(); }
};
