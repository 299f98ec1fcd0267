#ifndef DCS_SCALAR_HPP
#define DCS_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dcs {

// Exact rational value. Small values live inline as an int64 numerator and
// positive int64 denominator with gcd 1; anything that does not fit is
// promoted to a heap-allocated GMP rational. Integers (denominator 1) are
// the common fast path: add/subtract/compare on them never allocate.
//
// Invariant: when big_ is set it holds a canonical mpq whose numerator or
// denominator does not fit int64, so equal values always share one
// representation.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value) : num_(value) {}

    // num/den reduced to canonical form; throws Error on den == 0.
    static Scalar fraction(std::int64_t num, std::int64_t den);

    // Canonicalizes and demotes to the inline form when it fits.
    static Scalar from_mpq(const mpq_class& q);

    mpq_class to_mpq() const;

    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

    // Canonical text form: plain integer, exact decimal when the denominator
    // is of the form 2^a 5^b, otherwise "p/q".
    std::string str() const;

    // Accepts [+-]digits, [+-]digits.digits and [+-]digits/digits (positive
    // denominator). Returns nullopt on anything else, including "1/0".
    static std::optional<Scalar> parse(std::string_view text);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws Error on b == 0
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    Scalar(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    static Scalar reduced(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

inline Scalar abs(const Scalar& v) { return v < Scalar(0) ? -v : v; }

}  // namespace dcs

#endif
