#include "dcs/scalar.hpp"

#include <cassert>
#include <cctype>
#include <limits>

#include "dcs/error.hpp"

namespace dcs {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 abs128(int128 v) {
    return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_int128(int128 v) {
    uint128 mag = abs128(v);
    mpz_class r(static_cast<unsigned long>(mag >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(mag & ~0ull);
    return v < 0 ? mpz_class(-r) : r;
}

std::strong_ordering order_of(int cmp) {
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar Scalar::reduced(int128 num, int128 den) {
    assert(den > 0);
    uint128 g = gcd128(abs128(num), static_cast<uint128>(den));
    if (g > 1) {
        num /= static_cast<int128>(g);
        den /= static_cast<int128>(g);
    }
    if (fits_int64(num) && fits_int64(den))
        return Scalar(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    mpq_class q(mpz_from_int128(num), mpz_from_int128(den));
    Scalar r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("Scalar: zero denominator");
    int128 n = num;
    int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return reduced(n, d);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p())
        return Scalar(c.get_num().get_si(), c.get_den().get_si());
    Scalar r;
    r.big_ = std::make_shared<const mpq_class>(std::move(c));
    return r;
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(num_), mpz_class(den_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            int128 n = static_cast<int128>(a.num_) + b.num_;
            if (fits_int64(n)) return Scalar(static_cast<std::int64_t>(n), 1);
            return Scalar::reduced(n, 1);
        }
        int128 n = static_cast<int128>(a.num_) * b.den_ + static_cast<int128>(b.num_) * a.den_;
        int128 d = static_cast<int128>(a.den_) * b.den_;
        return Scalar::reduced(n, d);
    }
    return Scalar::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            int128 n = static_cast<int128>(a.num_) - b.num_;
            if (fits_int64(n)) return Scalar(static_cast<std::int64_t>(n), 1);
            return Scalar::reduced(n, 1);
        }
        int128 n = static_cast<int128>(a.num_) * b.den_ - static_cast<int128>(b.num_) * a.den_;
        int128 d = static_cast<int128>(a.den_) * b.den_;
        return Scalar::reduced(n, d);
    }
    return Scalar::from_mpq(mpq_class(a.to_mpq() - b.to_mpq()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        int128 n = static_cast<int128>(a.num_) * b.num_;
        int128 d = static_cast<int128>(a.den_) * b.den_;
        return Scalar::reduced(n, d);
    }
    return Scalar::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b == Scalar(0)) throw Error("Scalar: division by zero");
    if (!a.big_ && !b.big_) {
        int128 n = static_cast<int128>(a.num_) * b.den_;
        int128 d = static_cast<int128>(a.den_) * b.num_;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Scalar::reduced(n, d);
    }
    return Scalar::from_mpq(mpq_class(a.to_mpq() / b.to_mpq()));
}

Scalar Scalar::operator-() const {
    if (!big_) {
        if (num_ == std::numeric_limits<std::int64_t>::min())
            return reduced(-static_cast<int128>(num_), den_);
        return Scalar(-num_, den_);
    }
    return from_mpq(mpq_class(-*big_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    // A big value never fits int64, so mixed representations differ.
    return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) return order_of(a.num_ < b.num_ ? -1 : a.num_ > b.num_ ? 1 : 0);
        int128 lhs = static_cast<int128>(a.num_) * b.den_;
        int128 rhs = static_cast<int128>(b.num_) * a.den_;
        return order_of(lhs < rhs ? -1 : lhs > rhs ? 1 : 0);
    }
    return order_of(mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t()));
}

std::string Scalar::str() const {
    if (!big_ && den_ == 1) return std::to_string(num_);
    mpq_class q = to_mpq();
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (den == 1) return num.get_str();
    // den = 2^a 5^b exactly iff the value has a terminating decimal.
    mpz_class rest = den;
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.get_str() + "/" + den.get_str();
    unsigned long scale = std::max(twos, fives);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, scale);
    mpz_class digits_val = abs(num) * (pow10 / den);
    std::string digits = digits_val.get_str();
    if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
    if (num < 0) digits.insert(0, "-");
    return digits;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view int_part = text;
    std::string_view tail;
    char sep = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '.' || text[i] == '/') {
            sep = text[i];
            int_part = text.substr(0, i);
            tail = text.substr(i + 1);
            break;
        }
    }
    if (!all_digits(int_part)) return std::nullopt;
    if (sep != 0 && !all_digits(tail)) return std::nullopt;

    mpz_class num(std::string(int_part), 10);
    mpz_class den(1);
    if (sep == '.') {
        mpz_class frac(std::string(tail), 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
        num = num * den + frac;
    } else if (sep == '/') {
        den = mpz_class(std::string(tail), 10);
        if (den == 0) return std::nullopt;
    }
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(q);
}

}  // namespace dcs
