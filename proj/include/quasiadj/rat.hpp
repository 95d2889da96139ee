#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quasiadj {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}                                       // NOLINT(implicit)
    Rat(int v) : q_(v) {}                                        // NOLINT(implicit)
    Rat(const BigInt& v) : q_(v) {}                              // NOLINT(implicit)
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" (optional leading '-'); throws DomainError on bad input.
    static Rat parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigInt floor() const;
    BigInt ceil() const;
    /// x - floor(x), in [0,1).
    Rat frac() const;
    /// floor() as int64; throws DomainError if it does not fit.
    std::int64_t floor_i64() const;
    std::int64_t ceil_i64() const;
    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

std::int64_t to_i64(const BigInt& v);

}  // namespace quasiadj

template <>
struct std::hash<quasiadj::Rat> {
    std::size_t operator()(const quasiadj::Rat& r) const { return std::hash<std::string>{}(r.str()); }
};
