#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasiadj/rat.hpp"

namespace quasiadj {

/// Exponent pair (a, b) of the monomial x^a y^b.
struct Exp {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t total() const { return x + y; }
    friend auto operator<=>(const Exp&, const Exp&) = default;
};

/// Sparse bivariate polynomial with rational coefficients. Zero coefficients are never stored.
class BiPoly {
public:
    using Terms = std::map<Exp, Rat>;

    BiPoly() = default;
    static BiPoly constant(const Rat& c);
    static BiPoly monomial(const Rat& c, std::uint32_t ex, std::uint32_t ey);
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rat coeff(Exp e) const;
    Rat constant_term() const { return coeff({0, 0}); }

    /// Maximal total degree; 0 for the zero polynomial.
    std::uint32_t degree() const;
    /// Minimal total degree of a term (order at the origin); throws DomainError on zero.
    std::uint32_t order() const;
    /// Sum of the terms of total degree d.
    BiPoly homogeneous_part(std::uint32_t d) const;
    /// Largest k with u^k | p (exponent in x), resp. y.
    std::uint32_t x_adic_order() const;
    std::uint32_t y_adic_order() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rat& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
    BiPoly operator-() const { return *this * Rat(-1); }
    BiPoly pow(std::uint32_t n) const;

    /// p(x, x*(y + t)): the blowup chart through the direction y = t*x.
    BiPoly chart_slope(const Rat& t) const;
    /// p(x*y, y): the chart through the direction x = 0.
    BiPoly chart_vertical() const;
    /// Exact division by x^k (resp. y^k); throws DomainError if not divisible.
    BiPoly div_x_pow(std::uint32_t k) const;
    BiPoly div_y_pow(std::uint32_t k) const;

    /// Human-readable form in x, y that parse_expression accepts, e.g. "x^2 + y^3", "-2/5*x*y".
    std::string str() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(Exp e, const Rat& c);
    Terms terms_;
};

/// Dense univariate polynomial, coefficient i multiplies t^i; trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat eval(const Rat& t) const;
    /// Rational roots with multiplicity, increasing.
    std::vector<std::pair<Rat, unsigned>> rational_roots() const;
    /// Quotient after removing every rational root (with multiplicity); the part with no rational root.
    UniPoly without_rational_roots() const;
    /// Divides by (t - root); the root must be exact.
    UniPoly deflate(const Rat& root) const;
    /// e.g. "t^3 - 1".
    std::string str(const std::string& var = "t") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Rat> c_;
};

}  // namespace quasiadj
