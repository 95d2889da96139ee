#include "quasiadj/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "quasiadj/errors.hpp"

namespace quasiadj {

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rat& c, std::uint32_t ex, std::uint32_t ey) {
    BiPoly p;
    p.add_term({ex, ey}, c);
    return p;
}

void BiPoly::add_term(Exp e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat BiPoly::coeff(Exp e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t BiPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

std::uint32_t BiPoly::order() const {
    if (is_zero()) throw DomainError("order of the zero polynomial");
    std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [e, c] : terms_) d = std::min(d, e.total());
    return d;
}

BiPoly BiPoly::homogeneous_part(std::uint32_t d) const {
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.total() == d) out.terms_.emplace(e, c);
    return out;
}

std::uint32_t BiPoly::x_adic_order() const {
    if (is_zero()) throw DomainError("x-adic order of the zero polynomial");
    std::uint32_t k = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [e, c] : terms_) k = std::min(k, e.x);
    return k;
}

std::uint32_t BiPoly::y_adic_order() const {
    if (is_zero()) throw DomainError("y-adic order of the zero polynomial");
    std::uint32_t k = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [e, c] : terms_) k = std::min(k, e.y);
    return k;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return out;
}

BiPoly BiPoly::pow(std::uint32_t n) const {
    BiPoly result = constant(1);
    BiPoly base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

BiPoly BiPoly::chart_slope(const Rat& t) const {
    // x^a y^b -> x^(a+b) (y + t)^b
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        BigInt binom = 1;
        Rat tpow = 1;
        std::vector<Rat> tpows(e.y + 1);
        for (std::uint32_t j = 0; j <= e.y; ++j) {
            tpows[j] = tpow;
            tpow *= t;
        }
        for (std::uint32_t j = 0; j <= e.y; ++j) {
            // coefficient of y^j in (y + t)^b is C(b, j) t^(b - j)
            out.add_term({e.x + e.y, j}, c * Rat(binom) * tpows[e.y - j]);
            binom = binom * (e.y - j) / (j + 1);
        }
    }
    return out;
}

BiPoly BiPoly::chart_vertical() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.add_term({e.x, e.x + e.y}, c);
    return out;
}

BiPoly BiPoly::div_x_pow(std::uint32_t k) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        if (e.x < k) throw DomainError("polynomial not divisible by x^" + std::to_string(k));
        out.terms_.emplace(Exp{e.x - k, e.y}, c);
    }
    return out;
}

BiPoly BiPoly::div_y_pow(std::uint32_t k) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        if (e.y < k) throw DomainError("polynomial not divisible by y^" + std::to_string(k));
        out.terms_.emplace(Exp{e.x, e.y - k}, c);
    }
    return out;
}

namespace {

std::string monomial_str(const Rat& absc, Exp e) {
    std::string vars;
    auto var = [&](const char* name, std::uint32_t k) {
        if (k == 0) return;
        if (!vars.empty()) vars += "*";
        vars += name;
        if (k > 1) vars += "^" + std::to_string(k);
    };
    var("x", e.x);
    var("y", e.y);
    if (vars.empty()) return absc.str();
    if (absc == Rat(1)) return vars;
    return absc.str() + "*" + vars;
}

}  // namespace

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    // graded order: low total degree first, then by decreasing x exponent
    std::vector<std::pair<Exp, Rat>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
        return a.first.x > b.first.x;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool neg = c.sign() < 0;
        const std::string m = monomial_str(neg ? -c : c, e);
        if (first) {
            out = neg ? "-" + m : m;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += m;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::deflate(const Rat& root) const {
    if (c_.empty()) return {};
    // synthetic division
    std::vector<Rat> q(c_.size() - 1);
    Rat carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        carry = carry * root + c_[i];
        q[i - 1] = carry;
    }
    if (!(carry * root + c_[0]).is_zero()) throw DomainError("deflate: not a root");
    return UniPoly(std::move(q));
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    if (n > BigInt("1000000000000000000"))
        throw Unsupported("coefficient too large for rational-root search: " + n.get_str());
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> UniPoly::rational_roots() const {
    std::vector<std::pair<Rat, unsigned>> roots;
    if (degree() <= 0) return roots;
    UniPoly p = *this;
    unsigned zero_mult = 0;
    while (p.degree() > 0 && p.c_.front().is_zero()) {
        p.c_.erase(p.c_.begin());
        ++zero_mult;
    }
    // clear denominators so the rational root theorem applies
    BigInt lcm = 1;
    for (const auto& c : p.c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& c : p.c_) ints.push_back((c * Rat(lcm)).num());
    std::vector<Rat> candidates;
    if (p.degree() > 0) {
        for (const auto& a : positive_divisors(ints.front()))
            for (const auto& b : positive_divisors(ints.back())) {
                candidates.emplace_back(a, b);
                candidates.emplace_back(-a, b);
            }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (zero_mult > 0) candidates.push_back(Rat(0));
    std::sort(candidates.begin(), candidates.end());
    for (const auto& cand : candidates) {
        if (cand.is_zero()) {
            roots.emplace_back(cand, zero_mult);
            continue;
        }
        unsigned mult = 0;
        while (p.degree() > 0 && p.eval(cand).is_zero()) {
            p = p.deflate(cand);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
    }
    return roots;
}

UniPoly UniPoly::without_rational_roots() const {
    UniPoly p = *this;
    for (const auto& [root, mult] : rational_roots())
        for (unsigned i = 0; i < mult; ++i) p = p.deflate(root);
    return p;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rat a = neg ? -c : c;
        std::string m;
        if (i == 0) {
            m = a.str();
        } else {
            m = a == Rat(1) ? "" : a.str() + "*";
            m += var;
            if (i > 1) m += "^" + std::to_string(i);
        }
        if (out.empty()) {
            out = neg ? "-" + m : m;
        } else {
            out += neg ? " - " : " + ";
            out += m;
        }
    }
    return out;
}

}  // namespace quasiadj
