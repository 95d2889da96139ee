#include "quasiadj/germ.hpp"

#include <cctype>
#include <sstream>

#include "quasiadj/errors.hpp"

namespace quasiadj {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line, std::size_t col0)
        : s_(text), line_(line), col0_(col0) {}

    BiPoly parse_all() {
        BiPoly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    BiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = atom();
        if (eat('^')) {
            skip_ws();
            const std::string digits = read_digits();
            if (digits.empty()) fail("exponent must be a non-negative integer");
            if (digits.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    BiPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BiPoly::x() : BiPoly::y();
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num(read_digits());
            BigInt den = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                const std::string d = read_digits();
                if (d.empty()) fail("expected denominator after '/'");
                den = BigInt(d);
                if (den == 0) fail("zero denominator");
            }
            return BiPoly::constant(Rat(num, den));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t col0_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_expression(std::string_view expr) { return ExprParser(expr, 1, 1).parse_all(); }

void validate_germ(const GermSpec& g) {
    if (g.factors.empty()) throw GermError("empty factor list");
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const std::string name = i < g.labels.size() ? g.labels[i] : "f" + std::to_string(i + 1);
        if (g.factors[i].is_zero()) throw GermError(name + ": factor is the zero polynomial");
        if (!g.factors[i].constant_term().is_zero())
            throw GermError(name + ": factor does not vanish at origin");
    }
}

GermSpec parse_germ(std::string_view source) {
    GermSpec g;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string_view::npos) end = source.size();
        std::string_view line = source.substr(start, end - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t p = 0;
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p < line.size()) {
            if (line[p] != 'f') throw ParseError(line_no, p + 1, "expected 'fN ='");
            ++p;
            const std::size_t digits_at = p;
            while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
            if (p == digits_at) throw ParseError(line_no, p + 1, "expected factor index after 'f'");
            const std::string idx(line.substr(digits_at, p - digits_at));
            const std::size_t expected = g.factors.size() + 1;
            if (idx.size() > 6 || std::stoul(idx) != expected)
                throw ParseError(line_no, digits_at + 1,
                                 "factor index must be " + std::to_string(expected) + ", got " + idx);
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
            if (p >= line.size() || line[p] != '=') throw ParseError(line_no, p + 1, "expected '='");
            ++p;
            g.factors.push_back(ExprParser(line.substr(p), line_no, p + 1).parse_all());
            g.labels.push_back("f" + idx);
        }
        if (end == source.size()) break;
        start = end + 1;
    }
    validate_germ(g);
    return g;
}

std::string render_germ(const GermSpec& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.factors.size(); ++i)
        out << "f" << (i + 1) << " = " << g.factors[i].str() << "\n";
    return out.str();
}

GermSpec make_germ(std::vector<BiPoly> factors) {
    GermSpec g;
    for (std::size_t i = 0; i < factors.size(); ++i) g.labels.push_back("f" + std::to_string(i + 1));
    g.factors = std::move(factors);
    validate_germ(g);
    return g;
}

std::uint32_t mult_at_origin(const BiPoly& p) { return p.order(); }

}  // namespace quasiadj
