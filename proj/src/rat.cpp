#include "quasiadj/rat.hpp"

#include <ostream>

#include "quasiadj/errors.hpp"

namespace quasiadj {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        BigInt v;
        const bool plain = !part.empty() && part.find_first_not_of("-0123456789") == std::string::npos &&
                           part.find('-', 1) == std::string::npos && part != "-";
        if (!plain || v.set_str(part, 10) != 0) throw DomainError("not a rational literal: '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt Rat::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

BigInt Rat::ceil() const {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::int64_t Rat::floor_i64() const { return to_i64(floor()); }
std::int64_t Rat::ceil_i64() const { return to_i64(ceil()); }

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t to_i64(const BigInt& v) {
    if (!v.fits_slong_p()) throw DomainError("integer overflow: " + v.get_str());
    return v.get_si();
}

const char* to_string(ResolutionErrorKind kind) {
    switch (kind) {
        case ResolutionErrorKind::IrrationalCenter: return "IrrationalCenter";
        case ResolutionErrorKind::SharedBranch: return "SharedBranch";
        case ResolutionErrorKind::NonReduced: return "NonReduced";
        case ResolutionErrorKind::MultipleBranches: return "MultipleBranches";
    }
    return "?";
}

}  // namespace quasiadj
