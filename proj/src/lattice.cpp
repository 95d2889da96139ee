#include "quasiadj/lattice.hpp"

#include <algorithm>

#include "quasiadj/errors.hpp"

namespace quasiadj {

namespace {

std::uint64_t mix(std::uint64_t h, std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Lattice::Lattice(const ResolutionData& res) : n_(res.n_div), N_(res.intersection_matrix()), K_(res.c) {
    if (K_.size() != n_) throw DomainError("canonical vector length differs from the number of divisors");
    if (!is_negative_definite(N_)) throw DomainError("intersection matrix is not negative definite");
    fingerprint_ = mix(0, static_cast<std::int64_t>(n_));
    for (const auto& row : N_)
        for (auto v : row) fingerprint_ = mix(fingerprint_, v);
    for (auto v : K_) fingerprint_ = mix(fingerprint_, v);
}

std::int64_t Lattice::dot(const ExcDivisor& d, std::size_t k) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += d[j] * N_[j][k];
    return s;
}

std::int64_t Lattice::pair(const ExcDivisor& d, const ExcDivisor& e) const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n_; ++k) s += e[k] * dot(d, k);
    return s;
}

bool Lattice::is_antinef(const ExcDivisor& d) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (dot(d, k) > 0) return false;
    return true;
}

ExcDivisor antinef_closure(const Lattice& lat, const ExcDivisor& d, const PickRule& pick) {
    if (d.size() != lat.size()) throw DomainError("divisor length differs from the lattice rank");
    ExcDivisor out(d.size());
    std::transform(d.begin(), d.end(), out.begin(), [](std::int64_t v) { return std::max<std::int64_t>(v, 0); });
    std::vector<std::size_t> positive;
    for (;;) {
        positive.clear();
        for (std::size_t k = 0; k < lat.size(); ++k)
            if (lat.dot(out, k) > 0) positive.push_back(k);
        if (positive.empty()) return out;
        const std::size_t k = pick ? pick(positive) : positive.front();
        const std::int64_t p = lat.dot(out, k);
        const std::int64_t e = -lat.matrix()[k][k];
        out[k] += (p + e - 1) / e;
    }
}

ExcDivisor antinef_closure(const Lattice& lat, const ExcDivisor& d) { return antinef_closure(lat, d, PickRule{}); }

ExcDivisor antinef_closure(const ResolutionData& res, const ExcDivisor& d) { return antinef_closure(Lattice(res), d); }

std::int64_t ideal_codim(const Lattice& lat, const ExcDivisor& d) {
    if (d.size() != lat.size()) throw DomainError("divisor length differs from the lattice rank");
    if (std::any_of(d.begin(), d.end(), [](std::int64_t v) { return v < 0; }))
        throw DomainError("ideal_codim needs a non-negative divisor");
    if (!lat.is_antinef(d)) throw DomainError("ideal_codim needs an antinef divisor");
    ExcDivisor dk(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) dk[k] = d[k] + lat.canonical()[k];
    return -lat.pair(d, dk) / 2;
}

std::int64_t ideal_codim(const ResolutionData& res, const ExcDivisor& d) { return ideal_codim(Lattice(res), d); }

IdealHandle make_ideal(const Lattice& lat, const ExcDivisor& bounds) {
    IdealHandle h;
    h.bounds = bounds;
    h.closure = antinef_closure(lat, bounds);
    h.codim = ideal_codim(lat, h.closure);
    h.lattice = lat.fingerprint();
    return h;
}

IdealHandle make_ideal(const ResolutionData& res, const ExcDivisor& bounds) { return make_ideal(Lattice(res), bounds); }

namespace {

void same_lattice(const IdealHandle& a, const IdealHandle& b) {
    if (a.lattice != b.lattice || a.closure.size() != b.closure.size())
        throw DomainError("ideal handles live on different lattices");
}

}  // namespace

bool ideal_equal(const IdealHandle& h1, const IdealHandle& h2) {
    same_lattice(h1, h2);
    return h1.closure == h2.closure;
}

bool ideal_contains(const IdealHandle& h_big, const IdealHandle& h_small) {
    same_lattice(h_big, h_small);
    for (std::size_t k = 0; k < h_big.closure.size(); ++k)
        if (h_big.closure[k] > h_small.closure[k]) return false;
    return true;
}

}  // namespace quasiadj
