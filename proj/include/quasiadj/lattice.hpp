#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quasiadj/resolution.hpp"

namespace quasiadj {

/// Integer vector indexed by the exceptional divisors of a fixed resolution.
using ExcDivisor = std::vector<std::int64_t>;

/// The exceptional lattice of a resolution: intersection matrix and canonical vector K = c,
/// checked negative definite once on construction.
class Lattice {
public:
    /// Throws DomainError when the intersection matrix is not negative definite.
    explicit Lattice(const ResolutionData& res);

    std::size_t size() const { return n_; }
    const IntMatrix& matrix() const { return N_; }
    const ExcDivisor& canonical() const { return K_; }
    std::uint64_t fingerprint() const { return fingerprint_; }

    /// D . E_k
    std::int64_t dot(const ExcDivisor& d, std::size_t k) const;
    /// D . D'
    std::int64_t pair(const ExcDivisor& d, const ExcDivisor& e) const;
    bool is_antinef(const ExcDivisor& d) const;

private:
    std::size_t n_;
    IntMatrix N_;
    ExcDivisor K_;
    std::uint64_t fingerprint_;
};

/// Chooses which divisor to unload among those with D . E_k > 0 (given increasing).
using PickRule = std::function<std::size_t(const std::vector<std::size_t>& positive)>;

/// Minimal d' >= max(d, 0) with d' . E_k <= 0 for every k, by unloading the lowest index first.
ExcDivisor antinef_closure(const Lattice& lat, const ExcDivisor& d);
/// Same, with a caller-chosen unloading order (the result does not depend on it).
ExcDivisor antinef_closure(const Lattice& lat, const ExcDivisor& d, const PickRule& pick);
ExcDivisor antinef_closure(const ResolutionData& res, const ExcDivisor& d);

/// dim O / I_D = -D.(D+K)/2 for antinef D >= 0. Throws DomainError otherwise.
std::int64_t ideal_codim(const Lattice& lat, const ExcDivisor& d);
std::int64_t ideal_codim(const ResolutionData& res, const ExcDivisor& d);

/// Valuation ideal {h : ord_{E_k} h >= bounds_k}, canonicalized by its antinef closure.
struct IdealHandle {
    ExcDivisor bounds;
    ExcDivisor closure;
    std::int64_t codim = 0;
    std::uint64_t lattice = 0;  // fingerprint of the lattice it lives on
};

IdealHandle make_ideal(const Lattice& lat, const ExcDivisor& bounds);
IdealHandle make_ideal(const ResolutionData& res, const ExcDivisor& bounds);

/// Same ideal iff same closure. Throws DomainError for handles on different lattices.
bool ideal_equal(const IdealHandle& h1, const IdealHandle& h2);
/// h_big contains h_small iff closure(h_big) <= closure(h_small) componentwise.
bool ideal_contains(const IdealHandle& h_big, const IdealHandle& h_small);

}  // namespace quasiadj
