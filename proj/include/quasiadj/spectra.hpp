#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasiadj/rat.hpp"
#include "quasiadj/resolution.hpp"
#include "quasiadj/walls.hpp"

namespace quasiadj {

/// Positive integer weights (a_1, ..., a_r) with gcd 1.
class WeightVector {
public:
    /// Throws DomainError on an empty list, a non-positive entry or gcd != 1.
    explicit WeightVector(std::vector<std::int64_t> a);
    static WeightVector diagonal(std::size_t r);

    const std::vector<std::int64_t>& values() const { return a_; }
    std::size_t size() const { return a_.size(); }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }
    std::string str() const;  // "1,2"

private:
    std::vector<std::int64_t> a_;
};

/// One spectral value with its multiplicity. Which convention `value` uses depends on the producer.
struct SpectrumElement {
    Rat value;
    std::int64_t multiplicity = 0;
    friend bool operator==(const SpectrumElement&, const SpectrumElement&) = default;
};

/// Jumping numbers in (0,1) of prod f_i^{a_i} (xi convention, right-continuous floors).
std::vector<SpectrumElement> jumping_numbers(const ResolutionData& res, const WeightVector& w,
                                             bool rupture_only = false);

/// Spectrum in the cube convention s = 1 - xi. Each element is checked against face_at at the
/// wrapped point (a_1 s, ..., a_r s) mod 1; a disagreement raises Error.
std::vector<SpectrumElement> spectrum_line(const ResolutionData& res, const WeightVector& w,
                                           bool rupture_only = false);

struct DiagonalSpectrum {
    std::vector<SpectrumElement> elements;  // s convention
    std::size_t faces_met = 0;              // distinct hyperplanes carrying the diagonal crossings
};
DiagonalSpectrum spectrum_diagonal(const ResolutionData& res, bool rupture_only = false);

/// The (-1,0) report: s -> -s, increasing.
std::vector<SpectrumElement> mirrored(const std::vector<SpectrumElement>& s_values);

struct MilnorReport {
    std::int64_t mu_direct = 0;
    std::int64_t mu_formula = 0;
    bool match = false;
    bool assumes_gr0_vanishing = true;  // dim Gr_0^W H^1(L_chi) = 0 is assumed, not checked
};
/// mu from the blowup trace against (r - 1) + 2 * (total multiplicity of the diagonal spectrum).
MilnorReport milnor_consistency(const Resolution& res);

/// sum m_i s_i + k
struct BernsteinFactor {
    std::vector<std::int64_t> m;
    std::int64_t k = 0;
    std::string str() const;  // "6*s1+4*s2+5"
    friend bool operator==(const BernsteinFactor&, const BernsteinFactor&) = default;
    friend auto operator<=>(const BernsteinFactor&, const BernsteinFactor&) = default;
};

/// Factors forced by the faces of quasiadjunction (r <= 2). Throws Unsupported for r >= 3.
std::vector<BernsteinFactor> bernstein_hyperplanes(const ResolutionData& res, bool rupture_only = false);
/// Factors for a caller-supplied list of (r-1)-dimensional face hyperplanes.
std::vector<BernsteinFactor> bernstein_hyperplanes(const std::vector<Hyperplane>& face_planes);

/// One factor of a multivariable Alexander polynomial: exponents m and a root label.
struct AlexanderFactor {
    std::vector<std::int64_t> m;
    std::string omega = "ω";
};
/// "(t-1)(t^e-ω)..." with e = sum a_i m_i.
std::string alexander_specialization(const WeightVector& w, const std::vector<AlexanderFactor>& factors);

}  // namespace quasiadj
