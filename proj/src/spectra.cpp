#include "quasiadj/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quasiadj/errors.hpp"
#include "quasiadj/lattice.hpp"

namespace quasiadj {

WeightVector::WeightVector(std::vector<std::int64_t> a) : a_(std::move(a)) {
    if (a_.empty()) throw DomainError("empty weight vector");
    std::int64_t g = 0;
    for (auto v : a_) {
        if (v <= 0) throw DomainError("weights must be positive");
        g = std::gcd(g, v);
    }
    if (g != 1) throw DomainError("weights " + str() + " have gcd " + std::to_string(g) + ", expected 1");
}

WeightVector WeightVector::diagonal(std::size_t r) { return WeightVector(std::vector<std::int64_t>(r, 1)); }

std::string WeightVector::str() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    return s;
}

namespace {

// Multiplier-ideal data of prod f_i^{w_i xi} after removing the factor prod f_i^{n_i},
// n_i = ceil(w_i xi) - 1, so that every remaining exponent lies in (0,1].
ExcDivisor jump_bounds(const ResolutionData& res, const WeightVector& w, const Rat& xi, bool just_below) {
    ExcDivisor b(res.n_div);
    std::vector<std::int64_t> n(res.r);
    for (std::size_t i = 0; i < res.r; ++i) n[i] = (Rat(w[i]) * xi).ceil_i64() - 1;
    for (std::size_t k = 0; k < res.n_div; ++k) {
        std::int64_t rk = 0, removed = 0;
        for (std::size_t i = 0; i < res.r; ++i) {
            rk += w[i] * res.a[i][k];
            removed += n[i] * res.a[i][k];
        }
        const Rat v = xi * Rat(rk);
        const std::int64_t fl = just_below ? v.ceil_i64() - 1 : v.floor_i64();
        b[k] = fl - removed - res.c[k];
    }
    return b;
}

void check_weights(const ResolutionData& res, const WeightVector& w) {
    if (w.size() != res.r)
        throw DomainError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                          std::to_string(res.r));
}

}  // namespace

std::vector<SpectrumElement> jumping_numbers(const ResolutionData& res, const WeightVector& w, bool rupture_only) {
    check_weights(res, w);
    std::vector<std::size_t> ks;
    if (rupture_only) {
        ks = res.rupture();
    } else {
        ks.resize(res.n_div);
        std::iota(ks.begin(), ks.end(), std::size_t{0});
    }
    std::set<Rat> candidates;
    for (std::size_t k : ks) {
        std::int64_t rk = 0;
        for (std::size_t i = 0; i < res.r; ++i) rk += w[i] * res.a[i][k];
        for (std::int64_t j = 1; j < rk; ++j) candidates.insert(Rat(j, rk));
    }
    const Lattice lat(res);
    std::vector<SpectrumElement> out;
    for (const Rat& xi : candidates) {
        const IdealHandle at = make_ideal(lat, jump_bounds(res, w, xi, false));
        const IdealHandle below = make_ideal(lat, jump_bounds(res, w, xi, true));
        if (at.closure == below.closure) continue;
        out.push_back({xi, at.codim - below.codim});
    }
    return out;
}

std::vector<SpectrumElement> spectrum_line(const ResolutionData& res, const WeightVector& w, bool rupture_only) {
    std::vector<SpectrumElement> out;
    for (const auto& e : jumping_numbers(res, w, rupture_only)) out.push_back({Rat(1) - e.value, e.multiplicity});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    for (const auto& e : out) {
        std::vector<Rat> p;
        for (std::size_t i = 0; i < res.r; ++i) p.push_back(Rat(w[i]) * e.value);
        const CubePoint x = CubePoint::wrap(p);
        const auto fp = face_at(res, x);
        if (!fp || fp->depth_log != e.multiplicity)
            throw Error("spectrum value " + e.value.str() + " fails the face check at " + x.str());
    }
    return out;
}

DiagonalSpectrum spectrum_diagonal(const ResolutionData& res, bool rupture_only) {
    DiagonalSpectrum d;
    const WeightVector w = WeightVector::diagonal(res.r);
    d.elements = spectrum_line(res, w, rupture_only);
    std::set<Hyperplane> planes;
    for (const auto& e : d.elements) {
        const auto fp = face_at(res, CubePoint(std::vector<Rat>(res.r, e.value)));
        planes.insert(fp->planes.begin(), fp->planes.end());
    }
    d.faces_met = planes.size();
    return d;
}

std::vector<SpectrumElement> mirrored(const std::vector<SpectrumElement>& s_values) {
    std::vector<SpectrumElement> out;
    for (const auto& e : s_values) out.push_back({-e.value, e.multiplicity});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return out;
}

MilnorReport milnor_consistency(const Resolution& res) {
    MilnorReport m;
    m.mu_direct = milnor_delta(res).mu;
    std::int64_t total = 0;
    for (const auto& e : spectrum_diagonal(res.data).elements) total += e.multiplicity;
    m.mu_formula = static_cast<std::int64_t>(res.data.r) - 1 + 2 * total;
    m.match = m.mu_direct == m.mu_formula;
    return m;
}

std::string BernsteinFactor::str() const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "+";
        s += (m[i] == 1 ? std::string() : std::to_string(m[i]) + "*") + "s" + std::to_string(i + 1);
    }
    return s + "+" + std::to_string(k);
}

std::vector<BernsteinFactor> bernstein_hyperplanes(const std::vector<Hyperplane>& face_planes) {
    std::set<BernsteinFactor> seen;
    for (const auto& h : face_planes) {
        BernsteinFactor f;
        f.m = h.m;
        f.k = std::accumulate(h.m.begin(), h.m.end(), std::int64_t{0}) - h.n;
        if (f.k <= 0) throw DomainError("hyperplane " + h.str() + " does not meet the interior of U");
        seen.insert(f);
    }
    return {seen.begin(), seen.end()};
}

std::vector<BernsteinFactor> bernstein_hyperplanes(const ResolutionData& res, bool rupture_only) {
    if (res.r > 2)
        throw Unsupported("Bernstein factors for r = " + std::to_string(res.r) + " need a supplied face list");
    std::vector<Hyperplane> planes;
    for (const auto& f : faces(res, rupture_only)) planes.push_back(f.plane);
    return bernstein_hyperplanes(planes);
}

std::string alexander_specialization(const WeightVector& w, const std::vector<AlexanderFactor>& factors) {
    std::string s = "(t-1)";
    for (const auto& f : factors) {
        if (f.m.size() != w.size()) throw DomainError("Alexander factor exponents do not match the weights");
        std::int64_t e = 0;
        for (std::size_t i = 0; i < w.size(); ++i) e += w[i] * f.m[i];
        s += "(t^" + std::to_string(e) + "-" + f.omega + ")";
    }
    return s;
}

}  // namespace quasiadj
