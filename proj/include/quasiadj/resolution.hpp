#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiadj/bipoly.hpp"
#include "quasiadj/germ.hpp"

namespace quasiadj {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Combinatorial data of an embedded resolution. Divisors are indexed 0..n_div-1 internally and
/// printed as E1..En (creation order of the blowups).
struct ResolutionData {
    std::size_t n_div = 0;
    std::size_t r = 0;
    IntMatrix a;                                  // a[i][k] = mult of pi^*(f_i) along E_k
    std::vector<std::int64_t> c;                  // c[k]  = mult of pi^*(dx ^ dy) along E_k
    std::vector<std::int64_t> selfint;            // E_k . E_k
    std::vector<std::vector<std::size_t>> adj;    // sorted neighbour lists, symmetric
    std::vector<std::size_t> attach;              // divisor met by the strict transform of branch i

    IntMatrix intersection_matrix() const;
    /// Number of exceptional neighbours plus attached strict transforms.
    std::size_t valence(std::size_t k) const;
    /// Divisors of valence >= 3, increasing.
    std::vector<std::size_t> rupture() const;
    bool adjacent(std::size_t j, std::size_t k) const;

    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

/// Where a blowup center sits on the divisor it lies on: the direction y = slope*x in the chart
/// coordinates of its parent, or the vertical direction x = 0.
struct ChartDirection {
    bool vertical = false;
    Rat slope;
    friend bool operator==(const ChartDirection&, const ChartDirection&) = default;
};

/// A blown-up center. Its id equals the index of the divisor its blowup creates.
struct InfNearPoint {
    std::size_t id = 0;
    std::optional<std::size_t> host;         // nullopt: the origin; else the divisor it lies on
    ChartDirection location;                 // meaningful when host is set
    std::vector<std::size_t> proximate_to;   // earlier points whose divisors pass through it
    std::vector<std::uint32_t> branch_mults; // multiplicity of each branch's strict transform
};

struct BlowupTrace {
    std::vector<InfNearPoint> points;
};

/// Resolution data plus, when produced by the blowup engine, the blowup trace.
struct Resolution {
    ResolutionData data;
    std::optional<BlowupTrace> trace;
};

/// Minimal embedded (SNC) resolution by point blowups at rational centers. The origin is always
/// blown up so that every branch attaches to an exceptional divisor.
/// Throws ResolutionError (IrrationalCenter, SharedBranch, NonReduced, MultipleBranches).
Resolution resolve_embedded(const GermSpec& g);

/// Reads the line-oriented graph schema and checks every ResolutionData invariant.
/// Throws GraphError listing schema errors or each violated invariant.
Resolution load_resolution_graph(std::string_view source);

/// Graph-file text for `res`; load_resolution_graph reads it back unchanged.
std::string render_resolution_graph(const ResolutionData& res);

/// All invariant violations of `res` (empty when valid). Messages start with the violation kind:
/// NegativeDefiniteViolation, OrthogonalityViolation, TreeViolation, ValueViolation, ShapeViolation.
std::vector<std::string> check_resolution(const ResolutionData& res);

/// True iff the symmetric matrix is negative definite (exact Sylvester test).
bool is_negative_definite(const IntMatrix& m);

/// e[k] = mult of pi^*(phi) along E_k, by replaying the blowup trace.
/// Throws Unsupported without a trace, DomainError for phi = 0.
std::vector<std::int64_t> divisor_valuations(const Resolution& res, const BiPoly& phi);

struct MilnorDelta {
    std::int64_t delta = 0;
    std::int64_t mu = 0;
};

/// delta = sum m_p(m_p - 1)/2 over the centers, mu = 2 delta - r + 1. Throws Unsupported without a trace.
MilnorDelta milnor_delta(const Resolution& res);

}  // namespace quasiadj
