#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasiadj/lattice.hpp"
#include "quasiadj/rat.hpp"
#include "quasiadj/resolution.hpp"

namespace quasiadj {

/// A point of U = [0,1)^r in cube coordinates (x_i <-> multiplier exponent 1 - x_i).
class CubePoint {
public:
    /// Throws DomainError unless 0 <= x_i < 1 for every i.
    explicit CubePoint(std::vector<Rat> x);
    /// Reduces every coordinate mod 1 into [0,1).
    static CubePoint wrap(const std::vector<Rat>& x);

    const std::vector<Rat>& coords() const { return x_; }
    std::size_t size() const { return x_.size(); }
    const Rat& operator[](std::size_t i) const { return x_[i]; }
    std::string str() const;

    friend bool operator==(const CubePoint&, const CubePoint&) = default;

private:
    std::vector<Rat> x_;
};

/// sum_i m_i x_i = n
struct Hyperplane {
    std::vector<std::int64_t> m;
    std::int64_t n = 0;

    Rat eval(const std::vector<Rat>& x) const;  // sum m_i x_i - n
    std::string str() const;                     // "6*x1+4*x2=5"
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct WallCandidate {
    std::size_t divisor = 0;
    Hyperplane plane;  // m = (a_{1,k}, ..., a_{r,k}), 0 < n < sum m
};

/// Mixed multiplier ideal at exponents c: bounds floor(sum c_i a_{i,k}) - c_k.
IdealHandle mmi_bounds(const ResolutionData& res, const std::vector<Rat>& c);

/// A(x) = mmi_bounds(1 - x).
IdealHandle quasiadjunction_ideal(const ResolutionData& res, const CubePoint& x);
/// A''(x): bounds ceil(t_k) - c_k - 1 with t_k = sum (1 - x_i) a_{i,k}.
IdealHandle log_quasiadjunction_ideal(const ResolutionData& res, const CubePoint& x);
/// dim A''(x)/A(x).
std::int64_t depth_log(const ResolutionData& res, const CubePoint& x);

/// All candidate walls, grouped by divisor in increasing order; optionally rupture divisors only.
std::vector<WallCandidate> wall_candidates(const ResolutionData& res, bool rupture_only = false);

/// Candidate walls as point sets: proportional (m, n) on different divisors collapse to the
/// first one listed.
std::vector<Hyperplane> distinct_walls(const std::vector<WallCandidate>& candidates);

struct FaceEndpoint {
    std::vector<Rat> point;
    bool closed = false;
};

struct Face {
    Hyperplane plane;
    std::size_t dim = 0;                  // r - 1
    std::vector<FaceEndpoint> endpoints;  // r = 1: the point itself; r = 2: the two segment ends, by x1
    IdealHandle ideal_below;              // A on the side of smaller sum m_i x_i
    IdealHandle ideal_above;
    std::int64_t depth_log = 0;
    std::vector<Rat> sample;              // the generic point used for the ideals
};

/// Faces of quasiadjunction for r <= 2. Throws Unsupported for r >= 3.
std::vector<Face> faces(const ResolutionData& res, bool rupture_only = false);

struct FacePoint {
    std::vector<Hyperplane> planes;  // candidate walls through x whose divisor drives the jump
    std::int64_t depth_log = 0;
};

/// Classifies one point: set when x lies on a face (A(x) != A''(x)). The corner x = 0 is on no face.
std::optional<FacePoint> face_at(const ResolutionData& res, const CubePoint& x);

enum class LineMode { Wrapped, Clipped };

struct LineCrossing {
    Rat t;
    CubePoint point;
    FacePoint face;
};

/// Face crossings of base + t*dir ordered by t. Wrapped: t in (0,1), coordinates taken mod 1.
/// Clipped: t >= 0 while the point stays in U. dir must be non-negative and nonzero.
std::vector<LineCrossing> faces_on_line(const ResolutionData& res, const CubePoint& base,
                                        const std::vector<Rat>& dir, LineMode mode, bool rupture_only = false);

/// A deterministic point of the plane inside U lying on no other candidate wall, if one is found.
std::optional<CubePoint> generic_point_on(const ResolutionData& res, const Hyperplane& plane,
                                          std::size_t variant = 0);

/// depth_log(x) + depth_log(1 - x); depth_log(x) alone when every x_i = 1/2.
/// Throws Unsupported if some x_i = 0.
std::int64_t character_total_depth(const ResolutionData& res, const CubePoint& x);

/// depth_log sampled along each face (generic points and closed endpoints), for r <= 2.
struct Stratum {
    Hyperplane plane;
    std::vector<std::vector<Rat>> points;
    std::vector<std::int64_t> depths;
    bool constant = true;
};
std::vector<Stratum> strata_report(const ResolutionData& res, bool rupture_only = false);

}  // namespace quasiadj
