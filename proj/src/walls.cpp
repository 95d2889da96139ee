#include "quasiadj/walls.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "quasiadj/errors.hpp"

namespace quasiadj {

CubePoint::CubePoint(std::vector<Rat> x) : x_(std::move(x)) {
    for (const auto& v : x_)
        if (v.sign() < 0 || v >= Rat(1))
            throw DomainError("cube point coordinate " + v.str() + " is outside [0,1)");
}

CubePoint CubePoint::wrap(const std::vector<Rat>& x) {
    std::vector<Rat> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.frac());
    return CubePoint(std::move(out));
}

std::string CubePoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (i) s += ",";
        s += x_[i].str();
    }
    return s + ")";
}

Rat Hyperplane::eval(const std::vector<Rat>& x) const {
    Rat s(-n);
    for (std::size_t i = 0; i < m.size(); ++i) s += Rat(m[i]) * x[i];
    return s;
}

std::string Hyperplane::str() const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "+";
        s += (m[i] == 1 ? std::string() : std::to_string(m[i]) + "*") + "x" + std::to_string(i + 1);
    }
    return s + "=" + std::to_string(n);
}

namespace {

// t_k = sum_i (1 - x_i) a_{i,k}; x need not lie in U.
std::vector<Rat> t_values(const ResolutionData& res, const std::vector<Rat>& x) {
    if (x.size() != res.r) throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                             std::to_string(res.r));
    std::vector<Rat> t(res.n_div, Rat(0));
    for (std::size_t k = 0; k < res.n_div; ++k)
        for (std::size_t i = 0; i < res.r; ++i) t[k] += (Rat(1) - x[i]) * Rat(res.a[i][k]);
    return t;
}

ExcDivisor floor_bounds(const ResolutionData& res, const std::vector<Rat>& t) {
    ExcDivisor b(res.n_div);
    for (std::size_t k = 0; k < res.n_div; ++k) b[k] = t[k].floor_i64() - res.c[k];
    return b;
}

ExcDivisor log_bounds(const ResolutionData& res, const std::vector<Rat>& t) {
    ExcDivisor b(res.n_div);
    for (std::size_t k = 0; k < res.n_div; ++k) b[k] = t[k].ceil_i64() - res.c[k] - 1;
    return b;
}

IdealHandle ideal_at(const ResolutionData& res, const Lattice& lat, const std::vector<Rat>& x) {
    return make_ideal(lat, floor_bounds(res, t_values(res, x)));
}

IdealHandle log_ideal_at(const ResolutionData& res, const Lattice& lat, const std::vector<Rat>& x) {
    return make_ideal(lat, log_bounds(res, t_values(res, x)));
}

Hyperplane divisor_plane(const ResolutionData& res, std::size_t k, std::int64_t n) {
    Hyperplane h;
    for (std::size_t i = 0; i < res.r; ++i) h.m.push_back(res.a[i][k]);
    h.n = n;
    return h;
}

// Geometric identity of a hyperplane: (m, n) divided by the gcd of all entries.
Hyperplane primitive(const Hyperplane& h) {
    std::int64_t g = h.n;
    for (auto v : h.m) g = std::gcd(g, v);
    if (g == 0) return h;
    Hyperplane p = h;
    for (auto& v : p.m) v /= g;
    p.n /= g;
    return p;
}

// Does the plane h through x carry a face near x? Probes depth_log at nearby points of h that lie
// on no other wall, in a few deterministic directions inside h.
bool carries_face(const ResolutionData& res, const Lattice& lat, const std::vector<Rat>& x, const Hyperplane& h,
                  const std::vector<Hyperplane>& walls) {
    const std::size_t r = x.size();
    const Hyperplane ph = primitive(h);
    std::vector<Hyperplane> through, away;
    for (const auto& w : walls) {
        if (primitive(w) == ph) continue;
        (w.eval(x).is_zero() ? through : away).push_back(w);
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::int64_t mm = 0;
    for (auto v : h.m) mm += v * v;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<std::int64_t> u(r);
        std::int64_t mu = 0;
        for (std::size_t i = 0; i < r; ++i) {
            u[i] = coord(rng);
            mu += h.m[i] * u[i];
        }
        std::vector<Rat> v(r);
        bool zero = true;
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = Rat(u[i] * mm - h.m[i] * mu);
            zero = zero && v[i].is_zero();
        }
        if (zero) continue;
        auto along = [&](const Hyperplane& w) {
            Rat s(0);
            for (std::size_t i = 0; i < r; ++i) s += Rat(w.m[i]) * v[i];
            return s;
        };
        if (std::any_of(through.begin(), through.end(), [&](const Hyperplane& w) { return along(w).is_zero(); }))
            continue;
        for (int sign : {1, -1}) {
            Rat reach(-1);
            auto limit = [&](const Rat& bound) {
                if (reach.sign() < 0 || bound < reach) reach = bound;
            };
            bool blocked = false;
            for (std::size_t i = 0; i < r; ++i) {
                const Rat vi = v[i] * Rat(sign);
                if (vi.sign() < 0) {
                    if (x[i].is_zero()) blocked = true;
                    else limit(x[i] / -vi);
                } else if (vi.sign() > 0) {
                    limit((Rat(1) - x[i]) / vi);
                }
            }
            if (blocked) continue;
            for (const auto& w : away) {
                const Rat s = along(w);
                if (s.is_zero()) continue;
                const Rat b = w.eval(x) / s;
                limit(b.sign() < 0 ? -b : b);
            }
            const Rat eps = reach / Rat(2);
            std::vector<Rat> p(r);
            for (std::size_t i = 0; i < r; ++i) p[i] = x[i] + eps * v[i] * Rat(sign);
            const auto t = t_values(res, p);
            if (make_ideal(lat, floor_bounds(res, t)).closure != make_ideal(lat, log_bounds(res, t)).closure)
                return true;
        }
    }
    return false;
}

// The candidate walls through x that carry a face there. Among proportional candidates the
// representative is the lowest divisor whose own bound moves the closure of A(x).
FacePoint classify(const ResolutionData& res, const Lattice& lat, const std::vector<Rat>& x,
                   const IdealHandle& a, const IdealHandle& app) {
    FacePoint fp;
    fp.depth_log = a.codim - app.codim;
    const auto t = t_values(res, x);
    std::vector<std::pair<Hyperplane, std::vector<std::pair<std::size_t, Hyperplane>>>> groups;
    for (std::size_t k = 0; k < res.n_div; ++k) {
        if (!t[k].is_integer()) continue;
        Hyperplane h = divisor_plane(res, k, 0);
        h.n = std::accumulate(h.m.begin(), h.m.end(), std::int64_t{0}) - t[k].floor_i64();
        if (h.n <= 0) continue;
        const Hyperplane key = primitive(h);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {{k, h}}});
        } else {
            it->second.push_back({k, h});
        }
    }
    const auto walls = groups.size() > 1 ? distinct_walls(wall_candidates(res)) : std::vector<Hyperplane>{};
    for (const auto& [key, members] : groups) {
        Hyperplane rep = members.front().second;
        for (const auto& [k, h] : members) {
            ExcDivisor b = a.bounds;
            --b[k];
            if (antinef_closure(lat, b) != a.closure) {
                rep = h;
                break;
            }
        }
        if (groups.size() == 1 || carries_face(res, lat, x, rep, walls)) fp.planes.push_back(rep);
    }
    return fp;
}

bool on_other_wall(const std::vector<Rat>& x, const std::vector<Hyperplane>& walls, const Hyperplane& self) {
    const Hyperplane ps = primitive(self);
    for (const auto& w : walls) {
        if (primitive(w) == ps) continue;
        if (w.eval(x).is_zero()) return true;
    }
    return false;
}

bool in_cube(const std::vector<Rat>& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& v) { return v.sign() >= 0 && v < Rat(1); });
}

std::vector<Rat> lerp(const std::vector<Rat>& p, const std::vector<Rat>& q, const Rat& s) {
    std::vector<Rat> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + (q[i] - p[i]) * s;
    return out;
}

std::vector<Rat> point_on_line(const Hyperplane& h, const Rat& x1) {
    // r = 2: x2 = (n - m1 x1) / m2
    return {x1, (Rat(h.n) - Rat(h.m[0]) * x1) / Rat(h.m[1])};
}

std::vector<Face> faces_r1(const ResolutionData& res, const Lattice& lat, bool rupture_only) {
    std::map<Rat, Face> found;
    for (const auto& wc : wall_candidates(res, rupture_only)) {
        const Rat x = Rat(wc.plane.n) / Rat(wc.plane.m[0]);
        if (found.count(x)) continue;
        const std::vector<Rat> p{x};
        const IdealHandle a = ideal_at(res, lat, p);
        const IdealHandle app = log_ideal_at(res, lat, p);
        if (a.closure == app.closure) continue;
        const FacePoint fp = classify(res, lat, p, a, app);
        Face f;
        f.plane = fp.planes.front();
        f.dim = 0;
        f.endpoints = {{p, true}};
        f.ideal_below = a;
        f.ideal_above = app;
        f.depth_log = fp.depth_log;
        f.sample = p;
        found.emplace(x, std::move(f));
    }
    std::vector<Face> out;
    for (auto& [x, f] : found) out.push_back(std::move(f));
    return out;
}

struct Edge {
    Rat lo, hi;  // x1 range
    IdealHandle below, above;
    std::int64_t depth = 0;
    std::vector<Rat> sample;
    Hyperplane plane;
};

std::vector<Face> faces_r2(const ResolutionData& res, const Lattice& lat, bool rupture_only) {
    const auto walls = distinct_walls(wall_candidates(res, rupture_only));
    std::vector<Face> out;
    for (const auto& h : walls) {
        const Rat m1(h.m[0]), m2(h.m[1]), n(h.n);
        const Rat lo = std::max(Rat(0), (n - m2) / m1);
        const Rat hi = std::min(Rat(1), n / m1);
        if (lo >= hi) continue;
        std::set<Rat> breaks{lo, hi};
        for (const auto& g : walls) {
            const std::int64_t det = h.m[0] * g.m[1] - h.m[1] * g.m[0];
            if (det == 0) continue;
            const Rat x = Rat(h.n * g.m[1] - g.n * h.m[1]) / Rat(det);
            if (lo < x && x < hi) breaks.insert(x);
        }
        const std::vector<Rat> bp(breaks.begin(), breaks.end());

        std::vector<Edge> edges;
        for (std::size_t e = 0; e + 1 < bp.size(); ++e) {
            const auto pa = point_on_line(h, bp[e]);
            const auto pb = point_on_line(h, bp[e + 1]);
            auto p = lerp(pa, pb, Rat(1, 2));
            for (int guard = 0; on_other_wall(p, walls, h); ++guard) {
                if (guard > 64) throw Error("could not find a generic point on " + h.str());
                p = lerp(p, pa, Rat(1, 2));
            }
            // step off the line along the normal, staying clear of every other wall
            Rat reach(1);
            for (const auto& g : walls) {
                if (primitive(g) == primitive(h)) continue;
                const Rat gm = Rat(g.m[0] * h.m[0] + g.m[1] * h.m[1]);
                const Rat s = -g.eval(p) / gm;
                if (!s.is_zero()) reach = std::min(reach, s.sign() < 0 ? -s : s);
            }
            for (std::size_t i = 0; i < 2; ++i) {
                reach = std::min(reach, p[i] / Rat(h.m[i]));
                reach = std::min(reach, (Rat(1) - p[i]) / Rat(h.m[i]));
            }
            const Rat delta = reach / Rat(2);
            const std::vector<Rat> pminus{p[0] - delta * m1, p[1] - delta * m2};
            const std::vector<Rat> pplus{p[0] + delta * m1, p[1] + delta * m2};
            const IdealHandle below = ideal_at(res, lat, pminus);
            const IdealHandle above = ideal_at(res, lat, pplus);
            if (below.closure == above.closure) continue;
            const IdealHandle a = ideal_at(res, lat, p);
            const IdealHandle app = log_ideal_at(res, lat, p);
            if (a.closure != below.closure || app.closure != above.closure)
                throw Error("inconsistent ideals across " + h.str() + " at (" + p[0].str() + "," + p[1].str() + ")");
            const FacePoint fp = classify(res, lat, p, a, app);
            edges.push_back({bp[e], bp[e + 1], below, above, fp.depth_log, p, fp.planes.front()});
        }

        for (std::size_t e = 0; e < edges.size();) {
            std::size_t f = e;
            while (f + 1 < edges.size() && edges[f + 1].lo == edges[f].hi &&
                   edges[f + 1].below.closure == edges[e].below.closure &&
                   edges[f + 1].above.closure == edges[e].above.closure)
                ++f;
            Face face;
            face.plane = edges[e].plane;
            face.dim = 1;
            face.ideal_below = edges[e].below;
            face.ideal_above = edges[e].above;
            face.depth_log = edges[e].depth;
            face.sample = edges[e].sample;
            for (const Rat& x1 : {edges[e].lo, edges[f].hi}) {
                FaceEndpoint ep;
                ep.point = point_on_line(h, x1);
                ep.closed = in_cube(ep.point) &&
                            ideal_at(res, lat, ep.point).closure == face.ideal_below.closure &&
                            log_ideal_at(res, lat, ep.point).closure == face.ideal_above.closure;
                face.endpoints.push_back(std::move(ep));
            }
            out.push_back(std::move(face));
            e = f + 1;
        }
    }
    return out;
}

}  // namespace

IdealHandle mmi_bounds(const ResolutionData& res, const std::vector<Rat>& c) {
    if (c.size() != res.r)
        throw DomainError("exponent vector has " + std::to_string(c.size()) + " entries, expected " +
                          std::to_string(res.r));
    for (const auto& v : c)
        if (v.sign() < 0) throw DomainError("negative exponent " + v.str());
    ExcDivisor b(res.n_div);
    for (std::size_t k = 0; k < res.n_div; ++k) {
        Rat s(0);
        for (std::size_t i = 0; i < res.r; ++i) s += c[i] * Rat(res.a[i][k]);
        b[k] = s.floor_i64() - res.c[k];
    }
    return make_ideal(Lattice(res), b);
}

IdealHandle quasiadjunction_ideal(const ResolutionData& res, const CubePoint& x) {
    return ideal_at(res, Lattice(res), x.coords());
}

IdealHandle log_quasiadjunction_ideal(const ResolutionData& res, const CubePoint& x) {
    return log_ideal_at(res, Lattice(res), x.coords());
}

std::int64_t depth_log(const ResolutionData& res, const CubePoint& x) {
    const Lattice lat(res);
    return ideal_at(res, lat, x.coords()).codim - log_ideal_at(res, lat, x.coords()).codim;
}

std::vector<WallCandidate> wall_candidates(const ResolutionData& res, bool rupture_only) {
    std::vector<std::size_t> ks;
    if (rupture_only) {
        ks = res.rupture();
    } else {
        ks.resize(res.n_div);
        std::iota(ks.begin(), ks.end(), std::size_t{0});
    }
    std::vector<WallCandidate> out;
    for (std::size_t k : ks) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < res.r; ++i) total += res.a[i][k];
        for (std::int64_t n = 1; n < total; ++n) out.push_back({k, divisor_plane(res, k, n)});
    }
    return out;
}

std::vector<Hyperplane> distinct_walls(const std::vector<WallCandidate>& candidates) {
    std::vector<Hyperplane> out;
    std::set<Hyperplane> seen;
    for (const auto& wc : candidates)
        if (seen.insert(primitive(wc.plane)).second) out.push_back(wc.plane);
    return out;
}

std::vector<Face> faces(const ResolutionData& res, bool rupture_only) {
    const Lattice lat(res);
    if (res.r == 1) return faces_r1(res, lat, rupture_only);
    if (res.r == 2) return faces_r2(res, lat, rupture_only);
    throw Unsupported("the complete face arrangement is available for r <= 2 only (r = " + std::to_string(res.r) +
                      "); use point or line queries");
}

std::optional<FacePoint> face_at(const ResolutionData& res, const CubePoint& x) {
    // the corner lies on no candidate wall, only on the excluded boundary of U
    if (std::all_of(x.coords().begin(), x.coords().end(), [](const Rat& v) { return v.is_zero(); }))
        return std::nullopt;
    const Lattice lat(res);
    const IdealHandle a = ideal_at(res, lat, x.coords());
    const IdealHandle app = log_ideal_at(res, lat, x.coords());
    if (a.closure == app.closure) return std::nullopt;
    return classify(res, lat, x.coords(), a, app);
}

std::vector<LineCrossing> faces_on_line(const ResolutionData& res, const CubePoint& base, const std::vector<Rat>& dir,
                                        LineMode mode, bool rupture_only) {
    const std::size_t r = res.r;
    if (base.size() != r || dir.size() != r) throw DomainError("line data does not match the number of branches");
    if (std::any_of(dir.begin(), dir.end(), [](const Rat& v) { return v.sign() < 0; }) ||
        std::all_of(dir.begin(), dir.end(), [](const Rat& v) { return v.is_zero(); }))
        throw DomainError("line direction must be non-negative and nonzero");

    Rat t_end(1);
    if (mode == LineMode::Clipped) {
        t_end = Rat(-1);
        for (std::size_t i = 0; i < r; ++i) {
            if (dir[i].is_zero()) continue;
            const Rat lim = (Rat(1) - base[i]) / dir[i];
            if (t_end.sign() < 0 || lim < t_end) t_end = lim;
        }
    }
    const Rat t_begin(0);

    // pieces on which every floor(base_i + t dir_i) is constant
    std::set<Rat> cuts{t_begin, t_end};
    if (mode == LineMode::Wrapped)
        for (std::size_t i = 0; i < r; ++i) {
            if (dir[i].is_zero()) continue;
            for (BigInt j = (base[i] + dir[i] * t_begin).floor() + 1; Rat(j) < base[i] + dir[i] * t_end; ++j)
                cuts.insert((Rat(j) - base[i]) / dir[i]);
        }
    const std::vector<Rat> cut(cuts.begin(), cuts.end());

    auto point = [&](const Rat& t) {
        std::vector<Rat> p(r);
        for (std::size_t i = 0; i < r; ++i) p[i] = base[i] + dir[i] * t;
        return mode == LineMode::Wrapped ? CubePoint::wrap(p) : CubePoint(p);
    };

    std::set<Rat> ts;
    const auto walls = distinct_walls(wall_candidates(res, rupture_only));
    for (std::size_t c = 0; c + 1 < cut.size(); ++c) {
        const Rat mid = (cut[c] + cut[c + 1]) / Rat(2);
        std::vector<Rat> shift(r, Rat(0));
        if (mode == LineMode::Wrapped)
            for (std::size_t i = 0; i < r; ++i) shift[i] = Rat((base[i] + dir[i] * mid).floor());
        for (const auto& h : walls) {
            Rat md(0), rhs(h.n);
            for (std::size_t i = 0; i < r; ++i) {
                md += Rat(h.m[i]) * dir[i];
                rhs -= Rat(h.m[i]) * (base[i] - shift[i]);
            }
            const Rat t = rhs / md;
            if (t >= cut[c] && t < cut[c + 1]) ts.insert(t);
        }
        ts.insert(cut[c]);
    }

    const Lattice lat(res);
    std::vector<LineCrossing> out;
    for (const Rat& t : ts) {
        if (mode == LineMode::Wrapped && (t.sign() <= 0 || t >= Rat(1))) continue;
        if (mode == LineMode::Clipped && t >= t_end) continue;
        const CubePoint p = point(t);
        if (std::all_of(p.coords().begin(), p.coords().end(), [](const Rat& v) { return v.is_zero(); })) continue;
        const IdealHandle a = ideal_at(res, lat, p.coords());
        const IdealHandle app = log_ideal_at(res, lat, p.coords());
        if (a.closure == app.closure) continue;
        out.push_back({t, p, classify(res, lat, p.coords(), a, app)});
    }
    return out;
}

std::optional<CubePoint> generic_point_on(const ResolutionData& res, const Hyperplane& plane, std::size_t variant) {
    if (plane.m.size() != res.r) throw DomainError("hyperplane dimension does not match the number of branches");
    const auto walls = distinct_walls(wall_candidates(res));
    std::mt19937_64 rng(0x5eed + variant);
    std::uniform_int_distribution<int> pick(1, 97);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<Rat> w(res.r);
        for (auto& v : w) v = Rat(pick(rng));
        Rat mw(0);
        for (std::size_t i = 0; i < res.r; ++i) mw += Rat(plane.m[i]) * w[i];
        for (auto& v : w) v = v * Rat(plane.n) / mw;
        if (!in_cube(w) || on_other_wall(w, walls, plane)) continue;
        if (std::any_of(w.begin(), w.end(), [](const Rat& v) { return v.is_zero(); })) continue;
        return CubePoint(w);
    }
    return std::nullopt;
}

std::int64_t character_total_depth(const ResolutionData& res, const CubePoint& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].is_zero())
            throw Unsupported("character is trivial on the loop of branch " + std::to_string(i + 1) +
                              " (x" + std::to_string(i + 1) + " = 0)");
    const std::int64_t d = depth_log(res, x);
    const Rat half(1, 2);
    if (std::all_of(x.coords().begin(), x.coords().end(), [&](const Rat& v) { return v == half; })) return d;
    std::vector<Rat> conj;
    for (const auto& v : x.coords()) conj.push_back(Rat(1) - v);
    return d + depth_log(res, CubePoint(conj));
}

std::vector<Stratum> strata_report(const ResolutionData& res, bool rupture_only) {
    const Lattice lat(res);
    const auto walls = distinct_walls(wall_candidates(res, rupture_only));
    std::vector<Stratum> out;
    for (const auto& f : faces(res, rupture_only)) {
        Stratum s;
        s.plane = f.plane;
        std::vector<std::vector<Rat>> pts{f.sample};
        if (f.dim == 1) {
            const auto& a = f.endpoints[0].point;
            const auto& b = f.endpoints[1].point;
            for (const Rat& u : {Rat(1, 4), Rat(3, 4)}) {
                auto p = lerp(a, b, u);
                for (int guard = 0; guard < 64 && on_other_wall(p, walls, f.plane); ++guard) p = lerp(p, f.sample, Rat(1, 2));
                pts.push_back(p);
            }
        }
        for (const auto& ep : f.endpoints)
            if (ep.closed && ep.point != f.sample) pts.push_back(ep.point);
        for (const auto& p : pts) {
            s.depths.push_back(ideal_at(res, lat, p).codim - log_ideal_at(res, lat, p).codim);
            s.points.push_back(p);
        }
        s.constant = std::adjacent_find(s.depths.begin(), s.depths.end(), std::not_equal_to<>()) == s.depths.end();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace quasiadj
