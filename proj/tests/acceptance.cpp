// One line per acceptance criterion. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "quasiadj/errors.hpp"
#include "quasiadj/lattice.hpp"
#include "quasiadj/spectra.hpp"
#include "quasiadj/walls.hpp"

using namespace quasiadj;

namespace {

// runtime limits in seconds
constexpr double kFacesLimit = 5.0;
constexpr double kSplit6Limit = 10.0;
constexpr double kUnloadingLimit = 30.0;
constexpr double kCodimLimit = 10.0;

constexpr int kRandomLattices = 200;
constexpr int kRandomPairs = 500;
constexpr int kRandomPoints = 500;
constexpr long kGridDen = 210;

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using PlaneSet = std::set<std::pair<std::vector<std::int64_t>, std::int64_t>>;

PlaneSet plane_set(const std::vector<Face>& fs) {
    PlaneSet out;
    for (const auto& f : fs) out.insert({f.plane.m, f.plane.n});
    return out;
}

std::vector<WeightVector> weights_for(std::size_t r) {
    if (r == 1) return {WeightVector({1})};
    std::vector<WeightVector> out;
    for (std::vector<std::int64_t> w : {std::vector<std::int64_t>{1, 1}, {1, 2}, {2, 3}}) {
        w.resize(r, 1);
        out.emplace_back(w);
    }
    return out;
}

CubePoint random_point(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<long> v(0, kGridDen - 1);
    std::vector<Rat> x;
    for (std::size_t i = 0; i < r; ++i) x.push_back(Rat(v(rng), kGridDen));
    return CubePoint(x);
}

bool on_level_set(const ResolutionData& res, const CubePoint& x) {
    for (std::size_t k = 0; k < res.n_div; ++k) {
        Rat s(0);
        for (std::size_t i = 0; i < res.r; ++i) s += Rat(res.a[i][k]) * x[i];
        if (s.is_integer()) return true;
    }
    return false;
}

bool same_faces(const std::vector<Face>& a, const std::vector<Face>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].plane == b[i].plane) || a[i].depth_log != b[i].depth_log) return false;
        if (a[i].endpoints.size() != b[i].endpoints.size()) return false;
        for (std::size_t e = 0; e < a[i].endpoints.size(); ++e)
            if (a[i].endpoints[e].point != b[i].endpoints[e].point ||
                a[i].endpoints[e].closed != b[i].endpoints[e].closed)
                return false;
        if (!ideal_equal(a[i].ideal_below, b[i].ideal_below) || !ideal_equal(a[i].ideal_above, b[i].ideal_above))
            return false;
    }
    return true;
}

std::string str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Verdict twocusps_faces() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = corpus::load("twocusps.germ").data;
    const auto fs = faces(res);
    const double dt = seconds_since(t0);
    PlaneSet want;
    for (std::int64_t n : {1, 3, 5}) {
        want.insert({{6, 4}, n});
        want.insert({{4, 6}, n});
    }
    v.require(plane_set(fs) == want, "face hyperplanes differ from the six expected");
    // no point off these planes lies on a face
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const auto x = random_point(rng, 2);
        bool on_plane = false;
        for (const auto& [m, n] : want)
            if (Hyperplane{m, n}.eval(x.coords()).is_zero()) on_plane = true;
        if (!on_plane) v.require(!face_at(res, x).has_value(), "extra face at " + x.str());
    }
    v.require(dt < kFacesLimit, "runtime " + std::to_string(dt) + " s");
    return v;
}

Verdict twocusps_bernstein() {
    Verdict v;
    const auto res = corpus::load("twocusps.germ").data;
    auto got = bernstein_hyperplanes(res);
    std::sort(got.begin(), got.end());
    std::vector<BernsteinFactor> want;
    for (std::int64_t k : {5, 7, 9}) {
        want.push_back({{4, 6}, k});
        want.push_back({{6, 4}, k});
    }
    std::sort(want.begin(), want.end());
    v.require(got == want, "factors differ");
    return v;
}

Verdict split_germs() {
    Verdict v;
    for (std::size_t r = 3; r <= 6; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string name = "split" + std::to_string(r) + ".germ";
        const auto full = corpus::load(name);
        const auto& res = full.data;
        const auto tag = name + ": ";

        PlaneSet walls;
        for (const auto& h : distinct_walls(wall_candidates(res))) walls.insert({h.m, h.n});
        PlaneSet levels;
        for (std::size_t l = 1; l < r; ++l) levels.insert({std::vector<std::int64_t>(r, 1), static_cast<std::int64_t>(l)});
        v.require(walls == levels, tag + "candidate walls are not the level sets");

        for (std::size_t l = 1; l < r; ++l) {
            const Hyperplane h{std::vector<std::int64_t>(r, 1), static_cast<std::int64_t>(l)};
            const std::int64_t want = static_cast<std::int64_t>(r - l - 1);
            for (std::size_t variant = 0; variant < 3; ++variant) {
                const auto x = generic_point_on(res, h, variant);
                v.require(x.has_value(), tag + "no generic point on " + h.str());
                if (!x) continue;
                v.require(depth_log(res, *x) == want, tag + "depth on " + h.str());
                const auto fa = face_at(res, *x);
                if (l + 1 < r) {
                    v.require(fa && fa->planes.size() == 1 && fa->planes[0] == h, tag + h.str() + " not a face");
                } else {
                    v.require(!fa.has_value(), tag + h.str() + " should not be a face");
                }
            }
        }
        // diagonal line meets exactly H_1..H_{r-2}
        const auto line = faces_on_line(res, CubePoint(std::vector<Rat>(r, Rat(0))), std::vector<Rat>(r, Rat(1)),
                                        LineMode::Clipped);
        v.require(line.size() == r - 2, tag + "diagonal crossings");

        const auto m = milnor_consistency(full);
        const std::int64_t mu = static_cast<std::int64_t>((r - 1) * (r - 1));
        v.require(m.match && m.mu_direct == mu && m.mu_formula == mu, tag + "milnor " + std::to_string(m.mu_direct) +
                                                                           " vs " + std::to_string(m.mu_formula));
        const double dt = seconds_since(t0);
        if (r == 6) v.require(dt < kSplit6Limit, tag + "runtime " + std::to_string(dt) + " s");
    }
    return v;
}

Verdict character_depth() {
    Verdict v;
    for (std::size_t r = 3; r <= 5; ++r) {
        const auto res = corpus::load("split" + std::to_string(r) + ".germ").data;
        for (std::size_t l = 1; l + 1 < r; ++l) {
            const Hyperplane h{std::vector<std::int64_t>(r, 1), static_cast<std::int64_t>(l)};
            for (std::size_t variant = 0; variant < 4; ++variant) {
                const auto x = generic_point_on(res, h, variant);
                v.require(x.has_value(), "no generic point on " + h.str());
                if (x)
                    v.require(character_total_depth(res, *x) == static_cast<std::int64_t>(r - 2),
                              "r=" + std::to_string(r) + " at " + x->str());
            }
        }
    }
    return v;
}

Verdict cusp_pipeline() {
    Verdict v;
    for (const char* name : {"cusp.germ", "cusp.graph"}) {
        const auto res = corpus::load(name).data;
        const std::string tag = std::string(name) + ": ";
        v.require(res.r == 1 && res.n_div == 3, tag + "shape");
        if (res.n_div != 3) continue;
        v.require(res.a[0] == std::vector<std::int64_t>{2, 3, 6}, tag + "a = " + str(res.a[0]));
        v.require(res.c == std::vector<std::int64_t>{1, 2, 4}, tag + "c = " + str(res.c));
        v.require(res.selfint == std::vector<std::int64_t>{-3, -2, -1}, tag + "selfint = " + str(res.selfint));

        // lct oracle: min (c_k + 1)/a_k
        Rat lct((res.c[0] + 1), res.a[0][0]);
        for (std::size_t k = 1; k < res.n_div; ++k) lct = std::min(lct, Rat(res.c[k] + 1, res.a[0][k]));
        v.require(lct == Rat(5, 6), tag + "lct oracle");

        const auto jn = jumping_numbers(res, WeightVector::diagonal(1));
        v.require(jn == std::vector<SpectrumElement>{{Rat(5, 6), 1}}, tag + "jumping numbers");
        const auto sd = spectrum_diagonal(res);
        v.require(sd.elements == std::vector<SpectrumElement>{{Rat(1, 6), 1}}, tag + "diagonal spectrum");
        v.require(bernstein_hyperplanes(res) == std::vector<BernsteinFactor>{{{6}, 5}}, tag + "bernstein");
        v.require(!bernstein_hyperplanes(res).empty() && bernstein_hyperplanes(res)[0].str() == "6*s1+5",
                  tag + "bernstein text");
    }
    return v;
}

Verdict unloading() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ResolutionData> lattices;
    for (const auto& e : corpus::all()) lattices.push_back(e.res.data);
    std::mt19937_64 rng(7);
    for (int i = 0; i < kRandomLattices; ++i)
        lattices.push_back(oracle::random_tree_lattice(rng, std::uniform_int_distribution<std::size_t>(1, 4)(rng)));

    std::size_t box_checked = 0;
    for (const auto& res : lattices) {
        const Lattice lat(res);
        const std::size_t n = res.n_div;
        for (int trial = 0; trial < 5; ++trial) {
            ExcDivisor d(n);
            for (auto& x : d) x = std::uniform_int_distribution<int>(-2, 4)(rng);
            const auto cl = antinef_closure(lat, d);
            v.require(lat.is_antinef(cl), "closure not antinef");
            v.require(antinef_closure(lat, cl) == cl, "not idempotent");

            ExcDivisor bigger = d;
            for (auto& x : bigger) x += std::uniform_int_distribution<int>(0, 3)(rng);
            const auto clb = antinef_closure(lat, bigger);
            for (std::size_t k = 0; k < n; ++k) v.require(cl[k] <= clb[k], "not monotone");

            const PickRule last = [](const std::vector<std::size_t>& pos) { return pos.back(); };
            const PickRule shuffle = [&](const std::vector<std::size_t>& pos) {
                return pos[std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(rng)];
            };
            v.require(antinef_closure(lat, d, last) == cl, "pick order (last)");
            v.require(antinef_closure(lat, d, shuffle) == cl, "pick order (random)");

            if (n <= 4) {
                std::int64_t hi = 0;
                for (auto x : cl) hi = std::max(hi, x);
                const auto brute = oracle::box_minimal_antinef(lat.matrix(), d, hi);
                v.require(brute.has_value() && *brute == cl, "box search disagrees on " + str(d));
                ++box_checked;
            }
        }
    }
    v.require(box_checked >= static_cast<std::size_t>(kRandomLattices), "too few box comparisons");
    const double dt = seconds_since(t0);
    v.require(dt < kUnloadingLimit, "runtime " + std::to_string(dt) + " s");
    return v;
}

Verdict rupture_reduction() {
    Verdict v;
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        const std::string tag = e.name + ": ";
        if (res.r <= 2) {
            v.require(same_faces(faces(res, false), faces(res, true)), tag + "faces");
            v.require(bernstein_hyperplanes(res, false) == bernstein_hyperplanes(res, true), tag + "bernstein");
        } else {
            const CubePoint o(std::vector<Rat>(res.r, Rat(0)));
            const std::vector<Rat> ones(res.r, Rat(1));
            const auto a = faces_on_line(res, o, ones, LineMode::Clipped, false);
            const auto b = faces_on_line(res, o, ones, LineMode::Clipped, true);
            bool same = a.size() == b.size();
            for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].t == b[i].t && a[i].face.depth_log == b[i].face.depth_log;
            v.require(same, tag + "diagonal crossings");
        }
        for (const auto& w : weights_for(res.r)) {
            v.require(jumping_numbers(res, w, false) == jumping_numbers(res, w, true), tag + "jumping numbers " + w.str());
            v.require(spectrum_line(res, w, false) == spectrum_line(res, w, true), tag + "spectrum " + w.str());
        }
        const auto d0 = spectrum_diagonal(res, false), d1 = spectrum_diagonal(res, true);
        v.require(d0.elements == d1.elements && d0.faces_met == d1.faces_met, tag + "diagonal spectrum");
    }
    return v;
}

Verdict mirror_crossing(std::vector<std::string>& info) {
    Verdict v;
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        for (const auto& w : weights_for(res.r)) {
            const std::string tag = e.name + " (" + w.str() + "): ";
            std::vector<SpectrumElement> sl;
            try {
                sl = spectrum_line(res, w);
            } catch (const Error& ex) {
                v.require(false, tag + ex.what());
                continue;
            }
            for (const auto& s : sl) {
                std::vector<Rat> x;
                for (std::size_t i = 0; i < res.r; ++i) x.push_back(Rat(w[i]) * s.value);
                v.require(face_at(res, CubePoint::wrap(x)).has_value(), tag + "s = " + s.value.str() + " off every face");
            }
        }
    }
    const auto tc = corpus::load("twocusps.germ").data;
    const auto sl = spectrum_line(tc, WeightVector({1, 2}));
    const Rat first = sl.empty() ? Rat(-1) : sl.front().value;
    v.require(first == Rat(5, 16), "twocusps (1,2): spectrum_line begins with s = " + first.str() + ", expected 5/16");

    const auto jn = jumping_numbers(tc, WeightVector({1, 2}));
    // lct oracle for f1 f2^2
    Rat lct(-1);
    for (std::size_t k = 0; k < tc.n_div; ++k) {
        const Rat q(tc.c[k] + 1, tc.a[0][k] + 2 * tc.a[1][k]);
        if (lct < Rat(0) || q < lct) lct = q;
    }
    info.push_back("twocusps (1,2): lct = " + lct.str() + ", first jumping number " +
                   (jn.empty() ? std::string("none") : jn.front().value.str()) + ", first s = " + first.str());
    return v;
}

Verdict monotonicity() {
    Verdict v;
    std::mt19937_64 rng(31337);
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        const std::string tag = e.name + ": ";
        for (int i = 0; i < kRandomPairs; ++i) {
            const auto x = random_point(rng, res.r);
            std::vector<Rat> up = x.coords();
            for (auto& c : up) {
                const long step = std::uniform_int_distribution<long>(0, kGridDen / 3)(rng);
                c = std::min(c + Rat(step, kGridDen), Rat(kGridDen - 1, kGridDen));
            }
            const CubePoint y(up);
            v.require(ideal_contains(quasiadjunction_ideal(res, y), quasiadjunction_ideal(res, x)),
                      tag + x.str() + " <= " + y.str());
        }
        for (int i = 0; i < kRandomPoints; ++i) {
            const auto x = random_point(rng, res.r);
            const auto a = quasiadjunction_ideal(res, x);
            const auto app = log_quasiadjunction_ideal(res, x);
            v.require(ideal_contains(app, a), tag + "A not in A'' at " + x.str());
            if (!on_level_set(res, x)) v.require(ideal_equal(a, app), tag + "A != A'' off walls at " + x.str());
        }
    }
    return v;
}

Verdict codim_oracle() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    struct Frozen {
        const char* name;
        std::vector<std::int64_t> ex, ey;
    };
    const std::vector<Frozen> entries = {
        {"cusp.germ", {1, 2, 3}, {1, 1, 2}},
        {"tacnode.germ", {1, 1}, {1, 2}},
        {"split3.germ", {1}, {1}},
        {"split4.germ", {1}, {1}},
        {"split5.germ", {1}, {1}},
        {"split6.germ", {1}, {1}},
    };
    std::size_t compared = 0;
    for (const auto& f : entries) {
        const auto full = corpus::load(f.name);
        const auto& res = full.data;
        const std::string tag = std::string(f.name) + ": ";
        const auto ex = divisor_valuations(full, BiPoly::x());
        const auto ey = divisor_valuations(full, BiPoly::y());
        v.require(ex == f.ex && ey == f.ey, tag + "valuations " + str(ex) + " " + str(ey));
        const Lattice lat(res);
        for (const auto& j : jumping_numbers(res, WeightVector::diagonal(res.r))) {
            // the ideal at the jump and the one just before it
            for (const Rat& c : {j.value, j.value - Rat(1, 1000000)}) {
                const auto h = mmi_bounds(res, std::vector<Rat>(res.r, c));
                const auto want = oracle::monomial_codim(ex, ey, h.closure);
                v.require(h.codim == want, tag + "codim at " + c.str() + ": " + std::to_string(h.codim) + " vs " +
                                               std::to_string(want));
                v.require(ideal_codim(lat, h.closure) == oracle::monomial_codim(ex, ey, h.bounds), tag + "raw bounds");
                ++compared;
            }
        }
    }
    v.require(compared > 0, "nothing compared");
    const double dt = seconds_since(t0);
    v.require(dt < kCodimLimit, "runtime " + std::to_string(dt) + " s");
    return v;
}

}  // namespace

int main() {
    std::vector<std::string> info;
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"faces of (x^2+y^3)(x^3+y^2)", twocusps_faces},
        {"bernstein factors of (x^2+y^3)(x^3+y^2)", twocusps_bernstein},
        {"split germs: faces, depths, milnor number", split_germs},
        {"character depth on split germs", character_depth},
        {"cusp pipeline", cusp_pipeline},
        {"unloading suite", unloading},
        {"rupture reduction", rupture_reduction},
        {"spectrum face check and first value", [&] { return mirror_crossing(info); }},
        {"monotonicity and A within A''", monotonicity},
        {"codimension oracle", codim_oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception& ex) {
            v.require(false, std::string("exception: ") + ex.what());
        }
        std::printf("criterion %2zu: %s  %s (%.2f s)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first,
                    seconds_since(t0));
        for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
        if (!v.ok) ++failed;
    }
    for (const auto& s : info) std::printf("info: %s\n", s.c_str());
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
