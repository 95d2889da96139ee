#include "quasiadj/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace quasiadj::report {

Json rationals(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json resolution_json(const ResolutionData& res) {
    Json divisors = Json::array();
    for (std::size_t k = 0; k < res.n_div; ++k) {
        Json a = Json::array();
        for (std::size_t i = 0; i < res.r; ++i) a.push_back(res.a[i][k]);
        Json adj = Json::array();
        for (std::size_t j : res.adj[k]) adj.push_back(j + 1);
        divisors.push_back({{"index", k + 1}, {"a", a}, {"c", res.c[k]}, {"self", res.selfint[k]}, {"adj", adj},
                            {"valence", res.valence(k)}});
    }
    Json attach = Json::array();
    for (std::size_t k : res.attach) attach.push_back(k + 1);
    Json rupture = Json::array();
    for (std::size_t k : res.rupture()) rupture.push_back(k + 1);
    return {{"divisors", divisors}, {"n_div", res.n_div}, {"r", res.r}, {"attach", attach}, {"rupture", rupture}};
}

Json ideal_json(const IdealHandle& h) {
    return {{"bounds", h.bounds}, {"closure", h.closure}, {"codim", h.codim}};
}

Json face_json(const Face& f) {
    Json ends = Json::array();
    for (const auto& e : f.endpoints) ends.push_back({{"point", rationals(e.point)}, {"closed", e.closed}});
    return {{"hyperplane", Json::array({f.plane.m, f.plane.n})},
            {"coefficients", f.plane.m},
            {"level", f.plane.n},
            {"dim", f.dim},
            {"endpoints", ends},
            {"depth_log", f.depth_log},
            {"closure_below", f.ideal_below.closure},
            {"closure_above", f.ideal_above.closure},
            {"sample", rationals(f.sample)}};
}

Json faces_json(const std::vector<Face>& faces) {
    Json list = Json::array();
    std::vector<Hyperplane> planes;
    for (const auto& f : faces) {
        list.push_back(face_json(f));
        if (std::find(planes.begin(), planes.end(), f.plane) == planes.end()) planes.push_back(f.plane);
    }
    std::sort(planes.begin(), planes.end());
    Json hyper = Json::array();
    for (const auto& h : planes) hyper.push_back(Json::array({h.m, h.n}));
    return {{"faces", list}, {"hyperplanes", hyper}};
}

Json spectrum_json(const std::vector<SpectrumElement>& elements) {
    Json out = Json::array();
    for (const auto& e : elements) out.push_back({{"value", e.value.str()}, {"multiplicity", e.multiplicity}});
    return out;
}

Json bernstein_json(const std::vector<BernsteinFactor>& factors) {
    Json out = Json::array();
    for (const auto& f : factors) out.push_back({{"coefficients", f.m}, {"constant", f.k}, {"text", f.str()}});
    return out;
}

Json milnor_json(const MilnorReport& m, const MilnorDelta& d) {
    return {{"delta", d.delta},
            {"mu_direct", m.mu_direct},
            {"mu_formula", m.mu_formula},
            {"match", m.match},
            {"assumes_gr0_vanishing", m.assumes_gr0_vanishing}};
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? sep : "") << v[i];
    return o.str();
}

std::string rjoin(const std::vector<Rat>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.str());
    return "(" + join(s) + ")";
}

}  // namespace

std::string resolution_table(const ResolutionData& res) {
    std::ostringstream o;
    o << std::left << std::setw(6) << "div" << std::setw(16) << "a" << std::setw(6) << "c" << std::setw(7) << "self"
      << "adj\n";
    for (std::size_t k = 0; k < res.n_div; ++k) {
        std::vector<std::int64_t> a;
        for (std::size_t i = 0; i < res.r; ++i) a.push_back(res.a[i][k]);
        std::vector<std::string> adj;
        for (std::size_t j : res.adj[k]) adj.push_back("E" + std::to_string(j + 1));
        o << std::setw(6) << ("E" + std::to_string(k + 1)) << std::setw(16) << ("(" + join(a) + ")") << std::setw(6)
          << res.c[k] << std::setw(7) << res.selfint[k] << (adj.empty() ? "-" : join(adj)) << "\n";
    }
    for (std::size_t i = 0; i < res.r; ++i) o << "f" << (i + 1) << " attaches to E" << (res.attach[i] + 1) << "\n";
    std::vector<std::string> rup;
    for (std::size_t k : res.rupture()) rup.push_back("E" + std::to_string(k + 1));
    o << "rupture: " << (rup.empty() ? "none" : join(rup)) << "\n";
    return o.str();
}

std::string faces_table(const std::vector<Face>& faces) {
    std::ostringstream o;
    o << std::left << std::setw(22) << "hyperplane" << std::setw(7) << "depth" << "segment\n";
    for (const auto& f : faces) {
        std::string seg;
        for (std::size_t e = 0; e < f.endpoints.size(); ++e) {
            const auto& ep = f.endpoints[e];
            if (f.endpoints.size() == 2) seg += e == 0 ? (ep.closed ? "[" : "(") : " .. ";
            seg += rjoin(ep.point);
            if (f.endpoints.size() == 2 && e == 1) seg += ep.closed ? "]" : ")";
        }
        o << std::setw(22) << f.plane.str() << std::setw(7) << f.depth_log << seg << "\n";
    }
    return o.str();
}

std::string spectrum_table(const std::vector<SpectrumElement>& elements, const std::string& heading) {
    std::ostringstream o;
    o << std::left << std::setw(12) << heading << "multiplicity\n";
    for (const auto& e : elements) o << std::setw(12) << e.value.str() << e.multiplicity << "\n";
    return o.str();
}

std::string faces_svg(const ResolutionData& res, const std::vector<Face>& faces, bool rupture_only) {
    constexpr double size = 1000.0, pad = 50.0, span = size - 2 * pad;
    auto px = [&](const Rat& x) { return pad + x.to_double() * span; };
    auto py = [&](const Rat& y) { return size - pad - y.to_double() * span; };
    std::ostringstream o;
    o << std::fixed << std::setprecision(2);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    const auto walls = distinct_walls(wall_candidates(res, rupture_only));
    if (res.r == 1) {
        const double y = size / 2;
        o << "<line x1=\"" << pad << "\" y1=\"" << y << "\" x2=\"" << size - pad << "\" y2=\"" << y
          << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (const auto& h : walls) {
            const double x = px(Rat(h.n) / Rat(h.m[0]));
            o << "<line x1=\"" << x << "\" y1=\"" << y - 20 << "\" x2=\"" << x << "\" y2=\"" << y + 20
              << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        }
        for (const auto& f : faces) {
            const double x = px(f.sample[0]);
            o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"8\" fill=\"black\"/>\n";
            o << "<text x=\"" << x << "\" y=\"" << y - 30 << "\" font-size=\"20\" text-anchor=\"middle\">"
              << f.plane.str() << " d=" << f.depth_log << "</text>\n";
        }
    } else {
        o << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << span << "\" height=\"" << span
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (const auto& h : walls) {
            const Rat m1(h.m[0]), m2(h.m[1]), n(h.n);
            const Rat lo = std::max(Rat(0), (n - m2) / m1), hi = std::min(Rat(1), n / m1);
            if (lo >= hi) continue;
            o << "<line x1=\"" << px(lo) << "\" y1=\"" << py((n - m1 * lo) / m2) << "\" x2=\"" << px(hi)
              << "\" y2=\"" << py((n - m1 * hi) / m2) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        }
        for (const auto& f : faces) {
            const auto& a = f.endpoints[0].point;
            const auto& b = f.endpoints[1].point;
            o << "<line x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1]) << "\" x2=\"" << px(b[0]) << "\" y2=\""
              << py(b[1]) << "\" stroke=\"black\" stroke-width=\"5\"/>\n";
            o << "<text x=\"" << px(f.sample[0]) + 6 << "\" y=\"" << py(f.sample[1]) - 6
              << "\" font-size=\"16\">" << f.depth_log << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace quasiadj::report
