#include "quasiadj/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quasiadj/errors.hpp"

namespace quasiadj {

namespace {

std::int64_t cross(Exp o, Exp a, Exp b) {
    const auto ax = static_cast<std::int64_t>(a.x) - o.x, ay = static_cast<std::int64_t>(a.y) - o.y;
    const auto bx = static_cast<std::int64_t>(b.x) - o.x, by = static_cast<std::int64_t>(b.y) - o.y;
    return ax * by - ay * bx;
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& p) {
    if (p.is_zero()) throw DomainError("Newton polygon of the zero polynomial");

    // lowest y for each x
    std::map<std::uint32_t, std::uint32_t> lowest;
    for (const auto& [e, c] : p.terms()) {
        auto [it, ins] = lowest.try_emplace(e.x, e.y);
        if (!ins) it->second = std::min(it->second, e.y);
    }
    std::vector<Exp> pts;
    for (const auto& [x, y] : lowest) pts.push_back({x, y});

    // lower hull, increasing x
    std::vector<Exp> hull;
    for (const Exp& q : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0) hull.pop_back();
        hull.push_back(q);
    }
    // keep the strictly decreasing part (compact faces end at the lowest y)
    std::size_t cut = 1;
    while (cut < hull.size() && hull[cut].y < hull[cut - 1].y) ++cut;
    hull.resize(cut);

    NewtonPolygon np;
    np.vertices.assign(hull.rbegin(), hull.rend());
    for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        const Exp a = np.vertices[i];
        const Exp b = np.vertices[i + 1];
        NewtonEdge edge;
        edge.from = a;
        edge.to = b;
        const std::uint32_t dx = a.x - b.x;
        const std::uint32_t dy = b.y - a.y;
        edge.inclination = Rat(static_cast<long>(dx), static_cast<long>(dy));
        const std::uint32_t g = std::gcd(dx, dy);
        edge.normal_x = dy / g;
        edge.normal_y = dx / g;
        const std::uint64_t level = static_cast<std::uint64_t>(edge.normal_x) * a.x +
                                    static_cast<std::uint64_t>(edge.normal_y) * a.y;
        std::vector<Rat> coeffs(g + 1);
        for (const auto& [e, c] : p.terms()) {
            if (static_cast<std::uint64_t>(edge.normal_x) * e.x + static_cast<std::uint64_t>(edge.normal_y) * e.y !=
                level)
                continue;
            coeffs[(e.x - b.x) / (dx / g)] = c;
        }
        edge.edge_poly = UniPoly(std::move(coeffs));
        np.edges.push_back(std::move(edge));
    }
    return np;
}

}  // namespace quasiadj
