#include "quasiadj/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "quasiadj/errors.hpp"

namespace quasiadj {

IntMatrix ResolutionData::intersection_matrix() const {
    IntMatrix m(n_div, std::vector<std::int64_t>(n_div, 0));
    for (std::size_t k = 0; k < n_div; ++k) {
        m[k][k] = selfint[k];
        for (std::size_t j : adj[k]) m[k][j] = 1;
    }
    return m;
}

std::size_t ResolutionData::valence(std::size_t k) const {
    return adj[k].size() + static_cast<std::size_t>(std::count(attach.begin(), attach.end(), k));
}

std::vector<std::size_t> ResolutionData::rupture() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_div; ++k)
        if (valence(k) >= 3) out.push_back(k);
    return out;
}

bool ResolutionData::adjacent(std::size_t j, std::size_t k) const {
    return std::binary_search(adj[j].begin(), adj[j].end(), k);
}

// ---------------------------------------------------------------------------
// Blowup engine

namespace {

struct LocalPoint {
    std::optional<std::size_t> host;
    ChartDirection location;
    std::optional<std::size_t> axis_u;  // exceptional divisor along u = 0
    std::optional<std::size_t> axis_v;  // exceptional divisor along v = 0
    std::vector<std::optional<BiPoly>> branch;  // strict transforms through this point
};

// Orders chart directions: slopes increasing, the vertical direction last.
bool direction_less(const ChartDirection& a, const ChartDirection& b) {
    if (a.vertical != b.vertical) return !a.vertical;
    return !a.vertical && a.slope < b.slope;
}

class Engine {
public:
    explicit Engine(const GermSpec& g) : g_(g), r_(g.r()) {
        for (const auto& f : g.factors) degree_.push_back(f.degree());
        delta_used_.assign(r_, 0);
        shared_.assign(r_, std::vector<std::int64_t>(r_, 0));
        data_.r = r_;
        data_.a.assign(r_, {});
        data_.attach.assign(r_, 0);
    }

    Resolution run() {
        LocalPoint origin;
        for (const auto& f : g_.factors) origin.branch.emplace_back(f);
        visit(origin, true);
        Resolution res{std::move(data_), std::move(trace_)};
        return res;
    }

private:
    std::string label(std::size_t i) const {
        return i < g_.labels.size() ? g_.labels[i] : "f" + std::to_string(i + 1);
    }

    static bool through_origin(const std::optional<BiPoly>& p) { return p && p->constant_term().is_zero(); }

    bool is_snc(const LocalPoint& p) const {
        std::vector<BiPoly> tangents;
        std::size_t count = 0;
        for (const auto& b : p.branch) {
            if (!through_origin(b)) continue;
            if (b->order() != 1) return false;
            tangents.push_back(b->homogeneous_part(1));
            ++count;
        }
        if (p.axis_u) {
            tangents.push_back(BiPoly::x());
            ++count;
        }
        if (p.axis_v) {
            tangents.push_back(BiPoly::y());
            ++count;
        }
        if (count > 2) return false;
        if (count == 2) {
            const Rat det = tangents[0].coeff({1, 0}) * tangents[1].coeff({0, 1}) -
                            tangents[0].coeff({0, 1}) * tangents[1].coeff({1, 0});
            if (det.is_zero()) return false;
        }
        return true;
    }

    // Direction of the tangent cone of a single branch; rejects irrational or split cones.
    ChartDirection tangent_direction(std::size_t branch, const BiPoly& p) const {
        const std::uint32_t m = p.order();
        const BiPoly h = p.homogeneous_part(m);
        std::vector<Rat> coeffs(m + 1);
        for (const auto& [e, c] : h.terms()) coeffs[e.y] = c;
        const UniPoly cone(coeffs);  // h(1, t)
        const std::string name = label(branch);

        const UniPoly rest = cone.without_rational_roots();
        if (rest.degree() > 0)
            throw ResolutionError(ResolutionErrorKind::IrrationalCenter,
                                  "IrrationalCenter: " + name + " has a tangent direction that is a root of " +
                                      rest.str() + ", which has no rational root",
                                  rest.str());
        const auto roots = cone.rational_roots();
        const bool has_vertical = cone.degree() < static_cast<int>(m);
        if (roots.size() + (has_vertical ? 1 : 0) != 1)
            throw ResolutionError(ResolutionErrorKind::MultipleBranches,
                                  "MultipleBranches: " + name + " splits into several branches (tangent cone " +
                                      h.str() + ")");
        if (has_vertical) return {true, Rat(0)};
        return {false, roots.front().first};
    }

    void check_bounds(const std::vector<std::uint32_t>& mults) {
        for (std::size_t i = 0; i < r_; ++i) {
            const std::int64_t m = mults[i];
            delta_used_[i] += m * (m - 1) / 2;
            const std::int64_t d = degree_[i];
            if (delta_used_[i] > d * (d - 1) / 2)
                throw ResolutionError(ResolutionErrorKind::NonReduced,
                                      "NonReduced: " + label(i) + " has a repeated branch");
            for (std::size_t j = i + 1; j < r_; ++j) {
                shared_[i][j] += m * static_cast<std::int64_t>(mults[j]);
                if (shared_[i][j] > static_cast<std::int64_t>(degree_[i]) * degree_[j])
                    throw ResolutionError(ResolutionErrorKind::SharedBranch,
                                          "SharedBranch: " + label(i) + " and " + label(j) +
                                              " have a common branch");
            }
        }
    }

    void visit(const LocalPoint& p, bool is_origin) {
        if (!is_origin && is_snc(p)) {
            for (std::size_t i = 0; i < r_; ++i) {
                if (!through_origin(p.branch[i])) continue;
                data_.attach[i] = p.axis_u ? *p.axis_u : *p.axis_v;
            }
            return;
        }

        const std::size_t k = data_.n_div++;
        InfNearPoint pt;
        pt.id = k;
        pt.host = p.host;
        pt.location = p.location;
        if (p.axis_u) pt.proximate_to.push_back(*p.axis_u);
        if (p.axis_v) pt.proximate_to.push_back(*p.axis_v);
        std::sort(pt.proximate_to.begin(), pt.proximate_to.end());
        pt.branch_mults.assign(r_, 0);
        for (std::size_t i = 0; i < r_; ++i)
            if (through_origin(p.branch[i])) pt.branch_mults[i] = p.branch[i]->order();
        check_bounds(pt.branch_mults);

        std::int64_t c_new = 1;
        for (std::size_t j : pt.proximate_to) c_new += data_.c[j];
        data_.c.push_back(c_new);
        for (std::size_t i = 0; i < r_; ++i) {
            std::int64_t a_new = pt.branch_mults[i];
            for (std::size_t j : pt.proximate_to) a_new += data_.a[i][j];
            data_.a[i].push_back(a_new);
        }
        data_.selfint.push_back(-1);
        data_.adj.emplace_back();
        for (std::size_t j : pt.proximate_to) --data_.selfint[j];
        if (p.axis_u && p.axis_v) disconnect(*p.axis_u, *p.axis_v);
        for (std::size_t j : pt.proximate_to) connect(j, k);
        trace_.points.push_back(pt);

        // group the branches through p by the direction they leave in
        std::vector<std::pair<ChartDirection, std::vector<std::size_t>>> groups;
        for (std::size_t i = 0; i < r_; ++i) {
            if (!through_origin(p.branch[i])) continue;
            const ChartDirection dir = tangent_direction(i, *p.branch[i]);
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == dir; });
            if (it == groups.end()) {
                groups.push_back({dir, {i}});
            } else {
                it->second.push_back(i);
            }
        }
        std::sort(groups.begin(), groups.end(),
                  [](const auto& x, const auto& y) { return direction_less(x.first, y.first); });

        for (const auto& [dir, members] : groups) {
            LocalPoint child;
            child.host = k;
            child.location = dir;
            child.branch.assign(r_, std::nullopt);
            if (dir.vertical) {
                child.axis_u = p.axis_u;
                child.axis_v = k;
            } else {
                child.axis_u = k;
                if (dir.slope.is_zero()) child.axis_v = p.axis_v;
            }
            for (std::size_t i : members) {
                const BiPoly& b = *p.branch[i];
                const std::uint32_t m = pt.branch_mults[i];
                child.branch[i] = dir.vertical ? b.chart_vertical().div_y_pow(m) : b.chart_slope(dir.slope).div_x_pow(m);
            }
            visit(child, false);
        }
    }

    void connect(std::size_t a, std::size_t b) {
        auto ins = [](std::vector<std::size_t>& v, std::size_t x) {
            v.insert(std::upper_bound(v.begin(), v.end(), x), x);
        };
        ins(data_.adj[a], b);
        ins(data_.adj[b], a);
    }

    void disconnect(std::size_t a, std::size_t b) {
        auto del = [](std::vector<std::size_t>& v, std::size_t x) { v.erase(std::remove(v.begin(), v.end(), x), v.end()); };
        del(data_.adj[a], b);
        del(data_.adj[b], a);
    }

    const GermSpec& g_;
    std::size_t r_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::int64_t> delta_used_;
    std::vector<std::vector<std::int64_t>> shared_;
    ResolutionData data_;
    BlowupTrace trace_;
};

}  // namespace

Resolution resolve_embedded(const GermSpec& g) {
    validate_germ(g);
    return Engine(g).run();
}

// ---------------------------------------------------------------------------
// Invariants

bool is_negative_definite(const IntMatrix& m) {
    // -m positive definite iff every leading principal minor of -m is positive (Bareiss elimination).
    const std::size_t n = m.size();
    std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = -m[i][j];
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k][k] <= 0) return false;  // k-th leading minor of -m equals w[k][k]
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    return true;
}

std::vector<std::string> check_resolution(const ResolutionData& res) {
    std::vector<std::string> v;
    const std::size_t n = res.n_div;
    auto E = [](std::size_t k) { return "E" + std::to_string(k + 1); };
    if (n == 0) v.push_back("ShapeViolation: no exceptional divisors");
    if (res.r == 0) v.push_back("ShapeViolation: no branches");
    if (res.a.size() != res.r || res.attach.size() != res.r || res.c.size() != n || res.selfint.size() != n ||
        res.adj.size() != n) {
        v.push_back("ShapeViolation: vector lengths do not match divisors/branches");
        return v;
    }
    for (const auto& row : res.a)
        if (row.size() != n) {
            v.push_back("ShapeViolation: a-row length differs from the number of divisors");
            return v;
        }
    for (std::size_t i = 0; i < res.r; ++i)
        if (res.attach[i] >= n) {
            v.push_back("ShapeViolation: branch " + std::to_string(i + 1) + " attaches to a missing divisor");
            return v;
        }

    std::size_t edges = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j : res.adj[k]) {
            if (j >= n || j == k) {
                v.push_back("ShapeViolation: " + E(k) + " lists an invalid neighbour");
                return v;
            }
            if (!res.adjacent(j, k)) v.push_back("ShapeViolation: adjacency " + E(k) + "-" + E(j) + " is not symmetric");
            ++edges;
        }
    }
    edges /= 2;
    // tree: connected with n-1 edges
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    if (n > 0) {
        stack.push_back(0);
        seen[0] = true;
    }
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t j : res.adj[k])
            if (!seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    if (reached != n || edges + 1 != n) v.push_back("TreeViolation: the dual graph is not a tree");

    for (std::size_t k = 0; k < n; ++k) {
        if (res.c[k] < 1) v.push_back("ValueViolation: c at " + E(k) + " is " + std::to_string(res.c[k]) + " < 1");
        for (std::size_t i = 0; i < res.r; ++i)
            if (res.a[i][k] < 1)
                v.push_back("ValueViolation: a[" + std::to_string(i + 1) + "] at " + E(k) + " is " +
                            std::to_string(res.a[i][k]) + " < 1");
    }

    const IntMatrix N = res.intersection_matrix();
    if (!is_negative_definite(N)) v.push_back("NegativeDefiniteViolation: intersection matrix is not negative definite");

    for (std::size_t i = 0; i < res.r; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t s = res.attach[i] == j ? 1 : 0;
            for (std::size_t k = 0; k < n; ++k) s += res.a[i][k] * N[k][j];
            if (s != 0)
                v.push_back("OrthogonalityViolation: branch " + std::to_string(i + 1) + ", divisor " + E(j) +
                            ", residual " + std::to_string(s));
        }
    return v;
}

// ---------------------------------------------------------------------------
// Graph files

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Resolution load_resolution_graph(std::string_view source) {
    std::istringstream in{std::string(source)};
    std::string line;
    std::size_t line_no = 0;
    auto schema = [&](const std::string& msg) -> GraphError {
        return GraphError({"schema error: line " + std::to_string(line_no) + ": " + msg});
    };
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw schema("expected an integer, got '" + s + "'");
        }
        if (used != s.size()) throw schema("expected an integer, got '" + s + "'");
        return v;
    };
    auto to_list = [&](const std::string& s) {
        std::vector<std::int64_t> out;
        if (s == "-") return out;
        std::size_t start = 0;
        while (start <= s.size()) {
            const std::size_t comma = std::min(s.find(',', start), s.size());
            out.push_back(to_int(s.substr(start, comma - start)));
            start = comma + 1;
        }
        return out;
    };

    ResolutionData res;
    bool header = false;
    std::vector<bool> have_div, have_branch;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "divisors") {
            if (header) throw schema("duplicate header");
            if (tok.size() != 4 || tok[2] != "branches") throw schema("header must be 'divisors n branches r'");
            const auto n = to_int(tok[1]);
            const auto r = to_int(tok[3]);
            if (n < 1 || r < 1) throw schema("divisor and branch counts must be positive");
            res.n_div = static_cast<std::size_t>(n);
            res.r = static_cast<std::size_t>(r);
            res.a.assign(res.r, std::vector<std::int64_t>(res.n_div, 0));
            res.c.assign(res.n_div, 0);
            res.selfint.assign(res.n_div, 0);
            res.adj.assign(res.n_div, {});
            res.attach.assign(res.r, 0);
            have_div.assign(res.n_div, false);
            have_branch.assign(res.r, false);
            header = true;
        } else if (tok[0] == "E") {
            if (!header) throw schema("divisor line before header");
            // E k self s adj list a list c int ; adj list may be empty
            std::vector<std::string> t = tok;
            if (t.size() == 8 && t[4] == "adj" && t[5] == "a") t.insert(t.begin() + 5, "-");
            if (t.size() != 10 || t[2] != "self" || t[4] != "adj" || t[6] != "a" || t[8] != "c")
                throw schema("divisor line must be 'E k self <int> adj <k1,...> a <a1,...> c <int>'");
            const auto k = to_int(t[1]);
            if (k < 1 || static_cast<std::size_t>(k) > res.n_div) throw schema("divisor index out of range");
            const std::size_t kk = static_cast<std::size_t>(k - 1);
            if (have_div[kk]) throw schema("divisor E" + t[1] + " listed twice");
            have_div[kk] = true;
            res.selfint[kk] = to_int(t[3]);
            for (auto j : to_list(t[5])) {
                if (j < 1 || static_cast<std::size_t>(j) > res.n_div) throw schema("neighbour index out of range");
                res.adj[kk].push_back(static_cast<std::size_t>(j - 1));
            }
            std::sort(res.adj[kk].begin(), res.adj[kk].end());
            res.adj[kk].erase(std::unique(res.adj[kk].begin(), res.adj[kk].end()), res.adj[kk].end());
            const auto avals = to_list(t[7]);
            if (avals.size() != res.r) throw schema("a-list must have one entry per branch");
            for (std::size_t i = 0; i < res.r; ++i) res.a[i][kk] = avals[i];
            res.c[kk] = to_int(t[9]);
        } else if (tok[0] == "branch") {
            if (!header) throw schema("branch line before header");
            if (tok.size() != 4 || tok[2] != "attach") throw schema("branch line must be 'branch i attach <k>'");
            const auto i = to_int(tok[1]);
            const auto k = to_int(tok[3]);
            if (i < 1 || static_cast<std::size_t>(i) > res.r) throw schema("branch index out of range");
            if (k < 1 || static_cast<std::size_t>(k) > res.n_div) throw schema("attach divisor out of range");
            if (have_branch[static_cast<std::size_t>(i - 1)]) throw schema("branch " + tok[1] + " listed twice");
            have_branch[static_cast<std::size_t>(i - 1)] = true;
            res.attach[static_cast<std::size_t>(i - 1)] = static_cast<std::size_t>(k - 1);
        } else {
            throw schema("unknown record '" + tok[0] + "'");
        }
    }
    if (!header) throw GraphError({"schema error: missing 'divisors n branches r' header"});
    std::vector<std::string> missing;
    for (std::size_t k = 0; k < res.n_div; ++k)
        if (!have_div[k]) missing.push_back("schema error: divisor E" + std::to_string(k + 1) + " missing");
    for (std::size_t i = 0; i < res.r; ++i)
        if (!have_branch[i]) missing.push_back("schema error: branch " + std::to_string(i + 1) + " missing");
    if (!missing.empty()) throw GraphError(missing);

    auto violations = check_resolution(res);
    if (!violations.empty()) throw GraphError(std::move(violations));
    return Resolution{std::move(res), std::nullopt};
}

std::string render_resolution_graph(const ResolutionData& res) {
    std::ostringstream out;
    out << "divisors " << res.n_div << " branches " << res.r << "\n";
    auto join = [](const auto& xs, auto f) {
        std::string s;
        for (const auto& x : xs) {
            if (!s.empty()) s += ",";
            s += f(x);
        }
        return s.empty() ? std::string("-") : s;
    };
    for (std::size_t k = 0; k < res.n_div; ++k) {
        std::vector<std::int64_t> arow;
        for (std::size_t i = 0; i < res.r; ++i) arow.push_back(res.a[i][k]);
        out << "E " << (k + 1) << " self " << res.selfint[k] << " adj "
            << join(res.adj[k], [](std::size_t j) { return std::to_string(j + 1); }) << " a "
            << join(arow, [](std::int64_t x) { return std::to_string(x); }) << " c " << res.c[k] << "\n";
    }
    for (std::size_t i = 0; i < res.r; ++i) out << "branch " << (i + 1) << " attach " << (res.attach[i] + 1) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> divisor_valuations(const Resolution& res, const BiPoly& phi) {
    if (!res.trace) throw Unsupported("divisor valuations need a blowup trace (graph-ingested data has none)");
    if (phi.is_zero()) throw DomainError("valuation of the zero polynomial");
    const auto& pts = res.trace->points;
    std::vector<BiPoly> strict(pts.size());
    std::vector<std::uint32_t> mult(pts.size());
    std::vector<std::int64_t> e(pts.size(), 0);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const InfNearPoint& p = pts[k];
        if (!p.host) {
            strict[k] = phi;
        } else {
            const std::size_t h = *p.host;
            strict[k] = p.location.vertical ? strict[h].chart_vertical().div_y_pow(mult[h])
                                            : strict[h].chart_slope(p.location.slope).div_x_pow(mult[h]);
        }
        mult[k] = strict[k].order();
        e[k] = mult[k];
        for (std::size_t j : p.proximate_to) e[k] += e[j];
    }
    return e;
}

MilnorDelta milnor_delta(const Resolution& res) {
    if (!res.trace) throw Unsupported("delta and mu need a blowup trace (graph-ingested data has none)");
    MilnorDelta out;
    for (const auto& p : res.trace->points) {
        const std::int64_t m = std::accumulate(p.branch_mults.begin(), p.branch_mults.end(), std::int64_t{0});
        out.delta += m * (m - 1) / 2;
    }
    out.mu = 2 * out.delta - static_cast<std::int64_t>(res.data.r) + 1;
    return out;
}

}  // namespace quasiadj
