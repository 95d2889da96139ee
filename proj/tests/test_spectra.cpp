#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "quasiadj/errors.hpp"
#include "quasiadj/spectra.hpp"

using namespace quasiadj;

namespace {

using Elements = std::vector<SpectrumElement>;

SpectrumElement el(long p, long q, std::int64_t m) { return {Rat(p, q), m}; }

std::vector<WeightVector> test_weights(std::size_t r) {
    if (r == 1) return {WeightVector({1})};
    std::vector<WeightVector> out;
    for (std::vector<std::int64_t> w : {std::vector<std::int64_t>{1, 1}, {1, 2}, {2, 3}}) {
        w.resize(r, 1);
        out.emplace_back(w);
    }
    return out;
}

Rat lct(const ResolutionData& res, const WeightVector& w) {
    Rat best(-1);
    for (std::size_t k = 0; k < res.n_div; ++k) {
        std::int64_t rk = 0;
        for (std::size_t i = 0; i < res.r; ++i) rk += w[i] * res.a[i][k];
        const Rat v(res.c[k] + 1, rk);
        if (best.sign() < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("weight vectors") {
    CHECK(WeightVector({1, 2}).str() == "1,2");
    CHECK_THROWS_AS(WeightVector({2, 4}), DomainError);
    CHECK_THROWS_AS(WeightVector({0, 1}), DomainError);
    CHECK_THROWS_AS(WeightVector(std::vector<std::int64_t>{}), DomainError);
    const auto tc = corpus::load("twocusps.germ").data;
    CHECK_THROWS_AS(jumping_numbers(tc, WeightVector({1})), DomainError);
}

TEST_CASE("jumping numbers") {
    const auto cusp = corpus::load("cusp.germ").data;
    CHECK(jumping_numbers(cusp, WeightVector({1})) == Elements{el(5, 6, 1)});
    const auto tc = corpus::load("twocusps.germ").data;
    CHECK(jumping_numbers(tc, WeightVector({1, 1})).front().value == Rat(1, 2));
    CHECK(jumping_numbers(tc, WeightVector({1, 2})).front().value == Rat(5, 16));
}

TEST_CASE("lct identity and increasing output on the corpus") {
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        for (const auto& w : test_weights(res.r)) {
            const auto j = jumping_numbers(res, w);
            REQUIRE(!j.empty());
            CHECK(j.front().value == lct(res, w));
            for (std::size_t i = 0; i < j.size(); ++i) {
                CHECK(j[i].multiplicity > 0);
                CHECK(j[i].value.sign() > 0);
                CHECK(j[i].value < Rat(1));
                if (i) CHECK(j[i - 1].value < j[i].value);
            }
        }
    }
}

TEST_CASE("spectrum examples") {
    const auto cusp = corpus::load("cusp.germ").data;
    CHECK(spectrum_line(cusp, WeightVector({1})) == Elements{el(1, 6, 1)});
    CHECK(spectrum_diagonal(cusp).elements == Elements{el(1, 6, 1)});
    CHECK(mirrored(spectrum_line(cusp, WeightVector({1}))) == Elements{el(-1, 6, 1)});

    const auto s3 = corpus::load("split3.germ").data;
    CHECK(spectrum_diagonal(s3).elements == Elements{el(1, 3, 1)});
    const auto s4 = corpus::load("split4.germ").data;
    CHECK(spectrum_diagonal(s4).elements == Elements{el(1, 4, 2), el(1, 2, 1)});

    const auto tc = corpus::load("twocusps.germ").data;
    const auto diag = spectrum_diagonal(tc);
    CHECK(diag.elements == Elements{el(1, 10, 2), el(3, 10, 2), el(1, 2, 1)});
    CHECK(diag.faces_met == 6);

    // the mirror of the lct 5/16 sits on the face 4x1+6x2=5 after wrapping
    const auto line = spectrum_line(tc, WeightVector({1, 2}));
    CHECK(line.front().value == Rat(1, 16));
    CHECK(line.back() == el(11, 16, 1));
    const auto fp = face_at(tc, CubePoint::wrap({Rat(11, 16), Rat(22, 16)}));
    REQUIRE(fp);
    CHECK(std::find(fp->planes.begin(), fp->planes.end(), Hyperplane{{4, 6}, 5}) != fp->planes.end());
}

TEST_CASE("two routes to the spectrum agree on the corpus") {
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        for (const auto& w : test_weights(res.r)) {
            const auto s = spectrum_line(res, w);
            const auto j = jumping_numbers(res, w);
            REQUIRE(s.size() == j.size());
            for (const auto& x : j)
                CHECK(std::find(s.begin(), s.end(), SpectrumElement{Rat(1) - x.value, x.multiplicity}) != s.end());
            std::vector<Rat> dir;
            for (auto a : w.values()) dir.push_back(Rat(a));
            const auto crossings =
                faces_on_line(res, CubePoint(std::vector<Rat>(res.r, Rat(0))), dir, LineMode::Wrapped);
            REQUIRE(crossings.size() == s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(crossings[i].t == s[i].value);
                CHECK(crossings[i].face.depth_log == s[i].multiplicity);
            }
        }
    }
}

TEST_CASE("rupture-only spectra") {
    for (const auto& e : corpus::all()) {
        const auto& res = e.res.data;
        for (const auto& w : test_weights(res.r)) {
            CHECK(jumping_numbers(res, w, true) == jumping_numbers(res, w));
            CHECK(spectrum_line(res, w, true) == spectrum_line(res, w));
        }
    }
}

TEST_CASE("sum rule on split germs") {
    for (std::size_t r = 3; r <= 6; ++r) {
        const auto res = corpus::load("split" + std::to_string(r) + ".germ").data;
        std::int64_t total = 0;
        for (const auto& x : spectrum_diagonal(res).elements) total += x.multiplicity;
        CHECK(total == static_cast<std::int64_t>((r - 1) * (r - 2) / 2));
    }
}

TEST_CASE("multiplier ideals form a chain containing f for r = 1") {
    for (const char* name : {"cusp.germ", "cusp.graph"}) {
        const auto res = corpus::load(name).data;
        const auto j = jumping_numbers(res, WeightVector({1}));
        IdealHandle prev = mmi_bounds(res, {Rat(0)});
        for (const auto& x : j) {
            const IdealHandle h = mmi_bounds(res, {x.value});
            CHECK(ideal_contains(prev, h));
            CHECK_FALSE(ideal_equal(prev, h));
            // f itself lies in the ideal: its valuations a_k dominate the closure
            for (std::size_t k = 0; k < res.n_div; ++k) CHECK(h.closure[k] <= res.a[0][k]);
            prev = h;
        }
    }
}

TEST_CASE("milnor consistency") {
    for (std::size_t r = 3; r <= 6; ++r) {
        const auto m = milnor_consistency(corpus::load("split" + std::to_string(r) + ".germ"));
        CHECK(m.mu_direct == static_cast<std::int64_t>((r - 1) * (r - 1)));
        CHECK(m.match);
    }
    const auto cusp = milnor_consistency(corpus::load("cusp.germ"));
    CHECK(cusp.mu_direct == 2);
    CHECK(cusp.mu_formula == 2);
    CHECK(milnor_consistency(corpus::load("twocusps.germ")).match);
    CHECK(milnor_consistency(corpus::load("tacnode.germ")).match);
    CHECK_THROWS_AS(milnor_consistency(corpus::load("cusp.graph")), Unsupported);
}

TEST_CASE("bernstein hyperplanes") {
    const auto tc = corpus::load("twocusps.germ").data;
    std::set<std::string> got;
    for (const auto& f : bernstein_hyperplanes(tc)) got.insert(f.str());
    CHECK(got == std::set<std::string>{"6*s1+4*s2+5", "6*s1+4*s2+7", "6*s1+4*s2+9", "4*s1+6*s2+5", "4*s1+6*s2+7",
                                       "4*s1+6*s2+9"});
    const auto cusp = bernstein_hyperplanes(corpus::load("cusp.germ").data);
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].str() == "6*s1+5");
    const auto s3 = corpus::load("split3.germ").data;
    CHECK_THROWS_AS(bernstein_hyperplanes(s3), Unsupported);
    const auto supplied = bernstein_hyperplanes(std::vector<Hyperplane>{{{1, 1, 1}, 1}});
    REQUIRE(supplied.size() == 1);
    CHECK(supplied[0].str() == "s1+s2+s3+2");
    for (const auto& e : corpus::all())
        if (e.res.data.r <= 2)
            for (const auto& f : bernstein_hyperplanes(e.res.data)) CHECK(f.k > 0);
}

TEST_CASE("alexander specialization") {
    CHECK(alexander_specialization(WeightVector({1, 1}), {}) == "(t-1)");
    CHECK(alexander_specialization(WeightVector({1, 2}), {{{6, 4}, "ω"}}) == "(t-1)(t^14-ω)");
    CHECK(alexander_specialization(WeightVector({1, 1}), {{{2, 3}, "w1"}, {{1, 1}, "w2"}}) == "(t-1)(t^5-w1)(t^2-w2)");
    CHECK_THROWS_AS(alexander_specialization(WeightVector({1, 1}), {{{1}, "ω"}}), DomainError);
}
