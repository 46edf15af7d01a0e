#include <doctest.h>

#include <random>

#include "shatterlab/families.hpp"
#include "shatterlab/pacsim.hpp"

using namespace shatterlab;

TEST_CASE("tightest_rectangle") {
    std::vector<LabeledPoint> sample{{0.2, 0.3, true}, {0.6, 0.7, true}, {0.9, 0.9, false}};
    auto r = tightest_rectangle(sample);
    CHECK_FALSE(r.empty);
    CHECK(r.x_lo == 0.2);
    CHECK(r.x_hi == 0.6);
    CHECK(r.y_lo == 0.3);
    CHECK(r.y_hi == 0.7);

    auto empty = tightest_rectangle({{0.5, 0.5, false}});
    CHECK(empty.empty);

    auto degenerate = tightest_rectangle({{0.4, 0.6, true}});
    CHECK(degenerate.x_lo == degenerate.x_hi);
    CHECK(degenerate.y_lo == degenerate.y_hi);
    CHECK(degenerate.area() == 0.0);
}

TEST_CASE("rect_sample_complexity") {
    CHECK(rect_sample_complexity(0.1, 0.1) == 148);
    CHECK(rect_sample_complexity(0.5, 0.5) == 17);
    // monotone: shrinking eps or delta never lowers m
    std::size_t prev = 0;
    for (double eps : {0.5, 0.25, 0.1, 0.05}) {
        auto m = rect_sample_complexity(eps, 0.1);
        CHECK(m >= prev);
        prev = m;
    }
    CHECK_THROWS_AS(rect_sample_complexity(0.0, 0.1), domain_error);
    CHECK_THROWS_AS(rect_sample_complexity(0.1, 1.0), domain_error);
}

TEST_CASE("run_rectangle_trials: learner meets the bound") {
    Rectangle target(0.25, 0.75, 0.25, 0.75);
    PlaneDistribution dist;  // uniform on the unit square
    auto rep = run_rectangle_trials(target, dist, 0.1, 148, 200, 42);
    CHECK(rep.containment_held);
    CHECK(rep.empirical_failure_rate <= 0.1);
    CHECK(rep.exact_error);
}

TEST_CASE("run_rectangle_trials: zero-mass target never fails") {
    Rectangle target(0.5, 0.5, 0.5, 0.5);
    PlaneDistribution dist;
    auto rep = run_rectangle_trials(target, dist, 0.1, 50, 100, 42);
    CHECK(rep.failures == 0);
    CHECK(rep.mean_error == 0.0);
}

TEST_CASE("run_rectangle_trials: one sample cannot pin the rectangle") {
    Rectangle target(0.25, 0.75, 0.25, 0.75);
    PlaneDistribution dist;
    auto rep = run_rectangle_trials(target, dist, 0.01, 1, 200, 42);
    CHECK(rep.empirical_failure_rate > 0.9);
}

TEST_CASE("mean error shrinks from m=20 to m=148") {
    Rectangle target(0.25, 0.75, 0.25, 0.75);
    PlaneDistribution dist;
    auto small = run_rectangle_trials(target, dist, 0.1, 20, 300, 42);
    auto large = run_rectangle_trials(target, dist, 0.1, 148, 300, 42);
    CHECK(large.mean_error <= small.mean_error);
}

TEST_CASE("monte carlo error path for segment mixtures") {
    Rectangle target(0.0, 0.5, 0.0, 0.5);
    PlaneDistribution dist;
    dist.kind = PlaneDistribution::Kind::AxisMixture;
    dist.x_segments = {{0.0, 0.5, 0.5}, {0.5, 1.0, 0.5}};
    dist.y_segments = {{0.0, 1.0, 1.0}};
    auto rep = run_rectangle_trials(target, dist, 0.2, 100, 20, 42);
    CHECK_FALSE(rep.exact_error);
    CHECK(rep.containment_held);
}

TEST_CASE("build_counterexample_class") {
    FiniteSpace s(numbered_labels(2));
    // canonical order of the 2-point powerset: 00, 10, 01, 11
    auto c = powerset_class(s);
    auto cx = build_counterexample_class(c);
    CHECK(cx.functions.size() == 4);
    CHECK(cx.b[0] == 0.0);
    // A = {} with b = 0 gives the constant-0 table
    CHECK(cx.functions.functions()[0] == FunctionTable({0.0, 0.0}));
    // all b values distinct and inside [0, 1/3)
    for (std::size_t i = 0; i < cx.b.size(); ++i) {
        CHECK(cx.b[i] >= 0.0);
        CHECK(cx.b[i] < 1.0 / 3.0);
        for (std::size_t j = i + 1; j < cx.b.size(); ++j) CHECK(cx.b[i] != cx.b[j]);
    }
    // member points carry 1-b, others b
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t x = 0; x < s.size(); ++x) {
            double v = cx.functions.functions()[i].values[x];
            CHECK(v == (c.concepts()[i].contains(x) ? 1.0 - cx.b[i] : cx.b[i]));
        }
}

TEST_CASE("identify_from_one_point recovers every concept, exhaustive") {
    for (std::size_t pts = 1; pts <= 4; ++pts) {
        FiniteSpace s(numbered_labels(pts));
        auto c = powerset_class(s);
        auto cx = build_counterexample_class(c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t x = 0; x < pts; ++x) {
                double value = cx.functions.functions()[i].values[x];
                // b(A_0) = 0 makes value 0 ambiguous only if shared; the
                // construction keeps all observed values distinct per point
                auto got = identify_from_one_point(cx, c, x, value);
                CHECK(got == i);
            }
        }
    }
}

TEST_CASE("identify_from_one_point rejects gap values") {
    FiniteSpace s(numbered_labels(2));
    auto c = powerset_class(s);
    auto cx = build_counterexample_class(c);
    // 0.47 lies in the (1/3, 2/3) gap hit by no b or 1-b
    CHECK_THROWS_AS(identify_from_one_point(cx, c, 0, 0.47), domain_error);
}

TEST_CASE("counterexample_fat_check") {
    FiniteSpace s(numbered_labels(3));
    auto c = powerset_class(s);
    auto rep = counterexample_fat_check(c, 0.1);
    CHECK(rep.vc == 3);
    CHECK(rep.fat >= 3);
    CHECK(rep.witness_half_realizes);
    CHECK(rep.holds);

    // a VC-1 class
    FiniteSpace s2(numbered_labels(3));
    ConceptClass c1(s2, {Concept({0, 0, 0}), Concept({1, 0, 0})});
    auto rep1 = counterexample_fat_check(c1, 0.15);
    CHECK(rep1.vc == 1);
    CHECK(rep1.fat >= 1);
    CHECK(rep1.holds);

    CHECK_THROWS_AS(counterexample_fat_check(c, 0.2), domain_error);
}
