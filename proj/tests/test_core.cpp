#include <doctest.h>

#include <random>

#include "shatterlab/core.hpp"
#include "shatterlab/families.hpp"

using namespace shatterlab;

TEST_CASE("FiniteSpace validates and renormalizes") {
    FiniteSpace uniform(numbered_labels(4));
    CHECK(uniform.weight(0) == doctest::Approx(0.25));

    // decimal weights summing to 1 within tolerance get renormalized
    FiniteSpace s({"a", "b", "c"}, {0.1, 0.2, 0.7 + 5e-13});
    double sum = 0.0;
    for (double w : s.weights()) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {0.5, 0.6}), domain_error);
    CHECK_THROWS_AS(FiniteSpace({"a", "a"}, {0.5, 0.5}), domain_error);
    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {1.5, -0.5}), domain_error);
}

TEST_CASE("sym_diff_measure examples") {
    FiniteSpace s(numbered_labels(2));
    Concept a({1, 0}), b({0, 0}), c({0, 1});
    CHECK(sym_diff_measure(a, a, s) == 0.0);
    CHECK(sym_diff_measure(a, b, s) == doctest::Approx(0.5));
    CHECK(sym_diff_measure(a, c, s) == doctest::Approx(1.0));
    Concept wrong({1, 0, 0});
    CHECK_THROWS_AS(sym_diff_measure(a, wrong, s), dimension_error);
}

TEST_CASE("expected_abs_diff examples") {
    FiniteSpace s(numbered_labels(2));
    FunctionTable f({1.0, 0.0}), gz({0.0, 0.0});
    CHECK(expected_abs_diff(f, f, s) == 0.0);
    CHECK(expected_abs_diff(f, gz, s) == doctest::Approx(0.5));
}

TEST_CASE("l2_distance examples") {
    FiniteSpace s(numbered_labels(2));
    FunctionTable f({1.0, 0.0}), z({0.0, 0.0}), one({1.0, 1.0});
    CHECK(l2_distance(f, f, s) == 0.0);
    CHECK(l2_distance(f, z, s) == doctest::Approx(std::sqrt(0.5)));
    CHECK(l2_distance(one, z, s) == doctest::Approx(1.0));
    FiniteSpace skew(numbered_labels(2), {0.9, 0.1});
    CHECK(l2_distance(one, z, skew) == doctest::Approx(1.0));
}

TEST_CASE("l2_product_distance examples") {
    CHECK(l2_product_distance({0, 0, 0}) == 0.0);
    CHECK(l2_product_distance({3, 4}) == doctest::Approx(5.0));
    // k equal components eps/sqrt(k) combine to eps
    const double eps = 0.37;
    for (std::size_t k = 2; k <= 5; ++k) {
        std::vector<double> ds(k, eps / std::sqrt(double(k)));
        CHECK(l2_product_distance(ds) == doctest::Approx(eps));
    }
    CHECK_THROWS_AS(l2_product_distance({}), dimension_error);
}

TEST_CASE("indicator identity: E(chi_A, chi_B) equals mu(A triangle B), exhaustive") {
    for (std::size_t n = 1; n <= 4; ++n) {
        FiniteSpace s(numbered_labels(n));
        for (std::size_t ma = 0; ma < (std::size_t(1) << n); ++ma) {
            for (std::size_t mb = 0; mb < (std::size_t(1) << n); ++mb) {
                std::vector<std::uint8_t> ba(n), bb(n);
                for (std::size_t i = 0; i < n; ++i) {
                    ba[i] = (ma >> i) & 1;
                    bb[i] = (mb >> i) & 1;
                }
                Concept a(ba), b(bb);
                CHECK(expected_abs_diff(indicator_table(a), indicator_table(b), s) ==
                      sym_diff_measure(a, b, s));
            }
        }
    }
}

TEST_CASE("metric axioms and l2^2 <= expected abs, random tables") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::vector<double> w(n);
        double sum = 0.0;
        for (auto& x : w) {
            x = unit(rng) + 0.01;
            sum += x;
        }
        for (auto& x : w) x /= sum;
        FiniteSpace s(numbered_labels(n), w);
        auto rand_table = [&] {
            std::vector<double> v(n);
            for (auto& x : v) x = unit(rng);
            return FunctionTable(v);
        };
        FunctionTable f = rand_table(), g = rand_table(), h = rand_table();
        for (auto dist : {+[](const FunctionTable& a, const FunctionTable& b,
                              const FiniteSpace& sp) { return expected_abs_diff(a, b, sp); },
                          +[](const FunctionTable& a, const FunctionTable& b,
                              const FiniteSpace& sp) { return l2_distance(a, b, sp); }}) {
            CHECK(dist(f, g, s) == dist(g, f, s));
            CHECK(dist(f, h, s) <= dist(f, g, s) + dist(g, h, s) + 1e-12);
            if (!(f == g)) CHECK(dist(f, g, s) > 0.0);
        }
        double l2 = l2_distance(f, g, s);
        CHECK(l2 * l2 <= expected_abs_diff(f, g, s) + 1e-12);
    }
}

TEST_CASE("classes deduplicate on construction") {
    FiniteSpace s(numbered_labels(2));
    ConceptClass c(s, {Concept({1, 0}), Concept({1, 0}), Concept({0, 1})});
    CHECK(c.size() == 2);
    FunctionClass f(s, {FunctionTable({0.5, 0.5}), FunctionTable({0.5, 0.5})});
    CHECK(f.size() == 1);
}

TEST_CASE("PointSubset validation") {
    CHECK_THROWS_AS(PointSubset({2, 1}), domain_error);
    CHECK_THROWS_AS(PointSubset({1, 1}), domain_error);
    PointSubset s({0, 2});
    CHECK_THROWS_AS(s.check_range(2), domain_error);
    CHECK_NOTHROW(s.check_range(3));
}
