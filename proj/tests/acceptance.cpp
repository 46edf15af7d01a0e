// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its own tolerances and seeds.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "shatterlab/compose.hpp"
#include "shatterlab/cover.hpp"
#include "shatterlab/families.hpp"
#include "shatterlab/pacsim.hpp"
#include "shatterlab/shatter.hpp"

using namespace shatterlab;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double seconds) {
    std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what,
                seconds);
    if (!ok) ++failures;
}

template <typename F>
void run(int id, const char* what, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    report(id, what, ok, secs);
}

bool criterion1_intervals() {
    auto t0 = std::chrono::steady_clock::now();
    FiniteSpace s(numbered_labels(10));
    auto c = interval_traces(s);
    auto res = vc_dimension(c);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res.value == 2 && shatters(c, res.certificate) && res.exhausted &&
           secs < 1.0;
}

bool criterion2_hyperplanes() {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = 2; n <= 3; ++n) {
        auto fam = hyperplane_trace_family(n, 42);
        if (vc_dimension(*fam.concepts).value != n) return false;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return secs < 10.0;
}

bool criterion3_sauer() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(42);
    std::size_t done = 0;
    while (done < 200) {
        std::size_t pts = 3 + rng() % 10;  // up to 12 points
        FiniteSpace s(numbered_labels(pts));
        auto c = random_concept_class(s, 2 + rng() % 64, rng);
        std::size_t d = vc_dimension(c).value;
        if (d < 1) continue;
        auto table = growth(c, pts);
        for (std::size_t n = d; n <= pts; ++n)
            if (double(table.entries.at(n)) > sauer_bound(n, d)) return false;
        ++done;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return secs < 60.0;
}

bool criterion4_binary_equivalence() {
    const std::vector<double> eps_values{0.1, 0.3, 0.5};
    // exhaustive: every non-empty bit-valued class on up to 4 points
    for (std::size_t pts = 1; pts <= 4; ++pts) {
        FiniteSpace s(numbered_labels(pts));
        const std::size_t n_concepts = std::size_t(1) << pts;
        for (std::size_t sel = 1; sel < (std::size_t(1) << n_concepts); ++sel) {
            std::vector<Concept> cs;
            for (std::size_t i = 0; i < n_concepts; ++i) {
                if (!((sel >> i) & 1)) continue;
                std::vector<std::uint8_t> bits(pts);
                for (std::size_t p = 0; p < pts; ++p) bits[p] = (i >> p) & 1;
                cs.emplace_back(std::move(bits));
            }
            ConceptClass c(s, std::move(cs));
            auto vc = vc_dimension(c).value;
            auto fc = indicator_class(c);
            for (double e : eps_values)
                if (fat_dimension(fc, e).value != vc) return false;
        }
    }
    // randomized larger classes
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        FiniteSpace s(numbered_labels(5 + rng() % 3));
        auto c = random_concept_class(s, 1 + rng() % 32, rng);
        auto vc = vc_dimension(c).value;
        auto fc = indicator_class(c);
        for (double e : eps_values)
            if (fat_dimension(fc, e).value != vc) return false;
    }
    return true;
}

bool criterion5_multiplication_modulus() {
    auto mul = make_continuous_connective("mul");
    auto rep = verify_uniform_continuity(mul, {0.1, 0.25, 0.5, 1.0}, 100000, 42);
    if (rep.total_violations != 0) return false;
    auto bad = verify_uniform_continuity(
        mul, [](double e) { return std::min(1.0, 2.0 * e); }, {0.25}, 100000, 42);
    return bad.total_violations >= 1;
}

bool criterion6_phi_transfer() {
    std::mt19937_64 rng(42);
    for (const char* name : {"mul", "min", "max"}) {
        auto u = make_continuous_connective(name);
        for (int t = 0; t < 50; ++t) {
            FiniteSpace s(numbered_labels(3 + rng() % 6));  // up to 8 points
            auto f1 = random_function_class(s, 4 + rng() % 29, rng);
            auto f2 = random_function_class(s, 4 + rng() % 29, rng);
            auto rep = verify_phi_modulus(u, {f1, f2}, {0.25, 0.5}, 200, rng());
            if (rep.violations != 0) return false;
        }
    }
    return true;
}

bool criterion7_covering_chain() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(42);
    auto mul = make_continuous_connective("mul");
    for (int t = 0; t < 1000; ++t) {
        FiniteSpace s(numbered_labels(3 + rng() % 4));  // up to 6 points
        auto f1 = random_function_class(s, 2 + rng() % 7, rng);
        auto f2 = random_function_class(s, 2 + rng() % 7, rng);
        std::uniform_real_distribution<double> eps_dist(0.1, 1.0);
        auto rep = verify_covering_chain(mul, {f1, f2}, eps_dist(rng));
        if (!rep.inequality_holds) return false;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return secs < 300.0;
}

bool criterion8_product_and_image() {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> eps_dist(0.05, 1.2);
    for (int t = 0; t < 1000; ++t) {
        auto m1 = random_euclidean_metric(2 + rng() % 7, rng);
        auto m2 = random_euclidean_metric(2 + rng() % 7, rng);
        if (!check_product_cover({m1, m2}, eps_dist(rng)).inequality_holds)
            return false;
    }
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 2 + rng() % 15;
        auto m = random_euclidean_metric(n, rng);
        auto half = m.matrix();
        for (auto& row : half)
            for (auto& v : row) v /= 2.0;
        FiniteMetric images(std::move(half));
        std::vector<std::size_t> idmap(n);
        for (std::size_t i = 0; i < n; ++i) idmap[i] = i;
        double eps = eps_dist(rng);
        auto rep = check_image_cover(m, images, idmap, eps, eps);
        if (!rep.continuity_ok || !rep.inequality_holds) return false;
    }
    return true;
}

bool criterion9_classical_composition() {
    std::mt19937_64 rng(42);
    if (alpha_k(2) != 6) return false;
    std::size_t done = 0;
    while (done < 200) {
        FiniteSpace s(numbered_labels(4 + rng() % 7));  // up to 10 points
        auto c1 = random_concept_class(s, 2 + rng() % 6, rng);
        auto c2 = random_concept_class(s, 2 + rng() % 6, rng);
        std::size_t d = std::max(vc_dimension(c1).value, vc_dimension(c2).value);
        if (d < 1 || d > 2) continue;
        std::vector<std::uint8_t> table(4);
        for (auto& b : table) b = rng() & 1;
        auto composed = compose_concepts(ClassicalConnective(2, table), {c1, c2});
        if (vc_dimension(composed).value >= d * 6) return false;
        ++done;
    }
    return true;
}

bool criterion10_rectangle_learner() {
    auto t0 = std::chrono::steady_clock::now();
    Rectangle target(0.25, 0.75, 0.25, 0.75);
    PlaneDistribution dist;  // uniform on [0,1]^2
    std::size_t m = rect_sample_complexity(0.1, 0.1);
    if (m != 148) return false;
    auto rep = run_rectangle_trials(target, dist, 0.1, m, 1000, 42);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep.empirical_failure_rate <= 0.1 && rep.containment_held && secs < 30.0;
}

bool criterion11_counterexample() {
    FiniteSpace s(numbered_labels(3));
    auto c = powerset_class(s);
    auto rep = counterexample_fat_check(c, 0.1);
    if (!(rep.fat >= 3 && rep.witness_half_realizes)) return false;
    auto cx = build_counterexample_class(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t x = 0; x < s.size(); ++x) {
            double v = cx.functions.functions()[i].values[x];
            if (identify_from_one_point(cx, c, x, v) != i) return false;
        }
    return true;
}

bool criterion12_exact_vs_greedy() {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> eps_dist(0.02, 1.0);
    for (int t = 0; t < 500; ++t) {
        std::size_t n = 4 + rng() % 61;  // up to 64 points
        auto m = random_euclidean_metric(n, rng);
        double eps = eps_dist(rng);
        auto exact = covering_number(m, eps, CoverMethod::Exact);
        auto greedy = covering_number(m, eps, CoverMethod::Greedy);
        if (exact.number > greedy.number) return false;
        if (exact.number < exact.lower_bound) return false;
        if (!cover_is_valid(m, exact.centers, eps)) return false;
        if (!cover_is_valid(m, greedy.centers, eps)) return false;
    }
    return true;
}

}  // namespace

int main() {
    run(1, "interval traces on 10 points have VC 2", criterion1_intervals);
    run(2, "hyperplane traces measure VC = n for n = 2, 3", criterion2_hyperplanes);
    run(3, "growth below (en/d)^d on 200 random classes", criterion3_sauer);
    run(4, "fat equals VC for binary classes at eps <= 0.5", criterion4_binary_equivalence);
    run(5, "multiplication modulus eps/2 verified, wrong modulus caught",
        criterion5_multiplication_modulus);
    run(6, "transferred modulus holds for mul/min/max pairs", criterion6_phi_transfer);
    run(7, "covering chain inequality on 1000 trials", criterion7_covering_chain);
    run(8, "product and image covering inequalities on 1000 trials each",
        criterion8_product_and_image);
    run(9, "composed VC below d * alpha_2 on 200 trials", criterion9_classical_composition);
    run(10, "rectangle learner failure rate within delta at m = 148",
        criterion10_rectangle_learner);
    run(11, "identifying-point class: fat lower bound and one-point learner",
        criterion11_counterexample);
    run(12, "exact cover between packing bound and greedy on 500 instances",
        criterion12_exact_vs_greedy);

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
