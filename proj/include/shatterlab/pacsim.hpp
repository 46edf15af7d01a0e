#pragma once

// Monte Carlo learning experiments: the tightest-rectangle learner with its
// sample-complexity bound, and the identifying-point function class built
// from a concept class, with its one-sample learner.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "shatterlab/core.hpp"
#include "shatterlab/shatter.hpp"

namespace shatterlab {

struct Rectangle {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    bool empty = true;

    Rectangle() = default;
    Rectangle(double a, double b, double c, double d)
        : x_lo(a), x_hi(b), y_lo(c), y_hi(d), empty(false) {
        if (a > b || c > d)
            throw domain_error("Rectangle: bounds out of order");
    }

    bool contains(double x, double y) const {
        return !empty && x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
    }

    double area() const {
        return empty ? 0.0 : (x_hi - x_lo) * (y_hi - y_lo);
    }

    // overlap area with another rectangle
    double overlap(const Rectangle& o) const {
        if (empty || o.empty) return 0.0;
        double w = std::min(x_hi, o.x_hi) - std::max(x_lo, o.x_lo);
        double h = std::min(y_hi, o.y_hi) - std::max(y_lo, o.y_lo);
        return (w > 0 && h > 0) ? w * h : 0.0;
    }

    bool contains_rect(const Rectangle& o) const {
        if (o.empty) return true;
        if (empty) return false;
        return o.x_lo >= x_lo && o.x_hi <= x_hi && o.y_lo >= y_lo && o.y_hi <= y_hi;
    }
};

struct Segment {
    double lo = 0, hi = 0, weight = 0;
};

// Either a uniform measure on a box, or a product of per-axis mixtures of
// uniform segments. Sampling is reproducible from the supplied generator.
struct PlaneDistribution {
    enum class Kind { UniformBox, AxisMixture };
    Kind kind = Kind::UniformBox;
    Rectangle box{0, 1, 0, 1};
    std::vector<Segment> x_segments, y_segments;

    void validate() const {
        if (kind == Kind::UniformBox) {
            if (box.empty || box.area() <= 0.0)
                throw domain_error("PlaneDistribution: degenerate box");
            return;
        }
        auto check = [](const std::vector<Segment>& segs) {
            if (segs.empty())
                throw domain_error("PlaneDistribution: empty mixture");
            double sum = 0.0;
            for (const auto& s : segs) {
                if (s.lo >= s.hi || s.weight < 0.0)
                    throw domain_error("PlaneDistribution: bad segment");
                sum += s.weight;
            }
            if (std::abs(sum - 1.0) > kMeasureSumTolerance)
                throw domain_error("PlaneDistribution: mixture weights must sum to 1");
        };
        check(x_segments);
        check(y_segments);
    }

    std::pair<double, double> sample(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        if (kind == Kind::UniformBox) {
            return {box.x_lo + unit(rng) * (box.x_hi - box.x_lo),
                    box.y_lo + unit(rng) * (box.y_hi - box.y_lo)};
        }
        auto draw = [&](const std::vector<Segment>& segs) {
            double u = unit(rng), acc = 0.0;
            for (const auto& s : segs) {
                acc += s.weight;
                if (u <= acc) return s.lo + unit(rng) * (s.hi - s.lo);
            }
            const auto& last = segs.back();
            return last.lo + unit(rng) * (last.hi - last.lo);
        };
        return {draw(x_segments), draw(y_segments)};
    }
};

struct TrialReport {
    std::size_t trials = 0;
    std::size_t failures = 0;  // trials with error >= eps
    double empirical_failure_rate = 0.0;
    std::size_t m_used = 0;
    bool exact_error = false;
    double mean_error = 0.0;
    bool containment_held = true;  // hypothesis inside target in every trial
};

struct LabeledPoint {
    double x, y;
    bool label;
};

// bounding box of the positively labeled points; Empty when there are none
inline Rectangle tightest_rectangle(const std::vector<LabeledPoint>& sample) {
    Rectangle r;
    bool any = false;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    for (const auto& p : sample) {
        if (!p.label) continue;
        if (!any) {
            x_lo = x_hi = p.x;
            y_lo = y_hi = p.y;
            any = true;
        } else {
            x_lo = std::min(x_lo, p.x);
            x_hi = std::max(x_hi, p.x);
            y_lo = std::min(y_lo, p.y);
            y_hi = std::max(y_hi, p.y);
        }
    }
    if (any) r = Rectangle(x_lo, x_hi, y_lo, y_hi);
    return r;
}

// ceil((4/eps) ln(4/delta))
inline std::size_t rect_sample_complexity(double eps, double delta) {
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw domain_error("rect_sample_complexity: eps, delta must be in (0,1)");
    return std::size_t(std::ceil(4.0 / eps * std::log(4.0 / delta)));
}

constexpr std::size_t kErrorMonteCarloSamples = 100000;

// mu(H triangle A) under the distribution; exact for uniform boxes
inline double rectangle_error(const Rectangle& hypothesis, const Rectangle& target,
                              const PlaneDistribution& dist, std::mt19937_64& rng) {
    if (dist.kind == PlaneDistribution::Kind::UniformBox) {
        double total = dist.box.area();
        double a = target.overlap(dist.box);
        double h = hypothesis.overlap(dist.box);
        Rectangle both;
        if (!hypothesis.empty && !target.empty) {
            double w_lo = std::max(hypothesis.x_lo, target.x_lo);
            double w_hi = std::min(hypothesis.x_hi, target.x_hi);
            double v_lo = std::max(hypothesis.y_lo, target.y_lo);
            double v_hi = std::min(hypothesis.y_hi, target.y_hi);
            if (w_lo <= w_hi && v_lo <= v_hi)
                both = Rectangle(w_lo, w_hi, v_lo, v_hi);
        }
        double ah = both.overlap(dist.box);
        return (a + h - 2.0 * ah) / total;
    }
    std::size_t diff = 0;
    for (std::size_t i = 0; i < kErrorMonteCarloSamples; ++i) {
        auto [x, y] = dist.sample(rng);
        if (target.contains(x, y) != hypothesis.contains(x, y)) ++diff;
    }
    return double(diff) / double(kErrorMonteCarloSamples);
}

inline TrialReport run_rectangle_trials(const Rectangle& target,
                                        const PlaneDistribution& dist, double eps,
                                        std::size_t m, std::size_t trials,
                                        std::uint64_t seed) {
    if (m < 1 || trials < 1)
        throw domain_error("run_rectangle_trials: m and trials must be >= 1");
    dist.validate();
    TrialReport rep;
    rep.trials = trials;
    rep.m_used = m;
    rep.exact_error = dist.kind == PlaneDistribution::Kind::UniformBox;
    std::mt19937_64 rng(seed);
    double err_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<LabeledPoint> sample;
        sample.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [x, y] = dist.sample(rng);
            sample.push_back({x, y, target.contains(x, y)});
        }
        Rectangle h = tightest_rectangle(sample);
        if (!target.contains_rect(h)) rep.containment_held = false;
        double err = rectangle_error(h, target, dist, rng);
        err_sum += err;
        if (err >= eps) ++rep.failures;
    }
    rep.empirical_failure_rate = double(rep.failures) / double(trials);
    rep.mean_error = err_sum / double(trials);
    return rep;
}

// The class {f_A} with f_A = 1 - b(A) on A and b(A) off A, where
// b(A_i) = i / (3|C|) injects the concepts into [0, 1/3).
struct CounterexampleClass {
    FunctionClass functions;
    std::vector<double> b;  // aligned with the source class's concept order
};

inline CounterexampleClass build_counterexample_class(const ConceptClass& c) {
    if (c.empty())
        throw empty_class_error("build_counterexample_class: empty class");
    const std::size_t n = c.size();
    std::vector<double> b(n);
    std::vector<FunctionTable> tables;
    tables.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = double(i) / (3.0 * double(n));
        std::vector<double> vals(c.space().size());
        for (std::size_t x = 0; x < c.space().size(); ++x)
            vals[x] = c.concepts()[i].contains(x) ? 1.0 - b[i] : b[i];
        tables.emplace_back(std::move(vals));
    }
    return {FunctionClass(c.space(), std::move(tables)), std::move(b)};
}

// One labeled point identifies the concept: the observed value is b(A) when
// the point is outside A and 1 - b(A) when inside; b is injective.
inline std::size_t identify_from_one_point(const CounterexampleClass& cx,
                                           const ConceptClass& source,
                                           std::size_t point, double value) {
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < cx.b.size(); ++i) {
        bool inside = source.concepts()[i].contains(point);
        double expected = inside ? 1.0 - cx.b[i] : cx.b[i];
        if (value == expected) {
            if (match)
                throw error("identify_from_one_point: value matches multiple concepts");
            match = i;
        }
    }
    if (!match)
        throw domain_error("identify_from_one_point: value matches no class member");
    return *match;
}

struct CounterexampleFatReport {
    std::size_t vc = 0;
    std::size_t fat = 0;
    bool witness_half_realizes = false;  // (0.5,...,0.5) shatters the VC certificate
    bool holds = false;                  // fat >= vc
};

inline CounterexampleFatReport counterexample_fat_check(const ConceptClass& c,
                                                        double eps) {
    if (!(eps > 0.0 && eps < 1.0 / 6.0))
        throw domain_error("counterexample_fat_check: requires 0 < eps < 1/6");
    auto cx = build_counterexample_class(c);
    auto vc = vc_dimension(c);
    CounterexampleFatReport rep;
    rep.vc = vc.value;
    rep.fat = fat_dimension(cx.functions, eps).value;

    // direct check that witness (0.5,...,0.5) eps-shatters the VC certificate
    const auto& s = vc.certificate;
    std::set<std::uint64_t> patterns;
    for (const auto& f : cx.functions.functions()) {
        std::uint64_t p = 0;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) {
            double v = f.values[s.indices[i]];
            if (v >= 0.5 + eps)
                p |= std::uint64_t(1) << i;
            else if (!(v <= 0.5 - eps))
                ok = false;
        }
        if (ok) patterns.insert(p);
    }
    rep.witness_half_realizes = patterns.size() == (std::uint64_t(1) << s.size());
    rep.holds = rep.fat >= rep.vc;
    return rep;
}

}  // namespace shatterlab
