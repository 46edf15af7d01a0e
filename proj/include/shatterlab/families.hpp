#pragma once

// Generated concept/function families: interval traces, powersets,
// hyperplane traces, and seeded random classes and metrics.

#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "shatterlab/core.hpp"
#include "shatterlab/cover.hpp"

namespace shatterlab {

inline std::vector<std::string> numbered_labels(std::size_t n,
                                                const std::string& prefix = "x") {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

// Traces of closed real intervals on the ordered points {1,...,n}:
// the empty set plus every contiguous run.
inline ConceptClass interval_traces(const FiniteSpace& space) {
    const std::size_t n = space.size();
    std::vector<Concept> cs;
    cs.emplace_back(std::vector<std::uint8_t>(n, 0));
    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = lo; hi < n; ++hi) {
            std::vector<std::uint8_t> bits(n, 0);
            for (std::size_t i = lo; i <= hi; ++i) bits[i] = 1;
            cs.emplace_back(std::move(bits));
        }
    }
    return ConceptClass(space, std::move(cs));
}

inline ConceptClass powerset_class(const FiniteSpace& space) {
    const std::size_t n = space.size();
    if (n >= 20) throw capacity_error("powerset_class: domain too large");
    std::vector<Concept> cs;
    cs.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
        cs.emplace_back(std::move(bits));
    }
    return ConceptClass(space, std::move(cs));
}

// Hyperplane traces in R^n on the domain {e_1,...,e_n, 0, p_1, p_2} with two
// random extra points. The hyperplanes x.a = 1 with a ranging over indicator
// vectors of the nonempty subsets of {e_i}, plus x.(1,...,1) = -1 for the
// empty pattern, realize every pattern on the unit vectors; extra hyperplanes
// pick out the added points individually.
struct HyperplaneFamily {
    std::unique_ptr<FiniteSpace> space;
    std::unique_ptr<ConceptClass> concepts;
};

inline HyperplaneFamily hyperplane_trace_family(std::size_t n, std::uint64_t seed) {
    if (n < 1 || n > 16) throw domain_error("hyperplane_trace_family: bad n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.1, 0.9);

    std::vector<std::vector<double>> domain;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        domain.push_back(std::move(e));
    }
    domain.emplace_back(n, 0.0);  // origin
    for (int extra = 0; extra < 2; ++extra) {
        std::vector<double> p(n);
        for (auto& x : p) x = unit(rng);
        domain.push_back(std::move(p));
    }

    struct Hyperplane {
        std::vector<double> a;
        double b;
    };
    std::vector<Hyperplane> planes;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<double> a(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) a[i] = 1.0;
        planes.push_back({std::move(a), 1.0});
    }
    planes.push_back({std::vector<double>(n, 1.0), -1.0});
    // a hyperplane through each extra point alone
    for (std::size_t j = n + 1; j < domain.size(); ++j) {
        double norm2 = 0.0;
        for (double x : domain[j]) norm2 += x * x;
        if (norm2 == 0.0) continue;
        std::vector<double> a(domain[j]);
        planes.push_back({std::move(a), norm2});
    }

    HyperplaneFamily fam;
    fam.space = std::make_unique<FiniteSpace>(numbered_labels(domain.size(), "p"));
    std::vector<Concept> cs;
    constexpr double kOnPlane = 1e-9;
    for (const auto& h : planes) {
        std::vector<std::uint8_t> bits(domain.size(), 0);
        for (std::size_t j = 0; j < domain.size(); ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += domain[j][i] * h.a[i];
            bits[j] = std::abs(dot - h.b) < kOnPlane ? 1 : 0;
        }
        cs.emplace_back(std::move(bits));
    }
    fam.concepts = std::make_unique<ConceptClass>(*fam.space, std::move(cs));
    return fam;
}

inline ConceptClass random_concept_class(const FiniteSpace& space, std::size_t count,
                                         std::mt19937_64& rng) {
    std::bernoulli_distribution bit(0.5);
    std::vector<Concept> cs;
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint8_t> bits(space.size());
        for (auto& b : bits) b = bit(rng) ? 1 : 0;
        cs.emplace_back(std::move(bits));
    }
    return ConceptClass(space, std::move(cs));
}

inline FunctionClass random_function_class(const FiniteSpace& space, std::size_t count,
                                           std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<FunctionTable> fs;
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<double> vals(space.size());
        for (auto& v : vals) v = unit(rng);
        fs.emplace_back(std::move(vals));
    }
    return FunctionClass(space, std::move(fs));
}

// points uniform in the unit square with Euclidean distances; the triangle
// inequality holds by construction
inline FiniteMetric random_euclidean_metric(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {unit(rng), unit(rng)};
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double dx = pts[i].first - pts[j].first;
            double dy = pts[i].second - pts[j].second;
            d[i][j] = d[j][i] = std::sqrt(dx * dx + dy * dy);
        }
    return FiniteMetric(std::move(d));
}

inline FiniteMetric line_metric(const std::vector<double>& xs) {
    std::vector<std::vector<double>> d(xs.size(), std::vector<double>(xs.size(), 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            d[i][j] = std::abs(xs[i] - xs[j]);
    return FiniteMetric(std::move(d));
}

}  // namespace shatterlab
