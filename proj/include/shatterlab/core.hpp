#pragma once

// Finite domains with discrete probability measures, concepts as bit-vectors,
// [0,1]-valued function tables, and the distances used throughout the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace shatterlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// mismatched table/space sizes
struct dimension_error : error {
    using error::error;
};
// parameter outside its admissible range
struct domain_error : error {
    using error::error;
};
struct empty_class_error : error {
    using error::error;
};
// instance exceeds a configured size cap
struct capacity_error : error {
    using error::error;
};

constexpr double kMeasureSumTolerance = 1e-12;

// A finite labeled domain carrying a discrete probability measure.
// Weights are validated to sum to 1 within kMeasureSumTolerance and then
// renormalized so downstream sums are exact up to rounding.
class FiniteSpace {
public:
    FiniteSpace(std::vector<std::string> points, std::vector<double> weights)
        : points_(std::move(points)), weights_(std::move(weights)) {
        validate();
    }

    // uniform measure
    explicit FiniteSpace(std::vector<std::string> points)
        : points_(std::move(points)),
          weights_(points_.size(), points_.empty() ? 0.0 : 1.0 / points_.size()) {
        validate();
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(std::size_t i) const { return weights_.at(i); }
    const std::string& label(std::size_t i) const { return points_.at(i); }

private:
    void validate() {
        if (points_.empty())
            throw domain_error("FiniteSpace: empty point list");
        if (points_.size() != weights_.size())
            throw dimension_error("FiniteSpace: weight count != point count");
        std::set<std::string> seen(points_.begin(), points_.end());
        if (seen.size() != points_.size())
            throw domain_error("FiniteSpace: duplicate point labels");
        double sum = 0.0;
        for (double w : weights_) {
            if (w < 0.0)
                throw domain_error("FiniteSpace: negative weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > kMeasureSumTolerance)
            throw domain_error("FiniteSpace: weights sum to " + std::to_string(sum) +
                               ", expected 1");
        for (double& w : weights_) w /= sum;
    }

    std::vector<std::string> points_;
    std::vector<double> weights_;
};

// A subset of the domain, identified with its indicator bit-vector.
struct Concept {
    std::vector<std::uint8_t> membership;  // 0/1 per point

    Concept() = default;
    explicit Concept(std::vector<std::uint8_t> bits) : membership(std::move(bits)) {}

    std::size_t size() const { return membership.size(); }
    bool contains(std::size_t i) const { return membership.at(i) != 0; }

    bool operator==(const Concept& o) const { return membership == o.membership; }
    bool operator<(const Concept& o) const { return membership < o.membership; }
};

// A [0,1]-valued table, one value per domain point.
struct FunctionTable {
    std::vector<double> values;

    FunctionTable() = default;
    explicit FunctionTable(std::vector<double> v) : values(std::move(v)) {
        for (double x : values)
            if (!(x >= 0.0 && x <= 1.0))
                throw domain_error("FunctionTable: value outside [0,1]");
    }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }

    bool is_binary() const {
        return std::all_of(values.begin(), values.end(),
                           [](double v) { return v == 0.0 || v == 1.0; });
    }

    bool operator==(const FunctionTable& o) const { return values == o.values; }
    bool operator<(const FunctionTable& o) const { return values < o.values; }
};

inline FunctionTable indicator_table(const Concept& a) {
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.membership[i] ? 1.0 : 0.0;
    return FunctionTable(std::move(v));
}

inline Concept concept_from_binary(const FunctionTable& f) {
    if (!f.is_binary())
        throw domain_error("concept_from_binary: table has non-binary values");
    std::vector<std::uint8_t> bits(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) bits[i] = f.values[i] == 1.0 ? 1 : 0;
    return Concept(std::move(bits));
}

// Deduplicated family of concepts over one space.
class ConceptClass {
public:
    ConceptClass(const FiniteSpace& space, std::vector<Concept> concepts)
        : space_(&space) {
        std::set<Concept> seen;
        for (auto& c : concepts) {
            if (c.size() != space.size())
                throw dimension_error("ConceptClass: concept length != point count");
            if (seen.insert(c).second) concepts_.push_back(std::move(c));
        }
    }

    const FiniteSpace& space() const { return *space_; }
    const std::vector<Concept>& concepts() const { return concepts_; }
    std::size_t size() const { return concepts_.size(); }
    bool empty() const { return concepts_.empty(); }

private:
    const FiniteSpace* space_;
    std::vector<Concept> concepts_;
};

// Deduplicated family of function tables over one space.
class FunctionClass {
public:
    FunctionClass(const FiniteSpace& space, std::vector<FunctionTable> functions)
        : space_(&space) {
        std::set<FunctionTable> seen;
        for (auto& f : functions) {
            if (f.size() != space.size())
                throw dimension_error("FunctionClass: table length != point count");
            if (seen.insert(f).second) functions_.push_back(std::move(f));
        }
    }

    const FiniteSpace& space() const { return *space_; }
    const std::vector<FunctionTable>& functions() const { return functions_; }
    std::size_t size() const { return functions_.size(); }
    bool empty() const { return functions_.empty(); }

    bool is_binary() const {
        return std::all_of(functions_.begin(), functions_.end(),
                           [](const FunctionTable& f) { return f.is_binary(); });
    }

    ConceptClass to_concept_class() const {
        std::vector<Concept> cs;
        cs.reserve(functions_.size());
        for (const auto& f : functions_) cs.push_back(concept_from_binary(f));
        return ConceptClass(*space_, std::move(cs));
    }

private:
    const FiniteSpace* space_;
    std::vector<FunctionTable> functions_;
};

inline FunctionClass indicator_class(const ConceptClass& c) {
    std::vector<FunctionTable> fs;
    fs.reserve(c.size());
    for (const auto& a : c.concepts()) fs.push_back(indicator_table(a));
    return FunctionClass(c.space(), std::move(fs));
}

// S = {x_1,...,x_n} as strictly increasing point indices.
struct PointSubset {
    std::vector<std::size_t> indices;

    PointSubset() = default;
    explicit PointSubset(std::vector<std::size_t> idx) : indices(std::move(idx)) {
        for (std::size_t i = 1; i < indices.size(); ++i)
            if (indices[i] <= indices[i - 1])
                throw domain_error("PointSubset: indices not strictly increasing");
    }

    std::size_t size() const { return indices.size(); }

    void check_range(std::size_t n_points) const {
        if (!indices.empty() && indices.back() >= n_points)
            throw domain_error("PointSubset: index out of range");
    }
};

// mass of A triangle B
inline double sym_diff_measure(const Concept& a, const Concept& b,
                               const FiniteSpace& space) {
    if (a.size() != space.size() || b.size() != space.size())
        throw dimension_error("sym_diff_measure: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (a.membership[i] != b.membership[i]) m += space.weight(i);
    return m;
}

// E_mu(f,g) = sum_i w_i |f_i - g_i|
inline double expected_abs_diff(const FunctionTable& f, const FunctionTable& g,
                                const FiniteSpace& space) {
    if (f.size() != space.size() || g.size() != space.size())
        throw dimension_error("expected_abs_diff: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i)
        s += space.weight(i) * std::abs(f.values[i] - g.values[i]);
    return s;
}

// ||f - g||_2 in L2(mu)
inline double l2_distance(const FunctionTable& f, const FunctionTable& g,
                          const FiniteSpace& space) {
    if (f.size() != space.size() || g.size() != space.size())
        throw dimension_error("l2_distance: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        double d = f.values[i] - g.values[i];
        s += space.weight(i) * d * d;
    }
    return std::sqrt(s);
}

// sqrt(sum d_i^2) over component distances
inline double l2_product_distance(const std::vector<double>& ds) {
    if (ds.empty())
        throw dimension_error("l2_product_distance: empty component list");
    double s = 0.0;
    for (double d : ds) {
        if (d < 0.0) throw domain_error("l2_product_distance: negative component");
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace shatterlab
