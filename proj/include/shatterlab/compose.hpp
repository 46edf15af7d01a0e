#pragma once

// Classical and continuous-logic connectives, composition classes, modulus
// transfer onto the product-class map, and the Monte Carlo / exact checks for
// the covering-chain inequalities behind the composition bound.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "shatterlab/core.hpp"
#include "shatterlab/cover.hpp"
#include "shatterlab/shatter.hpp"

namespace shatterlab {

constexpr std::size_t kCompositionCap = 1000000;

struct ClassicalConnective {
    std::size_t arity;
    std::vector<std::uint8_t> truth_table;  // 2^arity entries, input bits as index
    std::string name;

    ClassicalConnective(std::size_t k, std::vector<std::uint8_t> table,
                        std::string nm = "custom")
        : arity(k), truth_table(std::move(table)), name(std::move(nm)) {
        if (arity < 2) throw domain_error("ClassicalConnective: arity must be >= 2");
        if (truth_table.size() != (std::size_t(1) << arity))
            throw dimension_error("ClassicalConnective: table size != 2^arity");
    }

    // inputs packed little-endian: bit i is the i-th argument
    std::uint8_t operator()(std::size_t packed_inputs) const {
        return truth_table[packed_inputs];
    }
};

class ContinuousConnective {
public:
    using Evaluator = std::function<double(const std::vector<double>&)>;
    using Modulus = std::function<double(double)>;

    ContinuousConnective(std::size_t k, Evaluator eval, Modulus mod, std::string nm)
        : arity_(k), eval_(std::move(eval)), modulus_(std::move(mod)),
          name_(std::move(nm)) {
        if (arity_ < 2)
            throw domain_error("ContinuousConnective: arity must be >= 2");
        sanity_check_range();
    }

    std::size_t arity() const { return arity_; }
    const std::string& name() const { return name_; }

    double operator()(const std::vector<double>& args) const {
        if (args.size() != arity_)
            throw dimension_error("ContinuousConnective: wrong argument count");
        return eval_(args);
    }

    double modulus(double eps) const {
        if (!(eps > 0.0 && eps <= 1.0))
            throw domain_error("ContinuousConnective: modulus argument outside (0,1]");
        double d = modulus_(eps);
        if (!(d > 0.0 && d <= 1.0))
            throw domain_error("ContinuousConnective: modulus value outside (0,1]");
        return d;
    }

private:
    // outputs must land in [0,1]; checked on a coarse grid at construction
    void sanity_check_range() const {
        const std::size_t steps = arity_ <= 3 ? 5 : 2;
        std::vector<std::size_t> idx(arity_, 0);
        std::vector<double> args(arity_);
        while (true) {
            for (std::size_t i = 0; i < arity_; ++i)
                args[i] = double(idx[i]) / double(steps - 1 == 0 ? 1 : steps - 1);
            double v = eval_(args);
            if (!(v >= 0.0 && v <= 1.0))
                throw domain_error("ContinuousConnective: evaluator left [0,1]");
            std::size_t i = 0;
            while (i < arity_ && ++idx[i] == steps) idx[i++] = 0;
            if (i == arity_) break;
        }
    }

    std::size_t arity_;
    Evaluator eval_;
    Modulus modulus_;
    std::string name_;
};

// Built-in connectives addressable by name. Multiplication carries the proved
// modulus eps/2; min, max and mean are 1-Lipschitz for the product distance,
// so modulus eps; neg negates the first coordinate.
inline ContinuousConnective make_continuous_connective(const std::string& name,
                                                       std::size_t k = 2) {
    if (name == "mul") {
        return ContinuousConnective(
            k,
            [](const std::vector<double>& a) {
                double p = 1.0;
                for (double x : a) p *= x;
                return p;
            },
            [](double e) { return e / 2.0; }, "mul");
    }
    if (name == "min") {
        return ContinuousConnective(
            k,
            [](const std::vector<double>& a) {
                return *std::min_element(a.begin(), a.end());
            },
            [](double e) { return e; }, "min");
    }
    if (name == "max") {
        return ContinuousConnective(
            k,
            [](const std::vector<double>& a) {
                return *std::max_element(a.begin(), a.end());
            },
            [](double e) { return e; }, "max");
    }
    if (name == "mean") {
        return ContinuousConnective(
            k,
            [](const std::vector<double>& a) {
                double s = 0.0;
                for (double x : a) s += x;
                return s / double(a.size());
            },
            [](double e) { return e; }, "mean");
    }
    if (name == "neg") {
        return ContinuousConnective(
            k, [](const std::vector<double>& a) { return 1.0 - a[0]; },
            [](double e) { return e; }, "neg");
    }
    throw domain_error("unknown continuous connective: " + name);
}

inline ClassicalConnective make_classical_connective(const std::string& name,
                                                     std::size_t k = 2) {
    const std::size_t rows = std::size_t(1) << k;
    std::vector<std::uint8_t> table(rows, 0);
    if (name == "and") {
        table[rows - 1] = 1;
    } else if (name == "or") {
        for (std::size_t r = 1; r < rows; ++r) table[r] = 1;
    } else if (name == "xor") {
        for (std::size_t r = 0; r < rows; ++r)
            table[r] = std::uint8_t(__builtin_popcountll(r) & 1);
    } else if (name == "nand") {
        for (std::size_t r = 0; r + 1 < rows; ++r) table[r] = 1;
    } else {
        throw domain_error("unknown classical connective: " + name);
    }
    return ClassicalConnective(k, std::move(table), name);
}

namespace detail {

// iterate all index tuples of the given radices; f receives the tuple
template <typename F>
void for_each_tuple(const std::vector<std::size_t>& radices, F&& f) {
    std::vector<std::size_t> idx(radices.size(), 0);
    while (true) {
        f(idx);
        std::size_t i = 0;
        while (i < radices.size() && ++idx[i] == radices[i]) idx[i++] = 0;
        if (i == radices.size()) break;
    }
}

inline void check_composition_size(std::size_t product) {
    if (product > kCompositionCap)
        throw capacity_error("composition: product class exceeds size cap");
}

}  // namespace detail

inline ConceptClass compose_concepts(const ClassicalConnective& u,
                                     const std::vector<ConceptClass>& cs) {
    if (cs.size() != u.arity)
        throw dimension_error("compose_concepts: class count != arity");
    const FiniteSpace& space = cs.front().space();
    std::size_t product = 1;
    std::vector<std::size_t> radices;
    for (const auto& c : cs) {
        if (&c.space() != &space)
            throw domain_error("compose_concepts: classes on different spaces");
        if (c.empty()) throw empty_class_error("compose_concepts: empty class");
        product *= c.size();
        radices.push_back(c.size());
    }
    detail::check_composition_size(product);

    std::vector<Concept> out;
    out.reserve(product);
    detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::uint8_t> bits(space.size());
        for (std::size_t x = 0; x < space.size(); ++x) {
            std::size_t packed = 0;
            for (std::size_t i = 0; i < cs.size(); ++i)
                if (cs[i].concepts()[idx[i]].membership[x])
                    packed |= std::size_t(1) << i;
            bits[x] = u(packed);
        }
        out.emplace_back(std::move(bits));
    });
    return ConceptClass(space, std::move(out));
}

// smallest integer alpha with k < alpha / log(e * alpha)
inline std::size_t alpha_k(std::size_t k, const ConstantsConfig& cfg = {}) {
    if (k < 2) throw domain_error("alpha_k: k must be >= 2");
    for (std::size_t a = 1;; ++a) {
        double denom = cfg.log(std::exp(1.0) * double(a));
        if (denom > 0.0 && double(k) < double(a) / denom) return a;
    }
}

inline std::size_t vc_composition_bound(std::size_t d, std::size_t k,
                                        const ConstantsConfig& cfg = {}) {
    if (d < 1) throw domain_error("vc_composition_bound: d must be >= 1");
    return d * alpha_k(k, cfg);
}

inline FunctionClass compose_functions(const ContinuousConnective& u,
                                       const std::vector<FunctionClass>& fs) {
    if (fs.size() != u.arity())
        throw dimension_error("compose_functions: class count != arity");
    const FiniteSpace& space = fs.front().space();
    std::size_t product = 1;
    std::vector<std::size_t> radices;
    for (const auto& f : fs) {
        if (&f.space() != &space)
            throw domain_error("compose_functions: classes on different spaces");
        if (f.empty()) throw empty_class_error("compose_functions: empty class");
        product *= f.size();
        radices.push_back(f.size());
    }
    detail::check_composition_size(product);

    std::vector<FunctionTable> out;
    out.reserve(product);
    std::vector<double> args(fs.size());
    detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
        std::vector<double> vals(space.size());
        for (std::size_t x = 0; x < space.size(); ++x) {
            for (std::size_t i = 0; i < fs.size(); ++i)
                args[i] = fs[i].functions()[idx[i]].values[x];
            vals[x] = u(args);
        }
        out.emplace_back(std::move(vals));
    });
    return FunctionClass(space, std::move(out));
}

// delta(eps/2) * eps / (2k): the modulus of the induced product-class map
inline double modulus_transfer(const ContinuousConnective::Modulus& delta,
                               std::size_t k, double eps) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw domain_error("modulus_transfer: eps must be in (0,1]");
    double d = delta(eps / 2.0);
    if (!(d > 0.0 && d <= 1.0))
        throw domain_error("modulus_transfer: modulus value outside (0,1]");
    return d * eps / (2.0 * double(k));
}

inline double modulus_transfer(const ContinuousConnective& u, double eps) {
    return u.modulus(eps / 2.0) * eps / (2.0 * double(u.arity()));
}

struct ContinuityReport {
    std::vector<double> eps_values;
    std::vector<std::size_t> violations;  // per eps
    std::size_t samples_per_eps = 0;
    std::size_t total_violations = 0;
};

// Seeded check that d2(x,y) < delta(eps) implies |u(x)-u(y)| < eps.
// Half the pairs are drawn with radius in [0.9*delta, delta) to probe the
// tight region; clamping into the cube only shrinks distances.
inline ContinuityReport verify_uniform_continuity(
    const ContinuousConnective& u, const ContinuousConnective::Modulus& delta,
    const std::vector<double>& eps_list, std::size_t samples,
    std::uint64_t seed) {
    if (samples < 1)
        throw domain_error("verify_uniform_continuity: samples must be >= 1");
    ContinuityReport rep;
    rep.samples_per_eps = samples;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t k = u.arity();
    std::vector<double> x(k), y(k), dir(k);
    for (double eps : eps_list) {
        double d = delta(eps);
        std::size_t bad = 0;
        for (std::size_t t = 0; t < samples; ++t) {
            for (std::size_t i = 0; i < k; ++i) x[i] = unit(rng);
            double norm = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                dir[i] = gauss(rng);
                norm += dir[i] * dir[i];
            }
            norm = std::sqrt(norm);
            if (norm == 0.0) norm = 1.0;
            double r = (t % 2 == 0) ? unit(rng) * 0.9 * d
                                    : (0.9 + 0.1 * unit(rng)) * d;
            if (r >= d) r = std::nextafter(d, 0.0);
            for (std::size_t i = 0; i < k; ++i)
                y[i] = std::clamp(x[i] + r * dir[i] / norm, 0.0, 1.0);
            double dist = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                dist += (x[i] - y[i]) * (x[i] - y[i]);
            dist = std::sqrt(dist);
            if (!(dist < d)) continue;
            if (!(std::abs(u(x) - u(y)) < eps)) ++bad;
        }
        rep.eps_values.push_back(eps);
        rep.violations.push_back(bad);
        rep.total_violations += bad;
    }
    return rep;
}

inline ContinuityReport verify_uniform_continuity(const ContinuousConnective& u,
                                                  const std::vector<double>& eps_list,
                                                  std::size_t samples,
                                                  std::uint64_t seed) {
    return verify_uniform_continuity(
        u, [&u](double e) { return u.modulus(e); }, eps_list, samples, seed);
}

struct PhiModulusReport {
    std::size_t pairs_tested = 0;
    std::size_t pairs_in_threshold = 0;
    std::size_t violations = 0;
};

// Whenever the L2 product distance between tuples falls under the transferred
// modulus, the composed tables must be within eps in L2(mu).
inline PhiModulusReport verify_phi_modulus(const ContinuousConnective& u,
                                           const std::vector<FunctionClass>& fs,
                                           const std::vector<double>& eps_list,
                                           std::size_t trials, std::uint64_t seed) {
    if (fs.size() != u.arity())
        throw dimension_error("verify_phi_modulus: class count != arity");
    const FiniteSpace& space = fs.front().space();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto compose_tuple = [&](const std::vector<std::size_t>& idx) {
        std::vector<double> vals(space.size());
        std::vector<double> args(fs.size());
        for (std::size_t x = 0; x < space.size(); ++x) {
            for (std::size_t i = 0; i < fs.size(); ++i)
                args[i] = fs[i].functions()[idx[i]].values[x];
            vals[x] = u(args);
        }
        return FunctionTable(std::move(vals));
    };

    PhiModulusReport rep;
    for (double eps : eps_list) {
        const double threshold = modulus_transfer(u, eps);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<std::size_t> a(fs.size()), b(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i)
                a[i] = std::size_t(unit(rng) * double(fs[i].size())) % fs[i].size();
            // half the pairs perturb one coordinate to raise the chance of
            // landing under the tiny threshold
            if (t % 2 == 0) {
                b = a;
                std::size_t i = std::size_t(unit(rng) * double(fs.size())) % fs.size();
                b[i] = std::size_t(unit(rng) * double(fs[i].size())) % fs[i].size();
            } else {
                for (std::size_t i = 0; i < fs.size(); ++i)
                    b[i] = std::size_t(unit(rng) * double(fs[i].size())) % fs[i].size();
            }
            std::vector<double> comps;
            for (std::size_t i = 0; i < fs.size(); ++i)
                comps.push_back(l2_distance(fs[i].functions()[a[i]],
                                            fs[i].functions()[b[i]], space));
            ++rep.pairs_tested;
            if (!(l2_product_distance(comps) < threshold)) continue;
            ++rep.pairs_in_threshold;
            double out = l2_distance(compose_tuple(a), compose_tuple(b), space);
            if (!(out < eps)) ++rep.violations;
        }
    }
    return rep;
}

struct CoveringChainReport {
    double eps = 0.0;
    double transferred_modulus = 0.0;
    double factor_eps = 0.0;  // transferred modulus / sqrt(k)
    std::size_t composed_cover = 0;
    std::vector<std::size_t> factor_covers;
    std::uint64_t factor_product = 0;
    bool inequality_holds = false;
};

// N(u(F_1,...,F_k), eps, L2) <= prod_i N(F_i, delta(eps,k)/sqrt(k), L2)
inline CoveringChainReport verify_covering_chain(const ContinuousConnective& u,
                                                 const std::vector<FunctionClass>& fs,
                                                 double eps) {
    CoveringChainReport rep;
    rep.eps = eps;
    rep.transferred_modulus = modulus_transfer(u, eps);
    rep.factor_eps = rep.transferred_modulus / std::sqrt(double(fs.size()));

    auto composed = compose_functions(u, fs);
    auto composed_metric = metric_from_class(composed, DistanceKind::L2);
    rep.composed_cover = covering_number(composed_metric, eps).number;

    rep.factor_product = 1;
    for (const auto& f : fs) {
        auto m = metric_from_class(f, DistanceKind::L2);
        std::size_t ni = covering_number(m, rep.factor_eps).number;
        rep.factor_covers.push_back(ni);
        rep.factor_product *= ni;
    }
    rep.inequality_holds = rep.composed_cover <= rep.factor_product;
    return rep;
}

struct MainBoundInputs {
    double eps = 0.0;
    std::size_t k = 2;
    ContinuousConnective::Modulus delta;
    std::vector<std::size_t> fat_values;  // fat at the inner scale, one per class
    ConstantsConfig cfg;
};

// c * delta(eps/(2c')) * eps / (k sqrt(k)): the scale at which the component
// fat dimensions enter the composition bound
inline double main_bound_scale(double eps, std::size_t k,
                               const ContinuousConnective::Modulus& delta,
                               const ConstantsConfig& cfg) {
    cfg.validate();
    double inner = eps / (2.0 * cfg.c_prime);
    if (!(inner > 0.0 && inner <= 1.0))
        throw domain_error("main_bound_scale: eps/(2c') outside (0,1]");
    double d = delta(inner);
    if (!(d > 0.0 && d <= 1.0))
        throw domain_error("main_bound_scale: modulus value outside (0,1]");
    return cfg.c * d * eps / (double(k) * std::sqrt(double(k)));
}

inline double main_bound_rhs(const MainBoundInputs& in) {
    in.cfg.validate();
    if (in.fat_values.size() != in.k)
        throw dimension_error("main_bound_rhs: fat_values length != k");
    double scale = main_bound_scale(in.eps, in.k, in.delta, in.cfg);
    if (!(scale > 0.0 && scale <= 1.0))
        throw domain_error("main_bound_rhs: inner scale outside (0,1]");
    double d = in.delta(in.eps / (2.0 * in.cfg.c_prime));
    double arg = 4.0 * in.cfg.c_prime * double(in.k) * std::sqrt(double(in.k)) /
                 (d * in.eps);
    if (!(in.cfg.log(arg) > 0.0) || !(in.cfg.log(2.0) > 0.0))
        throw domain_error("main_bound_rhs: log argument not above 1");
    double multiplier =
        in.cfg.K * in.cfg.log(arg) / (in.cfg.K_prime * in.cfg.log(2.0));
    double sum = 0.0;
    for (std::size_t v : in.fat_values) sum += double(v);
    return multiplier * sum;
}

}  // namespace shatterlab
