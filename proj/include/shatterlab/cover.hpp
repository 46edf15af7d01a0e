#pragma once

// Covering and packing numbers on finite metric spaces. Exact covers are
// minimum dominating sets solved by branch-and-bound; greedy covers and
// 2*eps-separated packings provide the two-sided certificates. Also the
// entropy-bound evaluators with their explicit constant configuration.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "shatterlab/core.hpp"

namespace shatterlab {

constexpr std::size_t kExactCoverCap = 4096;
constexpr double kTriangleTolerance = 1e-9;

class FiniteMetric {
public:
    explicit FiniteMetric(std::vector<std::vector<double>> dist)
        : dist_(std::move(dist)) {
        validate();
    }

    std::size_t size() const { return dist_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }
    const std::vector<std::vector<double>>& matrix() const { return dist_; }

    double diameter() const {
        double m = 0.0;
        for (const auto& row : dist_)
            for (double d : row) m = std::max(m, d);
        return m;
    }

private:
    void validate() const {
        const std::size_t n = dist_.size();
        if (n == 0) throw domain_error("FiniteMetric: empty");
        for (std::size_t i = 0; i < n; ++i) {
            if (dist_[i].size() != n)
                throw dimension_error("FiniteMetric: matrix not square");
            if (dist_[i][i] != 0.0)
                throw domain_error("FiniteMetric: nonzero diagonal");
            for (std::size_t j = 0; j < n; ++j) {
                if (dist_[i][j] < 0.0)
                    throw domain_error("FiniteMetric: negative distance");
                if (dist_[i][j] != dist_[j][i])
                    throw domain_error("FiniteMetric: asymmetric");
            }
        }
        // full triangle check is cubic; sample triples on larger instances
        if (n <= 512) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (dist_[i][j] > dist_[i][k] + dist_[k][j] + kTriangleTolerance)
                            throw domain_error("FiniteMetric: triangle inequality violated");
        } else {
            std::uint64_t state = 0x9e3779b97f4a7c15ull;
            auto next = [&state, n]() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                return std::size_t(state % n);
            };
            for (int t = 0; t < 100000; ++t) {
                std::size_t i = next(), j = next(), k = next();
                if (dist_[i][j] > dist_[i][k] + dist_[k][j] + kTriangleTolerance)
                    throw domain_error("FiniteMetric: triangle inequality violated");
            }
        }
    }

    std::vector<std::vector<double>> dist_;
};

enum class DistanceKind { L2, ExpectedAbs, SymDiff };

enum class CoverMethod { Exact, Greedy };

struct CoverResult {
    std::size_t number = 0;
    std::vector<std::size_t> centers;
    CoverMethod method = CoverMethod::Exact;
    std::size_t lower_bound = 0;  // from 2*eps-separated packing
    bool fell_back_to_greedy = false;
};

// Absolute constants of the Mendelson-Vershynin and Talagrand theorems,
// supplied by the user; the library derives nothing about them.
struct ConstantsConfig {
    double c = 1.0;
    double K = 1.0;
    double c_prime = 1.0;
    double K_prime = 1.0;
    double log_base = 0.0;  // 0 => natural log

    void validate() const {
        if (c <= 0 || K <= 0 || c_prime <= 0 || K_prime <= 0)
            throw domain_error("ConstantsConfig: constants must be positive");
        if (log_base != 0.0 && (log_base <= 1.0))
            throw domain_error("ConstantsConfig: log base must exceed 1");
    }

    double log(double x) const {
        return log_base == 0.0 ? std::log(x) : std::log(x) / std::log(log_base);
    }
};

inline FiniteMetric metric_from_class(const FunctionClass& f, DistanceKind which) {
    if (f.empty()) throw empty_class_error("metric_from_class: empty class");
    if (which == DistanceKind::SymDiff && !f.is_binary())
        throw domain_error("metric_from_class: symdiff requires binary tables");
    const std::size_t n = f.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v;
            switch (which) {
                case DistanceKind::L2:
                    v = l2_distance(f.functions()[i], f.functions()[j], f.space());
                    break;
                case DistanceKind::ExpectedAbs:
                case DistanceKind::SymDiff:
                    v = expected_abs_diff(f.functions()[i], f.functions()[j],
                                          f.space());
                    break;
                default:
                    v = 0.0;
            }
            d[i][j] = d[j][i] = v;
        }
    }
    return FiniteMetric(std::move(d));
}

// greedy maximal set with pairwise distances >= eps
inline std::size_t packing_number(const FiniteMetric& m, double eps) {
    if (!(eps > 0.0)) throw domain_error("packing_number: eps must be positive");
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool ok = true;
        for (std::size_t c : chosen)
            if (m(i, c) < eps) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(i);
    }
    return chosen.size();
}

namespace detail {

// coverage relation: center j covers i iff d(i,j) < eps (strict)
inline std::vector<std::vector<std::uint64_t>> coverage_masks(
    const FiniteMetric& m, double eps) {
    const std::size_t n = m.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cov(
        n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (m(i, j) < eps) cov[j][i / 64] |= std::uint64_t(1) << (i % 64);
    return cov;
}

inline std::size_t popcount(const std::vector<std::uint64_t>& v) {
    std::size_t c = 0;
    for (std::uint64_t w : v) c += std::size_t(__builtin_popcountll(w));
    return c;
}

inline std::vector<std::size_t> greedy_cover(
    const FiniteMetric& m, double eps,
    const std::vector<std::vector<std::uint64_t>>& cov) {
    const std::size_t n = m.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> uncovered(words, 0);
    for (std::size_t i = 0; i < n; ++i)
        uncovered[i / 64] |= std::uint64_t(1) << (i % 64);
    std::vector<std::size_t> centers;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t gain = 0;
            for (std::size_t w = 0; w < words; ++w)
                gain += std::size_t(__builtin_popcountll(cov[j][w] & uncovered[w]));
            if (gain > best_gain) {
                best_gain = gain;
                best = j;
            }
        }
        centers.push_back(best);
        for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~cov[best][w];
        remaining -= best_gain;
    }
    return centers;
}

struct ExactCoverSearch {
    const std::vector<std::vector<std::uint64_t>>* cov;
    std::size_t n;
    std::size_t words;
    std::size_t best;
    std::vector<std::size_t> best_centers;
    std::vector<std::size_t> current;

    void solve(const std::vector<std::uint64_t>& uncovered, std::size_t covered_so_far) {
        std::size_t remaining = popcount(uncovered);
        if (remaining == 0) {
            if (current.size() < best) {
                best = current.size();
                best_centers = current;
            }
            return;
        }
        // simple bound: best possible gain per additional center
        std::size_t max_gain = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t g = 0;
            for (std::size_t w = 0; w < words; ++w)
                g += std::size_t(__builtin_popcountll((*cov)[j][w] & uncovered[w]));
            max_gain = std::max(max_gain, g);
        }
        if (max_gain == 0) return;  // cannot happen: every point covers itself
        std::size_t lb = (remaining + max_gain - 1) / max_gain;
        if (current.size() + lb >= best) return;

        // branch on the uncovered element with fewest candidate centers
        std::size_t pick = n, pick_count = n + 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(uncovered[i / 64] >> (i % 64) & 1)) continue;
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < n; ++j)
                if ((*cov)[j][i / 64] >> (i % 64) & 1) ++cnt;
            if (cnt < pick_count) {
                pick_count = cnt;
                pick = i;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!((*cov)[j][pick / 64] >> (pick % 64) & 1)) continue;
            std::vector<std::uint64_t> next(uncovered);
            for (std::size_t w = 0; w < words; ++w) next[w] &= ~(*cov)[j][w];
            current.push_back(j);
            solve(next, covered_so_far);
            current.pop_back();
        }
    }
};

}  // namespace detail

inline CoverResult covering_number(const FiniteMetric& m, double eps,
                                   CoverMethod mode = CoverMethod::Exact) {
    if (!(eps > 0.0)) throw domain_error("covering_number: eps must be positive");
    const std::size_t n = m.size();
    auto cov = detail::coverage_masks(m, eps);

    CoverResult res;
    res.lower_bound = packing_number(m, 2.0 * eps);

    auto greedy = detail::greedy_cover(m, eps, cov);
    if (mode == CoverMethod::Greedy || n > kExactCoverCap) {
        res.method = CoverMethod::Greedy;
        res.fell_back_to_greedy = (mode == CoverMethod::Exact);
        res.centers = std::move(greedy);
        res.number = res.centers.size();
        return res;
    }

    detail::ExactCoverSearch search;
    search.cov = &cov;
    search.n = n;
    search.words = (n + 63) / 64;
    search.best = greedy.size();
    search.best_centers = greedy;
    std::vector<std::uint64_t> all(search.words, 0);
    for (std::size_t i = 0; i < n; ++i) all[i / 64] |= std::uint64_t(1) << (i % 64);
    if (search.best > res.lower_bound)  // greedy may already be optimal
        search.solve(all, 0);
    res.method = CoverMethod::Exact;
    res.centers = search.best_centers;
    res.number = search.best;
    std::sort(res.centers.begin(), res.centers.end());
    return res;
}

// checks every point is strictly within eps of some center
inline bool cover_is_valid(const FiniteMetric& m, const std::vector<std::size_t>& centers,
                           double eps) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool ok = false;
        for (std::size_t c : centers)
            if (m(i, c) < eps) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

constexpr std::size_t kProductPointCap = 100000;

struct ProductCoverReport {
    std::size_t product_cover = 0;
    std::vector<std::size_t> factor_covers;  // N(M_i, eps/sqrt(k))
    std::uint64_t factor_product = 0;
    bool inequality_holds = false;
};

// L2 product of k metric spaces, points enumerated explicitly
inline FiniteMetric product_metric(const std::vector<FiniteMetric>& ms) {
    if (ms.size() < 2) throw domain_error("product_metric: need k >= 2 spaces");
    std::size_t total = 1;
    for (const auto& m : ms) {
        total *= m.size();
        if (total > kProductPointCap)
            throw capacity_error("product_metric: product exceeds point cap");
    }
    // mixed-radix index decoding
    std::vector<std::vector<std::size_t>> coords(total,
                                                 std::vector<std::size_t>(ms.size()));
    for (std::size_t p = 0; p < total; ++p) {
        std::size_t rem = p;
        for (std::size_t i = ms.size(); i-- > 0;) {
            coords[p][i] = rem % ms[i].size();
            rem /= ms[i].size();
        }
    }
    std::vector<std::vector<double>> d(total, std::vector<double>(total, 0.0));
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = p + 1; q < total; ++q) {
            double s = 0.0;
            for (std::size_t i = 0; i < ms.size(); ++i) {
                double di = ms[i](coords[p][i], coords[q][i]);
                s += di * di;
            }
            d[p][q] = d[q][p] = std::sqrt(s);
        }
    }
    return FiniteMetric(std::move(d));
}

inline ProductCoverReport check_product_cover(const std::vector<FiniteMetric>& ms,
                                              double eps) {
    if (ms.size() < 2) throw domain_error("check_product_cover: need k >= 2");
    if (!(eps > 0.0)) throw domain_error("check_product_cover: eps must be positive");
    ProductCoverReport rep;
    auto prod = product_metric(ms);
    rep.product_cover = covering_number(prod, eps).number;
    const double factor_eps = eps / std::sqrt(double(ms.size()));
    rep.factor_product = 1;
    for (const auto& m : ms) {
        std::size_t ni = covering_number(m, factor_eps).number;
        rep.factor_covers.push_back(ni);
        rep.factor_product *= ni;
    }
    rep.inequality_holds = rep.product_cover <= rep.factor_product;
    return rep;
}

struct ImageCoverReport {
    bool continuity_ok = false;     // (delta, eps) verified on all pairs
    std::size_t image_cover = 0;    // N(images, eps)
    std::size_t domain_cover = 0;   // N(M, delta)
    bool inequality_holds = false;  // only meaningful when continuity_ok
};

inline ImageCoverReport check_image_cover(const FiniteMetric& m,
                                          const FiniteMetric& images,
                                          const std::vector<std::size_t>& map,
                                          double delta_of_eps, double eps) {
    if (map.size() != m.size())
        throw dimension_error("check_image_cover: map size != domain size");
    for (std::size_t i : map)
        if (i >= images.size())
            throw domain_error("check_image_cover: map index out of range");
    if (!(eps > 0.0) || !(delta_of_eps > 0.0))
        throw domain_error("check_image_cover: eps, delta must be positive");

    ImageCoverReport rep;
    rep.continuity_ok = true;
    for (std::size_t i = 0; i < m.size() && rep.continuity_ok; ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m(i, j) < delta_of_eps && !(images(map[i], map[j]) < eps)) {
                rep.continuity_ok = false;
                break;
            }
    rep.image_cover = covering_number(images, eps).number;
    rep.domain_cover = covering_number(m, delta_of_eps).number;
    if (rep.continuity_ok)
        rep.inequality_holds = rep.image_cover <= rep.domain_cover;
    return rep;
}

// (2/eps)^(K * fat_at_c_eps); the caller computes fat at scale c*eps
inline double mv_entropy_bound(std::size_t fat_at_c_eps, double eps,
                               const ConstantsConfig& cfg) {
    cfg.validate();
    if (!(eps > 0.0 && eps < 2.0))
        throw domain_error("mv_entropy_bound: eps must be in (0,2)");
    return std::pow(2.0 / eps, cfg.K * double(fat_at_c_eps));
}

// 2^(K' * fat_at_cp_eps)
inline double talagrand_lower_bound(std::size_t fat_at_cp_eps,
                                    const ConstantsConfig& cfg) {
    cfg.validate();
    return std::pow(2.0, cfg.K_prime * double(fat_at_cp_eps));
}

struct MetricEntropyReport {
    std::vector<double> eps_values;
    std::vector<std::size_t> covering_numbers;
};

// covering numbers of a concept class under d = mu(A triangle B)
inline MetricEntropyReport metric_entropy_condition(const ConceptClass& c,
                                                    const std::vector<double>& eps_list) {
    if (c.empty()) throw empty_class_error("metric_entropy_condition: empty class");
    auto metric = metric_from_class(indicator_class(c), DistanceKind::SymDiff);
    MetricEntropyReport rep;
    for (double eps : eps_list) {
        rep.eps_values.push_back(eps);
        rep.covering_numbers.push_back(covering_number(metric, eps).number);
    }
    return rep;
}

}  // namespace shatterlab
