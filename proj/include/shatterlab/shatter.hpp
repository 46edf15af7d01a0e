#pragma once

// Exact shattering checks, VC dimension, growth function, Sauer bound,
// epsilon-shattering and the fat-shattering dimension, with certificates.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "shatterlab/core.hpp"

namespace shatterlab {

struct DimensionResult {
    std::size_t value = 0;
    PointSubset certificate;                     // a subset achieving the value
    std::optional<std::vector<double>> witness;  // fat dimension only
    bool exhausted = false;                      // every larger subset refuted
};

struct GrowthTable {
    std::map<std::size_t, std::uint64_t> entries;  // n -> pi(n;C)
};

namespace detail {

// restriction of a concept to S, packed little-endian into a word (|S| <= 63)
inline std::uint64_t restrict_pattern(const Concept& a, const PointSubset& s) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (a.membership[s.indices[i]]) p |= std::uint64_t(1) << i;
    return p;
}

// number of distinct restrictions of C to S
inline std::uint64_t pattern_count(const ConceptClass& c, const PointSubset& s) {
    std::unordered_set<std::uint64_t> pats;
    const std::uint64_t full = std::uint64_t(1) << s.size();
    for (const auto& a : c.concepts()) {
        pats.insert(restrict_pattern(a, s));
        if (pats.size() == full) break;
    }
    return pats.size();
}

// all size-n index subsets of {0,...,total-1} in lexicographic order, invoking
// f on each; f returns false to stop early
template <typename F>
void for_each_subset(std::size_t total, std::size_t n, F&& f) {
    if (n > total) return;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return;
        // advance to the next combination
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == total - n + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

inline bool shatters(const ConceptClass& c, const PointSubset& s) {
    if (c.empty()) throw empty_class_error("shatters: empty concept class");
    s.check_range(c.space().size());
    if (s.size() >= 64) throw capacity_error("shatters: subset too large");
    return detail::pattern_count(c, s) == (std::uint64_t(1) << s.size());
}

inline GrowthTable growth(const ConceptClass& c, std::size_t n_max) {
    if (c.empty()) throw empty_class_error("growth: empty concept class");
    if (n_max > c.space().size())
        throw domain_error("growth: n_max exceeds point count");
    GrowthTable table;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::uint64_t cap =
            std::min<std::uint64_t>(std::uint64_t(1) << n, c.size());
        std::uint64_t best = 0;
        detail::for_each_subset(c.space().size(), n, [&](const auto& idx) {
            PointSubset s{std::vector<std::size_t>(idx)};
            best = std::max(best, detail::pattern_count(c, s));
            return best < cap;  // stop once the level maximum is reached
        });
        table.entries[n] = best;
    }
    return table;
}

// Largest shattered subset, found level by level. Each shattered size-n
// subset is extended by indices beyond its maximum; any shattered superset
// has a shattered prefix, so the level enumeration is complete.
inline DimensionResult vc_dimension(const ConceptClass& c) {
    if (c.empty()) throw empty_class_error("vc_dimension: empty concept class");
    const std::size_t n_pts = c.space().size();
    DimensionResult res;
    res.value = 0;
    res.certificate = PointSubset{};
    res.exhausted = true;

    std::vector<std::vector<std::size_t>> level = {{}};  // shattered, lex order
    while (!level.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : level) {
            std::size_t start = s.empty() ? 0 : s.back() + 1;
            for (std::size_t j = start; j < n_pts; ++j) {
                auto t = s;
                t.push_back(j);
                if (shatters(c, PointSubset(t))) next.push_back(std::move(t));
            }
        }
        if (next.empty()) break;
        res.value = next.front().size();
        res.certificate = PointSubset(next.front());
        level = std::move(next);
    }
    return res;
}

// (en/d)^d for n >= d >= 1
inline double sauer_bound(std::size_t n, std::size_t d) {
    if (d == 0 || n < d) throw domain_error("sauer_bound: requires n >= d >= 1");
    return std::pow(std::exp(1.0) * double(n) / double(d), double(d));
}

namespace detail {

// One candidate witness value for a coordinate: the midpoint of two achieved
// values separated by >= 2*eps, together with the induced per-function sign.
// sign: 0 = below (f <= c-eps), 1 = above (f >= c+eps), 2 = neither.
struct WitnessCandidate {
    double value;
    std::vector<std::uint8_t> signs;
};

inline std::vector<WitnessCandidate> witness_candidates(
    const FunctionClass& f, std::size_t point, double eps) {
    std::vector<double> vals;
    vals.reserve(f.size());
    for (const auto& t : f.functions()) vals.push_back(t.values[point]);
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<WitnessCandidate> out;
    std::set<std::vector<std::uint8_t>> seen;
    for (std::size_t lo = 0; lo < sorted.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < sorted.size(); ++hi) {
            if (sorted[hi] - sorted[lo] < 2.0 * eps) continue;
            const double c = (sorted[lo] + sorted[hi]) / 2.0;
            if (c < 0.0 || c > 1.0) continue;
            WitnessCandidate w;
            w.value = c;
            w.signs.resize(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (vals[i] >= c + eps)
                    w.signs[i] = 1;
                else if (vals[i] <= c - eps)
                    w.signs[i] = 0;
                else
                    w.signs[i] = 2;
            }
            if (seen.insert(w.signs).second) out.push_back(std::move(w));
        }
    }
    return out;
}

// Depth-first search over per-coordinate witness candidates. A witness for a
// prefix of coordinates must already realize every pattern on that prefix,
// which prunes most branches.
struct EpsShatterSearch {
    const std::vector<std::vector<WitnessCandidate>>* cands;
    std::size_t n;
    std::size_t n_funcs;
    std::vector<double> chosen;
    std::vector<std::uint64_t> patterns;  // per function, bits of decided coords
    std::vector<std::uint8_t> alive;
    std::optional<std::vector<double>> found;

    bool run() {
        chosen.assign(n, 0.0);
        patterns.assign(n_funcs, 0);
        alive.assign(n_funcs, 1);
        dfs(0);
        return found.has_value();
    }

    void dfs(std::size_t depth) {
        if (found) return;
        if (depth == n) {
            found = chosen;
            return;
        }
        const std::uint64_t need = std::uint64_t(1) << (depth + 1);
        for (const auto& cand : (*cands)[depth]) {
            std::vector<std::uint64_t> next_pat(patterns);
            std::vector<std::uint8_t> next_alive(alive);
            std::unordered_set<std::uint64_t> prefixes;
            for (std::size_t i = 0; i < n_funcs; ++i) {
                if (!next_alive[i]) continue;
                if (cand.signs[i] == 2) {
                    next_alive[i] = 0;
                    continue;
                }
                if (cand.signs[i] == 1)
                    next_pat[i] |= std::uint64_t(1) << depth;
                prefixes.insert(next_pat[i]);
            }
            if (prefixes.size() < need) continue;
            chosen[depth] = cand.value;
            std::swap(patterns, next_pat);
            std::swap(alive, next_alive);
            dfs(depth + 1);
            std::swap(patterns, next_pat);
            std::swap(alive, next_alive);
            if (found) return;
        }
    }
};

}  // namespace detail

inline std::pair<bool, std::optional<std::vector<double>>> eps_shatters(
    const FunctionClass& f, const PointSubset& s, double eps) {
    if (f.empty()) throw empty_class_error("eps_shatters: empty function class");
    if (!(eps > 0.0 && eps <= 1.0))
        throw domain_error("eps_shatters: eps must be in (0,1]");
    s.check_range(f.space().size());
    if (s.size() == 0) return {true, std::vector<double>{}};
    if (s.size() >= 63) throw capacity_error("eps_shatters: subset too large");

    std::vector<std::vector<detail::WitnessCandidate>> cands;
    cands.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        cands.push_back(detail::witness_candidates(f, s.indices[i], eps));
        if (cands.back().empty()) return {false, std::nullopt};
    }
    detail::EpsShatterSearch search;
    search.cands = &cands;
    search.n = s.size();
    search.n_funcs = f.size();
    if (search.run()) return {true, search.found};
    return {false, std::nullopt};
}

inline DimensionResult fat_dimension(const FunctionClass& f, double eps) {
    if (f.empty()) throw empty_class_error("fat_dimension: empty function class");
    if (!(eps > 0.0 && eps <= 1.0))
        throw domain_error("fat_dimension: eps must be in (0,1]");
    const std::size_t n_pts = f.space().size();
    DimensionResult res;
    res.value = 0;
    res.certificate = PointSubset{};
    res.witness = std::vector<double>{};
    res.exhausted = true;

    std::vector<std::vector<std::size_t>> level = {{}};
    while (!level.empty()) {
        std::vector<std::vector<std::size_t>> next;
        std::optional<std::vector<double>> first_witness;
        for (const auto& s : level) {
            std::size_t start = s.empty() ? 0 : s.back() + 1;
            for (std::size_t j = start; j < n_pts; ++j) {
                auto t = s;
                t.push_back(j);
                auto [ok, w] = eps_shatters(f, PointSubset(t), eps);
                if (ok) {
                    if (next.empty()) first_witness = w;
                    next.push_back(std::move(t));
                }
            }
        }
        if (next.empty()) break;
        res.value = next.front().size();
        res.certificate = PointSubset(next.front());
        res.witness = first_witness;
        level = std::move(next);
    }
    return res;
}

}  // namespace shatterlab
