// shatterlab command-line front end: loads class documents, runs the
// dimension / covering / composition computations, and emits reports.
//
// Exit codes: 0 success, 1 domain or validation error, 2 capacity error,
// 3 a verify run reported violations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shatterlab/compose.hpp"
#include "shatterlab/cover.hpp"
#include "shatterlab/families.hpp"
#include "shatterlab/io.hpp"
#include "shatterlab/pacsim.hpp"
#include "shatterlab/shatter.hpp"

using nlohmann::json;
using namespace shatterlab;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out_path;
    double tolerance = 0.0;
    int threads = 0;  // accepted for compatibility; computation is deterministic
    ConstantsConfig cfg;
};

void emit(const GlobalOpts& g, const json& report) {
    std::ostringstream os;
    if (g.format == "table") {
        for (auto it = report.begin(); it != report.end(); ++it)
            os << it.key() << "\t" << it.value().dump() << "\n";
    } else if (g.format == "csv") {
        os << "#schema=1\n";
        for (auto it = report.begin(); it != report.end(); ++it)
            os << it.key() << "," << it.value().dump() << "\n";
    } else {
        os << report.dump(2) << "\n";
    }
    if (g.out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(g.out_path);
        if (!f) throw error("cannot open output path " + g.out_path);
        f << os.str();
    }
}

json subset_to_json(const PointSubset& s, const FiniteSpace& space) {
    json arr = json::array();
    for (std::size_t i : s.indices) arr.push_back(space.label(i));
    return arr;
}

const ConceptClass& require_concepts(const ClassDocument& doc) {
    if (!doc.concepts) throw domain_error("input document has no 'concepts'");
    return *doc.concepts;
}

// functions if present, else indicators of the concepts
FunctionClass document_functions(const ClassDocument& doc) {
    if (doc.functions) return *doc.functions;
    if (doc.concepts) return indicator_class(*doc.concepts);
    throw domain_error("input document has neither 'functions' nor 'concepts'");
}

DistanceKind parse_distance(const std::string& s) {
    if (s == "l2") return DistanceKind::L2;
    if (s == "abs") return DistanceKind::ExpectedAbs;
    if (s == "symdiff") return DistanceKind::SymDiff;
    throw domain_error("unknown distance kind: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact learning-theory computations on finite classes"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("SHATTERLAB_THREADS")) g.threads = std::atoi(env);
    app.add_option("--seed", g.seed, "RNG seed for randomized commands")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format: json|table|csv")
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write report to this path");
    app.add_option("--tolerance", g.tolerance,
                   "relax strict threshold comparisons by this amount")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (values unaffected)");
    app.add_option("--c", g.cfg.c, "Mendelson-Vershynin constant c");
    app.add_option("--K", g.cfg.K, "Mendelson-Vershynin constant K");
    app.add_option("--cp", g.cfg.c_prime, "Talagrand constant c'");
    app.add_option("--Kp", g.cfg.K_prime, "Talagrand constant K'");
    double log_base = 0.0;
    app.add_option("--log-base", log_base, "log base for bounds (0 = natural)");

    std::function<int()> action;

    // ---- vc ----
    {
        auto* cmd = app.add_subcommand("vc", "VC dimension with certificate");
        auto input = std::make_shared<std::string>();
        cmd->add_option("--input", *input, "class-definition JSON")->required();
        cmd->callback([&, input] {
            action = [&, input] {
                auto doc = load_class_document(*input);
                auto res = vc_dimension(require_concepts(doc));
                emit(g, json{{"value", res.value},
                             {"certificate", subset_to_json(res.certificate, *doc.space)},
                             {"exhausted", res.exhausted}});
                return 0;
            };
        });
    }

    // ---- fat ----
    {
        auto* cmd = app.add_subcommand("fat", "fat-shattering dimension at scale eps");
        auto input = std::make_shared<std::string>();
        auto eps = std::make_shared<double>(0.1);
        cmd->add_option("--input", *input)->required();
        cmd->add_option("--eps", *eps)->required();
        cmd->callback([&, input, eps] {
            action = [&, input, eps] {
                auto doc = load_class_document(*input);
                auto fc = document_functions(doc);
                double e = std::max(*eps - g.tolerance, 1e-15);
                auto res = fat_dimension(fc, e);
                json rep{{"value", res.value},
                         {"certificate", subset_to_json(res.certificate, *doc.space)},
                         {"exhausted", res.exhausted}};
                if (res.witness) rep["witness"] = *res.witness;
                emit(g, rep);
                return 0;
            };
        });
    }

    // ---- growth ----
    {
        auto* cmd = app.add_subcommand("growth", "growth function table");
        auto input = std::make_shared<std::string>();
        auto nmax = std::make_shared<int>(-1);
        cmd->add_option("--input", *input)->required();
        cmd->add_option("--nmax", *nmax, "largest n (default: point count)");
        cmd->callback([&, input, nmax] {
            action = [&, input, nmax] {
                auto doc = load_class_document(*input);
                const auto& c = require_concepts(doc);
                std::size_t n = *nmax < 0 ? doc.space->size() : std::size_t(*nmax);
                auto table = growth(c, n);
                json entries = json::object();
                for (const auto& [k, v] : table.entries)
                    entries[std::to_string(k)] = v;
                emit(g, json{{"entries", entries}});
                return 0;
            };
        });
    }

    // ---- sauer ----
    {
        auto* cmd = app.add_subcommand("sauer", "evaluate (en/d)^d");
        auto n = std::make_shared<std::size_t>(), d = std::make_shared<std::size_t>();
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--d", *d)->required();
        cmd->callback([&, n, d] {
            action = [&, n, d] {
                emit(g, json{{"n", *n}, {"d", *d}, {"bound", sauer_bound(*n, *d)}});
                return 0;
            };
        });
    }

    // ---- cover ----
    {
        auto* cmd = app.add_subcommand("cover", "covering number of a class");
        auto input = std::make_shared<std::string>();
        auto eps = std::make_shared<double>();
        auto dist = std::make_shared<std::string>("l2");
        auto mode = std::make_shared<std::string>("exact");
        cmd->add_option("--input", *input)->required();
        cmd->add_option("--eps", *eps)->required();
        cmd->add_option("--distance", *dist, "l2|abs|symdiff")->capture_default_str();
        cmd->add_option("--mode", *mode, "exact|greedy")->capture_default_str();
        cmd->callback([&, input, eps, dist, mode] {
            action = [&, input, eps, dist, mode] {
                auto doc = load_class_document(*input);
                auto fc = document_functions(doc);
                auto metric = metric_from_class(fc, parse_distance(*dist));
                auto res = covering_number(metric, *eps + g.tolerance,
                                           *mode == "greedy" ? CoverMethod::Greedy
                                                             : CoverMethod::Exact);
                emit(g, json{{"number", res.number},
                             {"centers", res.centers},
                             {"method", res.method == CoverMethod::Exact ? "exact"
                                                                         : "greedy"},
                             {"lower_bound", res.lower_bound},
                             {"fell_back_to_greedy", res.fell_back_to_greedy}});
                return 0;
            };
        });
    }

    // ---- entropy ----
    {
        auto* cmd = app.add_subcommand(
            "entropy", "covering numbers of a concept class under mu(A triangle B)");
        auto input = std::make_shared<std::string>();
        auto eps = std::make_shared<std::vector<double>>();
        cmd->add_option("--input", *input)->required();
        cmd->add_option("--eps", *eps)->required()->expected(-1);
        cmd->callback([&, input, eps] {
            action = [&, input, eps] {
                auto doc = load_class_document(*input);
                std::vector<double> es = *eps;
                for (auto& e : es) e += g.tolerance;
                auto rep = metric_entropy_condition(require_concepts(doc), es);
                emit(g, json{{"eps", rep.eps_values},
                             {"covering_numbers", rep.covering_numbers}});
                return 0;
            };
        });
    }

    // ---- compose-c ----
    {
        auto* cmd = app.add_subcommand("compose-c",
                                       "compose concept classes with a classical connective");
        auto inputs = std::make_shared<std::vector<std::string>>();
        auto conn = std::make_shared<std::string>("and");
        auto table_bits = std::make_shared<std::string>();
        cmd->add_option("--input", *inputs)->required()->expected(-1);
        cmd->add_option("--connective", *conn, "and|or|xor|nand")->capture_default_str();
        cmd->add_option("--table", *table_bits, "custom truth table as 0/1 string");
        cmd->callback([&, inputs, conn, table_bits] {
            action = [&, inputs, conn, table_bits] {
                std::vector<ClassDocument> docs;
                for (const auto& p : *inputs) docs.push_back(load_class_document(p));
                if (docs.size() == 1 && docs.front().concepts) {
                    // single document: compose the class with itself
                    docs.push_back(load_class_document(inputs->front()));
                }
                // all classes must share one space; rebuild on the first
                const FiniteSpace& space = *docs.front().space;
                std::vector<ConceptClass> cs;
                for (auto& d : docs) {
                    const auto& c = require_concepts(d);
                    if (d.space->points() != space.points() ||
                        d.space->weights() != space.weights())
                        throw domain_error("compose-c: inputs define different spaces");
                    cs.emplace_back(space, c.concepts());
                }
                std::size_t k = cs.size();
                ClassicalConnective u =
                    table_bits->empty()
                        ? make_classical_connective(*conn, k)
                        : [&] {
                              std::vector<std::uint8_t> bits;
                              for (char ch : *table_bits) bits.push_back(ch == '1');
                              return ClassicalConnective(k, std::move(bits));
                          }();
                auto composed = compose_concepts(u, cs);
                auto vc = vc_dimension(composed);
                emit(g, json{{"size", composed.size()},
                             {"vc", vc.value},
                             {"certificate", subset_to_json(vc.certificate, space)}});
                return 0;
            };
        });
    }

    // ---- compose-f ----
    {
        auto* cmd = app.add_subcommand("compose-f",
                                       "compose function classes with a continuous connective");
        auto inputs = std::make_shared<std::vector<std::string>>();
        auto conn = std::make_shared<std::string>("mul");
        auto eps = std::make_shared<double>(0.0);
        cmd->add_option("--input", *inputs)->required()->expected(-1);
        cmd->add_option("--connective", *conn, "mul|min|max|mean|neg")
            ->capture_default_str();
        cmd->add_option("--eps", *eps, "also report fat dimension at this scale");
        cmd->callback([&, inputs, conn, eps] {
            action = [&, inputs, conn, eps] {
                std::vector<ClassDocument> docs;
                for (const auto& p : *inputs) docs.push_back(load_class_document(p));
                if (docs.size() == 1) docs.push_back(load_class_document(inputs->front()));
                const FiniteSpace& space = *docs.front().space;
                std::vector<FunctionClass> fs;
                for (auto& d : docs) {
                    if (d.space->points() != space.points() ||
                        d.space->weights() != space.weights())
                        throw domain_error("compose-f: inputs define different spaces");
                    fs.emplace_back(space, document_functions(d).functions());
                }
                auto u = make_continuous_connective(*conn, fs.size());
                auto composed = compose_functions(u, fs);
                json rep{{"size", composed.size()}};
                if (*eps > 0.0) rep["fat"] = fat_dimension(composed, *eps).value;
                emit(g, rep);
                return 0;
            };
        });
    }

    // ---- alpha ----
    {
        auto* cmd = app.add_subcommand("alpha", "smallest alpha with k < alpha/log(e alpha)");
        auto k = std::make_shared<std::size_t>(2);
        cmd->add_option("--k", *k)->required();
        cmd->callback([&, k] {
            action = [&, k] {
                g.cfg.validate();
                emit(g, json{{"k", *k}, {"alpha", alpha_k(*k, g.cfg)}});
                return 0;
            };
        });
    }

    // ---- bound-main ----
    {
        auto* cmd = app.add_subcommand("bound-main",
                                       "composition-bound right-hand side");
        auto eps = std::make_shared<double>();
        auto conn = std::make_shared<std::string>("mul");
        auto fats = std::make_shared<std::vector<std::size_t>>();
        cmd->add_option("--eps", *eps)->required();
        cmd->add_option("--connective", *conn)->capture_default_str();
        cmd->add_option("--fat", *fats, "fat values at the inner scale, one per class")
            ->required()
            ->expected(-1);
        cmd->callback([&, eps, conn, fats] {
            action = [&, eps, conn, fats] {
                MainBoundInputs in;
                in.eps = *eps;
                in.k = fats->size();
                auto u = make_continuous_connective(*conn, std::max<std::size_t>(2, in.k));
                in.delta = [&u](double e) { return u.modulus(e); };
                in.fat_values = *fats;
                in.cfg = g.cfg;
                double scale = main_bound_scale(in.eps, in.k, in.delta, in.cfg);
                emit(g, json{{"rhs", main_bound_rhs(in)}, {"inner_scale", scale}});
                return 0;
            };
        });
    }

    // ---- bound-mv ----
    {
        auto* cmd = app.add_subcommand("bound-mv", "(2/eps)^(K fat) entropy bound");
        auto eps = std::make_shared<double>();
        auto fat = std::make_shared<std::size_t>();
        cmd->add_option("--eps", *eps)->required();
        cmd->add_option("--fat", *fat, "fat dimension at scale c*eps")->required();
        cmd->callback([&, eps, fat] {
            action = [&, eps, fat] {
                emit(g, json{{"bound", mv_entropy_bound(*fat, *eps, g.cfg)}});
                return 0;
            };
        });
    }

    // ---- pac-rect ----
    {
        auto* cmd = app.add_subcommand("pac-rect", "tightest-rectangle learner trials");
        auto eps = std::make_shared<double>(0.1);
        auto delta = std::make_shared<double>(0.1);
        auto m_spec = std::make_shared<std::string>("auto");
        auto trials = std::make_shared<std::size_t>(1000);
        auto target = std::make_shared<std::vector<double>>(
            std::vector<double>{0.25, 0.75, 0.25, 0.75});
        auto box = std::make_shared<std::vector<double>>(
            std::vector<double>{0.0, 1.0, 0.0, 1.0});
        cmd->add_option("--eps", *eps)->capture_default_str();
        cmd->add_option("--delta", *delta)->capture_default_str();
        cmd->add_option("--m", *m_spec, "sample size or 'auto'")->capture_default_str();
        cmd->add_option("--trials", *trials)->capture_default_str();
        cmd->add_option("--target", *target, "x_lo x_hi y_lo y_hi")->expected(4);
        cmd->add_option("--box", *box, "uniform box x_lo x_hi y_lo y_hi")->expected(4);
        cmd->callback([&, eps, delta, m_spec, trials, target, box] {
            action = [&, eps, delta, m_spec, trials, target, box] {
                std::size_t m = *m_spec == "auto"
                                    ? rect_sample_complexity(*eps, *delta)
                                    : std::size_t(std::stoul(*m_spec));
                Rectangle tgt((*target)[0], (*target)[1], (*target)[2], (*target)[3]);
                PlaneDistribution dist;
                dist.kind = PlaneDistribution::Kind::UniformBox;
                dist.box = Rectangle((*box)[0], (*box)[1], (*box)[2], (*box)[3]);
                auto rep = run_rectangle_trials(tgt, dist, *eps, m, *trials, g.seed);
                emit(g, json{{"m", rep.m_used},
                             {"trials", rep.trials},
                             {"failures", rep.failures},
                             {"empirical_failure_rate", rep.empirical_failure_rate},
                             {"mean_error", rep.mean_error},
                             {"containment_held", rep.containment_held},
                             {"error_estimator", rep.exact_error ? "exact" : "monte-carlo"}});
                return 0;
            };
        });
    }

    // ---- counterexample ----
    {
        auto* cmd = app.add_subcommand(
            "counterexample", "identifying-point class: fat lower bound and learner");
        auto input = std::make_shared<std::string>();
        auto eps = std::make_shared<double>(0.1);
        cmd->add_option("--input", *input)->required();
        cmd->add_option("--eps", *eps)->capture_default_str();
        cmd->callback([&, input, eps] {
            action = [&, input, eps] {
                auto doc = load_class_document(*input);
                const auto& c = require_concepts(doc);
                auto rep = counterexample_fat_check(c, *eps);
                emit(g, json{{"vc", rep.vc},
                             {"fat", rep.fat},
                             {"witness_half_realizes", rep.witness_half_realizes},
                             {"holds", rep.holds}});
                return rep.holds ? 0 : 3;
            };
        });
    }

    // ---- verify ----
    {
        auto* cmd = app.add_subcommand("verify", "randomized inequality checks");
        auto kind = std::make_shared<std::string>();
        auto inputs = std::make_shared<std::vector<std::string>>();
        auto conn = std::make_shared<std::string>("mul");
        auto eps_list = std::make_shared<std::vector<double>>();
        auto samples = std::make_shared<std::size_t>(100000);
        auto trials = std::make_shared<std::size_t>(1000);
        auto modulus_scale = std::make_shared<double>(1.0);
        cmd->add_option("kind", *kind,
                        "modulus|phi|chain|product|image|sauer|binary-eq|vc-comp")
            ->required();
        cmd->add_option("--input", *inputs)->expected(-1);
        cmd->add_option("--connective", *conn)->capture_default_str();
        cmd->add_option("--eps", *eps_list)->expected(-1);
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--trials", *trials)->capture_default_str();
        cmd->add_option("--modulus-scale", *modulus_scale,
                        "scale the declared modulus (negative controls)")
            ->capture_default_str();
        cmd->callback([&, kind, inputs, conn, eps_list, samples, trials, modulus_scale] {
            action = [&, kind, inputs, conn, eps_list, samples, trials, modulus_scale] {
                std::mt19937_64 rng(g.seed);
                json rep;
                std::size_t violations = 0;

                auto load_function_classes = [&](std::size_t arity) {
                    std::vector<ClassDocument> docs;
                    for (const auto& p : *inputs) docs.push_back(load_class_document(p));
                    while (docs.size() < arity)
                        docs.push_back(load_class_document(inputs->back()));
                    std::vector<FunctionClass> fs;
                    const FiniteSpace& space = *docs.front().space;
                    for (auto& d : docs)
                        fs.emplace_back(space, document_functions(d).functions());
                    return std::make_pair(std::move(docs), std::move(fs));
                };

                if (*kind == "modulus") {
                    auto u = make_continuous_connective(*conn);
                    std::vector<double> es =
                        eps_list->empty() ? std::vector<double>{0.1, 0.25, 0.5, 1.0}
                                          : *eps_list;
                    double scale = *modulus_scale;
                    auto r = verify_uniform_continuity(
                        u,
                        [&u, scale](double e) {
                            return std::min(1.0, scale * u.modulus(e));
                        },
                        es, *samples, g.seed);
                    violations = r.total_violations;
                    rep = json{{"eps", r.eps_values},
                               {"violations", r.violations},
                               {"samples_per_eps", r.samples_per_eps}};
                } else if (*kind == "phi") {
                    if (inputs->empty())
                        throw domain_error("verify phi: needs --input");
                    auto u = make_continuous_connective(*conn);
                    auto [docs, fs] = load_function_classes(u.arity());
                    std::vector<double> es =
                        eps_list->empty() ? std::vector<double>{0.25, 0.5} : *eps_list;
                    auto r = verify_phi_modulus(u, fs, es, *trials, g.seed);
                    violations = r.violations;
                    rep = json{{"pairs_tested", r.pairs_tested},
                               {"pairs_in_threshold", r.pairs_in_threshold},
                               {"violations", r.violations}};
                } else if (*kind == "chain") {
                    if (inputs->empty())
                        throw domain_error("verify chain: needs --input");
                    auto u = make_continuous_connective(*conn);
                    auto [docs, fs] = load_function_classes(u.arity());
                    double eps = eps_list->empty() ? 0.5 : eps_list->front();
                    auto r = verify_covering_chain(u, fs, eps);
                    violations = r.inequality_holds ? 0 : 1;
                    rep = json{{"eps", r.eps},
                               {"transferred_modulus", r.transferred_modulus},
                               {"composed_cover", r.composed_cover},
                               {"factor_covers", r.factor_covers},
                               {"factor_product", r.factor_product},
                               {"inequality_holds", r.inequality_holds}};
                } else if (*kind == "product") {
                    std::uniform_int_distribution<std::size_t> size_dist(2, 8);
                    std::uniform_real_distribution<double> eps_dist(0.05, 1.2);
                    for (std::size_t t = 0; t < *trials; ++t) {
                        auto m1 = random_euclidean_metric(size_dist(rng), rng);
                        auto m2 = random_euclidean_metric(size_dist(rng), rng);
                        auto r = check_product_cover({m1, m2}, eps_dist(rng));
                        if (!r.inequality_holds) ++violations;
                    }
                    rep = json{{"trials", *trials}, {"violations", violations}};
                } else if (*kind == "image") {
                    std::uniform_int_distribution<std::size_t> size_dist(2, 16);
                    std::uniform_real_distribution<double> eps_dist(0.05, 1.0);
                    for (std::size_t t = 0; t < *trials; ++t) {
                        std::size_t n = size_dist(rng);
                        auto m = random_euclidean_metric(n, rng);
                        // image under a contraction: halved distances, delta = eps valid
                        auto half = m.matrix();
                        for (auto& row : half)
                            for (auto& v : row) v /= 2.0;
                        FiniteMetric images(std::move(half));
                        std::vector<std::size_t> idmap(n);
                        for (std::size_t i = 0; i < n; ++i) idmap[i] = i;
                        double eps = eps_dist(rng);
                        auto r = check_image_cover(m, images, idmap, eps, eps);
                        if (!r.continuity_ok || !r.inequality_holds) ++violations;
                    }
                    rep = json{{"trials", *trials}, {"violations", violations}};
                } else if (*kind == "sauer") {
                    std::uniform_int_distribution<std::size_t> pts_dist(3, 12);
                    std::uniform_int_distribution<std::size_t> cnt_dist(2, 64);
                    std::size_t checked = 0;
                    for (std::size_t t = 0; t < *trials; ++t) {
                        FiniteSpace space(numbered_labels(pts_dist(rng)));
                        auto c = random_concept_class(space, cnt_dist(rng), rng);
                        auto vc = vc_dimension(c);
                        if (vc.value < 1) continue;
                        auto table = growth(c, space.size());
                        for (std::size_t n = vc.value; n <= space.size(); ++n) {
                            ++checked;
                            if (double(table.entries.at(n)) >
                                sauer_bound(n, vc.value))
                                ++violations;
                        }
                    }
                    rep = json{{"trials", *trials},
                               {"inequalities_checked", checked},
                               {"violations", violations}};
                } else if (*kind == "binary-eq") {
                    std::uniform_int_distribution<std::size_t> pts_dist(2, 6);
                    std::uniform_int_distribution<std::size_t> cnt_dist(1, 32);
                    std::vector<double> es =
                        eps_list->empty() ? std::vector<double>{0.1, 0.3, 0.5}
                                          : *eps_list;
                    for (std::size_t t = 0; t < *trials; ++t) {
                        FiniteSpace space(numbered_labels(pts_dist(rng)));
                        auto c = random_concept_class(space, cnt_dist(rng), rng);
                        auto fc = indicator_class(c);
                        auto vc = vc_dimension(c);
                        for (double e : es)
                            if (fat_dimension(fc, e).value != vc.value) ++violations;
                    }
                    rep = json{{"trials", *trials}, {"violations", violations}};
                } else if (*kind == "vc-comp") {
                    std::uniform_int_distribution<std::size_t> pts_dist(4, 10);
                    std::uniform_int_distribution<std::size_t> table_dist(0, 15);
                    std::size_t done = 0;
                    while (done < *trials) {
                        FiniteSpace space(numbered_labels(pts_dist(rng)));
                        auto c1 = random_concept_class(space, 4, rng);
                        auto c2 = random_concept_class(space, 4, rng);
                        std::size_t d = std::max(vc_dimension(c1).value,
                                                 vc_dimension(c2).value);
                        if (d < 1 || d > 2) continue;
                        std::size_t bits = table_dist(rng);
                        std::vector<std::uint8_t> table(4);
                        for (std::size_t i = 0; i < 4; ++i)
                            table[i] = (bits >> i) & 1;
                        ClassicalConnective u(2, std::move(table));
                        auto composed = compose_concepts(u, {c1, c2});
                        if (vc_dimension(composed).value >=
                            vc_composition_bound(d, 2, g.cfg))
                            ++violations;
                        ++done;
                    }
                    rep = json{{"trials", *trials}, {"violations", violations}};
                } else {
                    throw domain_error("unknown verify kind: " + *kind);
                }

                rep["kind"] = *kind;
                emit(g, rep);
                return violations == 0 ? 0 : 3;
            };
        });
    }

    try {
        app.parse(argc, argv);
        if (log_base != 0.0) g.cfg.log_base = log_base;
        return action ? action() : 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
