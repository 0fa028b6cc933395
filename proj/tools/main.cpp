#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "xrc/dimension.hpp"
#include "xrc/fixtures.hpp"
#include "xrc/json_io.hpp"
#include "xrc/orbit.hpp"

using xrc::Json;

namespace {

// Malformed or incomplete job files exit with status 2; domain errors from
// the modules exit with status 1.
struct JobSchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobContext {
    Json job;
    std::optional<std::uint64_t> cli_seed;

    std::uint64_t seed() const {
        if (job.contains("seed")) return job.at("seed").get<std::uint64_t>();
        if (cli_seed) return *cli_seed;
        throw JobSchemaError("randomized fixtures require a seed (job field or --seed)");
    }
};

// A string where structured data is expected names a JSON input file.
Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JobSchemaError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw JobSchemaError("cannot parse input file " + path + ": " + e.what());
    }
    return j;
}

xrc::Configuration load_config(const JobContext& ctx) {
    const Json& c = ctx.job.at("config");
    if (c.is_string()) return xrc::config_from_json(load_json_file(c.get<std::string>()));
    return xrc::config_from_json(c);
}

xrc::CrossRatioTable load_table(const JobContext& ctx, const xrc::Configuration& config) {
    if (!ctx.job.contains("table") || ctx.job.at("table") == "canonical")
        return xrc::CrossRatioTable::canonical(config);
    const Json& t = ctx.job.at("table");
    if (t == "random") {
        xrc::Lcg64 rng(ctx.seed());
        return xrc::random_valid_table(rng, config);
    }
    if (t.is_string()) return xrc::table_from_json(load_json_file(t.get<std::string>()));
    if (t.is_object()) return xrc::table_from_json(t);
    throw JobSchemaError("table must be \"canonical\", \"random\", a file path or an entries object");
}

xrc::RectMeasure load_measure(const JobContext& ctx) {
    const Json& m = ctx.job.at("measure");
    if (m == "random") {
        xrc::Lcg64 rng(ctx.seed());
        xrc::Configuration config = load_config(ctx);
        return xrc::random_atom_measure(rng, config);
    }
    if (m.is_string()) return xrc::measure_from_json(load_json_file(m.get<std::string>()));
    if (m.is_object()) return xrc::measure_from_json(m);
    throw JobSchemaError("measure must be \"random\", a file path or a rects object");
}

Json sorted_witnesses(std::vector<std::string> w, size_t limit = 16) {
    std::sort(w.begin(), w.end());
    if (w.size() > limit) w.resize(limit);
    return Json(w);
}

Json run_axioms(const JobContext& ctx) {
    xrc::Configuration config = load_config(ctx);
    xrc::CrossRatioTable t = load_table(ctx, config);
    auto report = xrc::check_axioms(t);
    std::vector<std::string> wit;
    for (const auto& v : report) wit.push_back(v.describe());
    const int n = t.size();
    return Json{{"pass", report.empty()},
                {"counts", Json{{"labels", n},
                                {"quadruples", n * (n - 1) * (n - 2) * (n - 3)},
                                {"violations", report.size()}}},
                {"witnesses", sorted_witnesses(std::move(wit))}};
}

Json run_omega(const JobContext& ctx) {
    xrc::Configuration config = load_config(ctx);
    xrc::CrossRatioTable t = load_table(ctx, config);
    xrc::AltCochain2 phi = xrc::cochain_from_crossratio(t);
    const int n = t.size();
    bool nu_independent = true;
    std::vector<std::string> wit;
    long long nu_checks = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                std::optional<xrc::Rational> ref;
                for (int nu = 0; nu < n; ++nu) {
                    if (nu == a || nu == b || nu == c) continue;
                    xrc::Rational v = xrc::phi_from_crossratio(t, a, b, c, nu);
                    ++nu_checks;
                    if (ref && v != *ref) {
                        nu_independent = false;
                        wit.push_back("nu dependence at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                    if (!ref) ref = v;
                }
            }
    bool closed = xrc::is_cocycle(phi);
    return Json{{"pass", nu_independent && closed},
                {"counts", Json{{"nu_checks", nu_checks}}},
                {"cocycle", closed},
                {"nu_independent", nu_independent},
                {"cochain", xrc::cochain_to_json(phi)},
                {"witnesses", sorted_witnesses(std::move(wit))}};
}

Json run_inverse(const JobContext& ctx) {
    xrc::AltCochain2 phi = xrc::cochain_from_json(ctx.job.at("cochain"));
    xrc::CrossRatioTable t = xrc::crossratio_from_cocycle(phi);
    bool axioms_ok = xrc::check_axioms(t).empty();
    bool round_trip = phi.size() >= 4 && xrc::cochain_from_crossratio(t) == phi;
    return Json{{"pass", axioms_ok && round_trip},
                {"round_trip", round_trip},
                {"axioms", axioms_ok},
                {"table", xrc::table_to_json(t)},
                {"witnesses", Json::array()}};
}

Json run_dim(const JobContext& ctx) {
    int n = ctx.job.at("n").get<int>();
    xrc::ConstraintSet cs = xrc::parse_constraint_set(ctx.job.at("constraints").get<std::string>());
    int d = xrc::space_dimension(n, cs);
    return Json{{"pass", true}, {"dim", d}, {"n", n}, {"constraints", xrc::constraint_set_name(cs)}};
}

Json run_psi(const JobContext& ctx) {
    xrc::Configuration config = load_config(ctx);
    xrc::CrossRatioTable t = load_table(ctx, config);
    xrc::RectMeasure m = xrc::psi(config, t);
    bool ok = xrc::check_measure(m).empty();
    return Json{{"pass", ok}, {"measure", xrc::measure_to_json(m)}, {"witnesses", Json::array()}};
}

Json run_unpsi(const JobContext& ctx) {
    xrc::RectMeasure m = load_measure(ctx);
    auto bj = ctx.job.at("base");
    if (!bj.is_array() || bj.size() != 4) throw JobSchemaError("base must be a 4-tuple of labels");
    std::array<int, 4> base{bj[0].get<int>(), bj[1].get<int>(), bj[2].get<int>(), bj[3].get<int>()};
    xrc::CrossRatioTable t = xrc::crossratio_from_measure(m, base);
    bool axioms_ok = xrc::check_axioms(t).empty();
    bool pinned = t.at(base[0], base[2], base[1], base[3]) == 0;
    bool round_trip = xrc::psi(m.config(), t).same_values(m);
    return Json{{"pass", axioms_ok && pinned && round_trip},
                {"axioms", axioms_ok},
                {"base_pinned", pinned},
                {"round_trip", round_trip},
                {"table", xrc::table_to_json(t)},
                {"witnesses", Json::array()}};
}

Json run_measure_check(const JobContext& ctx) {
    xrc::RectMeasure m = load_measure(ctx);
    auto report = xrc::check_measure(m);
    std::vector<std::string> wit;
    for (const auto& v : report) wit.push_back(v.describe());
    return Json{{"pass", report.empty()},
                {"counts", Json{{"violations", report.size()}}},
                {"witnesses", sorted_witnesses(std::move(wit))}};
}

std::string stability_name(xrc::Stability s) {
    switch (s) {
        case xrc::Stability::attracting: return "attracting";
        case xrc::Stability::repelling: return "repelling";
        case xrc::Stability::neutral: return "neutral";
    }
    return "?";
}

Json run_mobius(const JobContext& ctx) {
    std::string action = ctx.job.value("action", "classify");
    if (action == "classify") {
        xrc::MobiusMap m = xrc::MobiusMap::parse(ctx.job.at("map").get<std::string>());
        return Json{{"pass", true},
                    {"map", m.str()},
                    {"class", xrc::map_class_name(xrc::classify(m))}};
    }
    if (action == "apply") {
        xrc::MobiusMap m = xrc::MobiusMap::parse(ctx.job.at("map").get<std::string>());
        xrc::BoundaryPoint x = xrc::BoundaryPoint::parse(ctx.job.at("point").get<std::string>());
        return Json{{"pass", true}, {"result", m.apply(x).str()}};
    }
    if (action == "fixed-points") {
        xrc::MobiusMap m = xrc::MobiusMap::parse(ctx.job.at("map").get<std::string>());
        auto fp = xrc::fixed_points(m);
        Json out{{"pass", true}, {"exactly_representable", fp.exactly_representable}};
        Json pts = Json::array();
        for (const auto& p : fp.exact)
            pts.push_back(Json{{"point", p.point.str()}, {"stability", stability_name(p.stability)}});
        Json iso = Json::array();
        for (const auto& r : fp.isolated)
            iso.push_back(Json{{"lo", xrc::rational_str(r.lo)},
                               {"hi", xrc::rational_str(r.hi)},
                               {"stability", stability_name(r.stability)}});
        out["points"] = pts;
        out["isolated"] = iso;
        return out;
    }
    if (action == "invariance") {
        xrc::Configuration config = load_config(ctx);
        std::vector<xrc::MobiusMap> maps;
        if (ctx.job.contains("map"))
            maps.push_back(xrc::MobiusMap::parse(ctx.job.at("map").get<std::string>()));
        if (ctx.job.contains("random_maps")) {
            xrc::Lcg64 rng(ctx.seed());
            int count = ctx.job.at("random_maps").get<int>();
            for (int i = 0; i < count; ++i) maps.push_back(xrc::random_mobius(rng));
        }
        if (maps.empty()) throw JobSchemaError("invariance needs map or random_maps");
        long long violations = 0;
        std::vector<std::string> wit;
        for (const auto& m : maps) {
            auto rep = ctx.job.contains("table")
                           ? xrc::invariance_check_table(config,
                                                         xrc::table_from_json(ctx.job.at("table")), m)
                           : xrc::invariance_check_canonical(config, m);
            violations += static_cast<long long>(rep.size());
            for (const auto& v : rep)
                wit.push_back(m.str() + " moves (" + std::to_string(v.labels[0]) + "," +
                              std::to_string(v.labels[1]) + "," + std::to_string(v.labels[2]) +
                              "," + std::to_string(v.labels[3]) + ")");
        }
        return Json{{"pass", violations == 0},
                    {"counts", Json{{"maps", maps.size()}, {"violations", violations}}},
                    {"witnesses", sorted_witnesses(std::move(wit))}};
    }
    throw JobSchemaError("unknown mobius action: " + action);
}

Json run_orbit_cocycle(const JobContext& ctx) {
    xrc::WordEvaluator ev = xrc::WordEvaluator::standard();
    xrc::BoundaryPoint xi = xrc::BoundaryPoint::parse(ctx.job.at("basepoint").get<std::string>());
    int L = ctx.job.value("L", 2);
    auto res = xrc::orbit_cocycle_check(xrc::canonical_boundary_cochain(), ev, xi, L);
    Json out{{"pass", res.alternating && res.closed},
             {"alternating", res.alternating},
             {"closed", res.closed},
             {"counts", Json{{"triples", res.triples}}},
             {"witnesses", res.witness.empty() ? Json::array() : Json{res.witness}}};
    if (ctx.job.contains("words")) {
        auto wj = ctx.job.at("words");
        if (!wj.is_array() || wj.size() != 3) throw JobSchemaError("words must be a 3-tuple");
        xrc::Rational v = xrc::orbit_cocycle(xrc::canonical_boundary_cochain(), ev, xi,
                                             xrc::GroupWord::parse(wj[0].get<std::string>()),
                                             xrc::GroupWord::parse(wj[1].get<std::string>()),
                                             xrc::GroupWord::parse(wj[2].get<std::string>()));
        out["value"] = xrc::rational_str(v);
    }
    return out;
}

Json run_prism_check(const JobContext& ctx) {
    xrc::WordEvaluator ev = xrc::WordEvaluator::standard();
    xrc::BoundaryPoint xi = xrc::BoundaryPoint::parse(ctx.job.at("xi").get<std::string>());
    xrc::BoundaryPoint eta = xrc::BoundaryPoint::parse(ctx.job.at("eta").get<std::string>());
    int L = ctx.job.value("L", 3);
    auto res = xrc::prism_coboundary_check(xrc::canonical_boundary_cochain(), ev, xi, eta, L);
    Json out{{"pass", res.ok},
             {"counts", Json{{"triples", res.triples}}},
             {"witnesses", res.witness.empty() ? Json::array() : Json{res.witness}}};
    if (!res.ok) {
        out["lhs"] = xrc::rational_str(res.lhs);
        out["rhs"] = xrc::rational_str(res.rhs);
    }
    return out;
}

Json run_defect(const JobContext& ctx) {
    const Json& qj = ctx.job.at("q");
    int L = ctx.job.at("L").get<int>();
    std::function<xrc::Rational(const xrc::GroupWord&)> q;
    std::string type = qj.at("type").get<std::string>();
    if (type == "expsum") {
        char gen = qj.at("generator").get<std::string>().at(0);
        q = [gen](const xrc::GroupWord& w) { return xrc::Rational(xrc::exponent_sum(gen, w)); };
    } else if (type == "brooks") {
        xrc::GroupWord pat = xrc::GroupWord::parse(qj.at("word").get<std::string>());
        q = [pat](const xrc::GroupWord& w) { return xrc::Rational(xrc::brooks_counting(pat, w)); };
    } else if (type == "zero") {
        q = [](const xrc::GroupWord&) { return xrc::Rational(0); };
    } else {
        throw JobSchemaError("q.type must be expsum, brooks or zero");
    }
    xrc::Rational d = xrc::quasimorphism_defect(q, L);
    return Json{{"pass", true}, {"defect", xrc::rational_str(d)}, {"L", L}};
}

xrc::FiniteGraphSpace load_graph(const JobContext& ctx) {
    const Json& g = ctx.job.at("graph");
    if (g.is_string()) return xrc::graph_from_json(load_json_file(g.get<std::string>()));
    return xrc::graph_from_json(g);
}

Json run_delta(const JobContext& ctx) {
    xrc::FiniteGraphSpace g = load_graph(ctx);
    std::string kind = ctx.job.value("kind", "both");
    Json out{{"pass", true}};
    if (kind == "four-point" || kind == "both")
        out["four_point"] = xrc::rational_str(xrc::four_point_delta(g));
    if (kind == "slim" || kind == "both") {
        auto res = xrc::slim_triangle_delta(g, ctx.job.value("cap", 10000LL));
        out["slim"] = std::to_string(res.delta);
        out["cap_hit"] = res.cap_hit;
    }
    return out;
}

std::vector<xrc::RayPrefix> load_rays(const xrc::FiniteGraphSpace& g, const Json& j) {
    std::vector<xrc::RayPrefix> rays;
    for (const auto& rj : j) rays.emplace_back(g, rj.get<std::vector<int>>());
    if (rays.empty()) throw JobSchemaError("at least one ray is required");
    return rays;
}

Json run_busemann(const JobContext& ctx) {
    xrc::FiniteGraphSpace g = load_graph(ctx);
    auto rays = load_rays(g, ctx.job.at("rays"));
    std::vector<int> samples = ctx.job.at("samples").get<std::vector<int>>();
    auto rep = xrc::busemann_inequality_report(g, rays, samples);
    Json out{{"pass", rep.lipschitz_violations == 0},
             {"empty", rep.empty},
             {"excluded", rep.excluded}};
    if (rep.has_pairs) {
        out["lipschitz_max_slack"] = std::to_string(rep.lipschitz_max_slack);
        out["lipschitz_violations"] = rep.lipschitz_violations;
        out["lipschitz_witness"] = rep.lipschitz_witness;
    }
    if (rep.has_cocycle) {
        out["cocycle_c"] = std::to_string(rep.cocycle_c);
        out["cocycle_witness"] = rep.cocycle_witness;
    }
    if (rep.has_ray) {
        out["ray_c"] = std::to_string(rep.ray_c);
        out["ray_witness"] = rep.ray_witness;
    }
    return out;
}

Json run_horosphere(const JobContext& ctx) {
    xrc::FiniteGraphSpace g = load_graph(ctx);
    auto rays = load_rays(g, ctx.job.at("rays"));
    int x = ctx.job.at("x").get<int>();
    long long tol = ctx.job.value("tol", 0LL);
    auto verts = xrc::horosphere_points(g, rays, x, tol);
    return Json{{"pass", true}, {"vertices", verts}, {"x", x}, {"tol", tol}};
}

Json dispatch(const JobContext& ctx) {
    std::string cmd = ctx.job.at("cmd").get<std::string>();
    Json out;
    if (cmd == "axioms")
        out = run_axioms(ctx);
    else if (cmd == "omega")
        out = run_omega(ctx);
    else if (cmd == "inverse")
        out = run_inverse(ctx);
    else if (cmd == "dim")
        out = run_dim(ctx);
    else if (cmd == "psi")
        out = run_psi(ctx);
    else if (cmd == "unpsi")
        out = run_unpsi(ctx);
    else if (cmd == "measure-check")
        out = run_measure_check(ctx);
    else if (cmd == "mobius")
        out = run_mobius(ctx);
    else if (cmd == "orbit-cocycle")
        out = run_orbit_cocycle(ctx);
    else if (cmd == "prism-check")
        out = run_prism_check(ctx);
    else if (cmd == "defect")
        out = run_defect(ctx);
    else if (cmd == "delta")
        out = run_delta(ctx);
    else if (cmd == "busemann")
        out = run_busemann(ctx);
    else if (cmd == "horosphere")
        out = run_horosphere(ctx);
    else
        throw JobSchemaError("unknown cmd: " + cmd);
    out["cmd"] = cmd;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cross-ratio / bounded-cocycle / coarse-geometry verification jobs"};
    std::string job_path, out_path;
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_option("--job", job_path, "job file (JSON)")->required();
    app.add_option("--out", out_path, "also write the report JSON to this path");
    auto* seed_opt = app.add_option("--seed", seed, "default seed for randomized fixtures");
    app.add_option("--threads", threads, "accepted for interface compatibility (runs sequentially)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    JobContext ctx;
    if (seed_opt->count() > 0) ctx.cli_seed = seed;
    try {
        std::ifstream in(job_path);
        if (!in) {
            std::cerr << "cannot open job file: " << job_path << "\n";
            return 2;
        }
        in >> ctx.job;
        if (!ctx.job.is_object() || !ctx.job.contains("cmd") || !ctx.job.at("cmd").is_string()) {
            std::cerr << "job must be an object with a string cmd\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "cannot parse job file: " << e.what() << "\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Json report;
    int status;
    try {
        report = dispatch(ctx);
        status = report.value("pass", false) ? 0 : 1;
    } catch (const JobSchemaError& e) {
        std::cerr << "bad job: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "bad job: " << e.what() << "\n";
        return 2;
    } catch (const xrc::DomainError& e) {
        report = Json{{"cmd", ctx.job.value("cmd", "")}, {"pass", false}, {"error", e.what()}};
        status = 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["wall_time_ms"] = ms;
    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return 2;
        }
        out << text << "\n";
    }
    return status;
}
