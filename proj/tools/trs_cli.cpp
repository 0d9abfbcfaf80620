// trs: construct, certify, dualize, discriminate, decode, and simulate
// twisted Reed-Solomon codes. All structured input/output is JSON; field
// elements travel as integer encodings.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "trs/dual.hpp"
#include "trs/equiv.hpp"
#include "trs/io.hpp"
#include "trs/mds.hpp"
#include "trs/sim.hpp"

using namespace trs;

namespace {

int cmd_construct(const std::string& params_path, bool emit_generator) {
    TwistedCode code = code_from_json(load_json_file(params_path));
    json out{{"n", code.n()},
             {"k", code.k()},
             {"ell", code.ell()},
             {"length", code.length()},
             {"rs", code.is_rs()}};
    if (emit_generator) out["generator"] = matrix_to_json(code.generator_canonical());
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_mds_check(const std::string& params_path, std::string method) {
    TwistedCode code = code_from_json(load_json_file(params_path));
    if (method == "auto") {
        if (code.ell() == 1 && code.t()[0] == 1 && code.h()[0] == 0 && !code.at_infinity())
            method = "star";
        else if (code.ell() == 1 && code.t()[0] == 1 && code.h()[0] == code.k() - 1 &&
                 !code.at_infinity())
            method = "plus";
        else
            method = "exhaustive";
    }
    std::optional<std::vector<int>> witness;
    if (method == "star") {
        require(code.ell() == 1 && code.t()[0] == 1 && code.h()[0] == 0, Errc::InvalidArgument,
                "star method needs one twist with (t, h) = (1, 0)");
        witness = star_mds_violation(code.alpha(), code.k(), code.eta()[0]);
    } else if (method == "plus") {
        require(code.ell() == 1 && code.t()[0] == 1 && code.h()[0] == code.k() - 1,
                Errc::InvalidArgument, "plus method needs one twist with (t, h) = (1, k-1)");
        witness = plus_mds_violation(code.alpha(), code.k(), code.eta()[0]);
    } else {
        witness = mds_violation_exhaustive(code);
    }
    json out{{"mds", !witness.has_value()}, {"method", method}};
    out["witness"] = witness ? json(*witness) : json(nullptr);
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_dual(const std::string& params_path, bool emit_h, bool allow_zero_point) {
    TwistedCode code = code_from_json(load_json_file(params_path));
    auto [dp, h] = dual_twisted(code, allow_zero_point);
    json out{{"field", field_to_json(*code.field())},
             {"n", code.n()},
             {"k", dp.dim},
             {"alpha", elements_to_json(code.alpha())},
             {"t", dp.t},
             {"h", dp.h},
             {"eta", elements_to_json(dp.eta)},
             {"at_infinity", false}};
    if (emit_h) out["parity_check"] = matrix_to_json(h);
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_grs_check(const std::string& params_path) {
    TwistedCode code = code_from_json(load_json_file(params_path));
    bool mds = is_mds_exhaustive(code);
    json out{{"mds", mds},
             {"grs", mds && is_grs(code)},
             {"schur_square_dim", schur_square_dim(code.generator_canonical())},
             {"sumset_lower_bound", sumset_lower_bound(code)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_eta_census(const std::string& base_path, const std::string& domain) {
    json base = load_json_file(base_path);
    FieldPtr spec = field_from_json(base.at("field"));
    auto alpha = elements_from_json(spec, base.at("alpha"));
    int k = base.at("k").get<int>();
    auto t = base.at("t").get<std::vector<int>>();
    auto h = base.at("h").get<std::vector<int>>();

    std::vector<std::vector<FieldElement>> etas;
    if (domain == "all") {
        require(t.size() == 1, Errc::InvalidArgument,
                "--eta-domain all enumerates single-twist codes; pass a list for ell >= 2");
        etas = full_eta_domain_single_twist(spec);
    } else {
        for (const auto& row : load_json_file(domain)) etas.push_back(elements_from_json(spec, row));
    }
    std::cout << census_to_json(grs_eta_census(spec, alpha, k, t, h, etas)).dump(2) << '\n';
    return 0;
}

int cmd_decode(const std::string& params_path, const std::string& received_path, int zeta,
               const std::string& engine) {
    TwistedCode code = code_from_json(load_json_file(params_path));
    json jr = load_json_file(received_path);
    if (jr.is_object() && jr.contains("received")) jr = jr.at("received");
    auto received = elements_from_json(code.spec(), jr);
    Engine e = engine == "linear" ? Engine::Linear
               : engine == "brute" ? Engine::Brute
                                   : Engine::Popov;
    std::cout << outcome_to_json(decode(code, received, zeta, e)).dump(2) << '\n';
    return 0;
}

int cmd_simulate(const std::string& config_path, bool paper_scale, uint64_t seed, bool seed_set,
                 const std::string& out_path, bool table) {
    SimConfig cfg = sim_config_from_json(load_json_file(config_path));
    if (paper_scale) {
        cfg.trials = 1000;
        cfg.codes_per_tuple = 50;
    }
    if (seed_set) cfg.seed = seed;
    SimReport report = run_sweep(cfg);
    if (!out_path.empty()) save_json_file(out_path, sim_report_to_json(report));
    if (table)
        std::cout << emit_table_tsv(report);
    else if (out_path.empty())
        std::cout << sim_report_to_json(report).dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Reed-Solomon code toolkit"};
    app.require_subcommand(1);

    std::string params, received, base, domain = "all", config, out_path;
    std::string method = "auto", engine = "popov";
    bool emit_generator = false, emit_h = false, allow_zero = false;
    bool paper_scale = false, table = false;
    int zeta = 2;
    uint64_t seed = 0;

    auto* construct = app.add_subcommand("construct", "validate a code and emit its shape");
    construct->add_option("--params", params)->required();
    construct->add_flag("--emit-generator", emit_generator);

    auto* mds = app.add_subcommand("mds-check", "certify the MDS property");
    mds->add_option("--params", params)->required();
    mds->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "star", "plus", "auto"}));

    auto* dual = app.add_subcommand("dual", "dual parameters over multiplicative-group points");
    dual->add_option("--params", params)->required();
    dual->add_flag("--emit-h", emit_h);
    dual->add_flag("--allow-zero-point", allow_zero);

    auto* grs = app.add_subcommand("grs-check", "GRS-vs-twisted discrimination");
    grs->add_option("--params", params)->required();

    auto* census = app.add_subcommand("eta-census", "classify eta vectors over fixed (alpha, t, h)");
    census->add_option("--base", base)->required();
    census->add_option("--eta-domain", domain);

    auto* dec = app.add_subcommand("decode", "decode a received word");
    dec->add_option("--params", params)->required();
    dec->add_option("--received", received)->required();
    dec->add_option("--zeta", zeta);
    dec->add_option("--engine", engine)->check(CLI::IsMember({"popov", "linear", "brute"}));

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo decoding-radius sweep");
    sim->add_option("--config", config)->required();
    sim->add_flag("--paper-scale", paper_scale);
    auto* seed_opt = sim->add_option("--seed", seed);
    sim->add_option("--out", out_path);
    sim->add_flag("--table", table);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(params, emit_generator);
        if (mds->parsed()) return cmd_mds_check(params, method);
        if (dual->parsed()) return cmd_dual(params, emit_h, allow_zero);
        if (grs->parsed()) return cmd_grs_check(params);
        if (census->parsed()) return cmd_eta_census(base, domain);
        if (dec->parsed()) return cmd_decode(params, received, zeta, engine);
        if (sim->parsed())
            return cmd_simulate(config, paper_scale, seed, seed_opt->count() > 0, out_path, table);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
