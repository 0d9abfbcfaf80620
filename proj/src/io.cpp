#include "trs/io.hpp"

#include <fstream>

namespace trs {

json field_to_json(const FieldSpec& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    uint32_t p = j.at("p").get<uint32_t>();
    uint32_t m = j.value("m", 1u);
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        auto mod = j.at("modulus").get<std::vector<uint32_t>>();
        return make_field(p, m, mod);
    }
    return make_field(p, m);
}

json elements_to_json(const std::vector<FieldElement>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(e.value());
    return arr;
}

std::vector<FieldElement> elements_from_json(const FieldPtr& spec, const json& j) {
    std::vector<FieldElement> out;
    for (const auto& x : j) out.push_back(element(spec, x.get<uint32_t>()));
    return out;
}

json code_to_json(const TwistedCode& code) {
    return json{{"field", field_to_json(*code.field())},
                {"n", code.n()},
                {"k", code.k()},
                {"alpha", elements_to_json(code.alpha())},
                {"t", code.t()},
                {"h", code.h()},
                {"eta", elements_to_json(code.eta())},
                {"at_infinity", code.at_infinity()}};
}

TwistedCode code_from_json(const json& j) {
    FieldPtr spec = field_from_json(j.at("field"));
    auto alpha = elements_from_json(spec, j.at("alpha"));
    if (j.contains("n"))
        require(j.at("n").get<int>() == int(alpha.size()), Errc::LengthMismatch,
                "declared n does not match |alpha|");
    return TwistedCode(spec, std::move(alpha), j.at("k").get<int>(),
                       j.value("t", std::vector<int>{}), j.value("h", std::vector<int>{}),
                       elements_from_json(spec, j.value("eta", json::array())),
                       j.value("at_infinity", false));
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json outcome_to_json(const DecodeOutcome& out) {
    json j{{"status", out.success() ? "success" : "failure"}};
    if (out.success()) {
        j["codeword"] = elements_to_json(out.codeword);
        j["message"] = elements_to_json(out.message);
        j["error_weight"] = out.error_weight;
    }
    return j;
}

json census_to_json(const EtaCensus& census) {
    json per_eta = json::array();
    for (size_t i = 0; i < census.etas.size(); ++i) {
        const char* cls = census.classes[i] == EtaClass::NonMds      ? "non_mds"
                          : census.classes[i] == EtaClass::MdsGrs    ? "mds_grs"
                                                                     : "mds_non_grs";
        per_eta.push_back(json{{"eta", elements_to_json(census.etas[i])}, {"class", cls}});
    }
    return json{{"counts",
                 {{"non_mds", census.non_mds},
                  {"mds_grs", census.mds_grs},
                  {"mds_non_grs", census.mds_non_grs}}},
                {"grs_fraction_among_mds", census.grs_fraction_among_mds()},
                {"per_eta", std::move(per_eta)}};
}

json sim_config_to_json(const SimConfig& cfg) {
    return json{{"field", json{{"p", cfg.p}, {"m", cfg.m}, {"modulus", cfg.modulus}}},
                {"n", cfg.n},
                {"k_list", cfg.k_list},
                {"ell_list", cfg.ell_list},
                {"zeta_list", cfg.zeta_list},
                {"trials", cfg.trials},
                {"codes_per_tuple", cfg.codes_per_tuple},
                {"seed", cfg.seed},
                {"threshold", cfg.threshold},
                {"parallelism", cfg.parallelism}};
}

SimConfig sim_config_from_json(const json& j) {
    SimConfig cfg;
    const json& f = j.at("field");
    cfg.p = f.at("p").get<uint32_t>();
    cfg.m = f.value("m", 1u);
    if (f.contains("modulus") && !f.at("modulus").is_null())
        cfg.modulus = f.at("modulus").get<std::vector<uint32_t>>();
    cfg.n = j.at("n").get<int>();
    cfg.k_list = j.at("k_list").get<std::vector<int>>();
    cfg.ell_list = j.at("ell_list").get<std::vector<int>>();
    cfg.zeta_list = j.at("zeta_list").get<std::vector<int>>();
    cfg.trials = j.value("trials", 200);
    cfg.codes_per_tuple = j.value("codes_per_tuple", 10);
    cfg.seed = j.value("seed", uint64_t(1));
    cfg.threshold = j.value("threshold", 0.2);
    cfg.parallelism = j.value("parallelism", 0);
    return cfg;
}

json sim_report_to_json(const SimReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json codes = json::array();
        for (const auto& run : row.codes) {
            json cells = json::array();
            for (const auto& cell : run.cells)
                cells.push_back(json{{"tau", cell.tau},
                                     {"trials", cell.trials},
                                     {"failures", cell.failures}});
            codes.push_back(json{{"seed", run.seed},
                                 {"t", run.t},
                                 {"h", run.h},
                                 {"alpha", run.alpha},
                                 {"eta", run.eta},
                                 {"cells", std::move(cells)},
                                 {"tau_max", run.tau_max}});
        }
        rows.push_back(json{{"k", row.k},
                            {"ell", row.ell},
                            {"zeta", row.zeta},
                            {"tau_lo", row.tau_lo},
                            {"tau_hi", row.tau_hi},
                            {"codes", std::move(codes)},
                            {"p_max_below", row.p_max_below},
                            {"p_max_at", row.p_max_at},
                            {"p_min_above", row.p_min_above}});
    }
    return json{{"config", sim_config_to_json(report.config)}, {"rows", std::move(rows)}};
}

SimReport sim_report_from_json(const json& j) {
    SimReport report;
    report.config = sim_config_from_json(j.at("config"));
    for (const auto& jr : j.at("rows")) {
        SweepRow row;
        row.k = jr.at("k").get<int>();
        row.ell = jr.at("ell").get<int>();
        row.zeta = jr.at("zeta").get<int>();
        row.tau_lo = jr.at("tau_lo").get<int>();
        row.tau_hi = jr.at("tau_hi").get<int>();
        row.p_max_below = jr.at("p_max_below").get<double>();
        row.p_max_at = jr.at("p_max_at").get<double>();
        row.p_min_above = jr.at("p_min_above").get<double>();
        for (const auto& jc : jr.at("codes")) {
            CodeRun run;
            run.seed = jc.at("seed").get<uint64_t>();
            run.t = jc.at("t").get<std::vector<int>>();
            run.h = jc.at("h").get<std::vector<int>>();
            run.alpha = jc.at("alpha").get<std::vector<uint32_t>>();
            run.eta = jc.at("eta").get<std::vector<uint32_t>>();
            run.tau_max = jc.at("tau_max").get<int>();
            for (const auto& cell : jc.at("cells"))
                run.cells.push_back(CellStat{cell.at("tau").get<int>(),
                                             cell.at("trials").get<int>(),
                                             cell.at("failures").get<int>()});
            row.codes.push_back(std::move(run));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::InvalidArgument, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), Errc::InvalidArgument, "cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace trs
