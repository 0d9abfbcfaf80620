#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trs/decode.hpp"
#include "trs/twisted.hpp"

namespace trs {

/// Monte-Carlo sweep configuration. The tau range per (k, zeta) is fixed to
/// {max(0, tau_lb - 2), ..., floor((n-k)/2)}. Codes are shared across zeta
/// values for a given (k, ell) tuple; all randomness replays from the seed.
struct SimConfig {
    uint32_t p = 0;
    uint32_t m = 1;
    std::vector<uint32_t> modulus; // empty = default modulus
    int n = 0;
    std::vector<int> k_list;
    std::vector<int> ell_list;
    std::vector<int> zeta_list;
    int trials = 200;
    int codes_per_tuple = 10;
    uint64_t seed = 1;
    double threshold = 0.2;
    int parallelism = 0; // 0 = hardware concurrency

    bool operator==(const SimConfig&) const = default;
};

struct CellStat {
    int tau = 0;
    int trials = 0;
    int failures = 0;
    double rate() const { return trials == 0 ? 0.0 : double(failures) / trials; }
    bool operator==(const CellStat&) const = default;
};

struct CodeRun {
    uint64_t seed = 0;
    std::vector<int> t;
    std::vector<int> h;
    std::vector<uint32_t> alpha; // integer encodings
    std::vector<uint32_t> eta;
    std::vector<CellStat> cells;
    int tau_max = -1; // -1 sentinel: no tau met the threshold
    bool operator==(const CodeRun&) const = default;
};

struct SweepRow {
    int k = 0;
    int ell = 0;
    int zeta = 0;
    int tau_lo = 0;
    int tau_hi = 0;
    std::vector<CodeRun> codes;
    // worst-case rates at tau_max -1 / tau_max / tau_max + 1 over codes
    // (-1.0 when no code contributes); above the sweep range the failure
    // rate is exactly 1 by the half-distance guard.
    double p_max_below = -1.0;
    double p_max_at = -1.0;
    double p_min_above = -1.0;
    bool operator==(const SweepRow&) const = default;

    std::vector<std::pair<int, int>> tau_max_histogram() const; // (tau_max, count)
};

struct SimReport {
    SimConfig config;
    std::vector<SweepRow> rows;
    bool operator==(const SimReport&) const = default;
};

/// One decode trial: uniform message, uniform weight-tau error (uniform
/// support, values uniform over F_q^*), Popov-engine decode; success iff the
/// transmitted codeword comes back. Deterministic per seed; draw order is
/// message, support, values.
bool run_trial(const TwistedCode& code, int zeta, int tau, uint64_t trial_seed);

using TrialFn = std::function<bool(int tau, int trial_index)>; // success?

/// Threshold rule over an explicit tau range with an injectable trial
/// runner: tau_max = max{tau : estimated failure rate < threshold}, -1 when
/// none qualifies.
std::pair<int, std::vector<CellStat>> sweep_tau_range(const std::vector<int>& taus, int trials,
                                                      double threshold, const TrialFn& fn,
                                                      int parallelism);

/// The per-code sweep with the config's range rule and seed-split scheme.
std::pair<int, std::vector<CellStat>> estimate_tau_max(const TwistedCode& code, int zeta,
                                                       const SimConfig& cfg, uint64_t master,
                                                       uint64_t code_id);

SimReport run_sweep(const SimConfig& cfg);

/// One row per (k, ell, zeta): tau_max histogram columns 0..max over rows of
/// floor((n-k)/2), then the three worst-case probability columns.
std::string emit_table_tsv(const SimReport& report);

} // namespace trs
