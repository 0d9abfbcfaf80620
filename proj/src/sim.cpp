#include "trs/sim.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "trs/rng.hpp"

namespace trs {

namespace {

// labels for the seed-split chain
constexpr uint64_t kTagCode = 0x636f6465;  // "code"
constexpr uint64_t kTagTrial = 0x7472696c; // "tril"

void parallel_for(int count, int width, const std::function<void(int)>& fn) {
    if (width <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(size_t(width));
    for (int w = 0; w < width; ++w)
        pool.emplace_back([&, w]() {
            for (int i = w; i < count; i += width) fn(i);
        });
    for (auto& th : pool) th.join();
}

int effective_width(int parallelism) {
    if (parallelism > 0) return parallelism;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

} // namespace

bool run_trial(const TwistedCode& code, int zeta, int tau, uint64_t trial_seed) {
    const FieldSpec* f = code.field();
    const uint32_t q = f->q();
    const int n = code.n(), k = code.k();
    require(tau >= 0 && tau <= n, Errc::InvalidArgument, "tau out of [0, n]");
    SplitMix64 rng(trial_seed);

    std::vector<FieldElement> msg;
    msg.reserve(size_t(k));
    for (int i = 0; i < k; ++i) msg.emplace_back(f, uint32_t(rng.below(q)));
    std::vector<FieldElement> cw = code.encode(msg);

    std::vector<int> positions(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) positions[size_t(i)] = i;
    rng.partial_shuffle(positions, size_t(tau));

    std::vector<FieldElement> received = cw;
    for (int i = 0; i < tau; ++i) {
        uint32_t e = 1 + uint32_t(rng.below(q - 1));
        auto& slot = received[size_t(positions[size_t(i)])];
        slot = slot + FieldElement(f, e);
    }

    DecodeOutcome out = decode(code, received, zeta, Engine::Popov);
    return out.success() && out.codeword == cw;
}

std::pair<int, std::vector<CellStat>> sweep_tau_range(const std::vector<int>& taus, int trials,
                                                      double threshold, const TrialFn& fn,
                                                      int parallelism) {
    require(trials >= 1, Errc::InvalidArgument, "trials must be >= 1");
    require(threshold > 0 && threshold < 1, Errc::InvalidArgument, "threshold must be in (0,1)");
    std::vector<CellStat> cells;
    int width = effective_width(parallelism);
    for (int tau : taus) {
        std::vector<char> failed(size_t(trials), 0);
        parallel_for(trials, width, [&](int i) { failed[size_t(i)] = fn(tau, i) ? 0 : 1; });
        CellStat cell;
        cell.tau = tau;
        cell.trials = trials;
        for (char x : failed) cell.failures += x;
        cells.push_back(cell);
    }
    int tau_max = -1;
    for (const auto& cell : cells)
        if (cell.rate() < threshold) tau_max = std::max(tau_max, cell.tau);
    return {tau_max, cells};
}

std::pair<int, std::vector<CellStat>> estimate_tau_max(const TwistedCode& code, int zeta,
                                                       const SimConfig& cfg, uint64_t master,
                                                       uint64_t code_id) {
    const int n = code.n(), k = code.k();
    std::vector<int> taus;
    int lo = std::max(0, tau_lb(n, k, code.ell(), zeta) - 2);
    int hi = (n - k) / 2;
    for (int tau = lo; tau <= hi; ++tau) taus.push_back(tau);
    TrialFn fn = [&](int tau, int trial) {
        uint64_t seed =
            derive_seed(master, kTagTrial, code_id, uint64_t(zeta), uint64_t(tau), uint64_t(trial));
        return run_trial(code, zeta, tau, seed);
    };
    return sweep_tau_range(taus, cfg.trials, cfg.threshold, fn, cfg.parallelism);
}

std::vector<std::pair<int, int>> SweepRow::tau_max_histogram() const {
    std::map<int, int> hist;
    for (const auto& c : codes) ++hist[c.tau_max];
    return {hist.begin(), hist.end()};
}

SimReport run_sweep(const SimConfig& cfg) {
    require(cfg.trials >= 1, Errc::InvalidArgument, "trials must be >= 1");
    require(cfg.threshold > 0 && cfg.threshold < 1, Errc::InvalidArgument,
            "threshold must be in (0,1)");
    FieldPtr spec = cfg.modulus.empty() ? make_field(cfg.p, cfg.m)
                                        : make_field(cfg.p, cfg.m, cfg.modulus);

    SimReport report;
    report.config = cfg;

    uint64_t tuple_idx = 0;
    for (int k : cfg.k_list) {
        for (int ell : cfg.ell_list) {
            // codes are drawn per (k, ell) tuple and shared across zeta
            std::vector<TwistedCode> codes;
            std::vector<uint64_t> seeds;
            for (int c = 0; c < cfg.codes_per_tuple; ++c) {
                uint64_t s = derive_seed(cfg.seed, kTagCode, tuple_idx, uint64_t(c));
                seeds.push_back(s);
                codes.push_back(sample_random_code(spec, cfg.n, k, ell, s));
            }
            for (int zeta : cfg.zeta_list) {
                SweepRow row;
                row.k = k;
                row.ell = ell;
                row.zeta = zeta;
                row.tau_lo = std::max(0, tau_lb(cfg.n, k, ell, zeta) - 2);
                row.tau_hi = (cfg.n - k) / 2;
                for (int c = 0; c < cfg.codes_per_tuple; ++c) {
                    uint64_t code_id = tuple_idx * 1000003ull + uint64_t(c);
                    auto [tau_max, cells] =
                        estimate_tau_max(codes[size_t(c)], zeta, cfg, cfg.seed, code_id);
                    CodeRun run;
                    run.seed = seeds[size_t(c)];
                    run.t = codes[size_t(c)].t();
                    run.h = codes[size_t(c)].h();
                    for (const auto& a : codes[size_t(c)].alpha()) run.alpha.push_back(a.value());
                    for (const auto& e : codes[size_t(c)].eta()) run.eta.push_back(e.value());
                    run.cells = cells;
                    run.tau_max = tau_max;
                    row.codes.push_back(std::move(run));
                }

                // worst-case probabilities around each code's own tau_max
                auto rate_at = [&](const CodeRun& run, int tau, double& out) {
                    if (tau > row.tau_hi) {
                        out = 1.0; // above floor((n-k)/2) the guard makes failure certain
                        return true;
                    }
                    for (const auto& cell : run.cells)
                        if (cell.tau == tau) {
                            out = cell.rate();
                            return true;
                        }
                    return false;
                };
                for (const auto& run : row.codes) {
                    if (run.tau_max < 0) continue;
                    double v;
                    if (rate_at(run, run.tau_max - 1, v))
                        row.p_max_below = std::max(row.p_max_below, v);
                    if (rate_at(run, run.tau_max, v)) row.p_max_at = std::max(row.p_max_at, v);
                    if (rate_at(run, run.tau_max + 1, v))
                        row.p_min_above = row.p_min_above < 0 ? v : std::min(row.p_min_above, v);
                }
                report.rows.push_back(std::move(row));
            }
            ++tuple_idx;
        }
    }
    return report;
}

std::string emit_table_tsv(const SimReport& report) {
    int tau_cols = 0;
    for (const auto& row : report.rows) tau_cols = std::max(tau_cols, row.tau_hi + 1);

    std::ostringstream os;
    os << "k\tell\tzeta";
    for (int tau = 0; tau < tau_cols; ++tau) os << "\ttau" << tau;
    os << "\tPmax_below\tPmax_at\tPmin_above\n";
    for (const auto& row : report.rows) {
        os << row.k << '\t' << row.ell << '\t' << row.zeta;
        std::map<int, int> hist;
        for (const auto& c : row.codes) ++hist[c.tau_max];
        for (int tau = 0; tau < tau_cols; ++tau) {
            os << '\t';
            if (tau <= row.tau_hi) os << (hist.count(tau) ? hist[tau] : 0);
        }
        auto emit_p = [&os](double v) {
            if (v < 0)
                os << "\t-";
            else
                os << '\t' << v;
        };
        emit_p(row.p_max_below);
        emit_p(row.p_max_at);
        emit_p(row.p_min_above);
        os << '\n';
    }
    return os.str();
}

} // namespace trs
