#include "qstbc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

namespace qstbc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-trial stream so that chunked parallel execution replays exactly.
std::mt19937_64 trial_rng(std::uint64_t seed, long trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 1)));
}

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw in [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// CN(0,1) via Box-Muller; avoids the implementation-defined sequences of
// std::normal_distribution so replay is portable across standard libraries.
std::complex<double> complex_gaussian(std::mt19937_64& rng) {
    double u1 = 1.0 - uniform01(rng);  // (0, 1]
    double u2 = uniform01(rng);
    double r = std::sqrt(-std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

int thread_count() {
    if (const char* env = std::getenv("QSTBC_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<int>(std::min<long>(n, 256));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<Eigen::Matrix2cd> build_codebook(const CodeSpec& spec, long box, bool balanced) {
    std::vector<Eigen::Matrix2cd> words;
    const long d = spec.d;
    Symbols s = {RingElem(d, 0, 0), RingElem(d, 0, 0), RingElem(d, 0, 0), RingElem(d, 0, 0)};
    std::array<long, 8> c{};
    c.fill(-box);
    while (true) {
        for (int k = 0; k < 4; ++k) s[k] = RingElem(d, c[2 * k], c[2 * k + 1]);
        words.push_back(balanced ? balanced_encode(spec, s) : encode(spec, s).matrix());
        int k = 7;
        while (k >= 0 && c[k] == box) c[k--] = -box;
        if (k < 0) break;
        ++c[k];
    }
    return words;
}

struct TrialSetup {
    Eigen::Matrix2cd h;
    std::size_t index;
    Eigen::Matrix2cd noise;  // unit-variance entries, scaled per SNR point
};

TrialSetup draw_trial(std::mt19937_64& rng, std::size_t codebook_size) {
    TrialSetup t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.h(i, j) = complex_gaussian(rng);
    t.index = static_cast<std::size_t>(rng() % codebook_size);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.noise(i, j) = complex_gaussian(rng);
    return t;
}

}  // namespace

SimResult run(const SimConfig& config) {
    if (config.trials < 1) throw std::domain_error("simulation needs at least one trial");
    if (config.symbol_box < 0) throw std::domain_error("symbol box must be nonnegative");
    if (config.snr_grid_db.empty()) throw std::domain_error("empty SNR grid");

    std::vector<Eigen::Matrix2cd> codebook =
        build_codebook(config.spec, config.symbol_box, config.balanced);
    if (codebook.size() > config.codebook_cap) {
        throw std::domain_error("codebook size " + std::to_string(codebook.size()) +
                                " exceeds the exhaustive-ML cap " + std::to_string(config.codebook_cap));
    }

    // Normalize the average codeword energy to one per channel use (two uses
    // per codeword). The mean is a finite sum over the codebook, applied as a
    // single scalar.
    double mean_energy = 0.0;
    for (const auto& x : codebook) mean_energy += x.squaredNorm();
    mean_energy /= static_cast<double>(codebook.size());
    const double scale = mean_energy > 0 ? std::sqrt(2.0 / mean_energy) : 1.0;
    for (auto& x : codebook) x *= scale;

    std::vector<double> sigma(config.snr_grid_db.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        sigma[i] = std::isinf(config.snr_grid_db[i])
                       ? 0.0
                       : std::sqrt(std::pow(10.0, -config.snr_grid_db[i] / 10.0));
    }

    const int nthreads = thread_count();
    std::vector<std::vector<long>> errors(nthreads, std::vector<long>(sigma.size(), 0));

    auto worker = [&](int tid) {
        std::vector<Eigen::Matrix2cd> hx(codebook.size());
        for (long t = tid; t < config.trials; t += nthreads) {
            std::mt19937_64 rng = trial_rng(config.seed, t);
            TrialSetup trial = draw_trial(rng, codebook.size());
            for (std::size_t c = 0; c < codebook.size(); ++c) hx[c] = trial.h * codebook[c];
            for (std::size_t s = 0; s < sigma.size(); ++s) {
                Eigen::Matrix2cd y = hx[trial.index] + sigma[s] * trial.noise;
                std::size_t best = 0;
                double best_dist = std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < codebook.size(); ++c) {
                    double dist = (y - hx[c]).squaredNorm();
                    if (dist < best_dist) {
                        best_dist = dist;
                        best = c;
                    }
                }
                if (best != trial.index) ++errors[tid][s];
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    SimResult result;
    result.codebook_size = codebook.size();
    result.energy_scale = scale;
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        long total = 0;
        for (int tid = 0; tid < nthreads; ++tid) total += errors[tid][s];
        SnrPoint pt;
        pt.snr_db = config.snr_grid_db[s];
        pt.trials = config.trials;
        pt.errors = total;
        pt.cer = static_cast<double>(total) / static_cast<double>(config.trials);
        pt.halfwidth = 1.96 * std::sqrt(pt.cer * (1.0 - pt.cer) / static_cast<double>(config.trials));
        result.points.push_back(pt);
    }
    return result;
}

Ranking rank_codes(const std::vector<CodeSpec>& specs, const SimConfig& shared) {
    if (specs.empty()) throw std::invalid_argument("rank_codes needs at least one code");

    Ranking ranking;
    std::vector<RankEntry> entries;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        SimConfig cfg = shared;
        cfg.spec = specs[i];
        SimResult r = run(cfg);
        // top SNR point = the maximum of the grid
        std::size_t top = 0;
        for (std::size_t s = 1; s < r.points.size(); ++s) {
            if (r.points[s].snr_db > r.points[top].snr_db) top = s;
        }
        entries.push_back(RankEntry{i, r.points[top].cer, r.points[top].halfwidth});
    }

    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (std::fabs(entries[i].cer - entries[j].cer) <=
                entries[i].halfwidth + entries[j].halfwidth) {
                ranking.indistinguishable.emplace_back(entries[i].index, entries[j].index);
            }
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const RankEntry& a, const RankEntry& b) { return a.cer < b.cer; });
    ranking.order = std::move(entries);
    return ranking;
}

}  // namespace qstbc
