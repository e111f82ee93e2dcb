#pragma once

#include "qstbc/stbc.hpp"

#include <cstdint>
#include <vector>

namespace qstbc {

// Monte Carlo 2x2 MIMO link: quasi-static Rayleigh block fading, perfect CSI
// at the receiver, exhaustive ML over a finite codebook. The codebook is all
// codewords with symbol coordinates in [-box, box]^8, scaled so the average
// energy is one per channel use. SNR is average received signal power per
// receive antenna over the per-sample noise variance.
//
// Runs are bit-reproducible: each trial draws from its own stream derived
// from (seed, trial index), and error counters merge exactly, so the thread
// count (QSTBC_THREADS, default hardware concurrency) never changes results.

struct SimConfig {
    CodeSpec spec;
    long symbol_box = 1;
    std::vector<double> snr_grid_db;  // +inf means noiseless
    long trials = 1000;
    std::uint64_t seed = 1;
    bool balanced = false;
    std::size_t codebook_cap = 4096;
};

struct SnrPoint {
    double snr_db = 0;
    double cer = 0;
    double halfwidth = 0;  // 95% normal-approximation confidence halfwidth
    long trials = 0;
    long errors = 0;
};

struct SimResult {
    std::vector<SnrPoint> points;
    std::size_t codebook_size = 0;
    double energy_scale = 1.0;  // scalar applied to every codeword
};

// Throws std::domain_error when the codebook exceeds the cap or trials < 1.
SimResult run(const SimConfig& config);

struct RankEntry {
    std::size_t index;  // into the input spec list
    double cer;
    double halfwidth;
};

struct Ranking {
    std::vector<RankEntry> order;  // ascending CER at the top SNR point
    // Pairs (by input index) whose CER difference is within the summed
    // confidence halfwidths.
    std::vector<std::pair<std::size_t, std::size_t>> indistinguishable;
};

// Runs every spec under the shared config (same box, seed, grid) and sorts
// by measured CER at the highest-SNR grid point.
Ranking rank_codes(const std::vector<CodeSpec>& specs, const SimConfig& shared);

}  // namespace qstbc
