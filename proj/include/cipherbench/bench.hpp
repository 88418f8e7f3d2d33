#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cipherbench/factors.hpp"
#include "cipherbench/modes.hpp"

namespace cipherbench {

/// A throughput measurement request. Key and payload are generated
/// deterministically from `seed` so the workload (not the timing) is
/// reproducible.
struct BenchSpec {
    Algorithm algorithm = Algorithm::aes128;
    Mode mode = Mode::ctr;
    std::size_t payload_octets = 1 << 20;
    double min_duration_s = 1.0;
    double warmup_s = 0.1;
    std::uint64_t seed = 0x5eedbea7;
};

struct BenchResult {
    Algorithm algorithm = Algorithm::aes128;
    Mode mode = Mode::ctr;
    std::size_t payload_octets = 0;
    std::uint64_t iterations = 0;
    double seconds = 0.0;
    double octets_per_second = 0.0;
    std::uint64_t checksum = 0;  // folds every ciphertext produced
};

// Encrypts a pre-allocated buffer repeatedly (distinct IV per iteration)
// until min_duration_s of monotonic time has elapsed, after the warm-up.
BenchResult measure(const BenchSpec& spec);

// The checksum measure() would produce after exactly `iterations` passes;
// timing-independent, used to pin workload determinism.
std::uint64_t workload_checksum(const BenchSpec& spec, std::uint64_t iterations);

// Sorted by throughput descending; includes des/tdes and aes128/tdes ratio
// lines and whether the expected software ordering holds on this machine.
std::string bench_report(std::span<const BenchResult> results, ReportFormat format);

}  // namespace cipherbench
