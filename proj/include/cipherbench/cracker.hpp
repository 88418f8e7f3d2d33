#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cipherbench/des.hpp"
#include "cipherbench/factors.hpp"

namespace cipherbench {

/// Exhaustive search over a restricted DES keyspace. The 56-bit effective
/// key is treated as an integer (bit 0 = least significant); free_positions
/// name the unknown bits, everything else is fixed by key_template. Parity
/// bits are derived, never searched.
struct CrackJob {
    Block64 known_plaintext{};
    Block64 known_ciphertext{};
    std::uint64_t key_template = 0;       // 56-bit pattern
    std::vector<int> free_positions;      // distinct, 0..55, at most 28
    int workers = 1;
};

struct CrackResult {
    std::optional<std::uint64_t> found_effective;  // 56-bit key, if any
    std::optional<Block64> found_key;              // parity-adjusted octets
    std::uint64_t keys_tested = 0;
    double elapsed_seconds = 0.0;
    mpz_class measured_rate;                       // keys/second, >= 1
    BruteForceEstimate extrapolation;              // full 56-bit space at measured_rate
};

// Enumerates all 2^f candidates across `workers` threads over contiguous
// index ranges. If several candidates match, the numerically smallest
// effective key is returned; the result is identical for any worker count.
CrackResult crack(const CrackJob& job);

// Same arithmetic path as factors::brute_force_time(bits, rate, 1).
BruteForceEstimate extrapolate(const mpz_class& measured_rate, int bits);

// 56-bit effective key <-> 8 parity-adjusted octets (odd parity in bit 0).
Block64 effective_to_des_key(std::uint64_t effective);
std::uint64_t des_key_to_effective(const Block64& key);

// JSON job document: {"plaintext": hex, "ciphertext": hex,
//   "template_hex": hex, "free_bit_positions": [ints], "workers": n}.
CrackJob crack_job_from_json(std::string_view text);

}  // namespace cipherbench
