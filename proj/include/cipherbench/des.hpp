#pragma once

#include <array>
#include <cstdint>

#include "cipherbench/error.hpp"

namespace cipherbench {

using Block64 = std::array<std::uint8_t, 8>;

enum class ParityPolicy { ignore, validate };

/// A 64-bit DES key. The low bit of each octet is a parity bit; only the
/// remaining 56 bits enter the key schedule.
struct DesKey {
    std::array<std::uint8_t, 8> octets{};
    ParityPolicy parity = ParityPolicy::ignore;
};

/// The 16 per-round subkeys, 48 bits each in the low bits of each word.
struct DesSubkeys {
    std::array<std::uint64_t, 16> rounds{};

    bool all_equal() const;
};

// Derives the 16-round schedule via PC-1, the rotation schedule and PC-2.
// Under ParityPolicy::validate, every octet must have odd parity.
DesSubkeys des_key_schedule(const DesKey& key);

// The round function: E-expansion, subkey mix, eight 6->4-bit S-boxes, P.
std::uint32_t des_f(std::uint32_t right, std::uint64_t subkey);

Block64 des_encrypt_block(const DesKey& key, const Block64& block);
Block64 des_decrypt_block(const DesKey& key, const Block64& block);

// Schedule-level entry points (no per-block rescheduling).
std::uint64_t des_encrypt_u64(const DesSubkeys& subkeys, std::uint64_t block);
std::uint64_t des_decrypt_u64(const DesSubkeys& subkeys, std::uint64_t block);

// True exactly when the schedule consists of 16 identical subkeys, which
// makes encryption self-inverse.
bool des_is_weak_key(const DesKey& key);

std::uint64_t block_to_u64(const Block64& block);
Block64 u64_to_block(std::uint64_t value);

}  // namespace cipherbench
