#pragma once

#include <cstdint>
#include <span>

#include "cipherbench/des.hpp"

namespace cipherbench {

enum class TdesOption { three_key, two_key, one_key };

/// Triple-DES key bundle. two_key implies k3 == k1; one_key implies
/// k1 == k2 == k3 (and the cipher collapses to single DES).
struct TdesKey {
    TdesOption option = TdesOption::three_key;
    DesKey k1, k2, k3;

    // 24 octets -> three_key, 16 -> two_key (k3 := k1), 8 -> one_key.
    static TdesKey from_octets(std::span<const std::uint8_t> octets);

    int effective_bits() const;  // 168 / 112 / 56
};

/// Precomputed schedules for the three stages.
struct TdesSubkeys {
    DesSubkeys k1, k2, k3;
};

TdesSubkeys tdes_key_schedule(const TdesKey& key);

// EDE composition: E_k3(D_k2(E_k1(block))).
Block64 tdes_encrypt_block(const TdesKey& key, const Block64& block);
Block64 tdes_decrypt_block(const TdesKey& key, const Block64& block);

std::uint64_t tdes_encrypt_u64(const TdesSubkeys& subkeys, std::uint64_t block);
std::uint64_t tdes_decrypt_u64(const TdesSubkeys& subkeys, std::uint64_t block);

int tdes_effective_key_bits(const TdesKey& key);

}  // namespace cipherbench
