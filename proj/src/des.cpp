#include "cipherbench/des.hpp"

#include <bit>

#include "cipherbench/bitops.hpp"

namespace cipherbench {

namespace {

// S1..S8 from FIPS PUB 46-3, flattened row-major: entry [row * 16 + column].
constexpr std::uint8_t SBOX[8][64] = {
    {14,  4, 13,  1,  2, 15, 11,  8,  3, 10,  6, 12,  5,  9,  0,  7,
      0, 15,  7,  4, 14,  2, 13,  1, 10,  6, 12, 11,  9,  5,  3,  8,
      4,  1, 14,  8, 13,  6,  2, 11, 15, 12,  9,  7,  3, 10,  5,  0,
     15, 12,  8,  2,  4,  9,  1,  7,  5, 11,  3, 14, 10,  0,  6, 13},
    {15,  1,  8, 14,  6, 11,  3,  4,  9,  7,  2, 13, 12,  0,  5, 10,
      3, 13,  4,  7, 15,  2,  8, 14, 12,  0,  1, 10,  6,  9, 11,  5,
      0, 14,  7, 11, 10,  4, 13,  1,  5,  8, 12,  6,  9,  3,  2, 15,
     13,  8, 10,  1,  3, 15,  4,  2, 11,  6,  7, 12,  0,  5, 14,  9},
    {10,  0,  9, 14,  6,  3, 15,  5,  1, 13, 12,  7, 11,  4,  2,  8,
     13,  7,  0,  9,  3,  4,  6, 10,  2,  8,  5, 14, 12, 11, 15,  1,
     13,  6,  4,  9,  8, 15,  3,  0, 11,  1,  2, 12,  5, 10, 14,  7,
      1, 10, 13,  0,  6,  9,  8,  7,  4, 15, 14,  3, 11,  5,  2, 12},
    { 7, 13, 14,  3,  0,  6,  9, 10,  1,  2,  8,  5, 11, 12,  4, 15,
     13,  8, 11,  5,  6, 15,  0,  3,  4,  7,  2, 12,  1, 10, 14,  9,
     10,  6,  9,  0, 12, 11,  7, 13, 15,  1,  3, 14,  5,  2,  8,  4,
      3, 15,  0,  6, 10,  1, 13,  8,  9,  4,  5, 11, 12,  7,  2, 14},
    { 2, 12,  4,  1,  7, 10, 11,  6,  8,  5,  3, 15, 13,  0, 14,  9,
     14, 11,  2, 12,  4,  7, 13,  1,  5,  0, 15, 10,  3,  9,  8,  6,
      4,  2,  1, 11, 10, 13,  7,  8, 15,  9, 12,  5,  6,  3,  0, 14,
     11,  8, 12,  7,  1, 14,  2, 13,  6, 15,  0,  9, 10,  4,  5,  3},
    {12,  1, 10, 15,  9,  2,  6,  8,  0, 13,  3,  4, 14,  7,  5, 11,
     10, 15,  4,  2,  7, 12,  9,  5,  6,  1, 13, 14,  0, 11,  3,  8,
      9, 14, 15,  5,  2,  8, 12,  3,  7,  0,  4, 10,  1, 13, 11,  6,
      4,  3,  2, 12,  9,  5, 15, 10, 11, 14,  1,  7,  6,  0,  8, 13},
    { 4, 11,  2, 14, 15,  0,  8, 13,  3, 12,  9,  7,  5, 10,  6,  1,
     13,  0, 11,  7,  4,  9,  1, 10, 14,  3,  5, 12,  2, 15,  8,  6,
      1,  4, 11, 13, 12,  3,  7, 14, 10, 15,  6,  8,  0,  5,  9,  2,
      6, 11, 13,  8,  1,  4, 10,  7,  9,  5,  0, 15, 14,  2,  3, 12},
    {13,  2,  8,  4,  6, 15, 11,  1, 10,  9,  3, 14,  5,  0, 12,  7,
      1, 15, 13,  8, 10,  3,  7,  4, 12,  5,  6, 11,  0, 14,  9,  2,
      7, 11,  4,  1,  9, 12, 14,  2,  0,  6, 10, 13, 15,  3,  5,  8,
      2,  1, 14,  7,  4, 10,  8, 13, 15, 12,  9,  0,  3,  5,  6, 11},
};

void check_parity(const DesKey& key) {
    if (key.parity != ParityPolicy::validate) return;
    for (int i = 0; i < 8; ++i) {
        if (std::popcount(key.octets[static_cast<std::size_t>(i)]) % 2 == 0)
            throw InvalidKeyError("DES key octet " + std::to_string(i) +
                                  " has even parity");
    }
}

std::uint64_t feistel(const DesSubkeys& subkeys, std::uint64_t block, bool reversed) {
    using namespace des_tables;
    const std::uint64_t v = permute64(block, 64, IP.entries);
    std::uint32_t left = static_cast<std::uint32_t>(v >> 32);
    std::uint32_t right = static_cast<std::uint32_t>(v);
    for (int round = 0; round < 16; ++round) {
        const std::uint64_t k =
            subkeys.rounds[static_cast<std::size_t>(reversed ? 15 - round : round)];
        const std::uint32_t next = left ^ des_f(right, k);
        left = right;
        right = next;
    }
    // The halves are swapped in the preoutput block.
    return permute64((static_cast<std::uint64_t>(right) << 32) | left, 64,
                     FP.entries);
}

}  // namespace

bool DesSubkeys::all_equal() const {
    for (std::uint64_t k : rounds)
        if (k != rounds[0]) return false;
    return true;
}

std::uint64_t block_to_u64(const Block64& block) {
    std::uint64_t v = 0;
    for (std::uint8_t b : block) v = (v << 8) | b;
    return v;
}

Block64 u64_to_block(std::uint64_t value) {
    Block64 out{};
    for (int i = 7; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value & 0xff);
        value >>= 8;
    }
    return out;
}

DesSubkeys des_key_schedule(const DesKey& key) {
    using namespace des_tables;
    check_parity(key);
    const std::uint64_t k = block_to_u64(key.octets);
    const std::uint64_t cd = permute64(k, 64, PC1.entries);
    std::uint32_t c = static_cast<std::uint32_t>(cd >> 28);
    std::uint32_t d = static_cast<std::uint32_t>(cd & 0x0fffffffu);
    DesSubkeys subkeys;
    for (int round = 0; round < 16; ++round) {
        c = rotl(c, 28, ROTATIONS[static_cast<std::size_t>(round)]);
        d = rotl(d, 28, ROTATIONS[static_cast<std::size_t>(round)]);
        subkeys.rounds[static_cast<std::size_t>(round)] =
            permute64((static_cast<std::uint64_t>(c) << 28) | d, 56, PC2.entries);
    }
    return subkeys;
}

std::uint32_t des_f(std::uint32_t right, std::uint64_t subkey) {
    using namespace des_tables;
    if (subkey >> 48)
        throw ContractViolation("DES subkey wider than 48 bits");
    const std::uint64_t x = permute64(right, 32, E.entries) ^ subkey;
    std::uint32_t s = 0;
    for (int box = 0; box < 8; ++box) {
        const unsigned six = (x >> (42 - 6 * box)) & 0x3f;
        // Outer two bits select the row, inner four the column.
        const unsigned row = ((six >> 4) & 2) | (six & 1);
        const unsigned column = (six >> 1) & 0xf;
        s = (s << 4) | SBOX[box][row * 16 + column];
    }
    return static_cast<std::uint32_t>(permute64(s, 32, P.entries));
}

std::uint64_t des_encrypt_u64(const DesSubkeys& subkeys, std::uint64_t block) {
    return feistel(subkeys, block, false);
}

std::uint64_t des_decrypt_u64(const DesSubkeys& subkeys, std::uint64_t block) {
    return feistel(subkeys, block, true);
}

Block64 des_encrypt_block(const DesKey& key, const Block64& block) {
    return u64_to_block(des_encrypt_u64(des_key_schedule(key), block_to_u64(block)));
}

Block64 des_decrypt_block(const DesKey& key, const Block64& block) {
    return u64_to_block(des_decrypt_u64(des_key_schedule(key), block_to_u64(block)));
}

bool des_is_weak_key(const DesKey& key) {
    DesKey probe = key;
    probe.parity = ParityPolicy::ignore;
    return des_key_schedule(probe).all_equal();
}

}  // namespace cipherbench
