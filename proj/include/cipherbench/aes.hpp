#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cipherbench/error.hpp"

namespace cipherbench {

using Block128 = std::array<std::uint8_t, 16>;

/// GF(2^8) arithmetic modulo x^8 + x^4 + x^3 + x + 1 (0x11B).
namespace gf {

// Carry-less product reduced modulo 0x11B, via log/antilog tables built at
// compile time from powers of the generator 0x03.
std::uint8_t mul(std::uint8_t a, std::uint8_t b);

// Multiplicative inverse; 0 maps to 0.
std::uint8_t inverse(std::uint8_t a);

}  // namespace gf

// The S-box is derived from GF inversion followed by the affine transform,
// not stored as an opaque constant; the inverse S-box is its inversion.
std::uint8_t aes_sbox(std::uint8_t b);
std::uint8_t aes_inv_sbox(std::uint8_t b);

enum class AesVariant { aes128, aes192, aes256 };

struct AesKey {
    std::vector<std::uint8_t> octets;  // 16, 24 or 32
    AesVariant variant = AesVariant::aes128;

    static AesKey from_octets(std::span<const std::uint8_t> octets);

    int rounds() const;  // 10 / 12 / 14
};

/// Nr+1 round keys of 16 octets each, laid out in block order.
struct AesSchedule {
    int rounds = 0;
    std::array<std::array<std::uint8_t, 16>, 15> round_keys{};
};

AesSchedule aes_key_expansion(const AesKey& key);

Block128 aes_encrypt_block(const AesKey& key, const Block128& block);
Block128 aes_decrypt_block(const AesKey& key, const Block128& block);

void aes_encrypt_block(const AesSchedule& schedule, const std::uint8_t in[16],
                       std::uint8_t out[16]);
void aes_decrypt_block(const AesSchedule& schedule, const std::uint8_t in[16],
                       std::uint8_t out[16]);

// Round building blocks, exposed for direct testing. State is a 16-octet
// block; state[r + 4c] is row r of column c (column-major load order).
namespace aes_steps {
void sub_bytes(std::uint8_t state[16]);
void inv_sub_bytes(std::uint8_t state[16]);
void shift_rows(std::uint8_t state[16]);
void inv_shift_rows(std::uint8_t state[16]);
void mix_columns(std::uint8_t state[16]);
void inv_mix_columns(std::uint8_t state[16]);
}  // namespace aes_steps

}  // namespace cipherbench
