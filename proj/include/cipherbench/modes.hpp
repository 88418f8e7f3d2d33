#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cipherbench/block_cipher.hpp"

namespace cipherbench {

enum class Mode { ecb, cbc, ctr };

std::string to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Mode selection plus IV. CBC and CTR require an IV of exactly one block;
/// ECB forbids one. IVs are always supplied by the caller.
struct ModeSpec {
    Mode mode = Mode::ecb;
    std::optional<std::vector<std::uint8_t>> iv;
};

// PKCS#7: appends n octets of value n, 1 <= n <= block_octets.
std::vector<std::uint8_t> pad_pkcs7(std::span<const std::uint8_t> message,
                                    std::size_t block_octets);
std::vector<std::uint8_t> unpad_pkcs7(std::span<const std::uint8_t> message,
                                      std::size_t block_octets);

// Message interface: ECB/CBC input is padded internally; CTR accepts any
// length (|ciphertext| == |plaintext|, the stream-cipher behaviour).
std::vector<std::uint8_t> mode_encrypt(const CipherSuite& suite, const ModeSpec& spec,
                                       std::span<const std::uint8_t> plaintext);
std::vector<std::uint8_t> mode_decrypt(const CipherSuite& suite, const ModeSpec& spec,
                                       std::span<const std::uint8_t> ciphertext);

// Raw-block interface: no padding; ECB/CBC require block-aligned input.
// CTR uses the whole block as a big-endian counter incremented per block.
std::vector<std::uint8_t> mode_encrypt_raw(const CipherSuite& suite, const ModeSpec& spec,
                                           std::span<const std::uint8_t> plaintext);
std::vector<std::uint8_t> mode_decrypt_raw(const CipherSuite& suite, const ModeSpec& spec,
                                           std::span<const std::uint8_t> ciphertext);

}  // namespace cipherbench
