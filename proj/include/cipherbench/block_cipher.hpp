#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cipherbench/error.hpp"

namespace cipherbench {

enum class Algorithm { des, tdes, aes128, aes192, aes256 };

std::string to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::size_t block_octets(Algorithm algorithm);
// Accepted key lengths in octets (tdes admits all three keying options).
std::vector<std::size_t> key_octets(Algorithm algorithm);

/// Uniform single-block interface over the cipher cores. Implementations
/// hold an immutable expanded schedule and are safe for concurrent use.
class BlockCipher {
public:
    virtual ~BlockCipher() = default;
    virtual std::size_t block_octets() const = 0;
    virtual void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const = 0;
    virtual void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const = 0;
};

// Validates the key for the algorithm and builds its schedule.
std::unique_ptr<const BlockCipher> make_cipher(Algorithm algorithm,
                                               std::span<const std::uint8_t> key);

/// An algorithm paired with its key material, ready for mode processing.
class CipherSuite {
public:
    CipherSuite(Algorithm algorithm, std::span<const std::uint8_t> key);

    Algorithm algorithm() const { return algorithm_; }
    std::size_t block_octets() const { return cipher_->block_octets(); }
    const BlockCipher& cipher() const { return *cipher_; }

private:
    Algorithm algorithm_;
    std::shared_ptr<const BlockCipher> cipher_;
};

}  // namespace cipherbench
