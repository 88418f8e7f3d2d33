#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cipherbench/error.hpp"

namespace cipherbench {

/// Fixed-width bit string of 1..128 bits.
///
/// Bit positions are 1-based: position 1 is the most significant bit of the
/// first octet (the numbering convention of the DES standard), so position 1
/// corresponds to mask 0x80 of octet 0.
class BitVector {
public:
    explicit BitVector(int width);

    static BitVector from_bytes(std::span<const std::uint8_t> octets, int width);
    // width <= 64; value must fit in `width` bits.
    static BitVector from_u64(std::uint64_t value, int width);

    int width() const { return width_; }
    bool bit(int position) const;            // 1-based
    void set_bit(int position, bool value);  // 1-based

    std::vector<std::uint8_t> to_bytes() const;  // ceil(width/8) octets, big-endian
    std::uint64_t to_u64() const;                // width <= 64

    bool operator==(const BitVector&) const = default;

private:
    int width_;
    std::array<std::uint8_t, 16> octets_{};
};

/// A table-driven bit permutation (or selection): output bit k is input bit
/// entries[k], with 1-based source indices.
struct PermutationTable {
    std::string name;
    int input_width = 0;
    std::vector<std::uint8_t> entries;  // size == output width

    int output_width() const { return static_cast<int>(entries.size()); }
    // True when the table is a permutation of 1..input_width.
    bool is_bijective() const;
};

BitVector permute(const BitVector& input, const PermutationTable& table);

// Fast path for widths <= 64; `value` holds the low `input_width` bits.
std::uint64_t permute64(std::uint64_t value, int input_width,
                        std::span<const std::uint8_t> entries);

// Circular left rotation confined to the low `width` bits; width in {28, 32}.
std::uint32_t rotl(std::uint32_t value, int width, int n);

std::string hex_encode(std::span<const std::uint8_t> octets);  // lowercase
std::vector<std::uint8_t> hex_decode(std::string_view text);

// Constant tables from FIPS PUB 46-3 (initial/final permutations, the E
// expansion, the P permutation, the two permuted choices of the key schedule
// and the per-round rotation amounts).
namespace des_tables {
extern const PermutationTable IP;
extern const PermutationTable FP;  // inverse of IP
extern const PermutationTable E;
extern const PermutationTable P;
extern const PermutationTable PC1;
extern const PermutationTable PC2;
extern const std::array<int, 16> ROTATIONS;
}  // namespace des_tables

}  // namespace cipherbench
