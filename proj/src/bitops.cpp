#include "cipherbench/bitops.hpp"

#include <algorithm>

namespace cipherbench {

namespace {

void check_width(int width) {
    if (width < 1 || width > 128)
        throw ContractViolation("bit width " + std::to_string(width) +
                                " outside 1..128");
}

}  // namespace

BitVector::BitVector(int width) : width_(width) { check_width(width); }

BitVector BitVector::from_bytes(std::span<const std::uint8_t> octets, int width) {
    check_width(width);
    const std::size_t needed = (static_cast<std::size_t>(width) + 7) / 8;
    if (octets.size() != needed)
        throw ContractViolation("expected " + std::to_string(needed) +
                                " octets for width " + std::to_string(width) +
                                ", got " + std::to_string(octets.size()));
    BitVector v(width);
    std::copy(octets.begin(), octets.end(), v.octets_.begin());
    // Clear pad bits beyond the declared width.
    if (width % 8 != 0)
        v.octets_[needed - 1] &= static_cast<std::uint8_t>(0xff << (8 - width % 8));
    return v;
}

BitVector BitVector::from_u64(std::uint64_t value, int width) {
    check_width(width);
    if (width > 64)
        throw ContractViolation("from_u64 requires width <= 64");
    if (width < 64 && (value >> width) != 0)
        throw ContractViolation("value does not fit in " + std::to_string(width) +
                                " bits");
    BitVector v(width);
    for (int pos = 1; pos <= width; ++pos)
        v.set_bit(pos, (value >> (width - pos)) & 1);
    return v;
}

bool BitVector::bit(int position) const {
    if (position < 1 || position > width_)
        throw ContractViolation("bit position " + std::to_string(position) +
                                " outside 1.." + std::to_string(width_));
    return (octets_[(position - 1) / 8] >> (7 - (position - 1) % 8)) & 1;
}

void BitVector::set_bit(int position, bool value) {
    if (position < 1 || position > width_)
        throw ContractViolation("bit position " + std::to_string(position) +
                                " outside 1.." + std::to_string(width_));
    const std::uint8_t mask =
        static_cast<std::uint8_t>(1u << (7 - (position - 1) % 8));
    if (value)
        octets_[(position - 1) / 8] |= mask;
    else
        octets_[(position - 1) / 8] &= static_cast<std::uint8_t>(~mask);
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
    const std::size_t n = (static_cast<std::size_t>(width_) + 7) / 8;
    return {octets_.begin(), octets_.begin() + n};
}

std::uint64_t BitVector::to_u64() const {
    if (width_ > 64)
        throw ContractViolation("to_u64 requires width <= 64");
    std::uint64_t value = 0;
    for (int pos = 1; pos <= width_; ++pos)
        value = (value << 1) | (bit(pos) ? 1u : 0u);
    return value;
}

bool PermutationTable::is_bijective() const {
    if (output_width() != input_width) return false;
    std::vector<bool> seen(static_cast<std::size_t>(input_width) + 1, false);
    for (std::uint8_t e : entries) {
        if (e < 1 || e > input_width || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

BitVector permute(const BitVector& input, const PermutationTable& table) {
    if (input.width() != table.input_width)
        throw ContractViolation("permutation table '" + table.name + "' expects " +
                                std::to_string(table.input_width) +
                                "-bit input, got " + std::to_string(input.width()));
    BitVector out(table.output_width());
    for (int k = 0; k < table.output_width(); ++k)
        out.set_bit(k + 1, input.bit(table.entries[static_cast<std::size_t>(k)]));
    return out;
}

std::uint64_t permute64(std::uint64_t value, int input_width,
                        std::span<const std::uint8_t> entries) {
    std::uint64_t out = 0;
    for (std::uint8_t e : entries)
        out = (out << 1) | ((value >> (input_width - e)) & 1u);
    return out;
}

std::uint32_t rotl(std::uint32_t value, int width, int n) {
    if (width != 28 && width != 32)
        throw ContractViolation("rotl width must be 28 or 32, got " +
                                std::to_string(width));
    if (n < 0 || n >= width)
        throw ContractViolation("rotation count " + std::to_string(n) +
                                " outside 0.." + std::to_string(width - 1));
    const std::uint32_t mask =
        width == 32 ? 0xffffffffu : ((1u << width) - 1u);
    if ((value & ~mask) != 0)
        throw ContractViolation("value has bits above width " + std::to_string(width));
    if (n == 0) return value;
    return ((value << n) | (value >> (width - n))) & mask;
}

std::string hex_encode(std::span<const std::uint8_t> octets) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(octets.size() * 2);
    for (std::uint8_t b : octets) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<std::uint8_t> hex_decode(std::string_view text) {
    if (text.size() % 2 != 0)
        throw ParseError("odd-length hex string (" + std::to_string(text.size()) +
                             " characters)",
                         text.size());
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        const int hi = hex_value(text[i]);
        const int lo = hex_value(text[i + 1]);
        if (hi < 0)
            throw ParseError(std::string("invalid hex character '") + text[i] +
                                 "' at offset " + std::to_string(i),
                             i);
        if (lo < 0)
            throw ParseError(std::string("invalid hex character '") + text[i + 1] +
                                 "' at offset " + std::to_string(i + 1),
                             i + 1);
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

// FIPS PUB 46-3 constant tables.
namespace des_tables {

const PermutationTable IP{"IP", 64, {
    58, 50, 42, 34, 26, 18, 10,  2,
    60, 52, 44, 36, 28, 20, 12,  4,
    62, 54, 46, 38, 30, 22, 14,  6,
    64, 56, 48, 40, 32, 24, 16,  8,
    57, 49, 41, 33, 25, 17,  9,  1,
    59, 51, 43, 35, 27, 19, 11,  3,
    61, 53, 45, 37, 29, 21, 13,  5,
    63, 55, 47, 39, 31, 23, 15,  7,
}};

const PermutationTable FP{"IP^-1", 64, {
    40,  8, 48, 16, 56, 24, 64, 32,
    39,  7, 47, 15, 55, 23, 63, 31,
    38,  6, 46, 14, 54, 22, 62, 30,
    37,  5, 45, 13, 53, 21, 61, 29,
    36,  4, 44, 12, 52, 20, 60, 28,
    35,  3, 43, 11, 51, 19, 59, 27,
    34,  2, 42, 10, 50, 18, 58, 26,
    33,  1, 41,  9, 49, 17, 57, 25,
}};

const PermutationTable E{"E", 32, {
    32,  1,  2,  3,  4,  5,
     4,  5,  6,  7,  8,  9,
     8,  9, 10, 11, 12, 13,
    12, 13, 14, 15, 16, 17,
    16, 17, 18, 19, 20, 21,
    20, 21, 22, 23, 24, 25,
    24, 25, 26, 27, 28, 29,
    28, 29, 30, 31, 32,  1,
}};

const PermutationTable P{"P", 32, {
    16,  7, 20, 21,
    29, 12, 28, 17,
     1, 15, 23, 26,
     5, 18, 31, 10,
     2,  8, 24, 14,
    32, 27,  3,  9,
    19, 13, 30,  6,
    22, 11,  4, 25,
}};

const PermutationTable PC1{"PC-1", 64, {
    57, 49, 41, 33, 25, 17,  9,
     1, 58, 50, 42, 34, 26, 18,
    10,  2, 59, 51, 43, 35, 27,
    19, 11,  3, 60, 52, 44, 36,
    63, 55, 47, 39, 31, 23, 15,
     7, 62, 54, 46, 38, 30, 22,
    14,  6, 61, 53, 45, 37, 29,
    21, 13,  5, 28, 20, 12,  4,
}};

const PermutationTable PC2{"PC-2", 56, {
    14, 17, 11, 24,  1,  5,
     3, 28, 15,  6, 21, 10,
    23, 19, 12,  4, 26,  8,
    16,  7, 27, 20, 13,  2,
    41, 52, 31, 37, 47, 55,
    30, 40, 51, 45, 33, 48,
    44, 49, 39, 56, 34, 53,
    46, 42, 50, 36, 29, 32,
}};

const std::array<int, 16> ROTATIONS = {1, 1, 2, 2, 2, 2, 2, 2,
                                       1, 2, 2, 2, 2, 2, 2, 1};

}  // namespace des_tables

}  // namespace cipherbench
