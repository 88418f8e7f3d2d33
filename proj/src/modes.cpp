#include "cipherbench/modes.hpp"

#include <algorithm>

namespace cipherbench {

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::ecb: return "ecb";
    case Mode::cbc: return "cbc";
    case Mode::ctr: return "ctr";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "ecb") return Mode::ecb;
    if (name == "cbc") return Mode::cbc;
    if (name == "ctr") return Mode::ctr;
    return std::nullopt;
}

std::vector<std::uint8_t> pad_pkcs7(std::span<const std::uint8_t> message,
                                    std::size_t block_octets) {
    if (block_octets < 1 || block_octets > 255)
        throw ContractViolation("PKCS#7 block size must be 1..255");
    const std::size_t n = block_octets - message.size() % block_octets;
    std::vector<std::uint8_t> out(message.begin(), message.end());
    out.insert(out.end(), n, static_cast<std::uint8_t>(n));
    return out;
}

std::vector<std::uint8_t> unpad_pkcs7(std::span<const std::uint8_t> message,
                                      std::size_t block_octets) {
    if (block_octets < 1 || block_octets > 255)
        throw ContractViolation("PKCS#7 block size must be 1..255");
    if (message.empty() || message.size() % block_octets != 0)
        throw PaddingError("padded message length " + std::to_string(message.size()) +
                           " is not a positive multiple of " +
                           std::to_string(block_octets));
    const std::uint8_t n = message.back();
    if (n == 0 || n > block_octets)
        throw PaddingError("invalid pad length " + std::to_string(n));
    for (std::size_t i = message.size() - n; i < message.size(); ++i)
        if (message[i] != n)
            throw PaddingError("inconsistent pad octet at position " +
                               std::to_string(i));
    return {message.begin(), message.end() - n};
}

namespace {

void check_spec(const CipherSuite& suite, const ModeSpec& spec) {
    const std::size_t bs = suite.block_octets();
    if (spec.mode == Mode::ecb) {
        if (spec.iv)
            throw ContractViolation("ECB does not take an IV");
        return;
    }
    if (!spec.iv)
        throw ContractViolation(to_string(spec.mode) + " requires an IV of " +
                                std::to_string(bs) + " octets");
    if (spec.iv->size() != bs)
        throw ContractViolation(to_string(spec.mode) + " IV must be " +
                                std::to_string(bs) + " octets, got " +
                                std::to_string(spec.iv->size()));
}

void check_aligned(std::size_t size, std::size_t bs, const char* what) {
    if (size % bs != 0)
        throw ValidationError(std::string(what) + " length " + std::to_string(size) +
                              " is not a multiple of the " + std::to_string(bs) +
                              "-octet block size");
}

// Big-endian increment over the whole block, wrapping around.
void increment_counter(std::vector<std::uint8_t>& counter) {
    for (std::size_t i = counter.size(); i-- > 0;) {
        if (++counter[i] != 0) break;
    }
}

std::vector<std::uint8_t> ctr_process(const CipherSuite& suite, const ModeSpec& spec,
                                      std::span<const std::uint8_t> input) {
    const std::size_t bs = suite.block_octets();
    std::vector<std::uint8_t> counter = *spec.iv;
    std::vector<std::uint8_t> keystream(bs);
    std::vector<std::uint8_t> out(input.size());
    for (std::size_t off = 0; off < input.size(); off += bs) {
        suite.cipher().encrypt_block(counter.data(), keystream.data());
        const std::size_t n = std::min(bs, input.size() - off);
        for (std::size_t i = 0; i < n; ++i)
            out[off + i] = input[off + i] ^ keystream[i];
        increment_counter(counter);
    }
    return out;
}

}  // namespace

std::vector<std::uint8_t> mode_encrypt_raw(const CipherSuite& suite,
                                           const ModeSpec& spec,
                                           std::span<const std::uint8_t> plaintext) {
    check_spec(suite, spec);
    const std::size_t bs = suite.block_octets();
    switch (spec.mode) {
    case Mode::ecb: {
        check_aligned(plaintext.size(), bs, "ECB plaintext");
        std::vector<std::uint8_t> out(plaintext.size());
        for (std::size_t off = 0; off < plaintext.size(); off += bs)
            suite.cipher().encrypt_block(plaintext.data() + off, out.data() + off);
        return out;
    }
    case Mode::cbc: {
        check_aligned(plaintext.size(), bs, "CBC plaintext");
        std::vector<std::uint8_t> out(plaintext.size());
        std::vector<std::uint8_t> chain = *spec.iv;
        std::vector<std::uint8_t> block(bs);
        for (std::size_t off = 0; off < plaintext.size(); off += bs) {
            for (std::size_t i = 0; i < bs; ++i)
                block[i] = plaintext[off + i] ^ chain[i];
            suite.cipher().encrypt_block(block.data(), out.data() + off);
            chain.assign(out.begin() + static_cast<std::ptrdiff_t>(off),
                         out.begin() + static_cast<std::ptrdiff_t>(off + bs));
        }
        return out;
    }
    case Mode::ctr:
        return ctr_process(suite, spec, plaintext);
    }
    throw ContractViolation("unknown mode");
}

std::vector<std::uint8_t> mode_decrypt_raw(const CipherSuite& suite,
                                           const ModeSpec& spec,
                                           std::span<const std::uint8_t> ciphertext) {
    check_spec(suite, spec);
    const std::size_t bs = suite.block_octets();
    switch (spec.mode) {
    case Mode::ecb: {
        check_aligned(ciphertext.size(), bs, "ECB ciphertext");
        std::vector<std::uint8_t> out(ciphertext.size());
        for (std::size_t off = 0; off < ciphertext.size(); off += bs)
            suite.cipher().decrypt_block(ciphertext.data() + off, out.data() + off);
        return out;
    }
    case Mode::cbc: {
        check_aligned(ciphertext.size(), bs, "CBC ciphertext");
        std::vector<std::uint8_t> out(ciphertext.size());
        std::vector<std::uint8_t> chain = *spec.iv;
        for (std::size_t off = 0; off < ciphertext.size(); off += bs) {
            suite.cipher().decrypt_block(ciphertext.data() + off, out.data() + off);
            for (std::size_t i = 0; i < bs; ++i)
                out[off + i] ^= chain[i];
            chain.assign(ciphertext.begin() + static_cast<std::ptrdiff_t>(off),
                         ciphertext.begin() + static_cast<std::ptrdiff_t>(off + bs));
        }
        return out;
    }
    case Mode::ctr:
        // The keystream XOR is self-inverse.
        return ctr_process(suite, spec, ciphertext);
    }
    throw ContractViolation("unknown mode");
}

std::vector<std::uint8_t> mode_encrypt(const CipherSuite& suite, const ModeSpec& spec,
                                       std::span<const std::uint8_t> plaintext) {
    if (spec.mode == Mode::ctr)
        return mode_encrypt_raw(suite, spec, plaintext);
    const auto padded = pad_pkcs7(plaintext, suite.block_octets());
    return mode_encrypt_raw(suite, spec, padded);
}

std::vector<std::uint8_t> mode_decrypt(const CipherSuite& suite, const ModeSpec& spec,
                                       std::span<const std::uint8_t> ciphertext) {
    if (spec.mode == Mode::ctr)
        return mode_decrypt_raw(suite, spec, ciphertext);
    if (ciphertext.empty())
        throw ValidationError("ciphertext must be at least one block");
    const auto padded = mode_decrypt_raw(suite, spec, ciphertext);
    return unpad_pkcs7(padded, suite.block_octets());
}

}  // namespace cipherbench
