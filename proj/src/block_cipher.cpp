#include "cipherbench/block_cipher.hpp"

#include <algorithm>

#include "cipherbench/aes.hpp"
#include "cipherbench/des.hpp"
#include "cipherbench/tdes.hpp"

namespace cipherbench {

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::des: return "des";
    case Algorithm::tdes: return "tdes";
    case Algorithm::aes128: return "aes128";
    case Algorithm::aes192: return "aes192";
    case Algorithm::aes256: return "aes256";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "des") return Algorithm::des;
    if (name == "tdes" || name == "3des") return Algorithm::tdes;
    if (name == "aes128") return Algorithm::aes128;
    if (name == "aes192") return Algorithm::aes192;
    if (name == "aes256") return Algorithm::aes256;
    return std::nullopt;
}

std::size_t block_octets(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::des:
    case Algorithm::tdes:
        return 8;
    default:
        return 16;
    }
}

std::vector<std::size_t> key_octets(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::des: return {8};
    case Algorithm::tdes: return {8, 16, 24};
    case Algorithm::aes128: return {16};
    case Algorithm::aes192: return {24};
    case Algorithm::aes256: return {32};
    }
    return {};
}

namespace {

class DesCipher final : public BlockCipher {
public:
    explicit DesCipher(const DesKey& key) : subkeys_(des_key_schedule(key)) {}

    std::size_t block_octets() const override { return 8; }

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        store(des_encrypt_u64(subkeys_, load(in)), out);
    }

    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        store(des_decrypt_u64(subkeys_, load(in)), out);
    }

private:
    static std::uint64_t load(const std::uint8_t* p) {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
        return v;
    }
    static void store(std::uint64_t v, std::uint8_t* p) {
        for (int i = 7; i >= 0; --i) {
            p[i] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
    }

    DesSubkeys subkeys_;
};

class TdesCipher final : public BlockCipher {
public:
    explicit TdesCipher(const TdesKey& key) : subkeys_(tdes_key_schedule(key)) {}

    std::size_t block_octets() const override { return 8; }

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        store(tdes_encrypt_u64(subkeys_, load(in)), out);
    }

    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        store(tdes_decrypt_u64(subkeys_, load(in)), out);
    }

private:
    static std::uint64_t load(const std::uint8_t* p) {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
        return v;
    }
    static void store(std::uint64_t v, std::uint8_t* p) {
        for (int i = 7; i >= 0; --i) {
            p[i] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
    }

    TdesSubkeys subkeys_;
};

class AesCipher final : public BlockCipher {
public:
    explicit AesCipher(const AesKey& key) : schedule_(aes_key_expansion(key)) {}

    std::size_t block_octets() const override { return 16; }

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        aes_encrypt_block(schedule_, in, out);
    }

    void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override {
        aes_decrypt_block(schedule_, in, out);
    }

private:
    AesSchedule schedule_;
};

std::string expected_lengths(Algorithm algorithm) {
    std::string out;
    for (std::size_t n : key_octets(algorithm)) {
        if (!out.empty()) out += "/";
        out += std::to_string(n);
    }
    return out;
}

}  // namespace

std::unique_ptr<const BlockCipher> make_cipher(Algorithm algorithm,
                                               std::span<const std::uint8_t> key) {
    const auto accepted = key_octets(algorithm);
    if (std::find(accepted.begin(), accepted.end(), key.size()) == accepted.end())
        throw InvalidKeyError(to_string(algorithm) + " key must be " +
                              expected_lengths(algorithm) + " octets, got " +
                              std::to_string(key.size()));
    switch (algorithm) {
    case Algorithm::des: {
        DesKey k;
        std::copy_n(key.begin(), 8, k.octets.begin());
        return std::make_unique<DesCipher>(k);
    }
    case Algorithm::tdes:
        return std::make_unique<TdesCipher>(TdesKey::from_octets(key));
    case Algorithm::aes128:
    case Algorithm::aes192:
    case Algorithm::aes256:
        return std::make_unique<AesCipher>(AesKey::from_octets(key));
    }
    throw ContractViolation("unknown algorithm");
}

CipherSuite::CipherSuite(Algorithm algorithm, std::span<const std::uint8_t> key)
    : algorithm_(algorithm), cipher_(make_cipher(algorithm, key)) {}

}  // namespace cipherbench
