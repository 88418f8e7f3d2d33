#include "cipherbench/tdes.hpp"

#include <algorithm>

namespace cipherbench {

TdesKey TdesKey::from_octets(std::span<const std::uint8_t> octets) {
    TdesKey key;
    auto fill = [&](DesKey& k, std::size_t offset) {
        std::copy_n(octets.begin() + static_cast<std::ptrdiff_t>(offset), 8,
                    k.octets.begin());
    };
    switch (octets.size()) {
    case 24:
        key.option = TdesOption::three_key;
        fill(key.k1, 0);
        fill(key.k2, 8);
        fill(key.k3, 16);
        break;
    case 16:
        key.option = TdesOption::two_key;
        fill(key.k1, 0);
        fill(key.k2, 8);
        key.k3 = key.k1;
        break;
    case 8:
        key.option = TdesOption::one_key;
        fill(key.k1, 0);
        key.k2 = key.k1;
        key.k3 = key.k1;
        break;
    default:
        throw InvalidKeyError("TDES key must be 8, 16 or 24 octets, got " +
                              std::to_string(octets.size()));
    }
    return key;
}

int TdesKey::effective_bits() const {
    switch (option) {
    case TdesOption::three_key: return 168;
    case TdesOption::two_key: return 112;
    case TdesOption::one_key: return 56;
    }
    return 0;
}

TdesSubkeys tdes_key_schedule(const TdesKey& key) {
    return {des_key_schedule(key.k1), des_key_schedule(key.k2),
            des_key_schedule(key.k3)};
}

std::uint64_t tdes_encrypt_u64(const TdesSubkeys& subkeys, std::uint64_t block) {
    return des_encrypt_u64(subkeys.k3,
                           des_decrypt_u64(subkeys.k2,
                                           des_encrypt_u64(subkeys.k1, block)));
}

std::uint64_t tdes_decrypt_u64(const TdesSubkeys& subkeys, std::uint64_t block) {
    return des_decrypt_u64(subkeys.k1,
                           des_encrypt_u64(subkeys.k2,
                                           des_decrypt_u64(subkeys.k3, block)));
}

Block64 tdes_encrypt_block(const TdesKey& key, const Block64& block) {
    return u64_to_block(tdes_encrypt_u64(tdes_key_schedule(key), block_to_u64(block)));
}

Block64 tdes_decrypt_block(const TdesKey& key, const Block64& block) {
    return u64_to_block(tdes_decrypt_u64(tdes_key_schedule(key), block_to_u64(block)));
}

int tdes_effective_key_bits(const TdesKey& key) { return key.effective_bits(); }

}  // namespace cipherbench
