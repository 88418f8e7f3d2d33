#include <random>

#include "doctest.h"

#include "cipherbench/bitops.hpp"
#include "cipherbench/tdes.hpp"

using namespace cipherbench;

namespace {

TdesKey key_from_hex(const std::string& hex) {
    return TdesKey::from_octets(hex_decode(hex));
}

}  // namespace

TEST_CASE("keying options from octet length") {
    CHECK(key_from_hex("0123456789abcdef23456789abcdef01456789abcdef0123").option ==
          TdesOption::three_key);
    const TdesKey two = key_from_hex("0123456789abcdeffedcba9876543210");
    CHECK(two.option == TdesOption::two_key);
    CHECK(two.k3.octets == two.k1.octets);  // k3 := k1
    CHECK(two.k2.octets != two.k1.octets);
    const TdesKey one = key_from_hex("0123456789abcdef");
    CHECK(one.option == TdesOption::one_key);
    CHECK(one.k2.octets == one.k1.octets);
    CHECK(one.k3.octets == one.k1.octets);
    CHECK_THROWS_AS(TdesKey::from_octets(std::vector<std::uint8_t>(12)),
                    InvalidKeyError);
}

TEST_CASE("effective key bits per option") {
    CHECK(key_from_hex("0123456789abcdef23456789abcdef01456789abcdef0123")
              .effective_bits() == 168);
    CHECK(key_from_hex("0123456789abcdeffedcba9876543210").effective_bits() == 112);
    CHECK(key_from_hex("0123456789abcdef").effective_bits() == 56);
    CHECK(tdes_effective_key_bits(key_from_hex("0123456789abcdef")) == 56);
}

TEST_CASE("one-key option collapses to single DES") {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t key = rng(), block = rng();
        DesKey des_key;
        des_key.octets = u64_to_block(key);
        TdesKey tdes_key;
        tdes_key.option = TdesOption::one_key;
        tdes_key.k1 = tdes_key.k2 = tdes_key.k3 = des_key;
        CHECK(tdes_encrypt_block(tdes_key, u64_to_block(block)) ==
              des_encrypt_block(des_key, u64_to_block(block)));
        CHECK(tdes_decrypt_block(tdes_key, u64_to_block(block)) ==
              des_decrypt_block(des_key, u64_to_block(block)));
    }
}

TEST_CASE("two-key encryption differs from single DES") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t k1 = rng();
        std::uint64_t k2 = rng();
        // Keys differing only in parity bits would collapse; mask those out.
        if (((k1 ^ k2) & ~0x0101010101010101ull) == 0) k2 ^= 0x0000000000020000ull;
        TdesKey key;
        key.option = TdesOption::two_key;
        key.k1.octets = u64_to_block(k1);
        key.k2.octets = u64_to_block(k2);
        key.k3 = key.k1;
        DesKey single;
        single.octets = u64_to_block(k1);
        const Block64 block = u64_to_block(rng());
        CHECK(tdes_encrypt_block(key, block) != des_encrypt_block(single, block));
    }
}

TEST_CASE("published three-key known answer") {
    const TdesKey key =
        key_from_hex("0123456789abcdef23456789abcdef01456789abcdef0123");
    const TdesSubkeys subkeys = tdes_key_schedule(key);
    const auto plaintext = hex_decode("54686520717566636b2062726f776e20666f78206a756d70");
    const auto expected = hex_decode("a826fd8ce53b855fcce21c8112256fe668d5c05dd9b6b900");
    for (std::size_t off = 0; off < plaintext.size(); off += 8) {
        std::uint64_t pt = 0, ct = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            pt = pt << 8 | plaintext[off + i];
            ct = ct << 8 | expected[off + i];
        }
        CHECK(tdes_encrypt_u64(subkeys, pt) == ct);
        CHECK(tdes_decrypt_u64(subkeys, ct) == pt);
    }
}

TEST_CASE("round trip across keying options") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::uint8_t> octets(i % 3 == 0 ? 8 : (i % 3 == 1 ? 16 : 24));
        for (auto& b : octets) b = static_cast<std::uint8_t>(rng());
        const TdesSubkeys subkeys = tdes_key_schedule(TdesKey::from_octets(octets));
        const std::uint64_t block = rng();
        CHECK(tdes_decrypt_u64(subkeys, tdes_encrypt_u64(subkeys, block)) == block);
    }
}
