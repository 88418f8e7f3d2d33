#include "cipherbench/aes.hpp"

#include <algorithm>

namespace cipherbench {

namespace {

// Carry-less product reduced modulo 0x11B. Only used at compile time to
// build the log/antilog tables; runtime multiplication goes through them.
constexpr std::uint8_t slow_mul(std::uint8_t a, std::uint8_t b) {
    unsigned acc = 0;
    unsigned x = a;
    for (int i = 0; i < 8; ++i) {
        if (b & (1u << i)) acc ^= x << i;
    }
    for (int bit = 15; bit >= 8; --bit) {
        if (acc & (1u << bit)) acc ^= 0x11Bu << (bit - 8);
    }
    return static_cast<std::uint8_t>(acc);
}

struct GfTables {
    std::array<std::uint8_t, 256> log{};
    std::array<std::uint8_t, 255> exp{};
};

// 0x03 generates the multiplicative group of GF(2^8).
constexpr GfTables make_gf_tables() {
    GfTables t{};
    std::uint8_t x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[static_cast<std::size_t>(i)] = x;
        t.log[x] = static_cast<std::uint8_t>(i);
        x = slow_mul(x, 0x03);
    }
    return t;
}

constexpr GfTables kGf = make_gf_tables();

constexpr std::uint8_t rotl8(std::uint8_t x, int n) {
    return static_cast<std::uint8_t>((x << n) | (x >> (8 - n)));
}

constexpr std::uint8_t gf_inverse_const(std::uint8_t a) {
    if (a == 0) return 0;
    return kGf.exp[static_cast<std::size_t>((255 - kGf.log[a]) % 255)];
}

constexpr std::uint8_t sbox_of(std::uint8_t x) {
    const std::uint8_t b = gf_inverse_const(x);
    return static_cast<std::uint8_t>(b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^
                                     rotl8(b, 4) ^ 0x63);
}

struct SboxTables {
    std::array<std::uint8_t, 256> fwd{};
    std::array<std::uint8_t, 256> inv{};
};

constexpr SboxTables make_sboxes() {
    SboxTables t{};
    for (int i = 0; i < 256; ++i) {
        const std::uint8_t s = sbox_of(static_cast<std::uint8_t>(i));
        t.fwd[static_cast<std::size_t>(i)] = s;
        t.inv[s] = static_cast<std::uint8_t>(i);
    }
    return t;
}

constexpr SboxTables kSbox = make_sboxes();

int variant_key_octets(AesVariant v) {
    switch (v) {
    case AesVariant::aes128: return 16;
    case AesVariant::aes192: return 24;
    case AesVariant::aes256: return 32;
    }
    return 0;
}

}  // namespace

namespace gf {

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const int s = kGf.log[a] + kGf.log[b];
    return kGf.exp[static_cast<std::size_t>(s % 255)];
}

std::uint8_t inverse(std::uint8_t a) { return gf_inverse_const(a); }

}  // namespace gf

std::uint8_t aes_sbox(std::uint8_t b) { return kSbox.fwd[b]; }
std::uint8_t aes_inv_sbox(std::uint8_t b) { return kSbox.inv[b]; }

AesKey AesKey::from_octets(std::span<const std::uint8_t> octets) {
    AesKey key;
    switch (octets.size()) {
    case 16: key.variant = AesVariant::aes128; break;
    case 24: key.variant = AesVariant::aes192; break;
    case 32: key.variant = AesVariant::aes256; break;
    default:
        throw InvalidKeyError("AES key must be 16, 24 or 32 octets, got " +
                              std::to_string(octets.size()));
    }
    key.octets.assign(octets.begin(), octets.end());
    return key;
}

int AesKey::rounds() const {
    switch (variant) {
    case AesVariant::aes128: return 10;
    case AesVariant::aes192: return 12;
    case AesVariant::aes256: return 14;
    }
    return 0;
}

AesSchedule aes_key_expansion(const AesKey& key) {
    const int nk = variant_key_octets(key.variant) / 4;
    if (static_cast<int>(key.octets.size()) != nk * 4)
        throw InvalidKeyError("AES key length does not match its variant");
    const int nr = key.rounds();
    const int words = 4 * (nr + 1);

    std::array<std::array<std::uint8_t, 4>, 60> w{};
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < 4; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                key.octets[static_cast<std::size_t>(4 * i + j)];

    std::uint8_t rcon = 0x01;
    for (int i = nk; i < words; ++i) {
        auto temp = w[static_cast<std::size_t>(i - 1)];
        if (i % nk == 0) {
            // RotWord then SubWord, then the round constant on the first octet.
            std::rotate(temp.begin(), temp.begin() + 1, temp.end());
            for (auto& b : temp) b = kSbox.fwd[b];
            temp[0] ^= rcon;
            rcon = gf::mul(rcon, 0x02);
        } else if (nk > 6 && i % nk == 4) {
            for (auto& b : temp) b = kSbox.fwd[b];
        }
        for (int j = 0; j < 4; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                w[static_cast<std::size_t>(i - nk)][static_cast<std::size_t>(j)] ^
                temp[static_cast<std::size_t>(j)];
    }

    AesSchedule schedule;
    schedule.rounds = nr;
    for (int r = 0; r <= nr; ++r)
        for (int c = 0; c < 4; ++c)
            for (int j = 0; j < 4; ++j)
                schedule.round_keys[static_cast<std::size_t>(r)]
                                   [static_cast<std::size_t>(4 * c + j)] =
                    w[static_cast<std::size_t>(4 * r + c)][static_cast<std::size_t>(j)];
    return schedule;
}

namespace aes_steps {

void sub_bytes(std::uint8_t state[16]) {
    for (int i = 0; i < 16; ++i) state[i] = kSbox.fwd[state[i]];
}

void inv_sub_bytes(std::uint8_t state[16]) {
    for (int i = 0; i < 16; ++i) state[i] = kSbox.inv[state[i]];
}

// Row r of the state rotates left by r; state[r + 4c] is row r, column c.
void shift_rows(std::uint8_t state[16]) {
    std::uint8_t tmp[16];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            tmp[r + 4 * c] = state[r + 4 * ((c + r) % 4)];
    std::copy_n(tmp, 16, state);
}

void inv_shift_rows(std::uint8_t state[16]) {
    std::uint8_t tmp[16];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            tmp[r + 4 * ((c + r) % 4)] = state[r + 4 * c];
    std::copy_n(tmp, 16, state);
}

void mix_columns(std::uint8_t state[16]) {
    for (int c = 0; c < 4; ++c) {
        std::uint8_t* col = state + 4 * c;
        const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = gf::mul(a0, 2) ^ gf::mul(a1, 3) ^ a2 ^ a3;
        col[1] = a0 ^ gf::mul(a1, 2) ^ gf::mul(a2, 3) ^ a3;
        col[2] = a0 ^ a1 ^ gf::mul(a2, 2) ^ gf::mul(a3, 3);
        col[3] = gf::mul(a0, 3) ^ a1 ^ a2 ^ gf::mul(a3, 2);
    }
}

void inv_mix_columns(std::uint8_t state[16]) {
    for (int c = 0; c < 4; ++c) {
        std::uint8_t* col = state + 4 * c;
        const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = gf::mul(a0, 14) ^ gf::mul(a1, 11) ^ gf::mul(a2, 13) ^ gf::mul(a3, 9);
        col[1] = gf::mul(a0, 9) ^ gf::mul(a1, 14) ^ gf::mul(a2, 11) ^ gf::mul(a3, 13);
        col[2] = gf::mul(a0, 13) ^ gf::mul(a1, 9) ^ gf::mul(a2, 14) ^ gf::mul(a3, 11);
        col[3] = gf::mul(a0, 11) ^ gf::mul(a1, 13) ^ gf::mul(a2, 9) ^ gf::mul(a3, 14);
    }
}

}  // namespace aes_steps

namespace {

void add_round_key(std::uint8_t state[16], const std::array<std::uint8_t, 16>& rk) {
    for (int i = 0; i < 16; ++i) state[i] ^= rk[static_cast<std::size_t>(i)];
}

}  // namespace

void aes_encrypt_block(const AesSchedule& schedule, const std::uint8_t in[16],
                       std::uint8_t out[16]) {
    using namespace aes_steps;
    std::uint8_t state[16];
    std::copy_n(in, 16, state);
    add_round_key(state, schedule.round_keys[0]);
    for (int round = 1; round < schedule.rounds; ++round) {
        sub_bytes(state);
        shift_rows(state);
        mix_columns(state);
        add_round_key(state, schedule.round_keys[static_cast<std::size_t>(round)]);
    }
    sub_bytes(state);
    shift_rows(state);
    add_round_key(state, schedule.round_keys[static_cast<std::size_t>(schedule.rounds)]);
    std::copy_n(state, 16, out);
}

void aes_decrypt_block(const AesSchedule& schedule, const std::uint8_t in[16],
                       std::uint8_t out[16]) {
    using namespace aes_steps;
    std::uint8_t state[16];
    std::copy_n(in, 16, state);
    add_round_key(state, schedule.round_keys[static_cast<std::size_t>(schedule.rounds)]);
    inv_shift_rows(state);
    inv_sub_bytes(state);
    for (int round = schedule.rounds - 1; round >= 1; --round) {
        add_round_key(state, schedule.round_keys[static_cast<std::size_t>(round)]);
        inv_mix_columns(state);
        inv_shift_rows(state);
        inv_sub_bytes(state);
    }
    add_round_key(state, schedule.round_keys[0]);
    std::copy_n(state, 16, out);
}

Block128 aes_encrypt_block(const AesKey& key, const Block128& block) {
    Block128 out{};
    aes_encrypt_block(aes_key_expansion(key), block.data(), out.data());
    return out;
}

Block128 aes_decrypt_block(const AesKey& key, const Block128& block) {
    Block128 out{};
    aes_decrypt_block(aes_key_expansion(key), block.data(), out.data());
    return out;
}

}  // namespace cipherbench
