#include "cipherbench/cracker.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "json.hpp"

#include "cipherbench/bitops.hpp"

namespace cipherbench {

namespace {

constexpr std::uint64_t kEffectiveMask = (1ull << 56) - 1;

void validate_job(const CrackJob& job, std::vector<int>& positions) {
    if (job.workers < 1)
        throw ValidationError("worker count must be at least 1");
    if (job.key_template > kEffectiveMask)
        throw ValidationError("key template wider than 56 bits");
    if (job.free_positions.size() > 28)
        throw ContractViolation(
            "free-bit count " + std::to_string(job.free_positions.size()) +
            " exceeds the desk-scale cap of 28 (2^28 candidates)");
    positions = job.free_positions;
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] > 55)
            throw ValidationError("free bit position " +
                                  std::to_string(positions[i]) + " outside 0..55");
        if (i > 0 && positions[i] == positions[i - 1])
            throw ValidationError("duplicate free bit position " +
                                  std::to_string(positions[i]));
    }
}

// Sorting the free positions ascending and mapping counter bit j to
// positions[j] makes the candidate value strictly increasing in the counter,
// so the smallest matching index is the smallest matching effective key.
std::uint64_t candidate(std::uint64_t base, const std::vector<int>& positions,
                        std::uint64_t index) {
    std::uint64_t key = base;
    for (std::size_t j = 0; j < positions.size(); ++j)
        key |= ((index >> j) & 1) << positions[static_cast<std::size_t>(j)];
    return key;
}

}  // namespace

Block64 effective_to_des_key(std::uint64_t effective) {
    if (effective > kEffectiveMask)
        throw ContractViolation("effective key wider than 56 bits");
    Block64 out{};
    for (int i = 0; i < 8; ++i) {
        const auto seven =
            static_cast<std::uint8_t>((effective >> (49 - 7 * i)) & 0x7f);
        // Odd parity in the low bit of each octet.
        const std::uint8_t parity = (std::popcount(seven) % 2 == 0) ? 1 : 0;
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seven << 1 | parity);
    }
    return out;
}

std::uint64_t des_key_to_effective(const Block64& key) {
    std::uint64_t effective = 0;
    for (int i = 0; i < 8; ++i)
        effective = (effective << 7) | (key[static_cast<std::size_t>(i)] >> 1);
    return effective;
}

BruteForceEstimate extrapolate(const mpz_class& measured_rate, int bits) {
    return brute_force_time(bits, measured_rate, 1);
}

CrackResult crack(const CrackJob& job) {
    std::vector<int> positions;
    validate_job(job, positions);

    const std::uint64_t base = [&] {
        std::uint64_t mask = 0;
        for (int p : positions) mask |= 1ull << p;
        return job.key_template & ~mask;
    }();

    const std::uint64_t total = 1ull << positions.size();
    const std::uint64_t plaintext = block_to_u64(job.known_plaintext);
    const std::uint64_t ciphertext = block_to_u64(job.known_ciphertext);

    std::atomic<std::uint64_t> best_index{UINT64_MAX};
    std::atomic<std::uint64_t> tested{0};

    auto search_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local_tested = 0;
        for (std::uint64_t index = begin; index < end; ++index) {
            // Indices at or above the current best cannot improve the match.
            if (index >= best_index.load(std::memory_order_relaxed)) break;
            const std::uint64_t effective = candidate(base, positions, index);
            DesKey key;
            key.octets = effective_to_des_key(effective);
            const DesSubkeys subkeys = des_key_schedule(key);
            ++local_tested;
            if (des_encrypt_u64(subkeys, plaintext) == ciphertext) {
                std::uint64_t seen = best_index.load(std::memory_order_relaxed);
                while (index < seen &&
                       !best_index.compare_exchange_weak(seen, index,
                                                         std::memory_order_relaxed)) {
                }
                break;
            }
        }
        tested.fetch_add(local_tested, std::memory_order_relaxed);
    };

    const auto start = std::chrono::steady_clock::now();
    const auto workers = static_cast<std::uint64_t>(job.workers);
    if (workers <= 1) {
        search_range(0, total);
    } else {
        const std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            if (begin >= total) break;
            threads.emplace_back(search_range, begin, std::min(begin + chunk, total));
        }
        for (auto& t : threads) t.join();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    CrackResult result;
    result.keys_tested = tested.load();
    result.elapsed_seconds = elapsed;
    const std::uint64_t found_index = best_index.load();
    if (found_index != UINT64_MAX) {
        const std::uint64_t effective = candidate(base, positions, found_index);
        result.found_effective = effective;
        result.found_key = effective_to_des_key(effective);
    }
    const double rate = elapsed > 0
                            ? static_cast<double>(result.keys_tested) / elapsed
                            : static_cast<double>(result.keys_tested);
    result.measured_rate = std::max<long>(1, static_cast<long>(rate));
    result.extrapolation = extrapolate(result.measured_rate, 56);
    return result;
}

CrackJob crack_job_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("crack job JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    CrackJob job;
    try {
        const auto block_field = [&](const char* name) {
            const auto bytes = hex_decode(doc.at(name).get<std::string>());
            if (bytes.size() != 8)
                throw ValidationError(std::string(name) + " must be 8 octets");
            Block64 block{};
            std::copy(bytes.begin(), bytes.end(), block.begin());
            return block;
        };
        job.known_plaintext = block_field("plaintext");
        job.known_ciphertext = block_field("ciphertext");
        const auto template_hex = doc.at("template_hex").get<std::string>();
        job.key_template = 0;
        for (std::uint8_t b : hex_decode(template_hex))
            job.key_template = job.key_template << 8 | b;
        if (job.key_template > kEffectiveMask)
            throw ValidationError("template_hex wider than 56 bits");
        job.free_positions = doc.at("free_bit_positions").get<std::vector<int>>();
        if (doc.contains("workers")) job.workers = doc.at("workers").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("crack job JSON: ") + e.what());
    }
    return job;
}

}  // namespace cipherbench
