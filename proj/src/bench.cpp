#include "cipherbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"

namespace cipherbench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint8_t> deterministic_bytes(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

std::uint64_t fnv1a(std::uint64_t hash, std::span<const std::uint8_t> data) {
    for (std::uint8_t b : data) {
        hash ^= b;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

struct Workload {
    CipherSuite suite;
    Mode mode;
    std::vector<std::uint8_t> plaintext;
};

Workload make_workload(const BenchSpec& spec) {
    const auto lengths = key_octets(spec.algorithm);
    // Largest accepted length: 3-key for TDES, the nominal size elsewhere.
    const std::size_t key_len = *std::max_element(lengths.begin(), lengths.end());
    const auto key = deterministic_bytes(spec.seed, key_len);

    const std::size_t bs = block_octets(spec.algorithm);
    std::size_t payload = std::max(spec.payload_octets, bs);
    if (spec.mode != Mode::ctr && payload % bs != 0)
        payload += bs - payload % bs;  // raw block modes need aligned input

    return Workload{CipherSuite(spec.algorithm, key), spec.mode,
                    deterministic_bytes(spec.seed + 1, payload)};
}

// One pass over the payload; a fresh IV per iteration keeps the work from
// repeating byte-identically while staying deterministic.
std::uint64_t one_iteration(const Workload& w, std::uint64_t iteration,
                            std::uint64_t checksum) {
    ModeSpec spec;
    spec.mode = w.mode;
    if (w.mode != Mode::ecb) {
        std::vector<std::uint8_t> iv(w.suite.block_octets(), 0);
        std::uint64_t v = iteration;
        for (std::size_t i = iv.size(); i-- > 0 && v;) {
            iv[i] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
        spec.iv = std::move(iv);
    }
    const auto ciphertext = mode_encrypt_raw(w.suite, spec, w.plaintext);
    return fnv1a(checksum, ciphertext);
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;

}  // namespace

BenchResult measure(const BenchSpec& spec) {
    const Workload workload = make_workload(spec);

    std::uint64_t checksum = kFnvOffset;
    std::uint64_t iterations = 0;

    const auto warmup_start = Clock::now();
    while (seconds_since(warmup_start) < spec.warmup_s)
        checksum = one_iteration(workload, iterations, checksum);

    checksum = kFnvOffset;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        checksum = one_iteration(workload, iterations, checksum);
        ++iterations;
        elapsed = seconds_since(start);
    } while (elapsed < spec.min_duration_s);

    BenchResult result;
    result.algorithm = spec.algorithm;
    result.mode = spec.mode;
    result.payload_octets = workload.plaintext.size();
    result.iterations = iterations;
    result.seconds = elapsed;
    result.octets_per_second =
        static_cast<double>(workload.plaintext.size()) *
        static_cast<double>(iterations) / elapsed;
    result.checksum = checksum;
    return result;
}

std::uint64_t workload_checksum(const BenchSpec& spec, std::uint64_t iterations) {
    const Workload workload = make_workload(spec);
    std::uint64_t checksum = kFnvOffset;
    for (std::uint64_t i = 0; i < iterations; ++i)
        checksum = one_iteration(workload, i, checksum);
    return checksum;
}

namespace {

const BenchResult* find_result(std::span<const BenchResult> results, Algorithm a) {
    for (const BenchResult& r : results)
        if (r.algorithm == a) return &r;
    return nullptr;
}

std::string text_bench_report(std::span<const BenchResult> results) {
    std::vector<BenchResult> sorted(results.begin(), results.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.octets_per_second > b.octets_per_second;
    });

    std::ostringstream out;
    out << "algorithm  mode  payload     iters   seconds    MiB/s\n";
    for (const BenchResult& r : sorted) {
        char line[128];
        std::snprintf(line, sizeof line, "%-10s %-5s %-11zu %-7llu %-10.3f %.2f\n",
                      to_string(r.algorithm).c_str(), to_string(r.mode).c_str(),
                      r.payload_octets,
                      static_cast<unsigned long long>(r.iterations), r.seconds,
                      r.octets_per_second / (1024.0 * 1024.0));
        out << line;
    }

    const BenchResult* des = find_result(results, Algorithm::des);
    const BenchResult* tdes = find_result(results, Algorithm::tdes);
    const BenchResult* aes = find_result(results, Algorithm::aes128);
    if (des && tdes) {
        char line[96];
        std::snprintf(line, sizeof line, "des/tdes throughput ratio: %.2f\n",
                      des->octets_per_second / tdes->octets_per_second);
        out << line;
    }
    if (aes && tdes) {
        char line[96];
        std::snprintf(line, sizeof line, "aes128/tdes throughput ratio: %.2f\n",
                      aes->octets_per_second / tdes->octets_per_second);
        out << line;
        out << "reported ordering (AES outperforms 3DES in software): "
            << (aes->octets_per_second > tdes->octets_per_second
                    ? "reproduced on this machine"
                    : "NOT reproduced on this machine")
            << "\n";
    }
    return out.str();
}

std::string csv_bench_report(std::span<const BenchResult> results) {
    std::ostringstream out;
    out << "algorithm,mode,payload,iterations,seconds,octets_per_second\n";
    for (const BenchResult& r : results) {
        out << to_string(r.algorithm) << "," << to_string(r.mode) << ","
            << r.payload_octets << "," << r.iterations << "," << r.seconds << ","
            << static_cast<std::uint64_t>(r.octets_per_second) << "\n";
    }
    return out.str();
}

std::string json_bench_report(std::span<const BenchResult> results) {
    nlohmann::json root = nlohmann::json::array();
    for (const BenchResult& r : results) {
        root.push_back({
            {"algorithm", to_string(r.algorithm)},
            {"mode", to_string(r.mode)},
            {"payload", r.payload_octets},
            {"iterations", r.iterations},
            {"seconds", r.seconds},
            {"octets_per_second", r.octets_per_second},
        });
    }
    return root.dump(2) + "\n";
}

}  // namespace

std::string bench_report(std::span<const BenchResult> results, ReportFormat format) {
    if (results.empty())
        throw ContractViolation("at least one benchmark result is required");
    switch (format) {
    case ReportFormat::text: return text_bench_report(results);
    case ReportFormat::csv: return csv_bench_report(results);
    case ReportFormat::json: return json_bench_report(results);
    }
    throw ContractViolation("unknown report format");
}

}  // namespace cipherbench
