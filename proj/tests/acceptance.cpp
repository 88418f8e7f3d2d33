// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit when any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "cipherbench/aes.hpp"
#include "cipherbench/bench.hpp"
#include "cipherbench/bitops.hpp"
#include "cipherbench/cracker.hpp"
#include "cipherbench/des.hpp"
#include "cipherbench/factors.hpp"
#include "cipherbench/kat.hpp"
#include "cipherbench/modes.hpp"
#include "cipherbench/tdes.hpp"

using namespace cipherbench;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool condition, const std::string& message) {
        if (!condition) failures.push_back(message);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

// --- criterion 1: exact reproduction of the computable table rows ---------

void criterion_key_space(Checker& check) {
    const FactorProfile des = factor_profile(Family::des);
    const FactorProfile tdes = factor_profile(Family::tdes);
    const FactorProfile aes = factor_profile(Family::aes);

    check.require(des.key_length_bits == std::vector<int>{56}, "DES key bits");
    check.require(tdes.key_length_bits == std::vector<int>{112, 168},
                  "3DES key bits");
    check.require(aes.key_length_bits == std::vector<int>{128, 192, 256},
                  "AES key bits");
    check.require(des.block_size_bits == std::vector<int>{64}, "DES block bits");
    check.require(tdes.block_size_bits == std::vector<int>{64}, "3DES block bits");
    check.require(aes.block_size_bits == std::vector<int>{128}, "AES block bits");

    auto pow_z = [](unsigned long base, unsigned long exponent) {
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
        return out;
    };
    const std::map<int, const FactorProfile*> owner = {
        {56, &des},  {112, &tdes}, {168, &tdes},
        {128, &aes}, {192, &aes},  {256, &aes},
    };
    for (const auto& [bits, profile] : owner) {
        check.require(profile->possible_keys.at(bits) ==
                          pow_z(2, static_cast<unsigned long>(bits)),
                      "possible keys 2^" + std::to_string(bits));
        check.require(profile->printable_ascii_keys.at(bits) ==
                          pow_z(95, static_cast<unsigned long>(bits / 8)),
                      "printable keys 95^" + std::to_string(bits / 8));
    }
    // Decimal anchors for the smallest pair.
    check.require(des.possible_keys.at(56).get_str() == "72057594037927936",
                  "2^56 decimal expansion");
    check.require(des.printable_ascii_keys.at(56).get_str() == "69833729609375",
                  "95^7 decimal expansion");
}

// --- criterion 2: time-row discrepancy handling ----------------------------

void criterion_time_row(Checker& check) {
    const mpz_class rate("50000000000");

    const BruteForceEstimate t56 = brute_force_time(56, rate, 1);
    check.require(t56.seconds == mpq_class(possible_keys(56)) / mpq_class(rate),
                  "56-bit seconds exact rational");
    check.require(t56.seconds.get_num() == mpz_class("70368744177664") &&
                      t56.seconds.get_den() == mpz_class("48828125"),
                  "56-bit seconds reduced form");
    check.require(t56.human == "16.7 days", "56-bit rendering, got " + t56.human);

    const BruteForceEstimate t112 = brute_force_time(112, rate, 1);
    check.require(t112.human == "3.29e15 years",
                  "112-bit rendering, got " + t112.human);
    const BruteForceEstimate t128 = brute_force_time(128, rate, 1);
    check.require(t128.human == "2.16e20 years",
                  "128-bit rendering, got " + t128.human);

    const struct {
        Family family;
        const char* verbatim;
    } rows[] = {
        {Family::des, "For a 56-bit key: 400 Days"},
        {Family::tdes, "For a 112-bit key: 800 Days"},
        {Family::aes, "For a 128-bit key: 5×10^21 years"},
    };
    for (const auto& row : rows) {
        const FactorProfile profile = factor_profile(row.family, rate);
        const FactorCell& cell = profile.cells.at(FactorId::brute_force_time);
        check.require(cell.reported == row.verbatim,
                      std::string("verbatim string for ") + to_string(row.family));
        check.require(cell.discrepancy,
                      std::string("discrepancy flag for ") + to_string(row.family));
    }

    // The reported figures do not follow from the reported rate: 400 days
    // and 800 days differ from the exact computations by orders of magnitude.
    check.require(t56.seconds != mpq_class(34560000), "400 days is not 2^56/rate");
    check.require(t112.seconds != mpq_class(69120000),
                  "800 days is not 2^112/rate");
    const std::string report = compare_report(
        std::vector<Family>{Family::aes, Family::tdes, Family::des}, rate,
        ReportFormat::text);
    check.require(report.find("400 Days") != std::string::npos &&
                      report.find("16.7 days") != std::string::npos,
                  "report shows computed and reported side by side");
}

// --- criterion 3: KAT corpus conformance -----------------------------------

void criterion_kat_corpus(Checker& check) {
    std::map<std::pair<Algorithm, std::size_t>, int> corpus_sizes;
    bool fips197_present = false;
    for (const char* name : {"des.kat", "tdes.kat", "aes.kat"}) {
        const std::string path = std::string(CIPHERBENCH_VECTOR_DIR) + "/" + name;
        const KatFile file = parse_kat(read_file(path), name);
        const KatSummary summary = run_kats(file);
        for (const KatOutcome& outcome : summary.outcomes)
            check.require(outcome.passed, std::string(name) + " case " +
                                              std::to_string(outcome.id) + ": " +
                                              outcome.detail);
        for (const KatCase& c : file.cases) {
            ++corpus_sizes[{c.algorithm, c.key.size()}];
            if (c.algorithm == Algorithm::aes128 &&
                hex_encode(c.key) == "000102030405060708090a0b0c0d0e0f" &&
                hex_encode(c.plaintext) == "00112233445566778899aabbccddeeff" &&
                hex_encode(c.ciphertext) == "69c4e0d86a7b0430d8cdb78070b4c55a")
                fips197_present = true;
            check.require(c.direction == KatDirection::both,
                          "corpus cases run in both directions");
        }
    }
    check.require(fips197_present, "FIPS-197 appendix vector present");
    const std::pair<Algorithm, std::size_t> classes[] = {
        {Algorithm::des, 8},    {Algorithm::tdes, 8},  {Algorithm::tdes, 16},
        {Algorithm::tdes, 24},  {Algorithm::aes128, 16},
        {Algorithm::aes192, 24}, {Algorithm::aes256, 32},
    };
    for (const auto& cls : classes)
        check.require(corpus_sizes[cls] >= 5,
                      "at least 5 vectors for " + to_string(cls.first) + "/" +
                          std::to_string(cls.second * 8) + "-bit keys, have " +
                          std::to_string(corpus_sizes[cls]));
}

// --- criterion 4: randomized round-trip matrix ------------------------------

void criterion_round_trip(Checker& check) {
    std::mt19937_64 rng(0xacceb7);
    const struct {
        Algorithm algorithm;
        std::size_t key_octets;
    } variants[] = {
        {Algorithm::des, 8},     {Algorithm::tdes, 8},  {Algorithm::tdes, 16},
        {Algorithm::tdes, 24},   {Algorithm::aes128, 16},
        {Algorithm::aes192, 24}, {Algorithm::aes256, 32},
    };
    int cases = 0, failures = 0;
    for (const auto& variant : variants) {
        for (Mode mode : {Mode::ecb, Mode::cbc, Mode::ctr}) {
            for (int rep = 0; rep < 48; ++rep) {
                const CipherSuite suite(variant.algorithm,
                                        random_bytes(rng, variant.key_octets));
                ModeSpec spec;
                spec.mode = mode;
                if (mode != Mode::ecb)
                    spec.iv = random_bytes(rng, suite.block_octets());
                const auto message = random_bytes(rng, rng() % 1025);
                const auto decrypted =
                    mode_decrypt(suite, spec, mode_encrypt(suite, spec, message));
                ++cases;
                if (decrypted != message) ++failures;
            }
        }
    }
    check.require(cases >= 1000, "at least 1000 cases, ran " + std::to_string(cases));
    check.require(failures == 0,
                  std::to_string(failures) + " round-trip failures of " +
                      std::to_string(cases));
}

// --- criterion 5: structural oracles ----------------------------------------

void criterion_structural(Checker& check) {
    std::mt19937_64 rng(0xacce5);

    // One-key TDES collapses to DES, exact, 500 cases.
    int collapse_failures = 0;
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t key = rng(), block = rng();
        DesKey des_key;
        des_key.octets = u64_to_block(key);
        TdesKey one;
        one.option = TdesOption::one_key;
        one.k1 = one.k2 = one.k3 = des_key;
        if (tdes_encrypt_block(one, u64_to_block(block)) !=
            des_encrypt_block(des_key, u64_to_block(block)))
            ++collapse_failures;
    }
    check.require(collapse_failures == 0,
                  std::to_string(collapse_failures) + " one-key collapse failures");

    // DES complementation property, exact, 1000 cases.
    int complement_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t key = rng(), block = rng();
        const std::uint64_t a =
            des_encrypt_u64(des_key_schedule({u64_to_block(key), {}}), block);
        const std::uint64_t b =
            des_encrypt_u64(des_key_schedule({u64_to_block(~key), {}}), ~block);
        if (b != ~a) ++complement_failures;
    }
    check.require(complement_failures == 0,
                  std::to_string(complement_failures) + " complementation failures");

    // S-box bijection and inverse composition, exhaustive.
    std::array<bool, 256> seen{};
    bool sbox_ok = true;
    for (unsigned x = 0; x < 256; ++x) {
        const std::uint8_t s = aes_sbox(static_cast<std::uint8_t>(x));
        if (seen[s]) sbox_ok = false;
        seen[s] = true;
        if (aes_inv_sbox(s) != x) sbox_ok = false;
    }
    check.require(sbox_ok, "S-box bijection / inverse composition");
    check.require(aes_sbox(0x00) == 0x63, "S-box affine constant");

    // Full gf_mul table against an independent shift-and-add oracle.
    auto peasant = [](std::uint8_t a, std::uint8_t b) {
        std::uint8_t result = 0;
        unsigned x = a;
        for (int i = 0; i < 8; ++i) {
            if (b & 1) result ^= static_cast<std::uint8_t>(x);
            b = static_cast<std::uint8_t>(b >> 1);
            x <<= 1;
            if (x & 0x100) x ^= 0x11B;
        }
        return result;
    };
    int gf_failures = 0;
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b)
            if (gf::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) !=
                peasant(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)))
                ++gf_failures;
    check.require(gf_failures == 0,
                  std::to_string(gf_failures) + " gf_mul table mismatches");
}

// --- criterion 6: avalanche statistics ---------------------------------------

void criterion_avalanche(Checker& check) {
    std::mt19937_64 rng(0xaa1a);
    const int trials = 1000;

    double des_total = 0;
    for (int i = 0; i < trials; ++i) {
        const DesSubkeys subkeys = des_key_schedule({u64_to_block(rng()), {}});
        const std::uint64_t block = rng();
        const std::uint64_t flipped = block ^ (1ull << (rng() % 64));
        des_total += std::popcount(des_encrypt_u64(subkeys, block) ^
                                   des_encrypt_u64(subkeys, flipped));
    }
    const double des_mean = des_total / trials;
    check.require(des_mean >= 28.0 && des_mean <= 36.0,
                  "DES avalanche mean " + std::to_string(des_mean) +
                      " outside [28, 36]");

    double aes_total = 0;
    for (int i = 0; i < trials; ++i) {
        const AesSchedule schedule =
            aes_key_expansion(AesKey::from_octets(random_bytes(rng, 16)));
        Block128 block{};
        for (auto& b : block) b = static_cast<std::uint8_t>(rng());
        Block128 flipped = block;
        const unsigned bit = static_cast<unsigned>(rng() % 128);
        flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        Block128 a{}, b{};
        aes_encrypt_block(schedule, block.data(), a.data());
        aes_encrypt_block(schedule, flipped.data(), b.data());
        for (int j = 0; j < 16; ++j)
            aes_total += std::popcount(
                static_cast<unsigned>(a[static_cast<std::size_t>(j)] ^
                                      b[static_cast<std::size_t>(j)]));
    }
    const double aes_mean = aes_total / trials;
    check.require(aes_mean >= 58.0 && aes_mean <= 70.0,
                  "AES-128 avalanche mean " + std::to_string(aes_mean) +
                      " outside [58, 70]");
}

// --- criterion 7: benchmark ordering ------------------------------------------

void criterion_benchmark(Checker& check) {
    auto spec = [](Algorithm algorithm) {
        BenchSpec s;
        s.algorithm = algorithm;
        s.mode = Mode::ctr;
        s.payload_octets = 1 << 20;
        s.min_duration_s = 1.0;
        return s;
    };
    const BenchResult aes = measure(spec(Algorithm::aes128));
    const BenchResult tdes = measure(spec(Algorithm::tdes));
    const BenchResult des = measure(spec(Algorithm::des));

    char line[160];
    std::snprintf(line, sizeof line,
                  "     throughput MiB/s: aes128 %.2f, des %.2f, tdes %.2f",
                  aes.octets_per_second / 1048576.0,
                  des.octets_per_second / 1048576.0,
                  tdes.octets_per_second / 1048576.0);
    std::puts(line);

    check.require(aes.octets_per_second > tdes.octets_per_second,
                  "AES-128 CTR throughput does not exceed 3-key TDES");
    const double ratio = des.octets_per_second / tdes.octets_per_second;
    check.require(ratio >= 2.0 && ratio <= 5.0,
                  "DES/TDES ratio " + std::to_string(ratio) + " outside [2, 5]");
}

// --- criterion 8: cracker ------------------------------------------------------

void criterion_cracker(Checker& check) {
    std::mt19937_64 rng(0xc4ac8);

    auto plant = [&](int free_bits, int workers) {
        const std::uint64_t effective = rng() & ((1ull << 56) - 1);
        DesKey key;
        key.octets = effective_to_des_key(effective);
        CrackJob job;
        job.known_plaintext = u64_to_block(rng());
        job.known_ciphertext = des_encrypt_block(key, job.known_plaintext);
        job.key_template = effective;
        for (int i = 0; i < free_bits; ++i) job.free_positions.push_back(i);
        job.workers = workers;
        return std::pair<CrackJob, std::uint64_t>(job, effective);
    };

    // 20 plant-and-recover jobs with 16..22 free bits.
    int recovered = 0;
    for (int i = 0; i < 20; ++i) {
        const int free_bits = 16 + static_cast<int>(rng() % 7);
        const auto [job, effective] = plant(free_bits, 2);
        const CrackResult result = crack(job);
        if (result.found_effective && *result.found_effective == effective)
            ++recovered;
        else
            check.require(false, "job " + std::to_string(i) + " (" +
                                     std::to_string(free_bits) +
                                     " free bits) failed to recover the key");
    }
    check.require(recovered == 20, "recovered " + std::to_string(recovered) +
                                       "/20 planted keys");

    // Identical results at 1, 2, 4 and 8 workers.
    const auto [found_job_base, found_effective] = plant(16, 1);
    const auto [miss_job_base, miss_effective] = plant(14, 1);
    CrackJob miss_job = miss_job_base;
    miss_job.key_template ^= 1ull << 55;  // move the template off the key
    for (int workers : {1, 2, 4, 8}) {
        CrackJob found_job = found_job_base;
        found_job.workers = workers;
        const CrackResult result = crack(found_job);
        check.require(result.found_effective &&
                          *result.found_effective == found_effective,
                      "worker count " + std::to_string(workers) +
                          " changed the recovered key");
        miss_job.workers = workers;
        const CrackResult missed = crack(miss_job);
        check.require(!missed.found_effective &&
                          missed.keys_tested == (1ull << 14),
                      "worker count " + std::to_string(workers) +
                          " changed the exhaustion count");
    }

    // A 22-bit single-threaded job completes in under a minute.
    const auto [big_job, big_effective] = plant(22, 1);
    const auto start = std::chrono::steady_clock::now();
    const CrackResult big = crack(big_job);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check.require(big.found_effective && *big.found_effective == big_effective,
                  "22-bit job failed to recover the key");
    check.require(elapsed < 60.0, "22-bit single-threaded job took " +
                                      std::to_string(elapsed) + " s");
    char line[96];
    std::snprintf(line, sizeof line,
                  "     22-bit single-threaded: %.1f s, %s keys/s", elapsed,
                  big.measured_rate.get_str().c_str());
    std::puts(line);

    // Extrapolation is bit-identical to the factors arithmetic.
    check.require(big.extrapolation == brute_force_time(56, big.measured_rate, 1),
                  "extrapolation does not match factors arithmetic");
    check.require(big.extrapolation.key_count == possible_keys(56),
                  "extrapolation covers the full 56-bit space");
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no stated bound
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "key-space table rows reproduce exactly", 1.0, criterion_key_space},
        {2, "time row: exact values beside reported strings, flagged", 1.0,
         criterion_time_row},
        {3, "KAT corpus passes bit-exact in both directions", 5.0,
         criterion_kat_corpus},
        {4, "randomized round-trip matrix (>= 1000 cases)", 30.0,
         criterion_round_trip},
        {5, "structural oracles (collapse, complementation, S-box, gf_mul)", 0,
         criterion_structural},
        {6, "avalanche means inside [28,36] (DES) and [58,70] (AES-128)", 30.0,
         criterion_avalanche},
        {7, "benchmark ordering: AES-128 > 3DES, DES/TDES in [2,5]", 60.0,
         criterion_benchmark},
        {8, "cracker: plant-and-recover, worker independence, extrapolation", 0,
         criterion_cracker},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (criterion.budget_seconds > 0 && elapsed >= criterion.budget_seconds)
            check.failures.push_back("runtime " + std::to_string(elapsed) +
                                     " s exceeds " +
                                     std::to_string(criterion.budget_seconds) + " s");
        char line[192];
        std::snprintf(line, sizeof line, "%s criterion %d (%6.2f s): %s",
                      check.failures.empty() ? "PASS" : "FAIL", criterion.id,
                      elapsed, criterion.name);
        std::puts(line);
        for (const std::string& failure : check.failures)
            std::printf("     - %s\n", failure.c_str());
        if (!check.failures.empty()) ++failed;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
