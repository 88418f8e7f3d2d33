#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cipherbench/error.hpp"

namespace cipherbench {

/// Profile granularity of the nine-factor comparison: one column per cipher
/// family (AES covers all three key sizes, 3DES both keying strengths).
enum class Family { des, tdes, aes };

std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

enum class FactorId {
    key_length,
    cipher_type,
    block_size,
    developed,
    cryptanalysis_resistance,
    security,
    possible_keys,
    printable_ascii_keys,
    brute_force_time,
};

inline constexpr std::array<FactorId, 9> kFactorOrder = {
    FactorId::key_length,      FactorId::cipher_type,
    FactorId::block_size,      FactorId::developed,
    FactorId::cryptanalysis_resistance, FactorId::security,
    FactorId::possible_keys,   FactorId::printable_ascii_keys,
    FactorId::brute_force_time,
};

std::string to_string(FactorId factor);

/// Exact brute-force cost: seconds == key_count * fraction / rate with no
/// floating point in the stored values; `human` is the rendered duration.
struct BruteForceEstimate {
    mpz_class key_count;
    mpz_class rate_keys_per_second;
    mpq_class fraction;  // in (0, 1]; 1 covers the whole key space
    mpq_class seconds;
    std::string human;

    bool operator==(const BruteForceEstimate& other) const {
        return key_count == other.key_count &&
               rate_keys_per_second == other.rate_keys_per_second &&
               fraction == other.fraction && seconds == other.seconds &&
               human == other.human;
    }
};

// Exactly 2^bits (0 <= bits <= 4096).
mpz_class possible_keys(int bits);

// Exactly 95^(bits/8); defined only for positive multiples of 8.
mpz_class printable_ascii_keys(int bits);

BruteForceEstimate brute_force_time(int bits, const mpz_class& rate_keys_per_second,
                                    const mpq_class& fraction = 1);

// Largest unit (seconds/minutes/hours/days/years) with 3 significant
// figures; scientific notation outside a comfortable fixed-point range.
// A year is 31,557,600 seconds.
std::string render_duration(const mpq_class& seconds);

// 3-significant-figure rendering of a nonnegative exact rational.
std::string render_sig3(const mpq_class& value);

/// One row of one column: the computed value (absent for rows that are pure
/// metadata) and the verbatim string the comparison study reports, plus a
/// flag set when the two provably disagree.
struct FactorCell {
    std::optional<std::string> computed;
    std::string reported;
    bool discrepancy = false;
};

struct FactorProfile {
    Family family;
    std::string display_name;
    std::vector<int> key_length_bits;
    std::string cipher_type;
    std::vector<int> block_size_bits;
    int developed_year = 0;
    std::string cryptanalysis_resistance;  // verbatim metadata
    std::string security_status;           // verbatim metadata
    std::map<int, mpz_class> possible_keys;          // keyed by key bits
    std::map<int, mpz_class> printable_ascii_keys;   // keyed by key bits
    std::map<int, BruteForceEstimate> brute_force;   // keyed by key bits
    std::map<FactorId, FactorCell> cells;            // all nine rows
};

inline const mpz_class kDefaultRate = mpz_class("50000000000");  // 50 billion keys/s

FactorProfile factor_profile(Family family, const mpz_class& rate = kDefaultRate);

enum class ReportFormat { text, csv, json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

// Nine rows in the published order, one column per requested family, with a
// footnote per cell whose reported figure disagrees with the computed one.
std::string compare_report(std::span<const Family> families, const mpz_class& rate,
                           ReportFormat format);

}  // namespace cipherbench
