#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cipherbench/modes.hpp"

namespace cipherbench {

enum class KatDirection { encrypt, decrypt, both };

/// One known-answer case. ECB/CBC cases are raw (unpadded) block vectors.
struct KatCase {
    int id = 0;
    Algorithm algorithm = Algorithm::des;
    Mode mode = Mode::ecb;
    std::vector<std::uint8_t> key;
    std::optional<std::vector<std::uint8_t>> iv;
    std::vector<std::uint8_t> plaintext;
    std::vector<std::uint8_t> ciphertext;
    KatDirection direction = KatDirection::both;

    bool operator==(const KatCase&) const = default;
};

struct KatFile {
    std::string source;
    std::vector<KatCase> cases;

    bool operator==(const KatFile&) const = default;
};

// Line-oriented format: `# comment`, `[ALGO=aes128] [MODE=cbc]` section
// headers, then per-case `COUNT = n`, `KEY = hex`, `IV = hex`,
// `PLAINTEXT = hex`, `CIPHERTEXT = hex`, `DIRECTION = encrypt|decrypt|both`;
// a blank line ends a case. Hex is case-insensitive on input.
KatFile parse_kat(std::string_view text, std::string source_name = {});

std::string serialize_kat(const KatFile& file);

struct KatOutcome {
    int id = 0;
    Algorithm algorithm = Algorithm::des;
    Mode mode = Mode::ecb;
    bool passed = false;
    std::string detail;  // expected-vs-actual hex on failure
};

struct KatSummary {
    std::string source;
    std::vector<KatOutcome> outcomes;  // ordered by case id

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
};

// Executes each case in its requested direction(s), comparing bit-exact.
// Always completes; per-case errors become failed outcomes.
KatSummary run_kats(const KatFile& file);

std::string format_summary(const KatSummary& summary);

}  // namespace cipherbench
