#include "cipherbench/kat.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cipherbench/bitops.hpp"

namespace cipherbench {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct PendingCase {
    std::optional<int> count;
    std::optional<std::vector<std::uint8_t>> key, iv, plaintext, ciphertext;
    std::optional<KatDirection> direction;
    int first_line = 0;
    bool any() const {
        return count || key || iv || plaintext || ciphertext || direction;
    }
};

std::optional<KatDirection> parse_direction(std::string_view text) {
    if (text == "encrypt") return KatDirection::encrypt;
    if (text == "decrypt") return KatDirection::decrypt;
    if (text == "both") return KatDirection::both;
    return std::nullopt;
}

const char* direction_name(KatDirection d) {
    switch (d) {
    case KatDirection::encrypt: return "encrypt";
    case KatDirection::decrypt: return "decrypt";
    case KatDirection::both: return "both";
    }
    return "?";
}

void validate_case(const KatCase& c, int line) {
    const auto ctx = [&](const std::string& msg) {
        return ValidationError("case " + std::to_string(c.id) + " (line " +
                               std::to_string(line) + "): " + msg);
    };
    const std::size_t bs = block_octets(c.algorithm);
    const auto accepted = key_octets(c.algorithm);
    if (std::find(accepted.begin(), accepted.end(), c.key.size()) == accepted.end()) {
        std::string expect;
        for (std::size_t n : accepted) {
            if (!expect.empty()) expect += "/";
            expect += std::to_string(n);
        }
        throw ctx("key is " + std::to_string(c.key.size()) +
                  " octets, expected " + expect);
    }
    if (c.mode == Mode::ecb) {
        if (c.iv) throw ctx("ECB case must not carry an IV");
    } else {
        if (!c.iv) throw ctx(to_string(c.mode) + " case requires an IV");
        if (c.iv->size() != bs)
            throw ctx("IV is " + std::to_string(c.iv->size()) + " octets, expected " +
                      std::to_string(bs));
    }
    if (c.plaintext.size() != c.ciphertext.size())
        throw ctx("plaintext and ciphertext lengths differ");
    if (c.mode != Mode::ctr) {
        if (c.plaintext.empty() || c.plaintext.size() % bs != 0)
            throw ctx("length " + std::to_string(c.plaintext.size()) +
                      " is not a positive multiple of the block size " +
                      std::to_string(bs));
    }
}

}  // namespace

KatFile parse_kat(std::string_view text, std::string source_name) {
    KatFile file;
    file.source = std::move(source_name);

    std::optional<Algorithm> algorithm;
    std::optional<Mode> mode;
    PendingCase pending;
    int line_number = 0;

    auto hex_field = [&](std::string_view value) {
        try {
            return hex_decode(value);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what(),
                             static_cast<std::size_t>(line_number));
        }
    };

    auto finalize = [&] {
        if (!pending.any()) return;
        const int line = pending.first_line;
        if (!algorithm || !mode)
            throw ParseError("line " + std::to_string(line) +
                                 ": case before any [ALGO=...] [MODE=...] header",
                             static_cast<std::size_t>(line));
        KatCase c;
        c.id = pending.count.value_or(
            file.cases.empty() ? 0 : file.cases.back().id + 1);
        c.algorithm = *algorithm;
        c.mode = *mode;
        if (!pending.key)
            throw ParseError("line " + std::to_string(line) + ": case lacks KEY",
                             static_cast<std::size_t>(line));
        if (!pending.plaintext || !pending.ciphertext)
            throw ParseError("line " + std::to_string(line) +
                                 ": case lacks PLAINTEXT or CIPHERTEXT",
                             static_cast<std::size_t>(line));
        c.key = std::move(*pending.key);
        c.iv = std::move(pending.iv);
        c.plaintext = std::move(*pending.plaintext);
        c.ciphertext = std::move(*pending.ciphertext);
        c.direction = pending.direction.value_or(KatDirection::both);
        validate_case(c, line);
        file.cases.push_back(std::move(c));
        pending = PendingCase{};
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view raw = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_number;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;

        const std::string_view line = trim(raw);
        if (line.empty()) {
            finalize();
            continue;
        }
        if (line.front() == '#') continue;

        if (line.front() == '[') {
            finalize();
            std::string_view rest = line;
            while (!rest.empty()) {
                rest = trim(rest);
                if (rest.empty()) break;
                if (rest.front() != '[')
                    throw ParseError("line " + std::to_string(line_number) +
                                         ": malformed section header",
                                     static_cast<std::size_t>(line_number));
                const std::size_t close = rest.find(']');
                if (close == std::string_view::npos)
                    throw ParseError("line " + std::to_string(line_number) +
                                         ": unterminated section header",
                                     static_cast<std::size_t>(line_number));
                const std::string_view group = trim(rest.substr(1, close - 1));
                rest.remove_prefix(close + 1);
                const std::size_t eq = group.find('=');
                if (eq == std::string_view::npos)
                    throw ParseError("line " + std::to_string(line_number) +
                                         ": section header lacks '='",
                                     static_cast<std::size_t>(line_number));
                const std::string name = lower(trim(group.substr(0, eq)));
                const std::string value = lower(trim(group.substr(eq + 1)));
                if (name == "algo") {
                    algorithm = parse_algorithm(value);
                    if (!algorithm)
                        throw ParseError("line " + std::to_string(line_number) +
                                             ": unknown algorithm '" + value + "'",
                                         static_cast<std::size_t>(line_number));
                } else if (name == "mode") {
                    mode = parse_mode(value);
                    if (!mode)
                        throw ParseError("line " + std::to_string(line_number) +
                                             ": unknown mode '" + value + "'",
                                         static_cast<std::size_t>(line_number));
                } else {
                    throw ParseError("line " + std::to_string(line_number) +
                                         ": unknown section key '" + name + "'",
                                     static_cast<std::size_t>(line_number));
                }
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_number) +
                                 ": expected 'NAME = value'",
                             static_cast<std::size_t>(line_number));
        const std::string name = std::string(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!pending.any()) pending.first_line = line_number;

        auto reject_duplicate = [&](bool present) {
            if (present)
                throw ParseError("line " + std::to_string(line_number) +
                                     ": duplicate " + name + " in case",
                                 static_cast<std::size_t>(line_number));
        };

        if (name == "COUNT") {
            reject_duplicate(pending.count.has_value());
            try {
                pending.count = std::stoi(std::string(value));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_number) +
                                     ": COUNT is not an integer",
                                 static_cast<std::size_t>(line_number));
            }
        } else if (name == "KEY") {
            reject_duplicate(pending.key.has_value());
            pending.key = hex_field(value);
        } else if (name == "IV") {
            reject_duplicate(pending.iv.has_value());
            pending.iv = hex_field(value);
        } else if (name == "PLAINTEXT") {
            reject_duplicate(pending.plaintext.has_value());
            pending.plaintext = hex_field(value);
        } else if (name == "CIPHERTEXT") {
            reject_duplicate(pending.ciphertext.has_value());
            pending.ciphertext = hex_field(value);
        } else if (name == "DIRECTION") {
            reject_duplicate(pending.direction.has_value());
            pending.direction = parse_direction(lower(value));
            if (!pending.direction)
                throw ParseError("line " + std::to_string(line_number) +
                                     ": DIRECTION must be encrypt, decrypt or both",
                                 static_cast<std::size_t>(line_number));
        } else {
            throw ParseError("line " + std::to_string(line_number) +
                                 ": unknown field '" + name + "'",
                             static_cast<std::size_t>(line_number));
        }
    }
    finalize();

    std::set<int> ids;
    for (const KatCase& c : file.cases)
        if (!ids.insert(c.id).second)
            throw ValidationError("duplicate case id " + std::to_string(c.id) +
                                  " in " + (file.source.empty() ? "input" : file.source));
    return file;
}

std::string serialize_kat(const KatFile& file) {
    std::ostringstream out;
    std::optional<Algorithm> algorithm;
    std::optional<Mode> mode;
    bool first = true;
    for (const KatCase& c : file.cases) {
        if (!first) out << "\n";
        first = false;
        if (algorithm != c.algorithm || mode != c.mode) {
            out << "[ALGO=" << to_string(c.algorithm) << "] [MODE=" << to_string(c.mode)
                << "]\n\n";
            algorithm = c.algorithm;
            mode = c.mode;
        }
        out << "COUNT = " << c.id << "\n";
        out << "KEY = " << hex_encode(c.key) << "\n";
        if (c.iv) out << "IV = " << hex_encode(*c.iv) << "\n";
        out << "PLAINTEXT = " << hex_encode(c.plaintext) << "\n";
        out << "CIPHERTEXT = " << hex_encode(c.ciphertext) << "\n";
        if (c.direction != KatDirection::both)
            out << "DIRECTION = " << direction_name(c.direction) << "\n";
    }
    return out.str();
}

std::size_t KatSummary::passed() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(),
                      [](const KatOutcome& o) { return o.passed; }));
}

std::size_t KatSummary::failed() const { return outcomes.size() - passed(); }

KatSummary run_kats(const KatFile& file) {
    KatSummary summary;
    summary.source = file.source;
    for (const KatCase& c : file.cases) {
        KatOutcome outcome;
        outcome.id = c.id;
        outcome.algorithm = c.algorithm;
        outcome.mode = c.mode;
        try {
            const CipherSuite suite(c.algorithm, c.key);
            const ModeSpec spec{c.mode, c.iv};
            std::string detail;
            bool ok = true;
            if (c.direction != KatDirection::decrypt) {
                const auto actual = mode_encrypt_raw(suite, spec, c.plaintext);
                if (actual != c.ciphertext) {
                    ok = false;
                    detail += "encrypt: expected " + hex_encode(c.ciphertext) +
                              ", got " + hex_encode(actual);
                }
            }
            if (c.direction != KatDirection::encrypt) {
                const auto actual = mode_decrypt_raw(suite, spec, c.ciphertext);
                if (actual != c.plaintext) {
                    if (!ok) detail += "; ";
                    ok = false;
                    detail += "decrypt: expected " + hex_encode(c.plaintext) +
                              ", got " + hex_encode(actual);
                }
            }
            outcome.passed = ok;
            outcome.detail = detail;
        } catch (const Error& e) {
            outcome.passed = false;
            outcome.detail = std::string("error: ") + e.what();
        }
        summary.outcomes.push_back(std::move(outcome));
    }
    std::sort(summary.outcomes.begin(), summary.outcomes.end(),
              [](const KatOutcome& a, const KatOutcome& b) { return a.id < b.id; });
    return summary;
}

std::string format_summary(const KatSummary& summary) {
    std::ostringstream out;
    if (!summary.source.empty()) out << summary.source << ":\n";
    for (const KatOutcome& o : summary.outcomes) {
        out << (o.passed ? "[PASS]" : "[FAIL]") << " case " << o.id << " ("
            << to_string(o.algorithm) << "/" << to_string(o.mode) << ")";
        if (!o.detail.empty()) out << " " << o.detail;
        out << "\n";
    }
    out << summary.passed() << " passed, " << summary.failed() << " failed, "
        << summary.outcomes.size() << " total\n";
    return out.str();
}

}  // namespace cipherbench
