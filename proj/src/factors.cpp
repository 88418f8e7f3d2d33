#include "cipherbench/factors.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cipherbench {

std::string to_string(Family family) {
    switch (family) {
    case Family::des: return "des";
    case Family::tdes: return "tdes";
    case Family::aes: return "aes";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "des") return Family::des;
    if (name == "tdes" || name == "3des") return Family::tdes;
    if (name == "aes") return Family::aes;
    return std::nullopt;
}

std::string to_string(FactorId factor) {
    switch (factor) {
    case FactorId::key_length: return "key_length";
    case FactorId::cipher_type: return "cipher_type";
    case FactorId::block_size: return "block_size";
    case FactorId::developed: return "developed";
    case FactorId::cryptanalysis_resistance: return "cryptanalysis_resistance";
    case FactorId::security: return "security";
    case FactorId::possible_keys: return "possible_keys";
    case FactorId::printable_ascii_keys: return "printable_ascii_keys";
    case FactorId::brute_force_time: return "brute_force_time";
    }
    return "?";
}

mpz_class possible_keys(int bits) {
    if (bits < 0 || bits > 4096)
        throw ContractViolation("key length " + std::to_string(bits) +
                                " outside 0..4096");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return out;
}

mpz_class printable_ascii_keys(int bits) {
    if (bits <= 0 || bits % 8 != 0)
        throw UndefinedFactorError(
            "printable-key count is defined only for positive multiples of 8 bits, got " +
            std::to_string(bits));
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 95, static_cast<unsigned long>(bits / 8));
    return out;
}

namespace {

constexpr long kSecondsPerYear = 31557600;  // Julian year

// Floor of log10 for a positive rational.
int floor_log10(const mpq_class& value) {
    const mpz_class integer_part = value.get_num() / value.get_den();
    if (integer_part > 0) {
        int digits = static_cast<int>(
            mpz_sizeinbase(integer_part.get_mpz_t(), 10));
        // sizeinbase may overestimate by one
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
        if (integer_part < p) --digits;
        return digits - 1;
    }
    mpq_class scaled = value;
    int exponent = 0;
    while (scaled < 1) {
        scaled *= 10;
        --exponent;
    }
    return exponent;
}

}  // namespace

std::string render_sig3(const mpq_class& value) {
    if (value < 0)
        throw ContractViolation("render_sig3 expects a nonnegative value");
    if (value == 0) return "0";

    int e = floor_log10(value);
    // Scale so three significant digits sit left of the point, then round.
    mpq_class scaled = value;
    if (e >= 2) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e - 2));
        scaled /= mpq_class(p);
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(2 - e));
        scaled *= mpq_class(p);
    }
    scaled += mpq_class(1, 2);
    mpz_class rounded = scaled.get_num() / scaled.get_den();
    if (rounded >= 1000) {
        rounded = 100;
        ++e;
    }
    const std::string digits = rounded.get_str();  // exactly three digits

    std::string out;
    if (e >= 0 && e <= 5) {
        if (e >= 2) {
            out = digits + std::string(static_cast<std::size_t>(e - 2), '0');
        } else {
            out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                  digits.substr(static_cast<std::size_t>(e + 1));
        }
    } else if (e >= -3 && e < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else {
        out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    }
    return out;
}

std::string render_duration(const mpq_class& seconds) {
    struct Unit {
        long factor;
        const char* name;
    };
    static const Unit units[] = {
        {kSecondsPerYear, "years"},
        {86400, "days"},
        {3600, "hours"},
        {60, "minutes"},
        {1, "seconds"},
    };
    for (const Unit& u : units) {
        if (u.factor == 1 || seconds >= u.factor)
            return render_sig3(seconds / u.factor) + " " + u.name;
    }
    return render_sig3(seconds) + " seconds";
}

BruteForceEstimate brute_force_time(int bits, const mpz_class& rate_keys_per_second,
                                    const mpq_class& fraction) {
    if (rate_keys_per_second < 1)
        throw ContractViolation("rate must be at least 1 key/second");
    if (fraction <= 0 || fraction > 1)
        throw ContractViolation("fraction must lie in (0, 1]");
    BruteForceEstimate estimate;
    estimate.key_count = possible_keys(bits);
    estimate.rate_keys_per_second = rate_keys_per_second;
    estimate.fraction = fraction;
    estimate.fraction.canonicalize();
    estimate.seconds =
        mpq_class(estimate.key_count) * estimate.fraction / mpq_class(rate_keys_per_second);
    estimate.seconds.canonicalize();
    estimate.human = render_duration(estimate.seconds);
    return estimate;
}

namespace {

// The reported comparison table, verbatim, one column per family, plus
// machine-readable face values where a cell states something checkable.
struct ReportedColumn {
    const char* key_length;
    const char* cipher_type;
    const char* block_size;
    const char* developed;
    const char* cryptanalysis;
    const char* security;
    const char* possible_keys;
    const char* printable_keys;
    const char* time_row;
    std::vector<int> key_bits;    // claimed key lengths
    std::vector<int> block_bits;  // claimed block sizes
    int year;
    int time_bits;                // key length the time figure refers to
    mpq_class time_seconds;       // face value of that figure
};

const ReportedColumn& reported_column(Family family) {
    static const ReportedColumn aes{
        "128, 192, or 256 bits",
        "Symmetric block cipher",
        "128, 192, or 256 bits",
        "2000",
        "Strong against differential, truncated differential, linear, "
        "interpolation and square attacks",
        "Considered secure",
        "2^128 , 2^192 , or 2^256",
        "95^16 , 95^24 , or 95^32",
        "For a 128-bit key: 5×10^21 years",
        {128, 192, 256},
        {128, 192, 256},
        2000,
        128,
        // 5e21 years at 31,557,600 s/year.
        mpq_class(mpz_class("157788000000000000000000000000")),
    };
    static const ReportedColumn tdes{
        "(k1, k2 and k3) 168 bits (k1 and k2 is same) 112 bits",
        "Symmetric block cipher",
        "64 bits",
        "1978",
        "Vulnerable to differential, Brute Force attacker could be analyze "
        "plaint text using differential cryptanalysis.",
        "one only weak which is Exit in DES.",
        "2^112 or 2^168",
        "95^14 or 95^21",
        "For a 112-bit key: 800 Days",
        {112, 168},
        {64},
        1978,
        112,
        mpq_class(69120000),  // 800 days
    };
    static const ReportedColumn des{
        "56 bits",
        "Symmetric block cipher",
        "64 bits",
        "1977",
        "Vulnerable to differential and linear cryptanalysis; weak "
        "substitution tables",
        "Proven inadequate",
        "2^56",
        "95^7",
        "For a 56-bit key: 400 Days",
        {56},
        {64},
        1977,
        56,
        mpq_class(34560000),  // 400 days
    };
    switch (family) {
    case Family::aes: return aes;
    case Family::tdes: return tdes;
    case Family::des: return des;
    }
    throw ContractViolation("unknown family");
}

std::string join_bits(const std::vector<int>& bits, const std::string& suffix) {
    std::string out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i > 0) out += bits.size() == 2 ? " or " : (i + 1 == bits.size() ? ", or " : ", ");
        out += std::to_string(bits[i]);
    }
    return out + suffix;
}

// "2^56 (= 72057594037927936)" when the decimal stays short, otherwise
// "2^128 (~ 3.40e38)".
std::string render_count(const std::string& base, int exponent, const mpz_class& value) {
    const std::string decimal = value.get_str();
    std::string out = base + "^" + std::to_string(exponent);
    if (decimal.size() <= 20)
        out += " (= " + decimal + ")";
    else
        out += " (~ " + render_sig3(mpq_class(value)) + ")";
    return out;
}

std::string join_counts(const std::string& base,
                        const std::vector<int>& key_bits,
                        const std::map<int, mpz_class>& values, bool per_char) {
    std::string out;
    for (std::size_t i = 0; i < key_bits.size(); ++i) {
        if (i > 0) out += "; ";
        const int bits = key_bits[i];
        out += render_count(base, per_char ? bits / 8 : bits, values.at(bits));
    }
    return out;
}

std::string join_times(const std::vector<int>& key_bits,
                       const std::map<int, BruteForceEstimate>& times) {
    std::string out;
    for (std::size_t i = 0; i < key_bits.size(); ++i) {
        if (i > 0) out += "; ";
        out += std::to_string(key_bits[i]) + "-bit: " + times.at(key_bits[i]).human;
    }
    return out;
}

}  // namespace

FactorProfile factor_profile(Family family, const mpz_class& rate) {
    const ReportedColumn& reported = reported_column(family);
    FactorProfile profile;
    profile.family = family;
    profile.cipher_type = "Symmetric block cipher";
    profile.cryptanalysis_resistance = reported.cryptanalysis;
    profile.security_status = reported.security;
    profile.developed_year = reported.year;

    switch (family) {
    case Family::des:
        profile.display_name = "DES";
        profile.key_length_bits = {56};
        profile.block_size_bits = {64};
        break;
    case Family::tdes:
        profile.display_name = "3DES";
        profile.key_length_bits = {112, 168};
        profile.block_size_bits = {64};
        break;
    case Family::aes:
        profile.display_name = "AES";
        profile.key_length_bits = {128, 192, 256};
        profile.block_size_bits = {128};
        break;
    }

    for (int bits : profile.key_length_bits) {
        profile.possible_keys[bits] = possible_keys(bits);
        profile.printable_ascii_keys[bits] = printable_ascii_keys(bits);
        profile.brute_force[bits] = brute_force_time(bits, rate, 1);
    }

    auto cell = [&](FactorId id, std::optional<std::string> computed,
                    const char* verbatim, bool discrepancy) {
        profile.cells[id] = FactorCell{std::move(computed), verbatim, discrepancy};
    };

    cell(FactorId::key_length, join_bits(profile.key_length_bits, " bits"),
         reported.key_length, profile.key_length_bits != reported.key_bits);
    cell(FactorId::cipher_type, profile.cipher_type, reported.cipher_type,
         profile.cipher_type != reported.cipher_type);
    cell(FactorId::block_size, join_bits(profile.block_size_bits, " bits"),
         reported.block_size, profile.block_size_bits != reported.block_bits);
    cell(FactorId::developed, std::to_string(profile.developed_year),
         reported.developed, profile.developed_year != reported.year);
    cell(FactorId::cryptanalysis_resistance, std::nullopt, reported.cryptanalysis,
         false);
    cell(FactorId::security, std::nullopt, reported.security, false);

    // The reported key-space expressions match the computed powers exactly:
    // flag only if our own table of exponents ever drifted from the claim.
    bool keys_mismatch = profile.key_length_bits != reported.key_bits;
    cell(FactorId::possible_keys,
         join_counts("2", profile.key_length_bits, profile.possible_keys, false),
         reported.possible_keys, keys_mismatch);
    cell(FactorId::printable_ascii_keys,
         join_counts("95", profile.key_length_bits, profile.printable_ascii_keys, true),
         reported.printable_keys, keys_mismatch);

    // The reported time figure is compared at face value against the exact
    // computation for the key length it names, at the configured rate.
    const mpq_class computed_seconds =
        profile.brute_force.at(reported.time_bits).seconds;
    cell(FactorId::brute_force_time,
         join_times(profile.key_length_bits, profile.brute_force), reported.time_row,
         computed_seconds != reported.time_seconds);

    return profile;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    return std::nullopt;
}

namespace {

std::string factor_label(FactorId factor, const mpz_class& rate) {
    switch (factor) {
    case FactorId::key_length: return "Key length";
    case FactorId::cipher_type: return "Cipher type";
    case FactorId::block_size: return "Block size";
    case FactorId::developed: return "Developed";
    case FactorId::cryptanalysis_resistance: return "Cryptanalysis resistance";
    case FactorId::security: return "Security";
    case FactorId::possible_keys: return "Possible keys";
    case FactorId::printable_ascii_keys: return "Printable ASCII keys";
    case FactorId::brute_force_time:
        return "Time to check all keys at " + rate.get_str() + " keys/s";
    }
    return "?";
}

std::vector<std::string> wrap_text(const std::string& text, std::size_t width) {
    std::vector<std::string> lines;
    std::istringstream words(text);
    std::string word, line;
    while (words >> word) {
        if (!line.empty() && line.size() + 1 + word.size() > width) {
            lines.push_back(line);
            line.clear();
        }
        if (!line.empty()) line += " ";
        line += word;
    }
    if (!line.empty()) lines.push_back(line);
    if (lines.empty()) lines.emplace_back();
    return lines;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string text_report(const std::vector<FactorProfile>& profiles,
                        const mpz_class& rate) {
    constexpr std::size_t kLabelWidth = 26;
    constexpr std::size_t kCellWidth = 38;

    struct Footnote {
        std::string algorithm, factor, computed, reported;
    };
    std::vector<Footnote> footnotes;

    std::ostringstream out;
    out << "Comparison of " << profiles.size() << " cipher"
        << (profiles.size() == 1 ? "" : "s") << " across nine factors\n";

    auto rule = [&] {
        out << std::string(kLabelWidth, '-');
        for (std::size_t i = 0; i < profiles.size(); ++i)
            out << "-+-" << std::string(kCellWidth, '-');
        out << "\n";
    };

    auto row = [&](const std::string& label, const std::vector<std::string>& cells) {
        std::vector<std::vector<std::string>> wrapped;
        wrapped.push_back(wrap_text(label, kLabelWidth));
        std::size_t height = wrapped[0].size();
        for (const auto& cell : cells) {
            wrapped.push_back(wrap_text(cell, kCellWidth));
            height = std::max(height, wrapped.back().size());
        }
        for (std::size_t line = 0; line < height; ++line) {
            for (std::size_t col = 0; col < wrapped.size(); ++col) {
                const auto& block = wrapped[col];
                const std::string text = line < block.size() ? block[line] : "";
                const std::size_t width = col == 0 ? kLabelWidth : kCellWidth;
                out << text << std::string(width - std::min(width, text.size()), ' ');
                if (col + 1 < wrapped.size()) out << " | ";
            }
            out << "\n";
        }
    };

    std::vector<std::string> headers;
    for (const auto& p : profiles) headers.push_back(p.display_name);
    row("Factor", headers);
    rule();

    for (FactorId factor : kFactorOrder) {
        std::vector<std::string> cells;
        for (const auto& p : profiles) {
            const FactorCell& cell = p.cells.at(factor);
            std::string text = cell.computed ? *cell.computed : cell.reported;
            if (cell.discrepancy) {
                footnotes.push_back({p.display_name, factor_label(factor, rate),
                                     cell.computed.value_or("(none)"), cell.reported});
                text += " [" + std::to_string(footnotes.size()) + "]";
            }
            cells.push_back(text);
        }
        row(factor_label(factor, rate), cells);
    }

    if (!footnotes.empty()) {
        out << "\nDiscrepancies between computed and reported values:\n";
        for (std::size_t i = 0; i < footnotes.size(); ++i) {
            const Footnote& f = footnotes[i];
            out << "  [" << i + 1 << "] " << f.algorithm << ", " << f.factor
                << ": computed \"" << f.computed << "\" but the comparison table"
                << " reports \"" << f.reported << "\"\n";
        }
    }
    return out.str();
}

std::string csv_report(const std::vector<FactorProfile>& profiles,
                       const mpz_class& rate) {
    std::ostringstream out;
    out << "factor";
    for (const auto& p : profiles) out << "," << csv_quote(p.display_name);
    out << "\n";
    for (FactorId factor : kFactorOrder) {
        out << csv_quote(factor_label(factor, rate));
        for (const auto& p : profiles) {
            const FactorCell& cell = p.cells.at(factor);
            out << "," << csv_quote(cell.computed ? *cell.computed : cell.reported);
        }
        out << "\n";
    }
    return out.str();
}

std::string json_report(const std::vector<FactorProfile>& profiles) {
    nlohmann::json root = nlohmann::json::object();
    for (const auto& p : profiles) {
        nlohmann::json column = nlohmann::json::object();
        for (FactorId factor : kFactorOrder) {
            const FactorCell& cell = p.cells.at(factor);
            nlohmann::json entry = {
                {"computed", cell.computed ? nlohmann::json(*cell.computed)
                                           : nlohmann::json(nullptr)},
                {"paper_reported", cell.reported},
                {"discrepancy", cell.discrepancy},
            };
            column[to_string(factor)] = std::move(entry);
        }
        root[to_string(p.family)] = std::move(column);
    }
    return root.dump(2) + "\n";
}

}  // namespace

std::string compare_report(std::span<const Family> families, const mpz_class& rate,
                           ReportFormat format) {
    if (families.empty())
        throw ContractViolation("at least one algorithm is required");
    std::vector<FactorProfile> profiles;
    for (Family f : families) profiles.push_back(factor_profile(f, rate));
    switch (format) {
    case ReportFormat::text: return text_report(profiles, rate);
    case ReportFormat::csv: return csv_report(profiles, rate);
    case ReportFormat::json: return json_report(profiles);
    }
    throw ContractViolation("unknown report format");
}

}  // namespace cipherbench
