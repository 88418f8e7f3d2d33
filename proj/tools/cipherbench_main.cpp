#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "cipherbench/bench.hpp"
#include "cipherbench/bitops.hpp"
#include "cipherbench/cracker.hpp"
#include "cipherbench/factors.hpp"
#include "cipherbench/kat.hpp"
#include "cipherbench/modes.hpp"

namespace {

using namespace cipherbench;

constexpr int kExitSuccess = 0;
constexpr int kExitRuntime = 1;  // crypto/KAT/processing failures
constexpr int kExitUsage = 2;    // bad flags, malformed arguments, missing files

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        const std::string& s = buffer.str();
        return {s.begin(), s.end()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open input file '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string& s = buffer.str();
    return {s.begin(), s.end()};
}

void write_output(const std::string& path, std::span<const std::uint8_t> data) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open output file '" + path + "'", 0);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

// Accepts plain decimal or scientific ("1e6", "2.5e10"); the result must be
// a positive integer.
mpz_class parse_rate(const std::string& text) {
    std::string mantissa = text;
    long exponent = 0;
    const auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = text.substr(0, epos);
        try {
            exponent = std::stol(text.substr(epos + 1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in rate '" + text + "'", epos);
        }
    }
    const auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    if (mantissa.empty() ||
        mantissa.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad rate '" + text + "'", 0);
    mpq_class value{mpz_class(mantissa)};
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0)
        value *= mpq_class(p);
    else
        value /= mpq_class(p);
    value.canonicalize();
    if (value.get_den() != 1 || value < 1)
        throw ParseError("rate '" + text + "' is not a positive integer", 0);
    return value.get_num();
}

ReportFormat resolve_format(const std::string& flag_value) {
    const auto format = parse_report_format(flag_value);
    if (!format)
        throw ParseError("unknown format '" + flag_value + "'", 0);
    return *format;
}

struct CryptArgs {
    std::string algo, mode, key_hex, iv_hex, input = "-", output = "-";
    bool gen_iv = false;
};

int run_crypt(const CryptArgs& args, bool encrypting) {
    Algorithm algorithm;
    ModeSpec spec;
    std::vector<std::uint8_t> key;
    try {
        const auto parsed_algo = parse_algorithm(args.algo);
        if (!parsed_algo)
            throw ParseError("unknown algorithm '" + args.algo + "'", 0);
        algorithm = *parsed_algo;
        const auto parsed_mode = parse_mode(args.mode);
        if (!parsed_mode)
            throw ParseError("unknown mode '" + args.mode + "'", 0);
        spec.mode = *parsed_mode;
        key = hex_decode(args.key_hex);

        if (args.gen_iv) {
            if (!encrypting)
                throw ParseError("--gen-iv applies to encryption only", 0);
            if (!args.iv_hex.empty())
                throw ParseError("--iv and --gen-iv are mutually exclusive", 0);
            if (spec.mode == Mode::ecb)
                throw ParseError("ECB does not take an IV", 0);
            std::random_device rd;
            std::vector<std::uint8_t> iv(block_octets(algorithm));
            for (auto& b : iv) b = static_cast<std::uint8_t>(rd());
            std::cerr << "iv = " << hex_encode(iv) << "\n";
            spec.iv = std::move(iv);
        } else if (!args.iv_hex.empty()) {
            spec.iv = hex_decode(args.iv_hex);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        // Key-length and IV-shape checks count as usage errors too.
        const CipherSuite suite(algorithm, key);
        if (spec.mode != Mode::ecb && !spec.iv) {
            std::cerr << "error: " << to_string(spec.mode) << " requires --iv\n";
            return kExitUsage;
        }
        if (spec.iv && spec.iv->size() != suite.block_octets()) {
            std::cerr << "error: IV must be " << suite.block_octets()
                      << " octets, got " << spec.iv->size() << "\n";
            return kExitUsage;
        }
        if (spec.mode == Mode::ecb && spec.iv) {
            std::cerr << "error: ECB does not take an IV\n";
            return kExitUsage;
        }
        const auto input = read_input(args.input);
        const auto output = encrypting ? mode_encrypt(suite, spec, input)
                                       : mode_decrypt(suite, spec, input);
        write_output(args.output, output);
        return kExitSuccess;
    } catch (const InvalidKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-cipher workbench: encryption, known-answer tests, "
                 "nine-factor comparison, benchmarks and desk-scale key search"};
    app.require_subcommand(1);

    CryptArgs crypt;
    auto add_crypt_flags = [&](CLI::App* cmd) {
        cmd->add_option("--algo", crypt.algo, "des, tdes, aes128, aes192 or aes256")
            ->required();
        cmd->add_option("--mode", crypt.mode, "ecb, cbc or ctr")->required();
        cmd->add_option("--key", crypt.key_hex, "key as hex")->required();
        cmd->add_option("--iv", crypt.iv_hex, "IV as hex (cbc/ctr)");
        cmd->add_option("--in", crypt.input, "input path or - for stdin");
        cmd->add_option("--out", crypt.output, "output path or - for stdout");
    };
    CLI::App* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a file or stream");
    add_crypt_flags(encrypt_cmd);
    encrypt_cmd->add_flag("--gen-iv", crypt.gen_iv,
                          "generate a random IV and print it to stderr");
    CLI::App* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a file or stream");
    add_crypt_flags(decrypt_cmd);

    std::vector<std::string> kat_paths;
    CLI::App* kat_cmd = app.add_subcommand("kat", "run known-answer vector files");
    kat_cmd->add_option("paths", kat_paths, "KAT files")->required();

    std::string compare_algos = "aes,tdes,des";
    std::string compare_rate = "50000000000";
    std::string compare_format = "text";
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "nine-factor comparison table");
    compare_cmd->add_option("--algos", compare_algos,
                            "comma-separated subset of aes,tdes,des");
    compare_cmd->add_option("--rate", compare_rate,
                            "brute-force rate in keys/second (accepts 50e9)");
    compare_cmd->add_option("--format", compare_format, "text, csv or json")
        ->envname("CIPHERBENCH_FORMAT");

    std::string bench_algos = "des,tdes,aes128";
    std::string bench_mode = "ctr";
    std::size_t bench_payload = 1 << 20;
    double bench_duration = 1.0;
    std::string bench_format = "text";
    CLI::App* bench_cmd = app.add_subcommand("bench", "throughput measurements");
    bench_cmd->add_option("--algos", bench_algos, "comma-separated algorithms");
    bench_cmd->add_option("--mode", bench_mode, "ecb, cbc or ctr");
    bench_cmd->add_option("--payload", bench_payload, "payload octets per pass");
    bench_cmd->add_option("--min-duration", bench_duration,
                          "minimum measured seconds per algorithm");
    bench_cmd->add_option("--format", bench_format, "text, csv or json")
        ->envname("CIPHERBENCH_FORMAT");

    std::string crack_pt, crack_ct, crack_template, crack_positions, crack_job_path;
    int crack_free_bits = -1;
    int crack_workers = 1;
    CLI::App* crack_cmd =
        app.add_subcommand("crack", "exhaustive DES search over a restricted keyspace");
    crack_cmd->add_option("--plaintext", crack_pt, "known plaintext block, 16 hex digits");
    crack_cmd->add_option("--ciphertext", crack_ct, "known ciphertext block, 16 hex digits");
    crack_cmd->add_option("--template", crack_template,
                          "56-bit effective-key pattern, 14 hex digits");
    crack_cmd->add_option("--free-bits", crack_free_bits,
                          "number of free low bits (positions 0..n-1)");
    crack_cmd->add_option("--free-positions", crack_positions,
                          "comma-separated free bit positions (0..55)");
    crack_cmd->add_option("--workers", crack_workers, "search threads");
    crack_cmd->add_option("--job", crack_job_path, "JSON job document instead of flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (app.got_subcommand(encrypt_cmd)) return run_crypt(crypt, true);
    if (app.got_subcommand(decrypt_cmd)) return run_crypt(crypt, false);

    if (app.got_subcommand(kat_cmd)) {
        bool all_ok = true;
        for (const std::string& path : kat_paths) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "error: cannot open '" << path << "'\n";
                return kExitUsage;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            try {
                const KatFile file = parse_kat(buffer.str(), path);
                const KatSummary summary = run_kats(file);
                std::cout << format_summary(summary);
                all_ok = all_ok && summary.all_passed();
            } catch (const Error& e) {
                std::cerr << "error: " << path << ": " << e.what() << "\n";
                return kExitRuntime;
            }
        }
        return all_ok ? kExitSuccess : kExitRuntime;
    }

    if (app.got_subcommand(compare_cmd)) {
        try {
            std::vector<Family> families;
            std::stringstream names(compare_algos);
            std::string name;
            while (std::getline(names, name, ',')) {
                const auto family = parse_family(name);
                if (!family)
                    throw ParseError("unknown algorithm '" + name + "'", 0);
                families.push_back(*family);
            }
            const mpz_class rate = parse_rate(compare_rate);
            std::cout << compare_report(families, rate, resolve_format(compare_format));
            return kExitSuccess;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (app.got_subcommand(bench_cmd)) {
        try {
            std::vector<Algorithm> algorithms;
            std::stringstream names(bench_algos);
            std::string name;
            while (std::getline(names, name, ',')) {
                const auto algorithm = parse_algorithm(name);
                if (!algorithm)
                    throw ParseError("unknown algorithm '" + name + "'", 0);
                algorithms.push_back(*algorithm);
            }
            const auto mode = parse_mode(bench_mode);
            if (!mode)
                throw ParseError("unknown mode '" + bench_mode + "'", 0);
            const ReportFormat format = resolve_format(bench_format);

            std::vector<BenchResult> results;
            for (Algorithm algorithm : algorithms) {
                BenchSpec spec;
                spec.algorithm = algorithm;
                spec.mode = *mode;
                spec.payload_octets = bench_payload;
                spec.min_duration_s = bench_duration;
                results.push_back(measure(spec));
            }
            std::cout << bench_report(results, format);
            return kExitSuccess;
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitRuntime;
        }
    }

    if (app.got_subcommand(crack_cmd)) {
        CrackJob job;
        try {
            if (!crack_job_path.empty()) {
                std::ifstream in(crack_job_path);
                if (!in) {
                    std::cerr << "error: cannot open '" << crack_job_path << "'\n";
                    return kExitUsage;
                }
                std::ostringstream buffer;
                buffer << in.rdbuf();
                job = crack_job_from_json(buffer.str());
            } else {
                const auto block_arg = [](const std::string& hex, const char* what) {
                    const auto bytes = hex_decode(hex);
                    if (bytes.size() != 8)
                        throw ParseError(std::string(what) + " must be 8 octets", 0);
                    Block64 block{};
                    std::copy(bytes.begin(), bytes.end(), block.begin());
                    return block;
                };
                job.known_plaintext = block_arg(crack_pt, "--plaintext");
                job.known_ciphertext = block_arg(crack_ct, "--ciphertext");
                job.key_template = 0;
                for (std::uint8_t b : hex_decode(crack_template))
                    job.key_template = job.key_template << 8 | b;
                if (crack_free_bits >= 0 && !crack_positions.empty())
                    throw ParseError("--free-bits and --free-positions are mutually "
                                     "exclusive", 0);
                if (crack_free_bits >= 0) {
                    for (int i = 0; i < crack_free_bits; ++i)
                        job.free_positions.push_back(i);
                } else if (!crack_positions.empty()) {
                    std::stringstream list(crack_positions);
                    std::string item;
                    while (std::getline(list, item, ','))
                        job.free_positions.push_back(std::stoi(item));
                }
                job.workers = crack_workers;
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }

        try {
            const CrackResult result = crack(job);
            std::cout << "keys tested: " << result.keys_tested << "\n";
            std::cout << "elapsed: " << result.elapsed_seconds << " s\n";
            std::cout << "measured rate: " << result.measured_rate.get_str()
                      << " keys/s\n";
            std::cout << "full 56-bit space at that rate: "
                      << result.extrapolation.human << "\n";
            if (result.found_key) {
                std::cout << "recovered key: " << hex_encode(*result.found_key)
                          << "\n";
                return kExitSuccess;
            }
            std::cout << "no key in the searched space matches\n";
            return kExitRuntime;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitRuntime;
        }
    }

    return kExitUsage;
}
