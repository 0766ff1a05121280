// Copyright 2026 The qppsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qpp: command-line front end for the Quantum Permutation Pad simulator.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpp/qpp.hpp"

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
constexpr std::size_t kDefaultShots = 20000;
constexpr std::size_t kDemoSampleCap = std::size_t{1} << 20;

enum class Mode { Superposition, Basis };

struct CommandConfig {
    fs::path key_path;
    fs::path input_path;
    fs::path output_path;
    fs::path samples_path;
    Mode mode = Mode::Superposition;
    std::size_t shots = kDefaultShots;
    std::optional<std::string> seed_text;
    std::string report = "text";
    std::size_t key_length = qpp::kMinKeyBytes;
};

std::uint64_t parse_seed(const std::string& text) {
    std::string digits = text;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.size() > 16 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isxdigit(c); })) {
        throw qpp::Error(qpp::ErrorCode::InvalidArgument, "seed must be up to 16 hex digits: " + text);
    }
    return std::stoull(digits, nullptr, 16);
}

/// --seed wins, then QPP_SEED, then 0xC0FFEE.
std::uint64_t resolve_seed(const CommandConfig& cfg) {
    if (cfg.seed_text) return parse_seed(*cfg.seed_text);
    if (const char* env = std::getenv("QPP_SEED"); env && *env) return parse_seed(env);
    return kDefaultSeed;
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qpp::Error(qpp::ErrorCode::IoError, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw qpp::Error(qpp::ErrorCode::IoError, "cannot read " + path.string());
    return bytes;
}

/// Writes through a temporary sibling and renames it into place, then reads
/// the result back to confirm it landed intact.
void write_file_atomic(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw qpp::Error(qpp::ErrorCode::IoError, "cannot create " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw qpp::Error(qpp::ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw qpp::Error(qpp::ErrorCode::IoError, "cannot rename onto " + path.string());
    }
    if (read_file(path) != bytes) {
        throw qpp::Error(qpp::ErrorCode::IoError, "verification of " + path.string() + " failed");
    }
}

void require_readable(const fs::path& path, const char* what) {
    if (path.empty()) throw qpp::Error(qpp::ErrorCode::InvalidArgument, std::string(what) + " path missing");
    if (!fs::is_regular_file(path)) {
        throw qpp::Error(qpp::ErrorCode::IoError, std::string(what) + " not found: " + path.string());
    }
}

void require_writable(const fs::path& path, const char* what) {
    if (path.empty()) throw qpp::Error(qpp::ErrorCode::InvalidArgument, std::string(what) + " path missing");
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    if (!fs::is_directory(dir)) {
        throw qpp::Error(qpp::ErrorCode::IoError, "output directory does not exist: " + dir.string());
    }
}

std::string hex64(std::uint64_t x) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llX", static_cast<unsigned long long>(x));
    return buf;
}

int cmd_keygen(const CommandConfig& cfg) {
    if (cfg.key_length < qpp::kMinKeyBytes) {
        throw qpp::Error(qpp::ErrorCode::LengthTooSmall,
                         "key length must be at least " + std::to_string(qpp::kMinKeyBytes));
    }
    require_writable(cfg.output_path, "output");
    std::random_device entropy;
    std::vector<std::uint8_t> key(cfg.key_length);
    for (auto& b : key) b = static_cast<std::uint8_t>(entropy() & 0xFFu);
    const qpp::KeyMaterial material(key);
    write_file_atomic(cfg.output_path, key);
    std::cout << "wrote " << key.size() << "-byte key to " << cfg.output_path.string() << "\n"
              << "pad fingerprint: " << hex64(qpp::build_pad(material).fingerprint()) << "\n";
    return 0;
}

int cmd_encrypt(const CommandConfig& cfg) {
    require_readable(cfg.key_path, "key");
    require_readable(cfg.input_path, "input");
    require_writable(cfg.output_path, "output");
    if (!cfg.samples_path.empty()) {
        if (cfg.mode == Mode::Basis) {
            throw qpp::Error(qpp::ErrorCode::InvalidArgument, "--emit-samples needs superposition mode");
        }
        require_writable(cfg.samples_path, "samples");
    }
    const std::uint64_t seed = resolve_seed(cfg);
    const auto key = qpp::KeyMaterial::load(cfg.key_path);
    const auto plaintext = read_file(cfg.input_path);

    if (cfg.mode == Mode::Basis) {
        write_file_atomic(cfg.output_path, qpp::encrypt_basis(key, plaintext));
        std::cout << "wrote " << plaintext.size() << " ciphertext bytes to " << cfg.output_path.string() << "\n";
        return 0;
    }
    const auto cs = qpp::encrypt(key, plaintext);
    write_file_atomic(cfg.output_path, qpp::serialize(cs));
    std::cout << "wrote " << cs.block_count() << " states to " << cfg.output_path.string() << "\n";
    if (!cfg.samples_path.empty()) {
        const auto samples = qpp::sample_states(cs, cfg.shots, seed);
        write_file_atomic(cfg.samples_path, samples);
        std::cout << "wrote " << samples.size() << " sampled bytes (" << cfg.shots
                  << " shots/state, seed " << hex64(seed) << ") to " << cfg.samples_path.string() << "\n";
    }
    return 0;
}

int cmd_decrypt(const CommandConfig& cfg) {
    require_readable(cfg.key_path, "key");
    require_readable(cfg.input_path, "input");
    require_writable(cfg.output_path, "output");
    const auto key = qpp::KeyMaterial::load(cfg.key_path);
    const auto input = read_file(cfg.input_path);
    const auto plaintext = cfg.mode == Mode::Basis ? qpp::decrypt_basis(key, input)
                                                   : qpp::decrypt(key, qpp::deserialize(input));
    write_file_atomic(cfg.output_path, plaintext);
    std::cout << "wrote " << plaintext.size() << " plaintext bytes to " << cfg.output_path.string() << "\n";
    return 0;
}

void print_reports(const CommandConfig& cfg, const std::vector<qpp::ent::NamedReport>& reports) {
    if (cfg.report == "kv") {
        std::cout << qpp::ent::report_kv(reports);
    } else {
        std::cout << qpp::ent::report_table(reports);
    }
}

int cmd_analyze(const CommandConfig& cfg) {
    require_readable(cfg.input_path, "input");
    const auto data = read_file(cfg.input_path);
    print_reports(cfg, {{cfg.input_path.filename().string(), qpp::ent::analyze(data)}});
    return 0;
}

int cmd_demo(const CommandConfig& cfg) {
    require_readable(cfg.key_path, "key");
    require_readable(cfg.input_path, "input");
    const std::uint64_t seed = resolve_seed(cfg);
    const auto key = qpp::KeyMaterial::load(cfg.key_path);
    const auto original = read_file(cfg.input_path);
    if (original.empty()) throw qpp::Error(qpp::ErrorCode::InputTooShort, "empty input");

    const auto randomized = qpp::xor_randomize(original, key);
    const auto blocks = qpp::bytes_to_blocks(randomized);
    const std::size_t cap_shots = std::max<std::size_t>(1, kDemoSampleCap * 4 / blocks.size());
    const std::size_t shots = std::min(cfg.shots, cap_shots);

    const auto superposed = qpp::superpose_blocks(blocks);
    const auto cs = qpp::encrypt(key, original);
    const auto attacked = qpp::adversary_view(cs);

    namespace ent = qpp::ent;
    const std::vector<ent::NamedReport> reports{
        {"Original plaintext", ent::analyze(original)},
        {"Randomized plaintext", ent::analyze(randomized)},
        {"Superposition states", ent::analyze(qpp::sample_states(superposed, shots, seed))},
        {"Ciphertext", ent::analyze(qpp::sample_states(cs, shots, seed))},
        {"Ciphertext after H^dagger", ent::analyze(qpp::sample_states(attacked, shots, seed))},
    };
    if (cfg.report != "kv") {
        std::cout << original.size() << " plaintext bytes, " << blocks.size() << " states, " << shots
                  << " shot(s)/state, seed " << hex64(seed) << "\n";
        std::cout << "pad fingerprint: " << hex64(qpp::build_pad(key).fingerprint()) << "\n";
    }
    print_reports(cfg, reports);
    return 0;
}

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  unexpected internal error\n"
    "  2  invalid arguments\n"
    "  3  KeyTooShort\n"
    "  4  NotBasisState (wrong key or corrupted states)\n"
    "  5  BadBlockCount\n"
    "  6  BadMagic\n"
    "  7  BadVersion\n"
    "  8  TruncatedStream\n"
    "  9  TrailingData\n"
    " 10  NormViolation\n"
    " 12  InputTooShort\n"
    " 14  LengthTooSmall\n"
    " 15  IoError\n";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Permutation Pad cipher on a simulated 2-qubit register"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    CommandConfig cfg;
    const std::map<std::string, Mode> modes{{"superposition", Mode::Superposition}, {"basis", Mode::Basis}};

    auto* keygen = app.add_subcommand("keygen", "Write a random key from the OS entropy source");
    keygen->add_option("--out", cfg.output_path, "Key file to write")->required();
    keygen->add_option("--length", cfg.key_length, "Key length in bytes (>= 32)");

    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file");
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a QPPS file (or basis-mode ciphertext)");
    for (auto* sub : {encrypt, decrypt}) {
        sub->add_option("--key", cfg.key_path, "Key file")->required();
        sub->add_option("--in", cfg.input_path, "Input file")->required();
        sub->add_option("--out", cfg.output_path, "Output file")->required();
        sub->add_option("--mode", cfg.mode, "superposition (default) or basis")
            ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    }
    encrypt->add_option("--shots", cfg.shots, "Shots per state for --emit-samples")
        ->check(CLI::PositiveNumber);
    encrypt->add_option("--seed", cfg.seed_text, "Sampling seed, hex (default 0xC0FFEE or $QPP_SEED)");
    encrypt->add_option("--emit-samples", cfg.samples_path, "Also write sampled ciphertext bits here");

    auto* analyze = app.add_subcommand("analyze", "ENT-style randomness report for a file");
    analyze->add_option("--in", cfg.input_path, "Input file")->required();
    analyze->add_option("--report", cfg.report, "text or kv")->check(CLI::IsMember({"text", "kv"}));

    auto* demo = app.add_subcommand("demo", "Stage-by-stage randomness table for one encryption");
    demo->add_option("--key", cfg.key_path, "Key file")->required();
    demo->add_option("--in", cfg.input_path, "Plaintext file")->required();
    demo->add_option("--shots", cfg.shots, "Shots per state (default 1; capped at 1 MB of samples)")
        ->check(CLI::PositiveNumber);
    demo->add_option("--seed", cfg.seed_text, "Sampling seed, hex (default 0xC0FFEE or $QPP_SEED)");
    demo->add_option("--report", cfg.report, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    demo->preparse_callback([&cfg](std::size_t) { cfg.shots = 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(qpp::ErrorCode::InvalidArgument);
    }

    try {
        if (*keygen) return cmd_keygen(cfg);
        if (*encrypt) return cmd_encrypt(cfg);
        if (*decrypt) return cmd_decrypt(cfg);
        if (*analyze) return cmd_analyze(cfg);
        if (*demo) return cmd_demo(cfg);
    } catch (const qpp::Error& e) {
        std::cerr << "qpp: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "qpp: internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
