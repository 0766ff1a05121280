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

// End-to-end tests of the qpp executable.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "qpp/channel.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using qpp::testutil::read_bytes;

namespace {

struct Result {
    int code;
    std::string out;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qpp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        write(path("key.bin"), qpp::testutil::golden_key_bytes());
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static void write(const std::string& p, const std::vector<std::uint8_t>& bytes) {
        std::ofstream(p, std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()),
                                                 static_cast<std::streamsize>(bytes.size()));
    }

    Result run(const std::string& args, const std::string& env = "") const {
        const std::string out = path("stdout.txt");
        const std::string cmd = env + " '" QPP_CLI_PATH "' " + args + " > '" + out + "' 2>&1";
        const int status = std::system(cmd.c_str());
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
    }

    static std::map<std::string, double> parse_kv(const std::string& text) {
        std::map<std::string, double> kv;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) {
            const auto eq = line.find('=');
            if (eq != std::string::npos) kv[line.substr(0, eq)] = std::stod(line.substr(eq + 1));
        }
        return kv;
    }

    fs::path dir_;
};

const std::string kImage = (qpp::testutil::asset("sample_image.jpg")).string();

}  // namespace

TEST_F(CliTest, HelpListsExitCodes) {
    const auto r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("NotBasisState"), std::string::npos);
    EXPECT_NE(r.out.find("keygen"), std::string::npos);
}

TEST_F(CliTest, KeygenWritesKeyAndFingerprint) {
    auto a = run("keygen --out " + path("k1.bin"));
    auto b = run("keygen --length 32 --out " + path("k2.bin"));
    ASSERT_EQ(a.code, 0) << a.out;
    ASSERT_EQ(b.code, 0) << b.out;
    EXPECT_EQ(fs::file_size(path("k1.bin")), 32u);
    EXPECT_NE(a.out.find("pad fingerprint: 0x"), std::string::npos);
    EXPECT_NE(a.out.substr(a.out.find("0x")), b.out.substr(b.out.find("0x")));
    EXPECT_EQ(run("keygen --length 64 --out " + path("k3.bin")).code, 0);
    EXPECT_EQ(fs::file_size(path("k3.bin")), 64u);
}

TEST_F(CliTest, KeygenRejectsShortLength) {
    EXPECT_EQ(run("keygen --length 31 --out " + path("k.bin")).code, 14);
    EXPECT_FALSE(fs::exists(path("k.bin")));
}

TEST_F(CliTest, SuperpositionRoundTripOnSampleImage) {
    ASSERT_EQ(run("encrypt --key " + path("key.bin") + " --in " + kImage + " --out " + path("c.qpps")).code, 0);
    const auto size = fs::file_size(kImage);
    EXPECT_EQ(fs::file_size(path("c.qpps")), 14 + 64 * 4 * size);
    ASSERT_EQ(run("decrypt --key " + path("key.bin") + " --in " + path("c.qpps") + " --out " + path("p.jpg")).code,
              0);
    EXPECT_EQ(read_bytes(path("p.jpg")), read_bytes(kImage));
}

TEST_F(CliTest, BasisModeKeepsLength) {
    ASSERT_EQ(run("encrypt --mode basis --key " + path("key.bin") + " --in " + kImage + " --out " + path("c.bin"))
                  .code,
              0);
    EXPECT_EQ(fs::file_size(path("c.bin")), fs::file_size(kImage));
    ASSERT_EQ(run("decrypt --mode basis --key " + path("key.bin") + " --in " + path("c.bin") + " --out " +
                  path("p.jpg"))
                  .code,
              0);
    EXPECT_EQ(read_bytes(path("p.jpg")), read_bytes(kImage));
}

TEST_F(CliTest, EmitSamplesSizeAndDeterminism) {
    write(path("m.bin"), std::vector<std::uint8_t>(64, 'z'));
    const std::string base = "encrypt --key " + path("key.bin") + " --in " + path("m.bin") + " --out " +
                             path("c.qpps") + " --shots 20000 --emit-samples ";
    ASSERT_EQ(run(base + path("s1.bin")).code, 0);
    ASSERT_EQ(run(base + path("s2.bin")).code, 0);
    EXPECT_EQ(fs::file_size(path("s1.bin")), 256u * 20000 / 4);
    EXPECT_EQ(read_bytes(path("s1.bin")), read_bytes(path("s2.bin")));

    ASSERT_EQ(run(base + path("s3.bin") + " --seed 0xC0FFEE").code, 0);
    EXPECT_EQ(read_bytes(path("s1.bin")), read_bytes(path("s3.bin")));
    ASSERT_EQ(run(base + path("s4.bin"), "QPP_SEED=1234").code, 0);
    EXPECT_NE(read_bytes(path("s1.bin")), read_bytes(path("s4.bin")));
    ASSERT_EQ(run(base + path("s5.bin") + " --seed 1234").code, 0);
    EXPECT_EQ(read_bytes(path("s4.bin")), read_bytes(path("s5.bin")));
    EXPECT_EQ(run(base + path("s6.bin") + " --seed nothex").code, 2);
}

TEST_F(CliTest, GoldenQppsFromCli) {
    write(path("m.bin"), {'Q', 'P', 'P', '!'});
    ASSERT_EQ(run("encrypt --key " + path("key.bin") + " --in " + path("m.bin") + " --out " + path("c.qpps") +
                  " --shots 8 --emit-samples " + path("s.bin"))
                  .code,
              0);
    EXPECT_EQ(read_bytes(path("c.qpps")), read_bytes(qpp::testutil::fixture("golden_qpp.qpps")));
    EXPECT_EQ(read_bytes(path("s.bin")), read_bytes(qpp::testutil::fixture("golden_qpp_samples.bin")));
}

TEST_F(CliTest, TruncatedQppsFails) {
    ASSERT_EQ(run("encrypt --key " + path("key.bin") + " --in " + kImage + " --out " + path("c.qpps")).code, 0);
    fs::resize_file(path("c.qpps"), fs::file_size(path("c.qpps")) - 10);
    const auto r = run("decrypt --key " + path("key.bin") + " --in " + path("c.qpps") + " --out " + path("p"));
    EXPECT_EQ(r.code, 8) << r.out;
    EXPECT_FALSE(fs::exists(path("p")));
}

TEST_F(CliTest, BadMagicFails) {
    write(path("junk.qpps"), std::vector<std::uint8_t>(100, 0x41));
    EXPECT_EQ(run("decrypt --key " + path("key.bin") + " --in " + path("junk.qpps") + " --out " + path("p")).code, 6);
}

TEST_F(CliTest, WrongKeyNeverClaimsSuccess) {
    write(path("other.bin"), std::vector<std::uint8_t>(32, 0x77));
    ASSERT_EQ(run("encrypt --key " + path("key.bin") + " --in " + kImage + " --out " + path("c.qpps")).code, 0);
    const auto r = run("decrypt --key " + path("other.bin") + " --in " + path("c.qpps") + " --out " + path("p"));
    if (r.code == 0) {
        EXPECT_NE(read_bytes(path("p")), read_bytes(kImage));
    } else {
        EXPECT_EQ(r.code, 4) << r.out;
    }
}

TEST_F(CliTest, ShortKeyAndMissingFiles) {
    write(path("short.bin"), std::vector<std::uint8_t>(31, 1));
    EXPECT_EQ(run("encrypt --key " + path("short.bin") + " --in " + kImage + " --out " + path("c")).code, 3);
    EXPECT_EQ(run("encrypt --key " + path("key.bin") + " --in " + path("nope") + " --out " + path("c")).code, 15);
    EXPECT_EQ(run("encrypt --key " + path("key.bin") + " --in " + kImage + " --out /no/such/dir/c").code, 15);
    EXPECT_EQ(run("encrypt --key " + path("key.bin") + " --in " + kImage).code, 2);
}

TEST_F(CliTest, AnalyzeKv) {
    std::vector<std::uint8_t> ramp;
    for (int r = 0; r < 256; ++r)
        for (int v = 0; v < 256; ++v) ramp.push_back(static_cast<std::uint8_t>(v));
    write(path("ramp.bin"), ramp);
    const auto r = run("analyze --report kv --in " + path("ramp.bin"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto kv = parse_kv(r.out);
    EXPECT_EQ(kv.at("entropy"), 8.0);
    EXPECT_EQ(kv.at("chi_square"), 0.0);
    EXPECT_EQ(kv.at("mean"), 127.5);
    EXPECT_EQ(run("analyze --in " + path("ramp.bin")).code, 0);
    write(path("tiny.bin"), {1, 2, 3});
    EXPECT_EQ(run("analyze --in " + path("tiny.bin")).code, 12);
}

TEST_F(CliTest, DemoReproducesStagePattern) {
    const auto r = run("demo --report kv --key " + path("key.bin") + " --in " + kImage);
    ASSERT_EQ(r.code, 0) << r.out;
    const auto kv = parse_kv(r.out);
    EXPECT_GT(kv.at("Original plaintext.chi_square"), kv.at("Randomized plaintext.chi_square"));
    EXPECT_GE(kv.at("Ciphertext.n_bytes"), 65536);
    EXPECT_GE(kv.at("Ciphertext.entropy"), 7.97);
    EXPECT_GE(kv.at("Ciphertext after H^dagger.chi_square"), 180);
    EXPECT_LE(kv.at("Ciphertext after H^dagger.chi_square"), 340);

    const auto again = run("demo --report kv --key " + path("key.bin") + " --in " + kImage);
    EXPECT_EQ(again.out, r.out);

    const auto table = run("demo --key " + path("key.bin") + " --in " + kImage);
    ASSERT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("Superposition states"), std::string::npos);
    EXPECT_NE(table.out.find("Optimal values"), std::string::npos);
}

TEST_F(CliTest, DemoCapsSampleVolume) {
    write(path("m.bin"), std::vector<std::uint8_t>(4096, 'q'));
    const auto r = run("demo --report kv --shots 20000 --key " + path("key.bin") + " --in " + path("m.bin"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_LE(parse_kv(r.out).at("Ciphertext.n_bytes"), double(1 << 20));
    EXPECT_GE(parse_kv(r.out).at("Ciphertext.n_bytes"), double(1 << 20) - 4096);
}
