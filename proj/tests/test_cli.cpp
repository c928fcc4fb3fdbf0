#include "digitrev/bench.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(DIGITREV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, {}};
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(CliPerm, PrintsOneLine)
{
    EXPECT_EQ(run_cli("perm --algo dfp --radix 2 --k 3 --base 1").out, "1 5 3 7 2 6 4 8\n");
    EXPECT_EQ(run_cli("perm --algo dfp --radix 2 --k 3 --base 0").out, "0 4 2 6 1 5 3 7\n");
    EXPECT_EQ(run_cli("perm --algo vdro --radix 3 --k 2 --base 1").out, "1 4 7 2 5 8 3 6 9\n");
    EXPECT_EQ(run_cli("perm --algo oracle --radix 3 --k 2 --base -1").out, "-1 2 5 0 3 6 1 4 7\n");
    EXPECT_EQ(run_cli("perm --algo vdro --radix 100 --k 0 --base 4").out, "4\n");
}

TEST(CliPerm, ConfigErrorsExitWithOne)
{
    EXPECT_EQ(run_cli("perm --algo dfp --radix 3 --k 2").exit_code, 1);
    EXPECT_EQ(run_cli("perm --algo nope --radix 2 --k 2").exit_code, 1);
    EXPECT_EQ(run_cli("perm --algo vdro --radix 1 --k 2").exit_code, 1);
    EXPECT_EQ(run_cli("perm --algo vdro --radix 2 --k 70").exit_code, 1);
    EXPECT_EQ(run_cli("perm --bogus").exit_code, 1);
    EXPECT_EQ(run_cli("").exit_code, 1);
}

TEST(CliBench, WritesCsvAndScript)
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv = dir / "digitrev_cli_bench.csv";
    const auto gp = dir / "digitrev_cli_bench.gp";
    const RunResult r = run_cli("bench --algos dfp,vdro,oracle,sort --radices 2,3 --k-min 1 --k-max 6 "
                                "--reps-schedule custom:0=20,4=10 --warmup 1 --quiet --out " +
                                csv.string() + " --gnuplot " + gp.string());
    ASSERT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("skipped dfp r=3"), std::string::npos);
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);

    const auto records = digitrev::read_csv(csv);
    // dfp 6 + vdro 12 + oracle 12 + sort 12
    EXPECT_EQ(records.size(), 42u);
    EXPECT_TRUE(std::filesystem::exists(gp));
    std::filesystem::remove(csv);
    std::filesystem::remove(gp);
}

TEST(CliBench, BadScheduleIsAConfigError)
{
    EXPECT_EQ(run_cli("bench --reps-schedule custom:2=1,3=5 --out /tmp/x.csv").exit_code, 1);
    EXPECT_EQ(run_cli("bench --k-min 9 --k-max 3 --out /tmp/x.csv").exit_code, 1);
}

TEST(CliBench, UnwritableOutputIsAnIoError)
{
    EXPECT_EQ(run_cli("bench --algos dfp --radices 2 --k-min 1 --k-max 2 --reps-schedule custom:0=1 --warmup 0 "
                      "--quiet --out /nonexistent-dir/r.csv")
                  .exit_code,
              2);
}
