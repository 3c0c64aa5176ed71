#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edsense/cli.hpp"
#include "edsense/fading.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = edsense::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> v;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) v.push_back(f);
    return v;
}

double value_of(const std::string& row) { return std::stod(fields(row).at(5)); }

const char* kHeader = "snr_db,q,u,metric,method,value,est_error";

}  // namespace

TEST(CliPoint, UnitBandwidthAverage)
{
    const auto r = run({"point", "--metric", "auc", "--u", "1", "--q", "0.5", "--snr-db", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], kHeader);
    EXPECT_NEAR(value_of(ls[1]), 0.90378, 1e-5);
}

TEST(CliPoint, FalseAlarmWithoutSnr)
{
    const auto r = run({"point", "--metric", "pf", "--u", "5", "--lambda", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(value_of(lines(r.out)[1]), 0.4404933, 1e-7);
}

TEST(CliPoint, ZeroSnrGivesHalf)
{
    const auto r = run({"point", "--metric", "auc", "--u", "3", "--snr-db", "-inf"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(value_of(lines(r.out)[1]), 0.5);
}

TEST(CliPoint, FullPrecisionFields)
{
    const auto r = run({"point", "--metric", "auc", "--u", "2", "--q", "1", "--snr-db", "0"});
    ASSERT_EQ(r.code, 0);
    const auto f = fields(lines(r.out)[1]);
    EXPECT_EQ(std::stod(f[5]), edsense::avg_auc_closed(edsense::DetectorConfig::make(2),
                                                       edsense::HoytFading::make(1.0, 1.0)).value);
}

TEST(CliPoint, UsageErrors)
{
    EXPECT_EQ(run({"point", "--metric", "pd", "--u", "5", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "pd", "--method", "closed", "--lambda", "3", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--q", "1.5", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--q", "0", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--u", "-1", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "bogus", "--snr-db", "5"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--snr-db", "abc"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--snr-db", "inf"}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc"}).code, 2);
    EXPECT_EQ(run({"point", "--nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"point", "--metric", "auc", "--snr-db", "0", "--rel-tol", "0.5"}).code, 2);
}

TEST(CliSweep, FigureGridShapeAndOrder)
{
    const auto r = run({"sweep", "--metric", "auc", "--u", "5", "--q", "0.1,0.3,0.5,0.75,1.0", "--snr-db", "-5:30:1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 181u);
    EXPECT_EQ(ls[0], kHeader);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const double v = value_of(ls[i]);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        if ((i - 1) % 36 != 0) {
            EXPECT_GT(v, value_of(ls[i - 1])) << ls[i];
            EXPECT_GT(std::stod(fields(ls[i])[0]), std::stod(fields(ls[i - 1])[0]));
        }
    }
    EXPECT_EQ(fields(ls[1])[1], "0.10000000000000001");
    EXPECT_EQ(fields(ls[180])[1], "1");
}

TEST(CliSweep, CaucComplementsAuc)
{
    const auto a = lines(run({"sweep", "--metric", "auc", "--u", "2.5", "--q", "0.3,1", "--snr-db", "0:20:5"}).out);
    const auto c = lines(run({"sweep", "--metric", "cauc", "--u", "2.5", "--q", "0.3,1", "--snr-db", "0:20:5"}).out);
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 1; i < a.size(); ++i) EXPECT_EQ(value_of(c[i]), 1.0 - value_of(a[i]));
}

TEST(CliSweep, ByteIdenticalAcrossRuns)
{
    const std::vector<std::string> args = {"sweep", "--metric", "auc", "--method", "all", "--u", "2",
                                           "--q", "0.5", "--snr-db", "0:10:5", "--trials", "20000", "--seed", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliSweep, MethodAllAgrees)
{
    const auto r = run({"sweep", "--metric", "auc", "--method", "all", "--u", "3", "--q", "0.5", "--snr-db", "10",
                        "--trials", "200000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 5u);
    const double closed = value_of(ls[1]);
    EXPECT_NEAR(value_of(ls[2]), closed, 1e-9);
    EXPECT_NEAR(value_of(ls[3]), closed, 1e-9);
    const double se = std::stod(fields(ls[4])[6]);
    EXPECT_LT(std::fabs(value_of(ls[4]) - closed), 4 * se);
    EXPECT_EQ(fields(ls[4])[4], "mc");
}

TEST(CliSweep, RocAreaNearAverageAuc)
{
    const auto r = run({"sweep", "--metric", "roc", "--u", "5", "--q", "0.5", "--snr-db", "10", "--points", "101"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double area = value_of(lines(r.out)[1]);
    const double abar = edsense::avg_auc_closed(edsense::DetectorConfig::make(5),
                                                edsense::HoytFading::from_db(0.5, 10)).value;
    EXPECT_LT(std::fabs(area - abar), 0.01);
}

TEST(CliSweep, BadRanges)
{
    EXPECT_EQ(run({"sweep", "--metric", "auc", "--snr-db", "10:0:1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--metric", "auc", "--snr-db", "0:10:0"}).code, 2);
    EXPECT_EQ(run({"sweep", "--metric", "auc", "--snr-db", "0:10"}).code, 2);
    EXPECT_EQ(run({"sweep", "--metric", "auc", "--q", "0.5,", "--snr-db", "0"}).code, 0);
    EXPECT_EQ(run({"sweep", "--metric", "auc", "--q", "", "--snr-db", "0"}).code, 2);
}

TEST(CliRoc, LowSnrIsDiagonal)
{
    const auto r = run({"roc", "--u", "4", "--q", "0.3", "--snr-db", "-90", "--points", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 12u);
    EXPECT_EQ(ls[0], "pf,pd");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        EXPECT_NEAR(std::stod(f[0]), std::stod(f[1]), 1e-8);
    }
}

TEST(CliRoc, TwoPointsAreEndpointsAndMonotone)
{
    const auto r2 = lines(run({"roc", "--u", "5", "--q", "0.5", "--snr-db", "10", "--points", "2"}).out);
    ASSERT_EQ(r2.size(), 3u);
    EXPECT_EQ(r2[1], "0,0");
    EXPECT_EQ(r2[2], "1,1");
    const auto r = lines(run({"roc", "--u", "5", "--q", "0.5", "--snr-db", "10", "--points", "21"}).out);
    for (std::size_t i = 2; i < r.size(); ++i) EXPECT_GE(std::stod(fields(r[i])[1]), std::stod(fields(r[i - 1])[1]));
    EXPECT_EQ(run({"roc", "--u", "5", "--snr-db", "10", "--points", "1"}).code, 2);
}

TEST(CliOut, WritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "edsense_cli_out.csv";
    const auto r = run({"point", "--metric", "auc", "--u", "1", "--snr-db", "0", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kHeader);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"point", "--metric", "auc", "--snr-db", "0", "--out", "/nonexistent/dir/x.csv"}).code, 2);
}

TEST(CliValidate, UnknownSuite)
{
    EXPECT_EQ(run({"validate", "--suite", "nope"}).code, 2);
}

TEST(CliValidate, SpecfunSuitePasses)
{
    const auto r = run({"validate", "--suite", "specfun"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
