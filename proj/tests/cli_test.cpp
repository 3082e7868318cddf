#include "cli.hpp"
#include "eogt/fixtures.hpp"
#include "eogt/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace eogt;
namespace fs = std::filesystem;

namespace {

const fs::path fixture_dir = EOGT_FIXTURE_DIR;

struct Outcome
{
	int code;
	std::string out;
	std::string err;
};

Outcome run(std::vector<std::string> args)
{
	args.insert(args.begin(), "eogt");
	std::vector<const char*> argv;
	for (const auto& a : args)
		argv.push_back(a.c_str());
	std::ostringstream out, err;
	int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str(), err.str()};
}

std::string fx(const std::string& name)
{
	return (fixture_dir / name).string();
}

class CliFiles : public ::testing::Test
{
protected:
	void SetUp() override
	{
		dir_ = fs::temp_directory_path() / ("eogt_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
		                                     ::testing::UnitTest::GetInstance()->current_test_info()->name());
		fs::remove_all(dir_);
		fs::create_directories(dir_);
	}
	void TearDown() override { fs::remove_all(dir_); }

	std::string path(const std::string& name) const { return (dir_ / name).string(); }

	fs::path dir_;
};

} // namespace

TEST(Cli, Bounds)
{
	auto r = run({"bounds", "--rule", fx("ensure_acc.rule.json")});
	EXPECT_EQ(r.code, 0) << r.err;
	EXPECT_EQ(r.out, "4 32\n");
}

TEST(Cli, InducedCounts)
{
	EXPECT_EQ(run({"induced", "--rule", fx("ensure_acc.rule.json"), "--count-only"}).out, "13\n");
	EXPECT_EQ(run({"induced", "--rule", fx("ensure_acc.rule.json"), "--filter", "weak-right", "--count-only"}).out, "4\n");
	EXPECT_EQ(run({"induced", "--rule", fx("ensure_acc.rule.json"), "--filter", "right", "--count-only"}).out, "2\n");
	auto listed = run({"induced", "--rule", fx("ensure_acc.rule.json"), "--filter", "weak-right"});
	EXPECT_EQ(listed.code, 0);
	EXPECT_NE(listed.out.find("preserve"), std::string::npos);
}

TEST(Cli, Validate)
{
	EXPECT_EQ(run({"validate", fx("bank.graph.json"), fx("ensure_acc.rule.json"), fx("c1.match.json")}).code, 0);
	EXPECT_EQ(run({"validate", fx("does_not_exist.json")}).code, 1);
}

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run({"frobnicate"}).code, 1);
	EXPECT_EQ(run({"match", "--rule", fx("ensure_acc.rule.json")}).code, 1);
	EXPECT_EQ(run({"induced", "--rule", fx("ensure_acc.rule.json"), "--filter", "diagonal"}).code, 1);
	// Globally maximal takes no base match.
	EXPECT_EQ(run({"match", "--rule", fx("ensure_acc.rule.json"), "--graph", fx("bank.graph.json"), "--strategy",
	               "globally-maximal", "--base-match", fx("c1.match.json")})
	              .code,
	          1);
}

TEST(Cli, MatchAtC1)
{
	auto r = run({"match", "--rule", fx("ensure_acc.rule.json"), "--graph", fx("bank.graph.json"), "--base-match",
	              fx("c1.match.json"), "--strategy", "locally-maximal"});
	EXPECT_EQ(r.code, 0) << r.err;
	EXPECT_NE(r.out.find("a2"), std::string::npos);
	auto all = run({"match", "--rule", fx("ensure_acc.rule.json"), "--graph", fx("bank.graph.json"), "--base-match",
	                fx("c1.match.json"), "--all"});
	EXPECT_EQ(all.code, 0) << all.err;
	EXPECT_NE(all.out.find("a1"), std::string::npos);
	EXPECT_NE(all.out.find("a2"), std::string::npos);
}

TEST_F(CliFiles, ApplyThenAudit)
{
	auto r = run({"apply", "--rule", fx("ensure_acc.rule.json"), "--graph", fx("bank.graph.json"), "--base-match",
	              fx("c2.match.json"), "--strategy", "locally-maximal", "--out", path("h.json"), "--trace", path("t.json")});
	ASSERT_EQ(r.code, 0) << r.err;
	TypedGraph h = io::decode_graph(io::read_file(path("h.json")));
	TypedGraph expected = fixtures::bank_graph();
	expected.add_edge("accounts_c_a#1", "accounts", "c2", "a2");
	expected.add_edge("portfolios_c_p#1", "portfolios", "c2", "p");
	EXPECT_EQ(h, expected);

	auto a = run({"audit", "--rule", fx("ensure_acc.rule.json"), "--graph", fx("bank.graph.json"), "--out", path("h.json"),
	              "--trace", path("t.json"), "--report", path("report.json")});
	EXPECT_EQ(a.code, 0) << a.err << a.out;
	EXPECT_NE(io::read_file(path("report.json")).find("\"passed\": true"), std::string::npos);
}

TEST_F(CliFiles, AuditDetectsATamperedResult)
{
	ASSERT_EQ(run({"apply", "--rule", fx("ensure_no_acc.rule.json"), "--graph", fx("shared.graph.json"), "--base-match",
	               fx("c1.match.json"), "--out", path("h.json"), "--trace", path("t.json")})
	              .code,
	          0);
	// Claim nothing happened.
	io::write_file(path("h.json"), io::read_file(fx("shared.graph.json")));
	auto a = run({"audit", "--rule", fx("ensure_no_acc.rule.json"), "--graph", fx("shared.graph.json"), "--out",
	              path("h.json"), "--trace", path("t.json")});
	EXPECT_EQ(a.code, 3);
}

TEST_F(CliFiles, GloballyMaximalWithoutClientsIsNoMatch)
{
	io::write_file(path("empty.graph.json"), io::encode_graph(TypedGraph("bank")));
	auto r = run({"apply", "--rule", fx("ensure_acc.rule.json"), "--graph", path("empty.graph.json"), "--types",
	              fx("bank.types.json"), "--strategy", "globally-maximal", "--out", path("h.json")});
	EXPECT_EQ(r.code, 2) << r.err;
	EXPECT_FALSE(fs::exists(path("h.json")));
}
