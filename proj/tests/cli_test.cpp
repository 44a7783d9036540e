#include "braidcover/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace braidcover::cli {
namespace {

struct Output {
  int status;
  std::string out;
  std::string err;
};

Output run_config(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int status = run(cfg, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config(std::string sub, int lo, int hi, Format fmt = Format::Text) {
  RunConfig c;
  c.subcommand = std::move(sub);
  c.n_min = lo;
  c.n_max = hi;
  c.format = fmt;
  return c;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(CliTest, DegreeRangeParsing) {
  EXPECT_EQ(parse_degree_range("5"), std::make_pair(5, 5));
  EXPECT_EQ(parse_degree_range("2..6"), std::make_pair(2, 6));
  EXPECT_THROW(parse_degree_range("6..2"), UsageError);
  EXPECT_THROW(parse_degree_range("x"), UsageError);
  EXPECT_THROW(parse_degree_range("2..x"), UsageError);
  EXPECT_THROW(parse_format("yaml"), UsageError);
}

TEST(CliTest, TableCsvTotals) {
  auto cfg = config("table", 2, 6, Format::Csv);
  const auto r = run_config(cfg);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const std::vector<long long> totals = {16, 240, 2880, 0, 43200};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].total, totals[i]);
    EXPECT_EQ(rows[i].K2, 8 - static_cast<long long>(i));
    EXPECT_EQ(rows[i].chi, 1);
  }
  EXPECT_EQ(rows[1].orbit_count, 40);
  EXPECT_EQ(rows[1].image_names, "S3=80");
  EXPECT_EQ(rows[2].image_names, "D8=480");
  EXPECT_EQ(lines(r.out)[0], kTableCsvHeader);
}

TEST(CliTest, TableOutputsRoundTrip) {
  for (bool counts_only : {false, true}) {
    auto cfg = config("table", 2, 6, Format::Csv);
    cfg.counts_only = counts_only;
    const auto csv = run_config(cfg).out;
    EXPECT_EQ(render_csv(parse_csv(csv)), csv);
    cfg.format = Format::Json;
    const auto json = run_config(cfg).out;
    EXPECT_EQ(render_json(parse_json(json)), json);
    EXPECT_EQ(parse_json(json), parse_csv(csv));
  }
  const auto blank = parse_csv(run_config([] {
                                 auto c = config("table", 3, 3, Format::Csv);
                                 c.counts_only = true;
                                 return c;
                               }())
                                   .out);
  EXPECT_FALSE(blank.at(0).orbit_count.has_value());
}

TEST(CliTest, OutputIndependentOfWorkers) {
  for (const char* sub : {"table", "list", "orbits"}) {
    std::string first;
    for (unsigned w : {1u, 2u, 8u}) {
      auto cfg = config(sub, 6, 6, Format::Json);
      cfg.workers = w;
      const auto r = run_config(cfg);
      ASSERT_EQ(r.status, kExitOk);
      if (first.empty()) first = r.out;
      EXPECT_EQ(r.out, first) << sub << " workers=" << w;
    }
    auto plain = config(sub, 6, 6, Format::Json);
    plain.plain = true;
    EXPECT_EQ(run_config(plain).out, first) << sub;
  }
}

TEST(CliTest, OracleMatch) {
  const auto r = run_config(config("oracle", 3, 3));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "MATCH: 80 = 80\n");
  const auto j = run_config(config("oracle", 2, 2, Format::Json));
  EXPECT_EQ(Json::parse(j.out).at("match"), true);
  EXPECT_EQ(run_config(config("oracle", 5, 5)).status, kExitUsage);
}

TEST(CliTest, OrbitsListsRepresentatives) {
  const auto r = run_config(config("orbits", 3, 3, Format::Json));
  ASSERT_EQ(r.status, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 40u);
  for (const auto& l : ls) {
    const auto j = Json::parse(l);
    EXPECT_EQ(j.at("orbit_size"), 6);
    EXPECT_EQ(j.at("image").at("name"), "S3");
  }
  EXPECT_EQ(lines(run_config(config("orbits", 3, 3)).out).size(), 40u);
  EXPECT_EQ(lines(run_config(config("orbits", 3, 3, Format::Csv)).out).size(), 41u);
}

TEST(CliTest, ListEmitsJsonLines) {
  const auto r = run_config(config("list", 4, 4, Format::Json));
  ASSERT_EQ(r.status, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 480u);
  const auto first = Json::parse(ls[0]);
  std::vector<std::string> keys;
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "sigma", "a1", "a2", "b1", "b2", "image"}));
  EXPECT_EQ(first.at("sigma"), "(1,2)");
  for (const auto& l : ls) {
    const auto j = Json::parse(l);
    const auto t = solution_from_json(j);
    ASSERT_TRUE(check_relations(t).all_passed);
    ASSERT_EQ(fingerprint_from_json(j.at("image")).name, "D8");
    ASSERT_EQ(to_json(t, fingerprint_from_json(j.at("image"))).dump(), l);
  }
}

TEST(CliTest, CountFormats) {
  EXPECT_EQ(run_config(config("count", 3, 3)).out, "n=3 fixed_count=80 transpositions=3 total=240\n");
  auto c = config("count", 4, 4);
  c.collect = true;
  EXPECT_EQ(run_config(c).out, "n=4 fixed_count=480 transpositions=6 total=2880 orbits=240 images=D8=480\n");
  const auto j = Json::parse(run_config(config("count", 5, 5, Format::Json)).out);
  EXPECT_EQ(j.at("fixed_count"), 0);
  EXPECT_EQ(j.at("transpositions"), 10);
  EXPECT_TRUE(j.at("orbit_count").is_null());
}

TEST(CliTest, Invariants) {
  const auto r = run_config(config("invariants", 2, 4, Format::Csv));
  ASSERT_EQ(r.status, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[1].substr(0, 9), "2,1,8,4,2");
  const auto j = Json::parse(run_config(config("invariants", 9, 10, Format::Json)).out);
  EXPECT_EQ(j.at(0).at("K2"), 1);
  EXPECT_EQ(j.at(1).at("general_type"), false);
  EXPECT_EQ(run_config(config("invariants", 1, 3)).status, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_config(config("frobnicate", 3, 3)).status, kExitUsage);
  EXPECT_EQ(run_config(config("count", 1, 3)).status, kExitUsage);
  EXPECT_EQ(run_config(config("count", 13, 13)).status, kExitUsage);
  const auto long_run = run_config(config("count", 8, 8));
  EXPECT_EQ(long_run.status, kExitUsage);
  EXPECT_NE(long_run.err.find("--confirm-long"), std::string::npos);
  auto seeded = config("count", 3, 3);
  seeded.seed = "42";
  EXPECT_EQ(run_config(seeded).status, kExitUsage);
  auto no_workers = config("count", 3, 3);
  no_workers.workers = 0;
  EXPECT_EQ(run_config(no_workers).status, kExitUsage);
  auto bad_path = config("count", 3, 3);
  bad_path.out_path = "/nonexistent-dir/for/sure/out.txt";
  EXPECT_EQ(run_config(bad_path).status, kExitUsage);
}

TEST(CliTest, WritesToOutPath) {
  const auto path = std::filesystem::temp_directory_path() / "braidcover_cli_test.csv";
  auto cfg = config("table", 2, 4, Format::Csv);
  cfg.out_path = path.string();
  const auto r = run_config(cfg);
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(parse_csv(buf.str()).size(), 3u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace braidcover::cli
