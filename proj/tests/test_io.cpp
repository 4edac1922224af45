#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tabdyn/error.hpp"
#include "tabdyn/io.hpp"
#include "tabdyn/rng.hpp"

using namespace tabdyn;

namespace {

Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Usage;
}

}  // namespace

TEST_CASE("numbers round trip at full precision") {
  Rng rng(71, 0);
  for (int k = 0; k < 100000; ++k) {
    const double x = std::ldexp(rng.uniform() - 0.5, static_cast<int>(rng.below(200)) - 100);
    CHECK(parse_number(format_number(x)) == x);
  }
  for (double x : {0.0, 1.0, -3.0, 0.1, 1e300, 5e-324, std::numbers::pi})
    CHECK(parse_number(format_number(x)) == x);
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(error_code([] { parse_number("1.5x"); }) == Errc::MalformedLine);
  CHECK(error_code([] { parse_number(""); }) == Errc::MalformedLine);
}

TEST_CASE("CSV writer") {
  std::ostringstream out;
  TableWriter w(out, Format::Csv, {"growth", 7, {{"n", "2"}}}, {"step", "i", "j"});
  w.row({1, 1, 1});
  w.row({2, 2, 1});
  std::istringstream in(out.str());
  std::string meta, header, r1, r2, extra;
  std::getline(in, meta);
  std::getline(in, header);
  std::getline(in, r1);
  std::getline(in, r2);
  CHECK_FALSE(std::getline(in, extra));
  REQUIRE(meta.rfind("# ", 0) == 0);
  const auto m = nlohmann::json::parse(meta.substr(2));
  CHECK(m["seed"] == 7);
  CHECK(m["command"] == "growth");
  CHECK(m["rng"] == kRngName);
  CHECK(m["params"]["n"] == "2");
  CHECK(header == "step,i,j");
  CHECK(r1 == "1,1,1");
  CHECK(r2 == "2,2,1");
  CHECK(error_code([&] { w.row({1, 2}); }) == Errc::DomainError);
}

TEST_CASE("JSON-lines writer") {
  std::ostringstream out;
  TableWriter w(out, Format::Jsonl, {"law", 3, {}}, {"x", "cdf"});
  w.row({0.25, 0.5});
  std::istringstream in(out.str());
  std::string a, b;
  std::getline(in, a);
  std::getline(in, b);
  CHECK(nlohmann::json::parse(a)["meta"]["seed"] == 3);
  const auto r = nlohmann::json::parse(b);
  CHECK(r["x"] == 0.25);
  CHECK(r["cdf"] == 0.5);
}

TEST_CASE("reports are written deterministically") {
  ExperimentReport rep;
  rep.name = "demo";
  rep.seed = 5;
  rep.columns = {"a"};
  rep.rows = {{0.1}, {0.2}};
  rep.extras = {{"median", 0.15}};
  std::ostringstream a, b;
  write_report(rep, a, Format::Csv);
  write_report(rep, b, Format::Csv);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"median\":\"0.15\"") != std::string::npos);
  CHECK(error_code([&] { write_report(rep, "/nonexistent/dir/x.csv", Format::Csv); }) ==
        Errc::IoError);
}

TEST_CASE("configuration files") {
  const auto defaults = parse_config("");
  CHECK(defaults.n == RunConfig{}.n);
  CHECK(defaults.seed == constants::kDefaultSeed);
  const auto c = parse_config("n=100\n# comment\n  seed = 42  \nformat=jsonl\nz=0.8 # trailing\n");
  CHECK(c.n == 100);
  CHECK(c.seed == 42);
  CHECK(c.format == Format::Jsonl);
  CHECK(c.z == 0.8);
  CHECK(error_code([] { parse_config("n=abc"); }) == Errc::MalformedLine);
  CHECK(error_code([] { parse_config("n"); }) == Errc::MalformedLine);
  CHECK(error_code([] { parse_config("=3"); }) == Errc::MalformedLine);
  CHECK(error_code([] { parse_config("format=xml"); }) == Errc::MalformedLine);
  CHECK(error_code([] { parse_config("colour=red"); }) == Errc::UnknownKey);
  CHECK(error_code([] { read_config("/nonexistent/config"); }) == Errc::IoError);
  for (const auto& key : config_keys()) {
    RunConfig r;
    const std::string value = key == "format" ? "csv" : "3";
    CHECK_NOTHROW(apply_config(r, key, value));
  }
  const auto path = std::filesystem::temp_directory_path() / "tabdyn_test_config.txt";
  {
    std::ofstream f(path);
    f << "trials=7\n";
  }
  CHECK(read_config(path).trials == 7);
  std::filesystem::remove(path);
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("jsonl") == Format::Jsonl);
  CHECK(format_name(Format::Jsonl) == "jsonl");
  CHECK(error_code([] { parse_format("xml"); }) == Errc::Usage);
}
