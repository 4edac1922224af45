#pragma once

// CSV / JSON-lines export with a leading metadata record, shortest
// round-trip number formatting, and key=value run configuration.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabdyn/constants.hpp"
#include "tabdyn/experiments.hpp"

namespace tabdyn {

enum class Format { Csv, Jsonl };

Format parse_format(std::string_view s);  ///< csv | jsonl; throws Usage
std::string_view format_name(Format f) noexcept;

/// Shortest decimal that parses back to the same double.
std::string format_number(double x);
/// Throws MalformedLine unless the whole string is a number.
double parse_number(std::string_view s);

struct Metadata {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
};

/// Writes the metadata record, then the header (CSV) and one record per row.
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format, const Metadata& meta,
              std::vector<std::string> columns);
  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
  }

 private:
  std::ostream* out_;
  Format format_;
  std::vector<std::string> columns_;
};

/// Metadata, summary and per-trial rows of a report.
void write_report(const ExperimentReport& report, std::ostream& out, Format format);
/// As above to a file; throws IoError.
void write_report(const ExperimentReport& report, const std::filesystem::path& path,
                  Format format);

struct RunConfig {
  std::int64_t n = 1000;
  std::int64_t trials = 100;
  int k = 0;  ///< 0 picks ⌈n^{1/4}⌉
  double z = 0.5;
  std::uint64_t seed = constants::kDefaultSeed;
  std::string out;  ///< empty writes to standard output
  Format format = Format::Csv;
  std::string scale = "small";
  std::string suite = "all";
  int jobs = 1;
  int depth = 2;
  int steps = 1000;
  int m = 50;
  double t = 100.0;
  int grid = 101;
  std::string name;
  std::string sampler = "rsk";
  std::string mode = "undetermined";
};

/// Keys recognized by read_config and apply_config.
std::vector<std::string> config_keys();

/// Sets one field from its textual value. Throws UnknownKey or MalformedLine.
void apply_config(RunConfig& config, std::string_view key, std::string_view value);

/// Parses key=value lines; '#' starts a comment. Starts from `base`.
/// Throws IoError, UnknownKey or MalformedLine.
RunConfig read_config(const std::filesystem::path& path, RunConfig base = {});
RunConfig parse_config(std::string_view text, RunConfig base = {});

}  // namespace tabdyn
