#include "tabdyn/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tabdyn/error.hpp"
#include "tabdyn/rng.hpp"

namespace tabdyn {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::Jsonl;
  throw Error(Errc::Usage, "format must be csv or jsonl, not '" + std::string(s) + "'");
}

std::string_view format_name(Format f) noexcept { return f == Format::Csv ? "csv" : "jsonl"; }

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s) {
  double x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw Error(Errc::MalformedLine, "not a number: '" + std::string(s) + "'");
  return x;
}

namespace {

Json json_number(double x) {
  if (std::isfinite(x) && x == std::trunc(x) && std::abs(x) < 9007199254740992.0)
    return static_cast<std::int64_t>(x);
  return x;
}

Json metadata_json(const Metadata& meta) {
  Json m;
  m["tabdyn_version"] = "0.1.0";
  m["format_version"] = constants::kVersion;
  m["command"] = meta.command;
  m["seed"] = meta.seed;
  m["rng"] = kRngName;
  Json params = Json::object();
  for (const auto& [k, v] : meta.params) params[k] = v;
  m["params"] = params;
  return m;
}

}  // namespace

TableWriter::TableWriter(std::ostream& out, Format format, const Metadata& meta,
                         std::vector<std::string> columns)
    : out_(&out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    *out_ << "# " << metadata_json(meta).dump() << '\n';
    for (std::size_t c = 0; c < columns_.size(); ++c) *out_ << (c ? "," : "") << columns_[c];
    *out_ << '\n';
  } else {
    *out_ << Json{{"meta", metadata_json(meta)}}.dump() << '\n';
  }
}

void TableWriter::row(std::span<const double> values) {
  if (values.size() != columns_.size())
    throw Error(Errc::DomainError, "row width does not match the header");
  if (format_ == Format::Csv) {
    for (std::size_t c = 0; c < values.size(); ++c)
      *out_ << (c ? "," : "") << format_number(values[c]);
    *out_ << '\n';
  } else {
    Json r;
    for (std::size_t c = 0; c < values.size(); ++c) r[columns_[c]] = json_number(values[c]);
    *out_ << r.dump() << '\n';
  }
}

void write_report(const ExperimentReport& report, std::ostream& out, Format format) {
  Metadata meta{"experiment:" + report.name, report.seed, {}};
  meta.params = {{"n", std::to_string(report.n)},
                 {"trials", std::to_string(report.trials)},
                 {"statistic_name", report.statistic_name},
                 {"statistic", format_number(report.statistic)},
                 {"threshold", format_number(report.threshold)},
                 {"pass", report.pass ? "true" : "false"}};
  for (const auto& [k, v] : report.extras) meta.params.emplace_back(k, format_number(v));
  TableWriter w(out, format, meta, report.columns);
  for (const auto& r : report.rows) w.row(r);
}

void write_report(const ExperimentReport& report, const std::filesystem::path& path,
                  Format format) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  write_report(report, out, format);
  if (!out) throw Error(Errc::IoError, "write to " + path.string() + " failed");
}

namespace {

template <class Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int x{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size())
    throw Error(Errc::MalformedLine,
                std::string(key) + " expects an integer, got '" + std::string(v) + "'");
  return x;
}

double parse_real(std::string_view key, std::string_view v) {
  try {
    return parse_number(v);
  } catch (const Error&) {
    throw Error(Errc::MalformedLine,
                std::string(key) + " expects a number, got '" + std::string(v) + "'");
  }
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> config_keys() {
  return {"n",     "trials", "k",     "z", "seed", "out",  "format",  "scale", "suite",
          "jobs",  "depth",  "steps", "m", "t",    "grid", "name",    "sampler", "mode"};
}

void apply_config(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "n") c.n = parse_int<std::int64_t>(key, value);
  else if (key == "trials") c.trials = parse_int<std::int64_t>(key, value);
  else if (key == "k") c.k = parse_int<int>(key, value);
  else if (key == "z") c.z = parse_real(key, value);
  else if (key == "seed") c.seed = parse_int<std::uint64_t>(key, value);
  else if (key == "out") c.out = value;
  else if (key == "format") {
    try {
      c.format = parse_format(value);
    } catch (const Error& e) {
      throw Error(Errc::MalformedLine, e.what());
    }
  } else if (key == "scale") c.scale = value;
  else if (key == "suite") c.suite = value;
  else if (key == "jobs") c.jobs = parse_int<int>(key, value);
  else if (key == "depth") c.depth = parse_int<int>(key, value);
  else if (key == "steps") c.steps = parse_int<int>(key, value);
  else if (key == "m") c.m = parse_int<int>(key, value);
  else if (key == "t") c.t = parse_real(key, value);
  else if (key == "grid") c.grid = parse_int<int>(key, value);
  else if (key == "name") c.name = value;
  else if (key == "sampler") c.sampler = value;
  else if (key == "mode") c.mode = value;
  else throw Error(Errc::UnknownKey, "unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(Errc::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty())
      throw Error(Errc::MalformedLine, "line " + std::to_string(line_no) + ": empty key");
    apply_config(base, key, trim(line.substr(eq + 1)));
  }
  return base;
}

RunConfig read_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace tabdyn
