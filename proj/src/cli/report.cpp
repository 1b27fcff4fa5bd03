#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "isopar/cli.hpp"

namespace isopar {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "fail";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skip") return Status::Skip;
  throw ParseError("unknown check status '" + s + "'");
}

}  // namespace

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == Status::Pass;
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == Status::Fail;
  return n;
}

std::size_t Report::counted() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status != Status::Skip;
  return n;
}

json Report::to_json(bool with_timing) const {
  json checks_j = json::array();
  for (const auto& c : checks) {
    json cj{{"id", c.id}, {"status", isopar::to_string(c.status)}, {"detail", c.detail}};
    if (with_timing) cj["wall_ms"] = c.wall_ms;
    checks_j.push_back(std::move(cj));
  }
  json j{{"suite", suite}, {"checks", std::move(checks_j)}, {"seed", seed}};
  if (!scans.empty()) j["scans"] = scans;
  return j;
}

Report Report::from_json(const json& j) {
  try {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.status = parse_status(c.at("status").get<std::string>());
      rec.detail = c.at("detail").get<std::string>();
      rec.wall_ms = c.value("wall_ms", 0.0);
      r.checks.push_back(std::move(rec));
    }
    if (j.contains("scans"))
      for (const auto& s : j.at("scans")) r.scans.push_back(s);
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (expected text or json)");
}

void emit_report(const Report& r, Format format, std::ostream& os, bool with_timing) {
  if (format == Format::Json) {
    os << r.to_json(with_timing).dump(2) << '\n';
    return;
  }
  for (const auto& c : r.checks) {
    os << std::left << std::setw(5) << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP")
       << ' ' << c.id << "  " << c.detail;
    if (with_timing) os << "  [" << std::fixed << std::setprecision(1) << c.wall_ms << " ms]";
    os << '\n';
  }
  if (r.ok())
    os << "OK: " << r.passed() << '/' << r.counted() << " checks passed\n";
  else
    os << "FAILED: " << r.failed() << '/' << r.counted() << " checks failed\n";
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ISOPAR_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw UsageError("ISOPAR_SEED must be a nonnegative integer");
    return v;
  }
  return 0;
}

}  // namespace isopar
