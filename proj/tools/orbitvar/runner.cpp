#include "orbitvar/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbitvar/error.hpp"
#include "orbitvar/ideals/chart.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/lie/condition4.hpp"
#include "orbitvar/orbit/fixed_points.hpp"
#include "orbitvar/orbit/membership.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::cli {

namespace {

using report::Verdict;
using report::VerificationReport;

constexpr std::size_t kPairSamples = 128;
constexpr std::size_t kDeterminantalMax = 4;

struct Section {
  VerificationReport report;
  double seconds = 0;
};

struct Loaded {
  lie::WeightedLieAlgebra algebra;
  std::string source;
  std::optional<std::string> builtin;
};

Loaded load(const RunConfig& config) {
  if (config.input.has_value() == config.builtin.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "exactly one of --input and --builtin is required");
  }
  if (config.builtin) return {lie::builtin(*config.builtin), "builtin:" + *config.builtin, config.builtin};
  std::ifstream in(*config.input, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + *config.input);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {lie::WeightedLieAlgebra::parse(buf.str()), "file:" + *config.input, std::nullopt};
}

std::string label(const lie::WeightedLieAlgebra& alg, const lie::WeightSubset& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += alg.names()[s[i]];
  }
  return out + "]";
}

VerificationReport retitle(const std::string& subject, const VerificationReport& rep) {
  VerificationReport out(subject);
  out.append(rep);
  out.summary() = rep.summary();
  return out;
}

VerificationReport error_report(const std::string& subject, const std::exception& e) {
  VerificationReport rep(subject);
  nlohmann::json w = {{"message", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) w["code"] = std::string(to_string(err->code()));
  rep.add(subject + "-error", Verdict::Unknown, "the operation completed", w);
  return rep;
}

class Runner {
 public:
  Runner(const Loaded& loaded, const RunConfig& config) : loaded_(loaded), config_(config) {}

  std::vector<Section> run(const std::string& command) {
    if (command == "validate" || command == "suite") validate();
    if (command == "fixed-points" || command == "suite") {
      section("fixed-points", [&] { return orbit::fixed_points_report(alg()); });
    }
    if (command == "boundary" || command == "suite") {
      section("boundary", [&] { return orbit::boundary_report(alg()); });
    }
    if (command == "property-p" || command == "suite") {
      section("property-P", [&] { return orbit::property_P_suite(alg()); });
    }
    if (command == "chart" || command == "suite") charts("chart", ideals::chart_report);
    if (command == "nilcone" || command == "suite") charts("nilcone", ideals::nilcone_report);
    if (command == "ps-check" || command == "suite") {
      section("ps-check", [&] { return ideals::determinantal_suite(kDeterminantalMax); });
    }
    if (command == "suite") pair_relation();
    return std::move(sections_);
  }

 private:
  const lie::WeightedLieAlgebra& alg() const { return loaded_.algebra; }

  void section(const std::string& subject, const std::function<VerificationReport()>& body) {
    auto start = std::chrono::steady_clock::now();
    Section s;
    try {
      s.report = body();
    } catch (const Error& e) {
      s.report = error_report(subject, e);
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    sections_.push_back(std::move(s));
  }

  void validate() {
    section("validate", [&] {
      auto res = lie::validate(alg());
      res.report.summary()["category"] = res.category;
      return res.report;
    });
    if (!loaded_.builtin) return;
    auto family = lie::builtin_condition4_family(*loaded_.builtin);
    if (!family) return;
    section("condition-4", [&] { return lie::verify_condition4(alg(), *family, config_.seed); });
  }

  void charts(const std::string& name,
              const std::function<VerificationReport(const ideals::ChartIdeal&)>& body) {
    std::vector<orbit::FixedPointRecord> points;
    try {
      points = orbit::group_fixed_points(alg());
    } catch (const Error& e) {
      sections_.push_back({error_report(name, e), 0});
      return;
    }
    for (const auto& p : points) {
      std::string subject = name + label(alg(), p.r_v);
      section(subject, [&] { return retitle(subject, body(ideals::chart_ideal(alg(), p.subspace))); });
    }
  }

  void pair_relation() {
    section("pair-relation", [&] {
      VerificationReport rep("pair-relation");
      for (std::size_t a = 0; a < alg().n(); ++a) {
        rep.append(orbit::verify_pair_relation(alg(), a, kPairSamples, config_.seed));
      }
      rep.summary()["samples_per_weight"] = kPairSamples;
      return rep;
    });
  }

  const Loaded& loaded_;
  const RunConfig& config_;
  std::vector<Section> sections_;
};

nlohmann::json counts_of(const std::vector<Section>& sections) {
  nlohmann::json counts = nlohmann::json::object();
  for (auto v : {Verdict::Proven, Verdict::Refuted, Verdict::ConsequenceChecked, Verdict::Sampled, Verdict::Unknown}) {
    std::size_t total = 0;
    for (const auto& s : sections) total += s.report.count(v);
    counts[report::to_string(v)] = total;
  }
  return counts;
}

std::string overall(const nlohmann::json& counts) {
  if (counts["refuted"].get<std::size_t>() > 0) return "refuted";
  for (const char* v : {"unknown", "sampled", "consequence-checked"}) {
    if (counts[v].get<std::size_t>() > 0) return v;
  }
  return "proven";
}

std::string render_json(const std::string& command, const Loaded& loaded, const RunConfig& config,
                        const std::vector<Section>& sections) {
  nlohmann::json doc;
  doc["schema"] = "orbitvar-report/1";
  doc["command"] = command;
  doc["algebra"] = {{"source", loaded.source},
                    {"fingerprint", fingerprint(loaded.algebra)},
                    {"d", loaded.algebra.d()},
                    {"n", loaded.algebra.n()}};
  doc["seed"] = config.seed;
  nlohmann::json counts = counts_of(sections);
  doc["verdict"] = overall(counts);
  doc["counts"] = counts;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : sections) {
    nlohmann::json j = s.report.to_json(config.timing);
    if (config.timing) j["seconds"] = s.seconds;
    list.push_back(std::move(j));
  }
  doc["sections"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string render_markdown(const std::string& command, const Loaded& loaded, const RunConfig& config,
                            const std::vector<Section>& sections) {
  nlohmann::json counts = counts_of(sections);
  std::ostringstream os;
  os << "# orbitvar " << command << "\n\n";
  os << "- schema: orbitvar-report/1\n";
  os << "- algebra: " << loaded.source << " (d = " << loaded.algebra.d() << ", n = " << loaded.algebra.n()
     << ", fingerprint " << fingerprint(loaded.algebra) << ")\n";
  os << "- seed: " << config.seed << "\n";
  os << "- verdict: **" << overall(counts) << "**\n";
  os << "- counts: " << counts.dump() << "\n\n";
  for (const auto& s : sections) {
    os << s.report.to_markdown(config.timing);
    if (config.timing) os << "\nSection time: " << s.seconds << " s\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "fixed-points", "boundary", "property-p",
                                                 "chart",    "nilcone",      "ps-check", "suite"};
  return names;
}

std::string fingerprint(const lie::WeightedLieAlgebra& alg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : alg.to_json().dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    result.exit_code = 2;
    result.error = "unknown command " + config.command;
    return result;
  }
  Loaded loaded;
  try {
    loaded = load(config);
  } catch (const Error& e) {
    result.exit_code = 2;
    result.error = e.what();
    return result;
  }
  if (config.command != "validate" && config.command != "suite") {
    auto v = lie::validate(loaded.algebra);
    if (!v.passed) {
      result.exit_code = 2;
      result.error = "input algebra fails validation; run the validate command for details";
      return result;
    }
  }

  Runner runner(loaded, config);
  std::vector<Section> sections = runner.run(config.command);
  bool refuted = false;
  for (const auto& s : sections) refuted = refuted || s.report.refuted();
  result.exit_code = refuted ? 1 : 0;
  result.text = config.format == Format::Json ? render_json(config.command, loaded, config, sections)
                                              : render_markdown(config.command, loaded, config, sections);
  return result;
}

}  // namespace orbitvar::cli
