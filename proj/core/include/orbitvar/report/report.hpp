#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace orbitvar::report {

enum class Verdict { Proven, Refuted, ConsequenceChecked, Sampled, Unknown };

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Unknown;
  /// The claim this check exercises, in a few words.
  std::string anchor;
  nlohmann::json witness = nlohmann::json::object();
  std::optional<double> seconds;
};

/// Ordered list of checks produced by one operation, plus free-form summary
/// values (counts, dimensions) keyed by name.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }
  nlohmann::json& summary() { return summary_; }
  const nlohmann::json& summary() const { return summary_; }

  Check& add(Check c);
  Check& add(std::string name, Verdict v, std::string anchor, nlohmann::json witness = nlohmann::json::object());
  void append(const VerificationReport& other);

  std::size_t count(Verdict v) const;
  bool refuted() const { return count(Verdict::Refuted) > 0; }
  /// Proven when every check is proven; otherwise the weakest verdict with
  /// refuted dominating.
  Verdict overall() const;
  const Check* find(std::string_view name) const;

  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_markdown(bool with_timing = false) const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  nlohmann::json summary_ = nlohmann::json::object();
};

}  // namespace orbitvar::report
