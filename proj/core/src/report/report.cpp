#include "orbitvar/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "orbitvar/error.hpp"

namespace orbitvar::report {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return "proven";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::ConsequenceChecked:
      return "consequence-checked";
    case Verdict::Sampled:
      return "sampled";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::Proven, Verdict::Refuted, Verdict::ConsequenceChecked, Verdict::Sampled, Verdict::Unknown}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(s) + "'");
}

Check& VerificationReport::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& VerificationReport::add(std::string name, Verdict v, std::string anchor, nlohmann::json witness) {
  return add(Check{std::move(name), v, std::move(anchor), std::move(witness), std::nullopt});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.verdict == v; }));
}

Verdict VerificationReport::overall() const {
  if (refuted()) return Verdict::Refuted;
  if (checks_.empty() || count(Verdict::Unknown)) return Verdict::Unknown;
  if (count(Verdict::Sampled)) return Verdict::Sampled;
  if (count(Verdict::ConsequenceChecked)) return Verdict::ConsequenceChecked;
  return Verdict::Proven;
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["subject"] = subject_;
  j["verdict"] = to_string(overall());
  nlohmann::json counts = nlohmann::json::object();
  for (auto v : {Verdict::Proven, Verdict::Refuted, Verdict::ConsequenceChecked, Verdict::Sampled, Verdict::Unknown}) {
    counts[to_string(v)] = count(v);
  }
  j["counts"] = counts;
  j["summary"] = summary_;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["name"] = c.name;
    e["verdict"] = to_string(c.verdict);
    e["anchor"] = c.anchor;
    e["witness"] = c.witness;
    if (with_timing && c.seconds) e["seconds"] = *c.seconds;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return j;
}

namespace {

std::string cell(const nlohmann::json& w) {
  std::string s = w.is_string() ? w.get<std::string>() : w.dump();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string VerificationReport::to_markdown(bool with_timing) const {
  std::ostringstream os;
  os << "### " << subject_ << "\n\n";
  os << "Overall: **" << to_string(overall()) << "**";
  os << " (proven " << count(Verdict::Proven) << ", refuted " << count(Verdict::Refuted) << ", consequence-checked "
     << count(Verdict::ConsequenceChecked) << ", sampled " << count(Verdict::Sampled) << ", unknown "
     << count(Verdict::Unknown) << ")\n\n";
  if (!summary_.empty()) {
    for (const auto& [k, v] : summary_.items()) os << "- " << k << ": " << cell(v) << "\n";
    os << "\n";
  }
  os << "| check | verdict | claim | witness |" << (with_timing ? " seconds |" : "") << "\n";
  os << "|---|---|---|---|" << (with_timing ? "---|" : "") << "\n";
  for (const auto& c : checks_) {
    os << "| " << c.name << " | " << to_string(c.verdict) << " | " << cell(c.anchor) << " | " << cell(c.witness)
       << " |";
    if (with_timing) os << " " << (c.seconds ? std::to_string(*c.seconds) : "") << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace orbitvar::report
