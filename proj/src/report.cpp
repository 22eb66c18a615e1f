#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "ngcheck/verify.hpp"

namespace ngcheck {

namespace {

void append_witness(std::vector<Witness>& list, Witness w) {
  const bool seen = std::any_of(list.begin(), list.end(),
                                [&](const Witness& x) { return x.canonical == w.canonical; });
  if (!seen) list.push_back(std::move(w));
}

void observe(std::map<std::string, Metric>& metrics, const std::string& name, Metric::Kind kind, double v) {
  auto [it, inserted] = metrics.try_emplace(name, Metric{kind, v});
  if (inserted) return;
  Metric& m = it->second;
  switch (m.kind) {
    case Metric::Kind::min:
      m.value = std::min(m.value, v);
      break;
    case Metric::Kind::max:
      m.value = std::max(m.value, v);
      break;
    case Metric::Kind::count:
      m.value += v;
      break;
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::ordered_json findings_json(const std::vector<Finding>& list) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : list) arr.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
  return arr;
}

nlohmann::ordered_json witnesses_json(const std::vector<Witness>& list) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : list) {
    arr.push_back({{"graph6", w.graph6}, {"canonical", w.canonical}, {"value", w.value}});
  }
  return arr;
}

nlohmann::ordered_json to_json_object(const SuiteReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["status"] = std::string(to_string(r.status()));
  j["provenance"] = r.provenance;
  j["scanned"] = r.scanned;
  j["applicable"] = r.applicable;
  j["violation_count"] = r.violation_count;
  j["violations"] = findings_json(r.violations);
  j["counterexample_count"] = r.counterexample_count;
  j["counterexamples"] = findings_json(r.counterexamples);
  j["exceptions"] = witnesses_json(r.exceptions);
  j["equality_witnesses"] = witnesses_json(r.equality_witnesses);
  auto metrics = nlohmann::ordered_json::object();
  // Metric values go through the 12-digit formatter so the output is stable text.
  for (const auto& [name, m] : r.metrics) metrics[name] = format_double(m.value);
  j["metrics"] = metrics;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string_view to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass:
      return "PASS";
    case SuiteStatus::violation:
      return "VIOLATION";
    case SuiteStatus::counterexample:
      return "COUNTEREXAMPLE-TO-CONJECTURE";
  }
  return "?";
}

SuiteStatus SuiteReport::status() const {
  if (violation_count > 0) return SuiteStatus::violation;
  if (counterexample_count > 0) return SuiteStatus::counterexample;
  return SuiteStatus::pass;
}

void SuiteReport::add_violation(std::string graph6, std::string detail) {
  ++violation_count;
  if (violations.size() < max_findings) violations.push_back({std::move(graph6), std::move(detail)});
}

void SuiteReport::add_counterexample(std::string graph6, std::string detail) {
  ++counterexample_count;
  if (counterexamples.size() < max_findings) {
    counterexamples.push_back({std::move(graph6), std::move(detail)});
  }
}

void SuiteReport::add_exception(Witness w) { append_witness(exceptions, std::move(w)); }

void SuiteReport::add_equality_witness(Witness w) { append_witness(equality_witnesses, std::move(w)); }

void SuiteReport::observe_min(const std::string& name, double v) { observe(metrics, name, Metric::Kind::min, v); }

void SuiteReport::observe_max(const std::string& name, double v) { observe(metrics, name, Metric::Kind::max, v); }

void SuiteReport::add_count(const std::string& name, double v) { observe(metrics, name, Metric::Kind::count, v); }

std::optional<double> SuiteReport::metric(const std::string& name) const {
  auto it = metrics.find(name);
  if (it == metrics.end()) return std::nullopt;
  return it->second.value;
}

void SuiteReport::merge(const SuiteReport& later) {
  scanned += later.scanned;
  applicable += later.applicable;
  violation_count += later.violation_count;
  for (const auto& f : later.violations) {
    if (violations.size() < max_findings) violations.push_back(f);
  }
  counterexample_count += later.counterexample_count;
  for (const auto& f : later.counterexamples) {
    if (counterexamples.size() < max_findings) counterexamples.push_back(f);
  }
  for (const auto& w : later.exceptions) append_witness(exceptions, w);
  for (const auto& w : later.equality_witnesses) append_witness(equality_witnesses, w);
  for (const auto& [name, m] : later.metrics) observe(metrics, name, m.kind, m.value);
  elapsed_ms += later.elapsed_ms;
}

std::string report_to_json(const SuiteReport& r, bool include_timing) {
  return to_json_object(r, include_timing).dump(2);
}

std::string reports_to_json(std::span<const SuiteReport> reports, bool include_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json_object(r, include_timing));
  return arr.dump(2);
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "[" << to_string(r.status()) << "] " << r.suite << "  scanned=" << r.scanned
      << " applicable=" << r.applicable << " violations=" << r.violation_count
      << " counterexamples=" << r.counterexample_count << " exceptions=" << r.exceptions.size()
      << " equality_classes=" << r.equality_witnesses.size() << "\n";
  out << "  source: " << r.provenance << "\n";
  for (const auto& [name, m] : r.metrics) out << "  " << name << " = " << format_double(m.value) << "\n";
  for (const auto& w : r.exceptions) {
    out << "  exception " << w.graph6 << " (class " << w.canonical << ") value " << w.value << "\n";
  }
  for (const auto& w : r.equality_witnesses) {
    out << "  equality " << w.graph6 << " (class " << w.canonical << ") value " << w.value << "\n";
  }
  for (const auto& f : r.violations) out << "  VIOLATION " << f.graph6 << ": " << f.detail << "\n";
  for (const auto& f : r.counterexamples) out << "  COUNTEREXAMPLE " << f.graph6 << ": " << f.detail << "\n";
  return out.str();
}

}  // namespace ngcheck
