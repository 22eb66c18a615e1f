// Acceptance run: one PASS / FAIL / NOT RUN line per criterion.
//
// Criteria 1-8 share one exhaustive pass over every labeled graph on 2..7
// vertices. Criterion 9 needs the order-8 and order-9 graph6 corpora under
// NGCHECK_CORPUS_DIR; criterion 11 runs the ngcheck executable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <tuple>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ngcheck/cuts.hpp"
#include "ngcheck/enumeration.hpp"
#include "ngcheck/graph.hpp"
#include "ngcheck/spectra.hpp"
#include "ngcheck/verify.hpp"
#include "oracles.hpp"

using namespace ngcheck;
namespace fs = std::filesystem;

namespace {

enum class Verdict { pass, fail, not_run };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

/// Collects failed checks for one criterion; the first few are kept for the report.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) failed_ += (failed_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {Verdict::pass, summary};
    return {Verdict::fail, std::to_string(failures_) + " failed check(s): " + failed_};
  }

 private:
  int failures_ = 0;
  std::string failed_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using ReportsByOrder = std::map<int, std::map<std::string, SuiteReport>>;

const SuiteReport& get(const ReportsByOrder& all, int n, SuiteId id) {
  return all.at(n).at(std::string(suite_name(id)));
}

double metric_or(const SuiteReport& r, const std::string& name, double fallback) {
  return r.metric(name).value_or(fallback);
}

Outcome exception_criterion(const ReportsByOrder& all, SuiteId id, const ExactRatio& p4_value) {
  Checks c;
  const std::string p4 = pair_canonical_form(path(4));
  std::uint64_t scanned = 0;
  for (const auto& [n, reports] : all) {
    const SuiteReport& r = get(all, n, id);
    scanned += r.scanned;
    c.expect(r.violation_count == 0, "n=" + std::to_string(n) + " has violations");
    if (n == 4) {
      c.expect(r.exceptions.size() == 1, "n=4 exception classes = " + std::to_string(r.exceptions.size()));
      if (!r.exceptions.empty()) {
        c.expect(r.exceptions[0].canonical == p4, "n=4 exception is not P4");
        c.expect(r.exceptions[0].value == p4_value.to_string(), "P4 value " + r.exceptions[0].value);
      }
      c.expect(metric_or(r, "min_max_pair", -1) == p4_value.to_double(), "n=4 minimum is not the P4 value");
    } else {
      c.expect(r.exceptions.empty(), "unexpected exception at n=" + std::to_string(n));
      const ExactRatio bound = id == SuiteId::isoperimetric ? ExactRatio(1, 1) : cheeger_pair_bound(n);
      c.expect(metric_or(r, "min_max_pair", -1) >= bound.to_double(), "minimum below bound at n=" + std::to_string(n));
    }
  }
  return c.outcome(std::to_string(scanned) + " labeled graphs, only exception P4 at " + p4_value.to_string());
}

Outcome criterion_lambda2_bound(const ReportsByOrder& all) {
  Checks c;
  double worst = 1e300;
  for (const auto& [n, reports] : all) {
    const SuiteReport& r = get(all, n, SuiteId::lambda2);
    const double margin = metric_or(r, "min_margin", -1);
    worst = std::min(worst, margin);
    c.expect(margin > 1e-9, "n=" + std::to_string(n) + " margin " + fmt(margin));
  }
  const double p4 = lambda2(path(4));
  c.expect(std::abs(p4 - 0.5) <= 1e-9, "lambda2(P4) = " + fmt(p4));
  return c.outcome("smallest margin above the bound " + fmt(worst) + ", lambda2(P4) = " + fmt(p4));
}

Outcome criterion_cheeger_inequality(const ReportsByOrder& all) {
  Checks c;
  double worst = 1e300;
  double checks = 0;
  std::uint64_t expected = 0;
  for (const auto& [n, reports] : all) {
    const SuiteReport& r = get(all, n, SuiteId::lambda2);
    const double margin = metric_or(r, "min_cheeger_margin", -1);
    worst = std::min(worst, margin);
    checks += metric_or(r, "cheeger_inequality_checks", 0);
    // Each labeled graph is scanned together with its complement.
    expected += 2 * oracle::connected_labeled_count(n);
    c.expect(margin > 1e-12, "n=" + std::to_string(n) + " margin " + fmt(margin));
  }
  c.expect(checks == static_cast<double>(expected), "checked " + fmt(checks) + " connected graphs, expected " +
                                                        std::to_string(expected));
  return c.outcome(fmt(checks) + " connected graphs, smallest lambda2 - h^2/2 = " + fmt(worst));
}

Outcome criterion_conjecture_max(const ReportsByOrder& all) {
  Checks c;
  std::string summary;
  for (int n : {5, 6, 7}) {
    const SuiteReport& r = get(all, n, SuiteId::conjecture_max);
    const double target = 2.0 / (n - 1);
    const double minimum = metric_or(r, "min_max_pair", -1);
    c.expect(r.status() == SuiteStatus::pass, "n=" + std::to_string(n) + " status " + std::string(to_string(r.status())));
    if (n % 2 == 1) {
      c.expect(std::abs(minimum - target) <= 1e-9, "n=" + std::to_string(n) + " minimum " + fmt(minimum));
      c.expect(r.equality_witnesses.size() == 1,
               "n=" + std::to_string(n) + " equality classes " + std::to_string(r.equality_witnesses.size()));
      if (!r.equality_witnesses.empty()) {
        c.expect(r.equality_witnesses[0].canonical == pair_canonical_form(join_vertex_two_cliques(n)),
                 "n=" + std::to_string(n) + " equality class is not the two-clique join");
      }
    } else {
      c.expect(minimum > target + 1e-9, "n=6 minimum " + fmt(minimum) + " within 1e-9 of 2/5");
      c.expect(r.equality_witnesses.empty(), "n=6 has equality witnesses");
    }
    summary += (summary.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " min " + fmt(minimum));
  }
  return c.outcome(summary);
}

Outcome criterion_join_spectrum() {
  Checks c;
  const SuiteReport r = suite_join_spectrum(3);
  c.expect(r.status() == SuiteStatus::pass, "status " + std::string(to_string(r.status())));
  c.expect(r.applicable == 18, "component pairs " + std::to_string(r.applicable));
  const double dev = metric_or(r, "max_spectrum_deviation", 1);
  const double l2dev = metric_or(r, "max_lambda2_deviation", 1);
  c.expect(dev <= 1e-9, "spectrum deviation " + fmt(dev));
  c.expect(l2dev <= 1e-9, "lambda2 deviation " + fmt(l2dev));
  return c.outcome(std::to_string(r.applicable) + " joins with k <= 3, max deviation " + fmt(dev));
}

Outcome count_criterion(const ReportsByOrder& all, SuiteId id, const std::string& what) {
  Checks c;
  std::uint64_t applicable = 0;
  double worst = 1e300;
  for (const auto& [n, reports] : all) {
    const SuiteReport& r = get(all, n, id);
    applicable += r.applicable;
    worst = std::min(worst, metric_or(r, "min_margin", 1e300));
    c.expect(r.violation_count == 0 && r.counterexample_count == 0,
             "n=" + std::to_string(n) + " " + std::string(to_string(r.status())));
  }
  c.expect(applicable > 0, "no applicable graphs");
  return c.outcome(std::to_string(applicable) + " " + what + ", smallest margin " + fmt(worst));
}

Outcome criterion_corpora() {
  const fs::path dir = NGCHECK_CORPUS_DIR;
  const fs::path c8 = dir / "order8.g6";
  const fs::path c9 = dir / "order9.g6";
  if (!fs::exists(c8) || !fs::exists(c9)) return {Verdict::not_run, "corpora not found under " + dir.string()};
  Checks c;
  std::string summary;
  for (const auto& [path, n, expected_lines, expected_pairs] :
       {std::tuple{c8, 8, 12346ULL, 1ULL}, std::tuple{c9, 9, 274668ULL, 9ULL}}) {
    const GraphStream s = ingest_graph6(path);
    const std::vector<SuiteId> ids{SuiteId::cheeger};
    const SuiteReport r = run_suites(s, ids, {}, RunOptions{std::max(1U, std::thread::hardware_concurrency())})[0];
    c.expect(r.scanned == expected_lines, "order " + std::to_string(n) + " corpus has " + std::to_string(r.scanned) +
                                              " graphs");
    c.expect(r.status() == SuiteStatus::pass, "order " + std::to_string(n) + " status not PASS");
    c.expect(r.equality_witnesses.size() == expected_pairs,
             "order " + std::to_string(n) + " equality pairs " + std::to_string(r.equality_witnesses.size()));
    summary += (summary.empty() ? "" : ", ") +
               ("n=" + std::to_string(n) + ": " + std::to_string(r.equality_witnesses.size()) + " pair(s) of " +
                std::to_string(r.scanned) + " graphs");
  }
  return c.outcome(summary);
}

Outcome criterion_properties() {
  Checks c;
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % (Graph::kMaxOrder - 1));
    const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    c.expect(complement(complement(g)) == g, "complement involution");
    c.expect(parse_graph6(encode_graph6(g)) == g, "graph6 round trip");
  }
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n);
    const Graph h = permute(g, oracle::random_permutation(rng, n));
    c.expect(isoperimetric_number(h).ratio == isoperimetric_number(g).ratio, "i under relabeling");
    c.expect(cheeger_constant(h).ratio == cheeger_constant(g).ratio, "h under relabeling");
    c.expect(std::abs(lambda2(h) - lambda2(g)) <= 1e-9, "lambda2 under relabeling");
  }
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0);
    c.expect(complement_mu_identity_check(g, 1e-8), "mu complement identity");
    const SymMatrix l = normalized_laplacian(g);
    const auto ev = eigenvalues(l);
    double sum = 0;
    for (double x : ev) {
      c.expect(x >= -1e-9 && x <= 2 + 1e-9, "eigenvalue " + fmt(x) + " outside [0, 2]");
      sum += x;
    }
    c.expect(std::abs(sum - l.trace()) <= 1e-8, "eigenvalue sum differs from trace");
    int isolated = 0;
    for (int v = 0; v < n; ++v) isolated += g.degree(v) == 0;
    c.expect(std::abs(l.trace() - (n - isolated)) <= 1e-12, "trace differs from n minus isolated vertices");
  }
  return c.outcome("complement involution, graph6 round trip, relabeling invariance, mu identity, eigenvalue range "
                   "and trace on 1000 random graphs each");
}

Outcome criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "ngcheck_acceptance";
  fs::create_directories(dir);
  const fs::path a = dir / "scan_w1.csv";
  const fs::path b = dir / "scan_w8.csv";
  const std::string cli = NGCHECK_CLI;
  const std::string cmd1 = "\"" + cli + "\" scan --order 6 --workers 1 --out \"" + a.string() + "\" 2>/dev/null";
  const std::string cmd8 = "\"" + cli + "\" scan --order 6 --workers 8 --out \"" + b.string() + "\" 2>/dev/null";
  Checks c;
  c.expect(std::system(cmd1.c_str()) == 0, "workers=1 run failed");
  c.expect(std::system(cmd8.c_str()) == 0, "workers=8 run failed");
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string x = slurp(a);
  const std::string y = slurp(b);
  c.expect(!x.empty() && x == y, "CSV files differ");
  const auto rows = std::count(x.begin(), x.end(), '\n');
  return c.outcome("scan --order 6 with 1 and 8 workers: " + std::to_string(rows) + " lines, " +
                   std::to_string(x.size()) + " bytes, identical");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());

  ReportsByOrder by_order;
  const std::vector<SuiteId> ids = all_stream_suites();
  for (int n = 2; n <= 7; ++n) {
    const auto reports = run_suites(labeled_graphs(n), ids, {}, RunOptions{workers});
    for (const auto& r : reports) by_order[n].emplace(r.suite, r);
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 isoperimetric pair bound, sole exception P4",
       [&] { return exception_criterion(by_order, SuiteId::isoperimetric, ExactRatio(1, 2)); }},
      {"2 Cheeger pair bound, sole exception P4",
       [&] { return exception_criterion(by_order, SuiteId::cheeger, ExactRatio(1, 3)); }},
      {"3 lambda2 pair bound with margin", [&] { return criterion_lambda2_bound(by_order); }},
      {"4 Cheeger inequality lambda2 > h^2/2", [&] { return criterion_cheeger_inequality(by_order); }},
      {"5 max lambda2 conjecture data at n = 5, 6, 7", [&] { return criterion_conjecture_max(by_order); }},
      {"6 join spectrum closed form, k <= 3", [] { return criterion_join_spectrum(); }},
      {"7 regular graphs lambda2 sum >= 1/(n-1)",
       [&] { return count_criterion(by_order, SuiteId::regular_sum, "regular graphs"); }},
      {"8 both-connected lambda2 sum >= 2/sqrt(n)",
       [&] { return count_criterion(by_order, SuiteId::conjecture_sum, "both-connected graphs"); }},
      {"9 Cheeger equality pairs on order 8 and 9 corpora", [] { return criterion_corpora(); }},
      {"10 property suites", [] { return criterion_properties(); }},
      {"11 scan determinism across worker counts", [] { return criterion_determinism(); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Verdict::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "NOT RUN";
    failed += o.verdict == Verdict::fail;
    std::cout << "[" << tag << "] criterion " << name << ": " << o.detail << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "acceptance: " << (failed == 0 ? "all criteria met" : std::to_string(failed) + " failed") << " ("
            << fmt(secs) << " s)" << std::endl;
  return failed == 0 ? 0 : 1;
}
