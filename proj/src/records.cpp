#include <cmath>
#include <cstdio>
#include <limits>

#include "ngcheck/spectra.hpp"
#include "ngcheck/verify.hpp"

namespace ngcheck {

PairEvaluation evaluate_pair(const Graph& g, bool with_spectra) {
  if (g.order() < 2) throw std::invalid_argument("pair evaluation needs n >= 2");
  PairEvaluation e{g, complement(g), {}, {}, {}, {}, {}, with_spectra};
  e.iso = isoperimetric_number(e.graph);
  e.iso_c = isoperimetric_number(e.complement);
  e.cheeger = cheeger_constant(e.graph);
  e.cheeger_c = cheeger_constant(e.complement);

  ScanRecord& r = e.record;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.i = e.iso.ratio;
  r.i_c = e.iso_c.ratio;
  r.h = e.cheeger.ratio;
  r.h_c = e.cheeger_c.ratio;
  r.connected = is_connected(e.graph);
  r.connected_c = is_connected(e.complement);
  if (with_spectra) {
    r.lambda2 = r.connected ? eigenvalues(normalized_laplacian(e.graph))[1] : 0.0;
    r.lambda2_c = r.connected_c ? eigenvalues(normalized_laplacian(e.complement))[1] : 0.0;
  } else {
    r.lambda2 = std::numeric_limits<double>::quiet_NaN();
    r.lambda2_c = std::numeric_limits<double>::quiet_NaN();
  }
  return e;
}

ScanRecord scan_record(const Graph& g) { return evaluate_pair(g, true).record; }

std::vector<ScanRecord> scan_records(const GraphStream& stream) {
  std::vector<ScanRecord> out;
  stream.for_each([&](std::uint64_t, const Graph& g) { out.push_back(scan_record(g)); });
  return out;
}

std::string csv_header() {
  return "graph6,n,i_num,i_den,ic_num,ic_den,h_num,h_den,hc_num,hc_den,lambda2,lambda2c,connected,connectedc";
}

std::string to_csv_row(const ScanRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, ",%d,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%.12g,%.12g,%d,%d", r.n,
                static_cast<unsigned long long>(r.i.num()), static_cast<unsigned long long>(r.i.den()),
                static_cast<unsigned long long>(r.i_c.num()), static_cast<unsigned long long>(r.i_c.den()),
                static_cast<unsigned long long>(r.h.num()), static_cast<unsigned long long>(r.h.den()),
                static_cast<unsigned long long>(r.h_c.num()), static_cast<unsigned long long>(r.h_c.den()),
                r.lambda2, r.lambda2_c, r.connected ? 1 : 0, r.connected_c ? 1 : 0);
  return r.graph6 + buf;
}

}  // namespace ngcheck
