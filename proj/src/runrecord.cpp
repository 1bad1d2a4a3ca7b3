#include "lcaspan/runrecord.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace lcaspan {

namespace {

// shortest decimal that round-trips; keeps output byte-stable
std::string fmt_double(double x) {
  if (x == static_cast<double>(static_cast<std::int64_t>(x)) &&
      std::abs(x) < 1e15) {
    return std::to_string(static_cast<std::int64_t>(x));
  }
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  std::string s = ss.str();
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream t;
    t.precision(prec);
    t << x;
    double back = 0.0;
    std::istringstream(t.str()) >> back;
    if (back == x) {
      s = t.str();
      break;
    }
  }
  return s;
}

}  // namespace

const char* RunRecord::csv_header() {
  return "command,n,p_or_mu,delta,seed,edges_G,edges_H,connected,is_tree,"
         "max_stretch,ecc_bound,probes_max,probes_mean,wall_ms";
}

void RunRecord::write_csv(std::ostream& os) const {
  os << command << ',' << n << ',' << fmt_double(p_or_mu) << ','
     << fmt_double(delta) << ',' << seed << ',' << edges_g << ',' << edges_h
     << ',' << (connected ? "true" : "false") << ','
     << (is_tree ? "true" : "false") << ',' << fmt_double(max_stretch) << ','
     << fmt_double(ecc_bound) << ',' << probes_max << ','
     << fmt_double(probes_mean) << ',' << wall_ms << '\n';
}

void RunRecord::write_json(std::ostream& os) const {
  os << "{\"command\":\"" << command << "\",\"n\":" << n
     << ",\"p_or_mu\":" << fmt_double(p_or_mu)
     << ",\"delta\":" << fmt_double(delta) << ",\"seed\":" << seed
     << ",\"edges_G\":" << edges_g << ",\"edges_H\":" << edges_h
     << ",\"connected\":" << (connected ? "true" : "false")
     << ",\"is_tree\":" << (is_tree ? "true" : "false")
     << ",\"max_stretch\":" << fmt_double(max_stretch)
     << ",\"ecc_bound\":" << fmt_double(ecc_bound)
     << ",\"probes_max\":" << probes_max
     << ",\"probes_mean\":" << fmt_double(probes_mean)
     << ",\"wall_ms\":" << wall_ms << "}\n";
}

}  // namespace lcaspan
