#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lcaspan {

/// One experiment row. Field order is frozen: it is the CSV interchange
/// schema for downstream tooling.
struct RunRecord {
  std::string command;
  std::uint64_t n = 0;
  double p_or_mu = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t edges_g = 0;
  std::uint64_t edges_h = 0;
  bool connected = false;
  bool is_tree = false;
  double max_stretch = 0.0;
  double ecc_bound = 0.0;  // measured max finite eccentricity
  std::uint64_t probes_max = 0;
  double probes_mean = 0.0;
  std::uint64_t wall_ms = 0;

  static const char* csv_header();
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

}  // namespace lcaspan
