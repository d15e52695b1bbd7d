#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "artinff/finite_field.hpp"

namespace artinff::cli {

// Flat key=value config with an optional [experiment] section header.
// Unknown keys are rejected so typos surface as exit code 2.
struct ExperimentConfig {
  std::string field;        // "p=2" / "p=2,k=3"
  std::string variety = "P1";
  std::string g;
  uint32_t n_lo = 1, n_hi = 1;
  uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  std::string delta;        // charsum: "prime" or an explicit integer
  uint64_t m_max = 20;
  std::vector<uint64_t> nongeometric_primes;  // declared set for curve/P2 g
  bool dump_histograms = false;
  bool out_of_hypothesis = false;
  bool timing = false;
  std::string out;          // output path; empty = stdout
  std::string format = "csv";
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Pre-rendered cells; the CSV and JSON writers emit exactly these strings,
// so the two formats mirror each other losslessly.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
void write_plotdata(const Table& t, std::ostream& os);

std::string fmt_double(double v);

// Subcommand bodies; exposed so tests can drive them directly.
// Exit codes: 0 ok, 1 invariant failure, 2 config error, 3 cap exceeded.
int cmd_count(const ExperimentConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_rho(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_geometric(const ExperimentConfig& cfg, std::ostream& out,
                  std::ostream& err);
int cmd_charsum(const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_heuristic(const ExperimentConfig& cfg, std::ostream& out,
                  std::ostream& err);
int cmd_generate_n(const ExperimentConfig& cfg, std::ostream& out,
                   std::ostream& err);
int cmd_plotdata(const ExperimentConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_verify(const ExperimentConfig& cfg, const std::string& inject_fault,
               std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace artinff::cli
