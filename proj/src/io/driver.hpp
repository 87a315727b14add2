#pragma once

#include <string>

namespace pmlat {

// Shared operation layer behind the C API and the CLI. Inputs and outputs
// are serialized documents; `status` follows the process exit convention:
// 0 success / all green, 1 verification failure (machine-readable report in
// `output`), 2 input error (`error` set), 3 budget exhausted.
struct DriverResult {
  int status = 0;
  std::string output;
  std::string error;
};

DriverResult drv_represent(const std::string& input_text, long budget,
                           unsigned shuffle_seed = 0);
DriverResult drv_verify(const std::string& measured_text,
                        const std::string& semilattice_text, bool p2_all_pairs);
DriverResult drv_amalgam(const std::string& diagram_text,
                         const std::string& top_label);
DriverResult drv_counterexample_cube();
DriverResult drv_counterexample_int_compose(int max_size);
DriverResult drv_oracle_simplebvd(const std::string& diagram_text,
                                  const std::string& top_label, int chain_bound);
DriverResult drv_oracle_enumerate(const std::string& poset_text,
                                  const std::string& semilattice_text,
                                  long list_limit);
DriverResult drv_dot(const std::string& doc_text);

}  // namespace pmlat
