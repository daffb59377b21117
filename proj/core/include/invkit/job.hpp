#ifndef INVKIT_JOB_HPP
#define INVKIT_JOB_HPP

#include <optional>
#include <string>

#include "invkit/ideal.hpp"

namespace invkit {

/// Outcome of one batch job. Exit codes: 0 found/true, 2 none/false (a
/// sound negative), 3 input error, 4 hypothesis refused. Identical job
/// bytes yield byte-identical report bytes, independent of thread count.
struct JobResult {
  int exit_code;
  std::string status;  // found | none | refused | error
  std::string report_json;
  std::string summary;  // one line for humans
};

JobResult run_job_bytes(const std::string& bytes,
                        std::optional<GroebnerBudget> budget = {});

}  // namespace invkit

#endif
