#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "invkit/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"invkit — exact invariant-hypersurface toolkit"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run a batch job file");
  std::string input, output;
  std::size_t budget_gb_size = 0, budget_terms = 0;
  run->add_option("--input", input, "job file (UTF-8 JSON)")->required();
  run->add_option("--output", output, "report file (UTF-8 JSON)")->required();
  run->add_option("--budget-gb-size", budget_gb_size,
                  "cap on Groebner basis size");
  run->add_option("--budget-terms", budget_terms,
                  "cap on per-polynomial term count");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << input << "\n";
    return 3;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  std::optional<invkit::GroebnerBudget> budget;
  if (budget_gb_size > 0 || budget_terms > 0) {
    invkit::GroebnerBudget b;
    if (budget_gb_size > 0) b.max_basis = budget_gb_size;
    if (budget_terms > 0) b.max_terms = budget_terms;
    budget = b;
  }

  invkit::JobResult result = invkit::run_job_bytes(buf.str(), budget);

  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return 3;
  }
  out << result.report_json;
  out.close();

  std::cout << result.summary << "\n";
  return result.exit_code;
}
