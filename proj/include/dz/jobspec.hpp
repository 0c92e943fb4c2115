#ifndef DZ_JOBSPEC_HPP
#define DZ_JOBSPEC_HPP

#include <map>
#include <string>

namespace dz::cli {

/// One batch job: a command plus its typed parameters, validated against
/// the command's schema before dispatch.
struct JobSpec {
  std::string command;  // construct | verify | enumerate | catalog | hall | pade
  std::map<std::string, std::string> params;
  bool json = true;
  int jobs = 1;
};

struct Outcome {
  int status = 0;  // 0 ok, 1 mathematical failure, 2 malformed input
  std::string output;
};

/// Dispatches a job; never throws. Exit status 0 iff every verification the
/// job requested passed; parse/validation problems yield 2 with a
/// diagnostic; mathematical failures yield 1 with the report.
Outcome run(const JobSpec& spec);

/// Reads a pair from a file holding two lines of comma-separated exact
/// rationals (ascending degree) and runs check_dz.
Outcome verify_file(const std::string& path, const std::string& expected_passport,
                    bool json);

}  // namespace dz::cli

#endif
