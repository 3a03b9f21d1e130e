#pragma once

#include "job.hpp"
#include "report.hpp"

namespace locoh::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInputError = 2, kInternalError = 3 };

/// Dispatches one job. The report depends only on the job, never on scheduling.
Report run(const JobSpec& job);

/// Built-in verification corpus: every case is a job plus closed-form expectations.
Report run_corpus(unsigned threads = 0);

/// Runs the job and maps outcomes and exceptions onto exit codes; the emitted
/// report (or error message) goes to `out` / `err`.
int run_and_emit(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Error category of the exception currently being handled.
int classify_current_exception(std::ostream& err);

}  // namespace locoh::cli
