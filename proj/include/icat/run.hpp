#pragma once

#include <string>
#include <vector>

#include "icat/io.hpp"

namespace icat::cli {

struct RunResult {
    Report report;
    io::Document output;  // constructed structures, in the input format
};

/// verify, cotensor, kleisli, cokleisli, opkleisli, adjoint-check, theta,
/// twist, sweedler, hopf-galois, oracle-compare.
const std::vector<std::string>& commands();

/// Runs one command on the document. `args` holds "target" and any
/// command-specific vectors. Unknown commands and targets throw
/// UnresolvedReference; errors raised while checking become failed checks
/// named after the error.
RunResult run_command(const io::Document& doc, const std::string& command, const io::json& args);

/// The task's "command" with the task object as its arguments.
RunResult run_task(const io::Document& doc, const std::string& task);

/// True when the document defines nothing beyond its field.
bool empty(const io::Document& d);

}  // namespace icat::cli
