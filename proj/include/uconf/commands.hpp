#ifndef UCONF_COMMANDS_HPP
#define UCONF_COMMANDS_HPP

// The batch commands behind the uconf tool. Each writes one JSON document to
// `out`, diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "uconf/laws.hpp"

namespace uconf {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct CommandOptions {
  std::string model;  // path, or empty for the bundled M3 model
  std::optional<std::size_t> max_points;  // defaults to |M|
  std::string lhs, rhs, field;
};

int cmd_dims(const CommandOptions& opt, std::size_t k, std::ostream& out, std::ostream& err);
int cmd_axioms(const CommandOptions& opt, const LawOptions& laws, std::ostream& out,
               std::ostream& err);
int cmd_bracket(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_convolve(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_eval(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_peierls_check(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace uconf

#endif  // UCONF_COMMANDS_HPP
