#ifndef UCONF_LAWS_HPP
#define UCONF_LAWS_HPP

// Seeded property suites over a model: every algebraic law of the library
// checked exactly on random instances. Backs the `axioms` CLI command.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uconf/model_io.hpp"

namespace uconf {

struct LawOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;       // random instances per law
  std::size_t max_points = 3;    // configurations drawn with at most this many points
  std::uint32_t max_degree = 3;  // total ⊗-degree bound per random monomial
};

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

std::vector<LawResult> run_laws(const Model& model, const LawOptions& options);

}  // namespace uconf

#endif  // UCONF_LAWS_HPP
