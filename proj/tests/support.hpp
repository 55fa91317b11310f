#ifndef UCONF_TESTS_SUPPORT_HPP
#define UCONF_TESTS_SUPPORT_HPP

#include <string_view>

#include "uconf/expr_parser.hpp"
#include "uconf/model_io.hpp"

namespace uconf::test {

inline FibreElement el(std::string_view text, const BaseSpace& base) {
  return parse_element(text, base);
}

// p, q, r of rank 1 plus s of rank 2, unit weights.
inline BaseSpace pqrs() {
  BaseSpace b;
  b.add_point("p", 1);
  b.add_point("q", 1);
  b.add_point("r", 1);
  b.add_point("s", 2);
  return b;
}

}  // namespace uconf::test

#endif
