#ifndef UCONF_MODEL_IO_HPP
#define UCONF_MODEL_IO_HPP

// JSON file formats. Rationals travel as strings ("2/3") so values stay exact.
//
// model:   {"points": [{"id": "p", "rank": 1, "weight": "1"}, ...],
//           "kernel": [{"x": "p", "i": 0, "y": "q", "j": 0, "value": "1"}, ...]}
//          with x strictly before y in label order.
// section: [{"config": ["p", "q"], "element": "e[p,0] # e[q,0]"}, ...]
// field:   {"p": ["1", "-1/2"], ...}

#include <cstddef>
#include <string>

#include <json.hpp>

#include "uconf/configspace.hpp"
#include "uconf/errors.hpp"
#include "uconf/field_model.hpp"
#include "uconf/poisson.hpp"
#include "uconf/sections.hpp"

namespace uconf {

/// Malformed or inconsistent input file.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Model {
  BaseSpace base;
  Kernel kernel;
};

Model model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const Model& m);

Section section_from_json(const nlohmann::json& j, const BaseSpace& base, std::size_t max_points);
nlohmann::json section_to_json(const Section& s);

Field field_from_json(const nlohmann::json& j, const BaseSpace& base);

/// Reads and parses a JSON file; throws InputError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

/// The three-point model shipped as models/M3.json: ranks 1, weights 1,
/// k(p,q) = 1, k(p,r) = 2, k(q,r) = 0.
Model m3_model();

}  // namespace uconf

#endif  // UCONF_MODEL_IO_HPP
