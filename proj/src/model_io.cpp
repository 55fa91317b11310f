#include "uconf/model_io.hpp"

#include <cctype>
#include <fstream>
#include <set>

#include "uconf/expr_parser.hpp"

namespace uconf {

using nlohmann::json;

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Scalar rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::uint32_t index_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw InputError(where + ": '" + key + "' must be a non-negative integer");
  return j.at(key).get<std::uint32_t>();
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw InputError(where + ": '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

Model model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw InputError("model: expected an object with a 'points' array");
  Model m;
  std::size_t n = 0;
  for (const auto& p : j.at("points")) {
    const std::string where = "model point " + std::to_string(n++);
    if (!p.is_object()) throw InputError(where + ": expected an object");
    const auto id = string_field(p, "id", where);
    if (!is_identifier(id)) throw InputError(where + ": id '" + id + "' is not an identifier");
    const auto rank = index_field(p, "rank", where);
    const Scalar weight = p.contains("weight") ? rational(p.at("weight"), where) : Scalar(1);
    try {
      m.base.add_point(id, rank, weight);
    } catch (const InvalidArgument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (!j.contains("kernel")) return m;
  if (!j.at("kernel").is_array()) throw InputError("model: 'kernel' must be an array");
  std::set<std::pair<Generator, Generator>> seen;
  n = 0;
  for (const auto& e : j.at("kernel")) {
    const std::string where = "kernel entry " + std::to_string(n++);
    if (!e.is_object()) throw InputError(where + ": expected an object");
    const Generator u{string_field(e, "x", where), index_field(e, "i", where)};
    const Generator v{string_field(e, "y", where), index_field(e, "j", where)};
    for (const auto& g : {u, v}) {
      if (!m.base.contains(g.point)) throw InputError(where + ": unknown point '" + g.point.label + "'");
      if (g.index >= m.base.rank(g.point))
        throw InputError(where + ": index " + std::to_string(g.index) + " out of range at '" +
                         g.point.label + "'");
    }
    if (u.point == v.point)
      throw InputError(where + ": entry pairs point '" + u.point.label + "' with itself");
    if (!(u.point < v.point))
      throw InputError(where + ": x must come before y in label order");
    if (!seen.insert({u, v}).second) throw InputError(where + ": duplicate kernel key");
    if (!e.contains("value")) throw InputError(where + ": missing 'value'");
    m.kernel.set(u, v, rational(e.at("value"), where));
  }
  return m;
}

json model_to_json(const Model& m) {
  json points = json::array();
  for (const auto& p : m.base.points())
    points.push_back({{"id", p.label}, {"rank", m.base.rank(p)}, {"weight", to_string(m.base.weight(p))}});
  json kernel = json::array();
  for (const auto& [key, value] : m.kernel.entries())
    kernel.push_back({{"x", key.first.point.label},
                      {"i", key.first.index},
                      {"y", key.second.point.label},
                      {"j", key.second.index},
                      {"value", to_string(value)}});
  return {{"points", points}, {"kernel", kernel}};
}

Section section_from_json(const json& j, const BaseSpace& base, std::size_t max_points) {
  if (!j.is_array()) throw InputError("section: expected an array of {config, element}");
  Section s(max_points);
  std::size_t n = 0;
  for (const auto& entry : j) {
    const std::string where = "section entry " + std::to_string(n++);
    if (!entry.is_object() || !entry.contains("config") || !entry.at("config").is_array())
      throw InputError(where + ": expected {\"config\": [...], \"element\": \"...\"}");
    std::vector<PointId> pts;
    for (const auto& p : entry.at("config")) {
      if (!p.is_string()) throw InputError(where + ": configuration members must be strings");
      pts.emplace_back(p.get<std::string>());
    }
    Configuration x;
    try {
      x = Configuration(std::move(pts));
      base.check(x);
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
    const auto text = string_field(entry, "element", where);
    FibreElement value;
    try {
      value = parse_element(text, base);
    } catch (const ExprError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (value.config() != x)
      throw InputError(where + ": element lives over " + value.config().to_string() +
                       ", not over " + x.to_string());
    try {
      s.add(value);
    } catch (const InvalidArgument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return s;
}

json section_to_json(const Section& s) {
  json out = json::array();
  for (const auto& [x, v] : s.support()) {
    json cfg = json::array();
    for (const auto& p : x) cfg.push_back(p.label);
    out.push_back({{"config", cfg}, {"element", render(v)}});
  }
  return out;
}

Field field_from_json(const json& j, const BaseSpace& base) {
  if (!j.is_object()) throw InputError("field: expected an object mapping point ids to arrays");
  Field f;
  for (const auto& [id, values] : j.items()) {
    if (!values.is_array()) throw InputError("field at '" + id + "': expected an array");
    std::vector<Scalar> v;
    for (const auto& x : values) v.push_back(rational(x, "field at '" + id + "'"));
    f.set(id, std::move(v));
  }
  try {
    f.validate(base);
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

Model m3_model() {
  Model m;
  m.base.add_point("p", 1);
  m.base.add_point("q", 1);
  m.base.add_point("r", 1);
  m.kernel.set({"p", 0}, {"q", 0}, 1);
  m.kernel.set({"p", 0}, {"r", 0}, 2);
  m.kernel.set({"q", 0}, {"r", 0}, 0);
  return m;
}

}  // namespace uconf
