#include "uconf/commands.hpp"

#include <functional>
#include <ostream>

#include "uconf/expr_parser.hpp"
#include "uconf/field_model.hpp"
#include "uconf/model_io.hpp"
#include "uconf/tensor_lab.hpp"

namespace uconf {

namespace {

using ordered = nlohmann::ordered_json;

Model load_model(const CommandOptions& opt) {
  if (opt.model.empty()) return m3_model();
  return model_from_json(read_json_file(opt.model));
}

std::size_t bound(const CommandOptions& opt, const Model& m) {
  return opt.max_points.value_or(m.base.size());
}

Section load_section(const std::string& path, const char* flag, const Model& m, std::size_t max) {
  if (path.empty()) throw InputError(std::string("missing ") + flag);
  return section_from_json(read_json_file(path), m.base, max);
}

ordered config_json(const Configuration& x) {
  ordered out = ordered::array();
  for (const auto& p : x) out.push_back(p.label);
  return out;
}

ordered section_json(const Section& s) {
  ordered out = ordered::array();
  for (const auto& [x, v] : s.support())
    out.push_back({{"config", config_json(x)}, {"element", render(v)}});
  return out;
}

ordered truncation_json(const Truncation& t) {
  ordered out = ordered::array();
  for (const auto& x : t.dropped) out.push_back(config_json(x));
  return out;
}

// Shared error boundary: input problems map to exit 2, anything else the
// library throws is reported the same way since it stems from the inputs.
int guarded(std::ostream& out, std::ostream& err, const std::function<int(ordered&)>& body) {
  ordered doc;
  int code;
  try {
    code = body(doc);
  } catch (const std::exception& e) {
    err << "uconf: " << e.what() << '\n';
    return kInputError;
  }
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace

int cmd_dims(const CommandOptions& opt, std::size_t k, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    bool ok = split_permutation_sum(k) == (k + 1) * factorial(k);
    std::optional<std::uint64_t> t, tt;
    bool uniform = true;
    ordered rows = ordered::array();
    for (const auto& x : m.base.configurations(k)) {
      const auto dt = dim_T_fibre(m.base, x);
      const auto dtt = dim_TboxT_fibre(m.base, x);
      const auto et = enumerate_T_basis(m.base, x).size();
      const auto ett = enumerate_TboxT_basis(m.base, x);
      const bool row_ok = et == dt && ett.pairs == dtt && ett.min_copies == k + 1 &&
                          ett.max_copies == k + 1;
      ok = ok && row_ok;
      if (t && (*t != dt || *tt != dtt)) uniform = false;
      t = dt;
      tt = dtt;
      rows.push_back({{"config", config_json(x)},
                      {"T", dt},
                      {"TboxT", dtt},
                      {"T_enumerated", et},
                      {"TboxT_enumerated", ett.pairs},
                      {"copies_of_T", ett.min_copies == ett.max_copies ? ordered(ett.min_copies)
                                                                        : ordered(nullptr)},
                      {"ok", row_ok}});
    }
    doc["k"] = k;
    if (t && uniform) {
      doc["T"] = *t;
      doc["TboxT"] = *tt;
    }
    doc["split_permutation_sum"] = split_permutation_sum(k);
    doc["configurations"] = rows;
    doc["ok"] = ok;
    if (!ok) err << "uconf: dimension mismatch\n";
    return ok ? kOk : kVerificationFailed;
  });
}

int cmd_axioms(const CommandOptions& opt, const LawOptions& laws, std::ostream& out,
               std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    LawOptions o = laws;
    if (opt.max_points) o.max_points = *opt.max_points;
    else o.max_points = m.base.size();
    const auto results = run_laws(m, o);
    ordered rows = ordered::array();
    bool ok = true;
    for (const auto& r : results) {
      ordered row = {{"law", r.name}, {"cases", r.cases}, {"failures", r.failures},
                     {"passed", r.passed()}};
      if (!r.passed()) {
        row["first_failure"] = r.first_failure;
        err << "uconf: " << r.name << " failed (" << r.first_failure << ")\n";
      }
      ok = ok && r.passed();
      rows.push_back(std::move(row));
    }
    doc["seed"] = o.seed;
    doc["cases"] = o.cases;
    doc["max_points"] = o.max_points;
    doc["max_degree"] = o.max_degree;
    doc["laws"] = rows;
    doc["all_passed"] = ok;
    return ok ? kOk : kVerificationFailed;
  });
}

int cmd_bracket(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    const auto max = bound(opt, m);
    const auto s = load_section(opt.lhs, "--lhs", m, max);
    const auto t = load_section(opt.rhs, "--rhs", m, max);
    Truncation dropped;
    doc["bracket"] = section_json(section_bracket(s, t, m.kernel, &dropped));
    doc["truncated"] = truncation_json(dropped);
    return kOk;
  });
}

int cmd_convolve(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    const auto max = bound(opt, m);
    const auto s = load_section(opt.lhs, "--lhs", m, max);
    const auto t = load_section(opt.rhs, "--rhs", m, max);
    Truncation dropped;
    doc["product"] = section_json(convolve(s, t, &dropped));
    doc["truncated"] = truncation_json(dropped);
    return kOk;
  });
}

int cmd_eval(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    const auto s = load_section(opt.lhs, "--lhs", m, bound(opt, m));
    if (opt.field.empty()) throw InputError("missing --field");
    const Field phi = field_from_json(read_json_file(opt.field), m.base);
    const auto f = to_functional(s, m.base);
    doc["functional"] = render(f);
    doc["value"] = to_string(evaluate(f, phi));
    return kOk;
  });
}

int cmd_peierls_check(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](ordered& doc) {
    const Model m = load_model(opt);
    const auto max = bound(opt, m);
    const auto s = load_section(opt.lhs, "--lhs", m, max);
    const auto t = load_section(opt.rhs, "--rhs", m, max);
    std::optional<Field> phi;
    if (!opt.field.empty()) phi = field_from_json(read_json_file(opt.field), m.base);
    const auto check = peierls_check(s, t, m.kernel, m.base);
    doc["symbolic"] = render(check.symbolic);
    doc["oracle"] = render(check.oracle);
    if (phi) {
      doc["symbolic_value"] = to_string(evaluate(check.symbolic, *phi));
      doc["oracle_value"] = to_string(evaluate(check.oracle, *phi));
    }
    doc["equal"] = check.equal;
    if (!check.equal) err << "uconf: symbolic bracket differs from the Peierls bracket\n";
    return check.equal ? kOk : kVerificationFailed;
  });
}

}  // namespace uconf
