#include "lpforge/json_io.hpp"

namespace lpforge {

namespace {

constexpr long long kInt64Max = 9223372036854775807LL;

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(-kInt64Max - 1));
  static const BigInt hi(std::to_string(kInt64Max));
  return v >= lo && v <= hi;
}

Json label_to_json(const Label& l) {
  switch (l.sign) {
    case Label::Sign::zero: return nullptr;
    case Label::Sign::plus: return Json::array({l.k, "+"});
    case Label::Sign::minus: return Json::array({l.k, "-"});
  }
  return nullptr;
}

Label label_from_json(const Json& j) {
  if (j.is_null()) return Label{0, Label::Sign::zero};
  if (!j.is_array() || j.size() != 2)
    throw ParameterError("malformed cell label");
  Label l;
  l.k = j[0].get<int>();
  const std::string sign = j[1].get<std::string>();
  if (sign == "+") l.sign = Label::Sign::plus;
  else if (sign == "-") l.sign = Label::Sign::minus;
  else throw ParameterError("malformed cell label sign: " + sign);
  return l;
}

template <class S>
Json witness_to_json_t(const WitnessDocumentT<S>& doc) {
  const auto& w = doc.witness;
  Json j;
  j["schema"] = 1;
  j["kind"] = "approximation-witness";
  j["mode"] = is_exact_scalar_v<S> ? "exact" : "float";
  j["approx_mode"] = approx_mode_name(w.mode);
  j["p"] = exponent_to_json(w.certificate.p);
  j["n"] = w.n;
  j["N"] = w.N;
  j["space"] = space_to_json(*w.certificate.space);
  Json inputs = Json::array();
  for (const auto& f : doc.inputs) inputs.push_back(function_values_to_json(f));
  j["inputs"] = std::move(inputs);
  Json cells = Json::array();
  for (const Cell& cell : w.certificate.cells) {
    Json labels = Json::array();
    for (const Label& l : cell.key) labels.push_back(label_to_json(l));
    cells.push_back(Json{{"labels", std::move(labels)}, {"atoms", cell.atoms}});
  }
  j["cells"] = std::move(cells);
  Json basis = Json::array();
  for (const auto& z : w.certificate.basis)
    basis.push_back(function_values_to_json(z));
  j["basis"] = std::move(basis);
  Json weights = Json::array();
  for (const S& wt : w.certificate.weights)
    weights.push_back(scalar_to_json(wt));
  j["weights"] = std::move(weights);
  Json coords = Json::array();
  for (const auto& row : w.coords) {
    Json r = Json::array();
    for (const S& v : row) r.push_back(scalar_to_json(v));
    coords.push_back(std::move(r));
  }
  j["coords"] = std::move(coords);
  j["error_bound_pow"] = scalar_to_json(w.error_bound_pow);
  j["dim_bound"] = bigint_to_json(w.dim_bound);
  j["seed"] = doc.seed;
  if (doc.verdict) j["verdict"] = verdict_to_json(*doc.verdict);
  if (doc.generated_at) j["generated_at"] = *doc.generated_at;
  return j;
}

template <class S>
S value_from_json(const Json& j);

template <>
Rat value_from_json<Rat>(const Json& j) {
  return exact_value_from_json(j);
}

template <>
double value_from_json<double>(const Json& j) {
  return float_value_from_json(j);
}

template <class S>
WitnessDocumentT<S> witness_from_json_t(const Json& j) {
  WitnessDocumentT<S> doc;
  auto& w = doc.witness;
  const SpacePtr space = space_from_json(j.at("space"));
  w.certificate.space = space;
  w.certificate.p = exponent_from_json(j.at("p"));
  if (is_exact_scalar_v<S> && !w.certificate.p.is_integer())
    throw ParameterError("exact-mode witness requires an integer exponent");
  w.n = j.at("n").get<int>();
  w.N = j.at("N").get<int>();
  const std::string mode = j.at("approx_mode").get<std::string>();
  if (mode == "plain") w.mode = ApproxMode::plain;
  else if (mode == "normalized") w.mode = ApproxMode::normalized;
  else if (mode == "unit") w.mode = ApproxMode::unit;
  else throw ParameterError("unknown approx_mode: " + mode);

  for (const Json& cj : j.at("cells")) {
    Cell cell;
    for (const Json& lj : cj.at("labels"))
      cell.key.push_back(label_from_json(lj));
    cell.atoms = cj.at("atoms").get<std::vector<std::size_t>>();
    for (std::size_t a : cell.atoms)
      if (a >= space->size())
        throw ParameterError("cell atom index out of range");
    w.certificate.cells.push_back(std::move(cell));
  }
  for (const Json& bj : j.at("basis")) {
    SimpleFunction<S> z{space, {}};
    for (const Json& vj : bj) z.values.push_back(value_from_json<S>(vj));
    z.validate();
    w.certificate.basis.push_back(std::move(z));
  }
  for (const Json& wj : j.at("weights"))
    w.certificate.weights.push_back(value_from_json<S>(wj));
  if (w.certificate.basis.size() != w.certificate.cells.size() ||
      w.certificate.weights.size() != w.certificate.cells.size())
    throw ParameterError("certificate arrays disagree in length");
  for (const Json& rj : j.at("coords")) {
    std::vector<S> row;
    for (const Json& vj : rj) row.push_back(value_from_json<S>(vj));
    if (row.size() != w.certificate.cells.size())
      throw ParameterError("coordinate row length differs from cell count");
    w.coords.push_back(std::move(row));
  }
  w.error_bound_pow = value_from_json<S>(j.at("error_bound_pow"));
  w.dim_bound = bigint_from_json(j.at("dim_bound"));
  for (const Json& fj : j.at("inputs")) {
    SimpleFunction<S> f{space, {}};
    for (const Json& vj : fj) f.values.push_back(value_from_json<S>(vj));
    f.validate();
    doc.inputs.push_back(std::move(f));
  }
  if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("verdict")) doc.verdict = verdict_from_json(j.at("verdict"));
  if (j.contains("generated_at"))
    doc.generated_at = j.at("generated_at").get<std::string>();
  return doc;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParameterError("expected an integer or a decimal string");
}

Json rat_to_json(const Rat& v) {
  return Json{{"num", bigint_to_json(BigInt(v.get_num()))},
              {"den", bigint_to_json(BigInt(v.get_den()))}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rat(j.get<std::int64_t>());
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return make_rat(bigint_from_json(j.at("num")),
                    bigint_from_json(j.at("den")));
  throw ParameterError("expected a rational as {num, den} or an integer");
}

Json exponent_to_json(const Exponent& p) {
  if (p.is_integer()) return static_cast<std::int64_t>(p.integer_value());
  return p.value();
}

Exponent exponent_from_json(const Json& j) {
  if (j.is_number_integer()) return Exponent::integer(j.get<long>());
  if (j.is_number_float()) return Exponent::real(j.get<double>());
  throw ParameterError("expected a numeric exponent");
}

Json space_to_json(const MeasureSpace& space) {
  Json weights = Json::array();
  for (const Rat& w : space.weights) weights.push_back(rat_to_json(w));
  return Json{{"atoms", space.atoms}, {"weights", std::move(weights)}};
}

SpacePtr space_from_json(const Json& j) {
  std::vector<std::string> atoms =
      j.at("atoms").get<std::vector<std::string>>();
  std::vector<Rat> weights;
  for (const Json& wj : j.at("weights")) weights.push_back(rat_from_json(wj));
  return make_space(std::move(atoms), std::move(weights));
}

Rat exact_value_from_json(const Json& j) {
  if (j.is_number_float())
    throw ParameterError(
        "floating literal in exact mode; use {num, den} rationals");
  return rat_from_json(j);
}

double float_value_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  return to_double(rat_from_json(j));
}

SimpleFunction<Rat> exact_function_from_json(const Json& values, SpacePtr sp) {
  SimpleFunction<Rat> f{std::move(sp), {}};
  for (const Json& vj : values) f.values.push_back(exact_value_from_json(vj));
  f.validate();
  return f;
}

SimpleFunction<double> float_function_from_json(const Json& values,
                                                SpacePtr sp) {
  SimpleFunction<double> f{std::move(sp), {}};
  for (const Json& vj : values) f.values.push_back(float_value_from_json(vj));
  f.validate();
  return f;
}

namespace {

const Json& function_list(const Json& j) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains("functions")) return j.at("functions");
  throw ParameterError("expected {\"functions\": [...]} or a bare array");
}

}  // namespace

std::vector<SimpleFunction<Rat>> exact_functions_from_json(const Json& j,
                                                           SpacePtr sp) {
  std::vector<SimpleFunction<Rat>> out;
  for (const Json& fj : function_list(j))
    out.push_back(exact_function_from_json(fj, sp));
  return out;
}

std::vector<SimpleFunction<double>> float_functions_from_json(const Json& j,
                                                              SpacePtr sp) {
  std::vector<SimpleFunction<double>> out;
  for (const Json& fj : function_list(j))
    out.push_back(float_function_from_json(fj, sp));
  return out;
}

Json verdict_to_json(const VerdictReport& report) {
  Json clauses = Json::array();
  for (const ClauseResult& c : report.clauses)
    clauses.push_back(
        Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"pass", report.pass()}, {"clauses", std::move(clauses)}};
  if (const ClauseResult* f = report.first_failure())
    j["first_failure"] = f->name;
  else
    j["first_failure"] = nullptr;
  return j;
}

VerdictReport verdict_from_json(const Json& j) {
  VerdictReport report;
  for (const Json& cj : j.at("clauses"))
    report.clauses.push_back({cj.at("name").get<std::string>(),
                              cj.at("pass").get<bool>(),
                              cj.at("detail").get<std::string>()});
  return report;
}

Json witness_document_to_json(const WitnessDocument& doc) {
  return std::visit([](const auto& d) { return witness_to_json_t(d); }, doc);
}

WitnessDocument witness_document_from_json(const Json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exact") return witness_from_json_t<Rat>(j);
  if (mode == "float") return witness_from_json_t<double>(j);
  throw ParameterError("unknown witness mode: " + mode);
}

RatMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  RatMatrix M;
  for (const Json& rj : rows) {
    std::vector<Rat> row;
    for (const Json& vj : rj) row.push_back(rat_from_json(vj));
    M.push_back(std::move(row));
  }
  return M;
}

}  // namespace lpforge
