// lpforge: certified finite-dimensional l^p approximations on finite measure
// spaces, the uniform-convexity certificate pipeline, and the finite-type
// formula toolkit, behind one JSON-speaking command line.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <lpforge/convexity.hpp>
#include <lpforge/json_io.hpp>
#include <lpforge/logic/cauchy.hpp>
#include <lpforge/logic/classify.hpp>
#include <lpforge/logic/pairing.hpp>

using namespace lpforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailedClause = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  std::string out;
  int jobs = 1;
};

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  // LPFORGE_SEED takes precedence over --seed
  if (const char* env = std::getenv("LPFORGE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, const CommonOpts& opts) {
  const std::string text = j.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out);
    if (!out) throw ParameterError("cannot write " + opts.out);
    out << text;
  }
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = true) {
  cmd->add_option("--seed", opts.seed, "RNG seed (default 0)");
  cmd->add_flag("--no-timestamp", opts.no_timestamp,
                "omit the generated_at field for byte-identical reruns");
  if (with_out)
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
  cmd->add_option("--jobs", opts.jobs, "worker count for sampling searches")
      ->check(CLI::PositiveNumber);
}

Exponent parse_p(const std::string& text) { return Exponent::parse(text); }

// --- approximate / axiom-check -------------------------------------------

struct ApproximateArgs {
  std::string space_path, functions_path, mode = "plain", p_text = "2";
  int N = 1;
  int trials = 50;
  double tolerance = 1e-9;
  bool exact = false;
  CommonOpts common;
};

WitnessDocument run_build(const ApproximateArgs& args, std::uint64_t seed) {
  const Exponent p = parse_p(args.p_text);
  const Json sj = load_json(args.space_path);
  const Json fj = load_json(args.functions_path);
  const SpacePtr space = space_from_json(sj);

  auto finish = [&](auto witness, auto inputs) -> WitnessDocument {
    using S = std::remove_cvref_t<decltype(witness.error_bound_pow)>;
    WitnessDocumentT<S> doc;
    doc.witness = std::move(witness);
    doc.inputs = std::move(inputs);
    doc.seed = seed;
    VerifyOptions vopt;
    vopt.seed = seed;
    vopt.trials = args.trials;
    vopt.tolerance = args.tolerance;
    doc.verdict = verify_certificate(doc.witness, doc.inputs, vopt);
    return doc;
  };

  if (args.exact) {
    auto xs = exact_functions_from_json(fj, space);
    if (args.mode == "plain")
      return finish(build_approximation(xs, args.N, p), xs);
    WitnessVariant wv = args.mode == "normalized"
                            ? build_approximation_normalized(xs, args.N, p)
                            : build_approximation_unit(xs, args.N, p);
    if (auto* rw = std::get_if<ApproximationWitness<Rat>>(&wv))
      return finish(std::move(*rw), xs);
    // the rescale was irrational and the construction fell back to floats
    return finish(std::get<ApproximationWitness<double>>(std::move(wv)),
                  to_float(xs));
  }

  auto xs = float_functions_from_json(fj, space);
  if (args.mode == "plain")
    return finish(build_approximation(xs, args.N, p), xs);
  WitnessVariant wv = args.mode == "normalized"
                          ? build_approximation_normalized(xs, args.N, p)
                          : build_approximation_unit(xs, args.N, p);
  return finish(std::get<ApproximationWitness<double>>(std::move(wv)), xs);
}

int cmd_approximate(const ApproximateArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  WitnessDocument doc = run_build(args, seed);
  bool pass = false;
  std::visit(
      [&](auto& d) {
        if (!args.common.no_timestamp) d.generated_at = now_iso8601();
        pass = d.verdict && d.verdict->pass();
      },
      doc);
  emit(witness_document_to_json(doc), args.common);
  return pass ? kExitPass : kExitFailedClause;
}

struct CertifyArgs {
  std::string witness_path;
  int trials = 50;
  double tolerance = 1e-9;
  bool exact = false;
  bool exhaustive = false;
  CommonOpts common;
};

int cmd_certify(const CertifyArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  const WitnessDocument doc = witness_document_from_json(load_json(args.witness_path));
  if (args.exact && !std::holds_alternative<WitnessDocumentT<Rat>>(doc))
    throw ParameterError("--exact requires an exact-mode witness file");
  VerifyOptions vopt;
  vopt.seed = seed;
  vopt.trials = args.trials;
  vopt.tolerance = args.tolerance;
  vopt.exhaustive = args.exhaustive;
  VerdictReport report = std::visit(
      [&](const auto& d) { return verify_certificate(d.witness, d.inputs, vopt); },
      doc);
  Json j;
  j["schema"] = 1;
  j["kind"] = "certification";
  j["witness"] = args.witness_path;
  j["trials"] = args.trials;
  j["exhaustive"] = args.exhaustive;
  j["seed"] = seed;
  j["verdict"] = verdict_to_json(report);
  emit(j, args.common);
  return report.pass() ? kExitPass : kExitFailedClause;
}

struct AxiomArgs {
  std::string space_path, functions_path, p_text = "2";
  int N = 1;
  int trials = 50;
  double tolerance = 1e-9;
  CommonOpts common;
};

int cmd_axiom_check(const AxiomArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  const Exponent p = parse_p(args.p_text);
  const SpacePtr space = space_from_json(load_json(args.space_path));
  auto xs = float_functions_from_json(load_json(args.functions_path), space);

  VerifyOptions vopt;
  vopt.seed = seed;
  vopt.trials = args.trials;
  vopt.tolerance = args.tolerance;
  AxiomInstanceResult res = verify_axiom_instance(xs, args.N, p, vopt);

  WitnessDocumentT<double> doc;
  doc.witness = res.witness;
  doc.inputs = res.normalized_inputs;
  doc.seed = seed;
  doc.verdict = res.verdict;
  if (!args.common.no_timestamp) doc.generated_at = now_iso8601();

  Json j = witness_document_to_json(WitnessDocument{std::move(doc)});
  Json tilde = Json::array();
  for (const auto& f : res.normalized_inputs)
    tilde.push_back(function_values_to_json(f));
  j["tilde_inputs"] = std::move(tilde);
  emit(j, args.common);
  return res.verdict.pass() ? kExitPass : kExitFailedClause;
}

// --- modulus / convexity ---------------------------------------------------

struct ModulusArgs {
  std::string p_text = "2";
  double eps = 1.0;
  bool oracle = false;
  int dim = 2;
  std::size_t samples = 100000;
  std::string sweep_csv;
  CommonOpts common;
};

int cmd_modulus(const ModulusArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  const Exponent p = parse_p(args.p_text);

  auto one = [&](double eps) {
    Json j;
    j["eps"] = eps;
    j["eta"] = eta(eps, p);
    if (args.oracle) {
      OracleOptions opt;
      opt.samples = args.samples;
      opt.seed = seed;
      opt.jobs = args.common.jobs;
      const ModulusOracleResult r = brute_force_modulus(p, args.dim, eps, opt);
      j["oracle"] = Json{{"value", r.minimum},
                         {"extremal", r.extremal_value},
                         {"accepted", r.accepted},
                         {"dim", args.dim},
                         {"samples", args.samples},
                         {"gap", r.minimum - eta(eps, p)}};
    }
    return j;
  };

  if (!args.sweep_csv.empty()) {
    std::ofstream csv(args.sweep_csv);
    if (!csv) throw ParameterError("cannot write " + args.sweep_csv);
    csv << (args.oracle ? "eps,eta,oracle,gap\n" : "eps,eta\n");
    csv.precision(17);
    for (int i = 1; i <= 19; ++i) {
      const double eps = i / 10.0;
      const Json j = one(eps);
      csv << (i / 10) << '.' << (i % 10) << ',' << j["eta"].get<double>();
      if (args.oracle)
        csv << ',' << j["oracle"]["value"].get<double>() << ','
            << j["oracle"]["gap"].get<double>();
      csv << '\n';
    }
  }

  Json j = one(args.eps);
  j["schema"] = 1;
  j["kind"] = "modulus";
  j["p"] = exponent_to_json(p);
  j["seed"] = seed;
  if (!args.sweep_csv.empty()) j["sweep_csv"] = args.sweep_csv;
  emit(j, args.common);
  return kExitPass;
}

struct ConvexityArgs {
  std::string space_path, x1_path, x2_path, p_text = "2";
  double eps = 1.0;
  double c = 0.5;
  double tolerance = 1e-12;
  CommonOpts common;
};

int cmd_convexity_certify(const ConvexityArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  const Exponent p = parse_p(args.p_text);
  const SpacePtr space = space_from_json(load_json(args.space_path));
  auto load_one = [&](const std::string& path) {
    const Json fj = load_json(path);
    auto fns = float_functions_from_json(fj, space);
    if (fns.size() != 1)
      throw ParameterError(path + " must hold exactly one function");
    return fns.front();
  };
  const auto x1 = load_one(args.x1_path);
  const auto x2 = load_one(args.x2_path);

  ConvexityOptions opt;
  opt.seed = seed;
  opt.tolerance = args.tolerance;
  const ConvexityCertificate cert =
      certify_uniform_convexity(x1, x2, args.eps, args.c, p, opt);

  Json chain = Json::array();
  for (const ChainStep& s : cert.chain)
    chain.push_back(Json{
        {"name", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"pass", s.pass}});

  WitnessDocumentT<double> wdoc;
  wdoc.witness = cert.instance.witness;
  wdoc.inputs = cert.instance.normalized_inputs;
  wdoc.seed = seed;
  wdoc.verdict = cert.instance.verdict;

  Json j;
  j["schema"] = 1;
  j["kind"] = "convexity-certificate";
  j["p"] = exponent_to_json(p);
  j["eps"] = cert.eps;
  j["c"] = cert.c;
  j["delta"] = cert.delta;
  j["N"] = cert.N;
  j["pass"] = cert.pass;
  j["chain"] = std::move(chain);
  j["witness"] = witness_document_to_json(WitnessDocument{std::move(wdoc)});
  j["seed"] = seed;
  if (!args.common.no_timestamp) j["generated_at"] = now_iso8601();
  emit(j, args.common);
  return cert.pass ? kExitPass : kExitFailedClause;
}

struct BmArgs {
  std::string matrix_path, p_text = "2";
  int restarts = 16;
  CommonOpts common;
};

int cmd_bm_bound(const BmArgs& args) {
  const std::uint64_t seed = effective_seed(args.common.seed);
  const Exponent p = parse_p(args.p_text);
  const RatMatrix L = matrix_from_json(load_json(args.matrix_path));
  BmOptions opt;
  opt.seed = seed;
  opt.restarts = args.restarts;
  const BmBound r = bm_distance_bound(L, p, opt);
  auto est = [](const NormEstimate& e) {
    return Json{{"lower", e.lower}, {"upper", e.upper}, {"exact", e.exact}};
  };
  Json j;
  j["schema"] = 1;
  j["kind"] = "bm-bound";
  j["p"] = exponent_to_json(p);
  j["bound"] = r.bound;
  j["lower"] = r.lower;
  j["forward"] = est(r.forward);
  j["inverse"] = est(r.inverse);
  j["seed"] = seed;
  emit(j, args.common);
  return kExitPass;
}

// --- logic-kit -------------------------------------------------------------

int cmd_classify(const std::string& formula, const CommonOpts& common) {
  const logic::FormulaPtr f = logic::parse_formula(formula);
  const logic::FormulaClass cls = logic::classify(f);
  Json j;
  j["schema"] = 1;
  j["kind"] = "classification";
  j["input"] = formula;
  j["printed"] = logic::print_formula(f);
  j["class"] = logic::formula_class_name(cls);
  emit(j, common);
  return kExitPass;
}

int cmd_skolemize(const std::string& formula, const CommonOpts& common) {
  const logic::FormulaPtr f = logic::parse_formula(formula);
  const auto delta = logic::DeltaSentence::from_formula(f);
  const logic::FormulaPtr snf = logic::skolem_normal_form(delta);
  Json j;
  j["schema"] = 1;
  j["kind"] = "skolem-normal-form";
  j["input"] = formula;
  j["printed"] = logic::print_formula(f);
  j["skolem"] = logic::print_formula(snf);
  j["class"] = logic::formula_class_name(logic::classify(snf));
  emit(j, common);
  return kExitPass;
}

int cmd_type(const std::string& text, const CommonOpts& common) {
  const logic::FiniteType t = logic::parse_type(text);
  Json j;
  j["schema"] = 1;
  j["kind"] = "type-check";
  j["input"] = text;
  j["printed"] = logic::print_type(t);
  j["small"] = logic::is_small(t);
  j["admissible"] = logic::is_admissible(t);
  j["hat"] = logic::print_type(logic::hat_type(t));
  emit(j, common);
  return kExitPass;
}

int cmd_cauchyfy(const std::string& points_path, std::size_t horizon,
                 const CommonOpts& common) {
  const Json pj = load_json(points_path);
  const Json& arr =
      pj.is_object() && pj.contains("points") ? pj.at("points") : pj;
  std::vector<double> xs;
  for (const Json& v : arr) xs.push_back(v.get<double>());
  auto abs_metric = [](double a, double b) { return std::fabs(a - b); };
  const auto r = logic::cauchy_hat(xs, abs_metric, horizon);

  bool rate_ok = true;
  for (std::size_t n = 0; n <= horizon && rate_ok; ++n)
    for (std::size_t m = n; m <= horizon; ++m)
      if (std::fabs(r.points[n] - r.points[m]) >
          logic::cauchy_rate_bound(n, m)) {
        rate_ok = false;
        break;
      }

  Json j;
  j["schema"] = 1;
  j["kind"] = "cauchy-hat";
  j["horizon"] = horizon;
  j["points"] = r.points;
  j["source"] = r.source;
  j["freeze"] = r.freeze ? Json(*r.freeze) : Json(nullptr);
  j["rate_ok"] = rate_ok;
  emit(j, common);
  return rate_ok ? kExitPass : kExitFailedClause;
}

int cmd_majorant(unsigned long b, unsigned long n, const CommonOpts& common) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "majorant";
  j["b"] = b;
  j["n"] = n;
  j["value"] = bigint_to_json(logic::majorant_value(b, n));
  emit(j, common);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified l^p approximation and convexity toolkit"};
  app.require_subcommand(1);

  ApproximateArgs approx;
  auto* c_approx = app.add_subcommand(
      "approximate", "build an approximation witness for given functions");
  c_approx->add_option("--space", approx.space_path)->required();
  c_approx->add_option("--functions", approx.functions_path)->required();
  c_approx->add_option("--N", approx.N, "accuracy parameter (error <= 1/N)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_approx->add_option("--mode", approx.mode)
      ->check(CLI::IsMember({"plain", "normalized", "unit"}));
  c_approx->add_option("--p", approx.p_text, "norm exponent (default 2)");
  c_approx->add_flag("--exact", approx.exact,
                     "exact rational arithmetic (integer p)");
  c_approx->add_option("--trials", approx.trials,
                       "isometry trials for the embedded verdict");
  c_approx->add_option("--tolerance", approx.tolerance,
                       "relative comparison slack on the floating path")
      ->check(CLI::PositiveNumber);
  add_common(c_approx, approx.common);

  CertifyArgs certify;
  auto* c_certify =
      app.add_subcommand("certify", "re-verify a witness file independently");
  c_certify->add_option("--witness", certify.witness_path)->required();
  c_certify->add_option("--trials", certify.trials);
  c_certify->add_option("--tolerance", certify.tolerance)
      ->check(CLI::PositiveNumber);
  c_certify->add_flag("--exact", certify.exact,
                      "require the witness to be exact-mode");
  c_certify->add_flag("--exhaustive", certify.exhaustive,
                      "check the isometry on the full singleton/pair family "
                      "instead of random trials");
  add_common(c_certify, certify.common);

  AxiomArgs axiom;
  auto* c_axiom = app.add_subcommand(
      "axiom-check", "tilde-normalize inputs and certify the axiom clauses");
  c_axiom->add_option("--space", axiom.space_path)->required();
  c_axiom->add_option("--functions", axiom.functions_path)->required();
  c_axiom->add_option("--N", axiom.N)->required()->check(CLI::PositiveNumber);
  c_axiom->add_option("--p", axiom.p_text);
  c_axiom->add_option("--trials", axiom.trials);
  c_axiom->add_option("--tolerance", axiom.tolerance)
      ->check(CLI::PositiveNumber);
  add_common(c_axiom, axiom.common);

  ModulusArgs modulus;
  auto* c_modulus = app.add_subcommand(
      "modulus", "evaluate the convexity modulus, optionally with the oracle");
  c_modulus->add_option("--p", modulus.p_text)->required();
  c_modulus->add_option("--eps", modulus.eps)->required();
  c_modulus->add_flag("--oracle", modulus.oracle,
                      "run the brute-force unit-ball search");
  c_modulus->add_option("--dim", modulus.dim)->check(CLI::Range(2, 3));
  c_modulus->add_option("--samples", modulus.samples);
  c_modulus->add_option("--sweep", modulus.sweep_csv,
                        "write an eps sweep to this CSV file");
  add_common(c_modulus, modulus.common);

  ConvexityArgs convexity;
  auto* c_conv = app.add_subcommand(
      "convexity-certify",
      "evaluate the full uniform-convexity inequality chain");
  c_conv->add_option("--space", convexity.space_path)->required();
  c_conv->add_option("--x1", convexity.x1_path)->required();
  c_conv->add_option("--x2", convexity.x2_path)->required();
  c_conv->add_option("--eps", convexity.eps)->required();
  c_conv->add_option("--c", convexity.c)->required();
  c_conv->add_option("--p", convexity.p_text);
  c_conv->add_option("--tolerance", convexity.tolerance,
                     "comparison slack in the inequality chain")
      ->check(CLI::PositiveNumber);
  add_common(c_conv, convexity.common);

  BmArgs bm;
  auto* c_bm = app.add_subcommand(
      "bm-bound", "operator-norm bound on the Banach-Mazur distance");
  c_bm->add_option("--matrix", bm.matrix_path)->required();
  c_bm->add_option("--p", bm.p_text)->required();
  c_bm->add_option("--restarts", bm.restarts);
  add_common(c_bm, bm.common);

  std::string formula_text, type_text, points_path;
  std::size_t horizon = 64;
  unsigned long maj_b = 1, maj_n = 0;
  CommonOpts logic_common;

  auto* c_classify =
      app.add_subcommand("classify", "classify a sentence of the fragment");
  c_classify->add_option("--formula", formula_text)->required();

  auto* c_skolem = app.add_subcommand(
      "skolemize", "Skolem normal form of a delta-shaped sentence");
  c_skolem->add_option("--formula", formula_text)->required();

  auto* c_type = app.add_subcommand("type", "parse and analyze a finite type");
  c_type->add_option("--check", type_text)->required();

  auto* c_cauchy = app.add_subcommand(
      "cauchyfy", "apply the Cauchy-rate guard transformation to points");
  c_cauchy->add_option("--points", points_path)->required();
  c_cauchy->add_option("--horizon", horizon)->required();

  auto* c_majorant =
      app.add_subcommand("majorant", "evaluate the exponent majorant M(b)(n)");
  c_majorant->add_option("--b", maj_b)->required()->check(CLI::PositiveNumber);
  c_majorant->add_option("--n", maj_n)->required();

  for (CLI::App* cmd : {c_classify, c_skolem, c_type, c_cauchy, c_majorant})
    add_common(cmd, logic_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_approx->parsed()) return cmd_approximate(approx);
    if (c_certify->parsed()) return cmd_certify(certify);
    if (c_axiom->parsed()) return cmd_axiom_check(axiom);
    if (c_modulus->parsed()) return cmd_modulus(modulus);
    if (c_conv->parsed()) return cmd_convexity_certify(convexity);
    if (c_bm->parsed()) return cmd_bm_bound(bm);
    if (c_classify->parsed()) return cmd_classify(formula_text, logic_common);
    if (c_skolem->parsed()) return cmd_skolemize(formula_text, logic_common);
    if (c_type->parsed()) return cmd_type(type_text, logic_common);
    if (c_cauchy->parsed())
      return cmd_cauchyfy(points_path, horizon, logic_common);
    if (c_majorant->parsed()) return cmd_majorant(maj_b, maj_n, logic_common);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
