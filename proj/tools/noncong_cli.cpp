// noncong: command-line front end. Exit 0 when every check passes, 1 when a
// verified claim fails, 2 on usage or precondition errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "noncong/congruence.hpp"
#include "noncong/curves.hpp"
#include "noncong/grouprep.hpp"
#include "noncong/hyperforms.hpp"
#include "noncong/n5_example.hpp"
#include "noncong/serialize.hpp"

using namespace noncong;

namespace {

enum class Format { json, csv, text };

struct RunConfig {
  int n = 5;
  int r = 1;
  int eps = 1;
  long p = 0;
  int index = 1;
  std::size_t prec = 0;  // q_N terms
  std::size_t M = 10;
  long min_qn = 0;
  unsigned k = 1;
  std::string kind = "gauss";
  std::uint64_t order = 0, order2 = 0;
  bool basis = false;
  bool no_predict = false;
  Format format = Format::json;
  std::string out;
};

// Thrown to carry a usage diagnostic to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t prec_limit() {
  const char* env = std::getenv("NONCONG_PREC_LIMIT");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("NONCONG_PREC_LIMIT must be a positive integer");
  return v;
}

void guard_prec(std::size_t prec) {
  const std::size_t limit = prec_limit();
  if (limit != 0 && prec > limit)
    throw UsageError("precision " + std::to_string(prec) + " exceeds NONCONG_PREC_LIMIT=" + std::to_string(limit));
}

// Flattened "path = value" lines.
void write_text(std::ostream& os, const Json& j, const std::string& path = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) write_text(os, it.value(), path.empty() ? it.key() : path + "." + it.key());
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) write_text(os, j[i], path + "[" + std::to_string(i) + "]");
  } else {
    os << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string csv_checks(const CongruenceReport& rep) {
  std::ostringstream os;
  os << "m,kind,modulus,expected_residue,observed_residue,lhs_valuation,required_valuation,pass,vacuous\n";
  for (const auto& c : rep.checks)
    os << c.m << ',' << (c.kind ? std::string(1, *c.kind) : "") << ',' << c.modulus << ',' << c.expected_residue << ','
       << c.observed_residue << ',' << (c.lhs_valuation ? std::to_string(*c.lhs_valuation) : "inf") << ','
       << c.required_valuation << ',' << c.pass << ',' << c.vacuous << '\n';
  return os.str();
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  // csv may be empty when the subcommand has no tabular form
  void emit(const Json& j, const std::string& csv = "") {
    std::ostringstream os;
    switch (cfg_.format) {
      case Format::json: os << j.dump(2) << '\n'; break;
      case Format::text: write_text(os, j); break;
      case Format::csv:
        if (csv.empty()) throw UsageError("csv output is not available for this subcommand");
        os << csv;
        break;
    }
    if (cfg_.out.empty()) {
      std::cout << os.str();
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + cfg_.out);
    f << os.str();
  }

 private:
  const RunConfig& cfg_;
};

int rep_info(const RunConfig& cfg) {
  const auto chi = CharacterData::make(cfg.n, cfg.r, cfg.eps);
  const auto rep = induced_rep(chi);
  Json j{{"chi", to_json(chi)},
         {"case", std::string(1, to_char(classify_case(chi)))},
         {"R", to_json(rep.R)},
         {"S", to_json(rep.S)},
         {"T", to_json(rep.T)},
         {"sigma_exp", rep.sigma_exp},
         {"reducible", is_reducible(chi.n)}};
  if (!is_reducible(chi.n)) j["exponents"] = to_json(exponent_data(chi));
  j["image"] = to_json(image_structure(chi));
  j["kernel_is_congruence"] = kernel_is_congruence(chi.n);
  j["curve_invariants"] = to_json(curve_invariants(chi));
  Output(cfg).emit(j);
  return 0;
}

int qexp(const RunConfig& cfg) {
  const int N = 2 * cfg.n;
  if (cfg.prec < 1) throw UsageError("--prec must be positive");
  // --prec counts q_N steps; the series is built to whole integer steps
  const std::size_t prec = (cfg.prec + static_cast<std::size_t>(N) - 1) / static_cast<std::size_t>(N);
  guard_prec(prec);
  QExp series;
  Json label;
  if (cfg.basis) {
    if (cfg.n % 2 == 0) fail(ErrorKind::parity, "basis forms need odd n");
    if (is_reducible(cfg.n)) fail(ErrorKind::reducible_representation, "n divides 3");
    if (cfg.r < (cfg.n + 1) / 2 || cfg.r > cfg.n - 1) fail(ErrorKind::precondition, "need (n+1)/2 <= r <= n-1");
    series = basis_form_series(cfg.n, cfg.r, prec);
    label = Json{{"basis", Json{{"n", cfg.n}, {"r", cfg.r}}}};
  } else {
    const auto comp = component(CharacterData::make(cfg.n, cfg.r, cfg.eps), cfg.index, prec);
    series = comp.series;
    label = Json{{"chi", to_json(comp.chi)}, {"index", comp.index}};
  }
  Json j = label;
  j["N"] = N;
  j["series"] = to_json(series);
  std::ostringstream csv;
  write_csv(csv, series);
  Output(cfg).emit(j, csv.str());
  return 0;
}

int verify_minweight(const RunConfig& cfg) {
  guard_prec(cfg.M + 1);
  const auto rep = verify_minweight_congruences(CharacterData::make(cfg.n, cfg.r, cfg.eps), cfg.p, cfg.M);
  Output(cfg).emit(to_json(rep), csv_checks(rep));
  return rep.verdict ? 0 : 1;
}

int verify_denominators(const RunConfig& cfg) {
  guard_prec(cfg.M + 1);
  const auto prof = denominator_profile(CharacterData::make(cfg.n, cfg.r, cfg.eps), cfg.index, cfg.p, cfg.M);
  std::ostringstream csv;
  csv << "m,valuation,predicted\n";
  for (std::size_t m = 0; m < prof.valuations.size(); ++m)
    csv << m << ',' << prof.valuations[m] << ',' << (m < prof.predicted.size() ? std::to_string(prof.predicted[m]) : "")
        << '\n';
  Output(cfg).emit(to_json(prof), csv.str());
  return prof.verdict == DenominatorVerdict::law_violated ? 1 : 0;
}

int verify_asd_cmd(const RunConfig& cfg) {
  const auto rep = verify_asd(cfg.n, cfg.r, cfg.p, cfg.M, prec_limit(), cfg.min_qn);
  Output(cfg).emit(to_json(rep), csv_checks(rep));
  return rep.verdict ? 0 : 1;
}

int zeta(const RunConfig& cfg) {
  if (cfg.p < 2) throw UsageError("--p must be a prime");
  const auto p = static_cast<std::uint64_t>(cfg.p);
  std::optional<LPoly> predicted;
  // validate the prediction first so an inapplicable prime fails before counting
  if (!cfg.no_predict && cfg.k == 1) predicted = predicted_lpoly(cfg.n, p);
  detail::require_good_reduction(cfg.n, p);
  const unsigned g = static_cast<unsigned>(cfg.n - 1) / 2;
  Json counts = Json::array();
  std::vector<std::int64_t> projective;
  for (unsigned i = 1; i <= g; ++i) {
    const auto pc = count_points(cfg.n, make_field_spec(p, cfg.k * i));
    counts.push_back(to_json(pc));
    projective.push_back(pc.projective);
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < cfg.k; ++i) q *= p;
  const auto L = zeta_numerator(cfg.n, q, projective);
  const double dev = weil_deviation(L, static_cast<double>(q));
  Json j{{"n", cfg.n}, {"p", cfg.p}, {"k", cfg.k}, {"counts", counts}, {"lpoly", to_json(L)["lpoly"]}};
  j["predicted"] = predicted ? to_json(*predicted)["lpoly"] : Json(nullptr);
  j["weil_deviation"] = dev;
  const bool ok = (!predicted || *predicted == L) && dev < 1e-6;
  j["verdict"] = ok ? "pass" : "fail";
  std::ostringstream csv;
  csv << "i,coefficient\n";
  for (std::size_t i = 0; i < L.coefficients.size(); ++i) csv << i << ',' << L.coefficients[i] << '\n';
  Output(cfg).emit(j, csv.str());
  return ok ? 0 : 1;
}

int charsum(const RunConfig& cfg) {
  if (cfg.p < 2) throw UsageError("--p must be a prime");
  const auto p = static_cast<std::uint64_t>(cfg.p);
  CharSumResult res;
  double scale = 1;
  Json j{{"kind", cfg.kind}, {"p", cfg.p}};
  if (cfg.kind == "gauss") {
    res = gauss_sum(p, cfg.k, cfg.order);
    scale = std::pow(static_cast<double>(p), cfg.k);
    j["t"] = cfg.k;
    j["order"] = cfg.order;
  } else if (cfg.kind == "jacobi") {
    const FiniteField F(make_field_spec(p, cfg.k));
    const auto j1 = character_index(F, cfg.order);
    const auto j2 = character_index(F, cfg.order2 == 0 ? cfg.order : cfg.order2);
    res = jacobi_sum(F, j1, j2);
    j["k"] = cfg.k;
    j["j1"] = j1;
    j["j2"] = j2;
  } else {
    throw UsageError("--kind must be gauss or jacobi");
  }
  j["result"] = to_json(res);
  const bool ok = !res.predicted || res.abs_error < 1e-6 * scale;
  j["verdict"] = ok ? "pass" : "fail";
  Output(cfg).emit(j);
  return ok ? 0 : 1;
}

int example_n5(const RunConfig& cfg) {
  if (cfg.prec < 1) throw UsageError("--prec must be positive");
  const std::size_t prec = (cfg.prec + 9) / 10;
  guard_prec(prec);
  const auto ex = n5_example(prec);
  Json G = Json::array(), quadrics = Json::array();
  for (const auto& g : ex.G) G.push_back(to_json(g));
  bool ok = true;
  for (const auto& q : ex.quadrics) {
    ok &= q.is_zero();
    quadrics.push_back(Json{{"zero", q.is_zero()}, {"absolute_precision", to_json(q.absolute_precision())}});
  }
  Json j{{"f1", to_json(ex.f1)}, {"f2", to_json(ex.f2)}, {"f3", to_json(ex.f3)}, {"f4", to_json(ex.f4)},
         {"G", G},               {"quadrics", quadrics},  {"verdict", ok ? "pass" : "fail"}};
  Output(cfg).emit(j);
  return ok ? 0 : 1;
}

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::integrality_violation ? 1 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imprimitive modular-group representations, hypergeometric q-expansions and their arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", cfg.out, "write to a file instead of stdout");
  };
  auto character = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    sub->add_option("--r", cfg.r);
    sub->add_option("--eps", cfg.eps)->check(CLI::IsMember({1, -1}));
  };

  auto* rep = app.add_subcommand("rep-info", "matrices, exponents, image structure and curve invariants");
  character(rep);
  common(rep);

  auto* qx = app.add_subcommand("qexp", "component or weight-2 basis q-expansion");
  character(qx);
  qx->add_option("--index", cfg.index)->check(CLI::Range(1, 3));
  qx->add_option("--prec", cfg.prec, "number of q_{2n} steps")->required();
  qx->add_flag("--basis", cfg.basis, "weight-2 basis form for (n, r)");
  common(qx);

  auto* mw = app.add_subcommand("verify-minweight", "a/b/c residue congruences for p | n");
  character(mw);
  mw->add_option("--p", cfg.p)->required();
  mw->add_option("--M", cfg.M);
  common(mw);

  auto* den = app.add_subcommand("verify-denominators", "p-adic valuations of coefficient denominators");
  character(den);
  den->add_option("--index", cfg.index)->check(CLI::Range(1, 3));
  den->add_option("--p", cfg.p)->required();
  den->add_option("--M", cfg.M);
  common(den);

  auto* asd = app.add_subcommand("verify-asd", "three-term congruences for the weight-2 basis form");
  asd->add_option("--n", cfg.n)->required();
  asd->add_option("--r", cfg.r)->required();
  asd->add_option("--p", cfg.p)->required();
  asd->add_option("--M", cfg.M);
  asd->add_option("--min-qn", cfg.min_qn, "compute at least this many q_{2n} coefficients");
  common(asd);

  auto* z = app.add_subcommand("zeta", "point counts and zeta numerator of y^2 = x^n + 64");
  z->add_option("--n", cfg.n)->required();
  z->add_option("--p", cfg.p)->required();
  z->add_option("--k", cfg.k, "base field F_{p^k}")->check(CLI::PositiveNumber);
  z->add_flag("--no-predict", cfg.no_predict, "skip the comparison with (1 + pT^2)^g");
  common(z);

  auto* cs = app.add_subcommand("charsum", "Gauss or Jacobi sums of a character of given order");
  cs->add_option("--kind", cfg.kind)->check(CLI::IsMember({"gauss", "jacobi"}));
  cs->add_option("--p", cfg.p)->required();
  cs->add_option("--k", cfg.k, "gauss: t with field F_{p^2t}; jacobi: field degree")->check(CLI::PositiveNumber);
  cs->add_option("--order", cfg.order)->required();
  cs->add_option("--order2", cfg.order2, "jacobi: order of the second character (default --order)");
  common(cs);

  auto* ex = app.add_subcommand("example-n5", "n = 5 forms, products and quadric residuals");
  ex->add_option("--prec", cfg.prec, "number of q10 steps")->required();
  common(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*rep) return rep_info(cfg);
    if (*qx) return qexp(cfg);
    if (*mw) return verify_minweight(cfg);
    if (*den) return verify_denominators(cfg);
    if (*asd) return verify_asd_cmd(cfg);
    if (*z) return zeta(cfg);
    if (*cs) return charsum(cfg);
    if (*ex) return example_n5(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
