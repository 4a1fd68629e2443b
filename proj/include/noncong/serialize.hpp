#pragma once

// JSON encodings. Rationals travel as "num/den" strings, big integers as
// decimal strings; key order is fixed by nlohmann::ordered_json.

#include <string>

#include "json.hpp"
#include "noncong/congruence.hpp"
#include "noncong/curves.hpp"
#include "noncong/grouprep.hpp"
#include "noncong/hyperforms.hpp"
#include "noncong/qseries.hpp"

namespace noncong {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Json to_json(const CharacterData& chi) { return Json{{"n", chi.n}, {"r", chi.r}, {"eps", chi.eps}}; }

inline Json to_json(const MonomialMatrix& m) {
  return Json{{"perm", m.perm()}, {"exps", m.exps()}, {"modulus", m.modulus()}};
}

inline Json turns_json(const std::vector<Rational>& turns) {
  Json out = Json::array();
  for (const auto& t : turns) out.push_back(to_json(t));
  return out;
}

inline Json to_json(const ExponentData& d) {
  return Json{{"r1", to_json(d.r1)}, {"r2", to_json(d.r2)}, {"r3", to_json(d.r3)}, {"e", d.e},
              {"k0", d.k0},          {"a", to_json(d.a)},   {"b", to_json(d.b)},   {"c", to_json(d.c)}};
}

inline Json to_json(const ImageStructure& s) {
  return Json{{"order", s.order},
              {"abelian_invariants", {s.abelian_invariants.first, s.abelian_invariants.second}},
              {"a_order_enumerated", s.a_order_enumerated},
              {"image_order_enumerated", s.image_order_enumerated},
              {"invariants_enumerated", {s.invariants_enumerated.first, s.invariants_enumerated.second}}};
}

inline Json to_json(const CurveInvariants& c) {
  Json out{{"reduction_case", std::string(1, to_char(c.reduction_case))},
           {"cusps_H0", c.cusps_H0},
           {"cusps_H1", c.cusps_H1},
           {"genus_H0", c.genus_H0},
           {"genus_H1", c.genus_H1}};
  out["genus_H"] = c.genus_H ? Json(*c.genus_H) : Json(nullptr);
  out["hyperelliptic_eq"] =
      c.hyperelliptic_eq ? Json{{"degree", c.hyperelliptic_eq->degree}, {"constant", c.hyperelliptic_eq->constant}}
                         : Json(nullptr);
  return out;
}

/// {alpha, prec, coeffs} with coeffs[m] the coefficient of q^{alpha + m}.
inline Json to_json(const QExp& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"alpha", to_json(f.alpha())}, {"prec", f.prec()}, {"coeffs", coeffs}};
}

inline Json to_json(const NormalizedCoeffs& nc) {
  Json values = Json::array();
  for (const auto& v : nc.values) values.push_back(v.get_str());
  return Json{{"kind", std::string(1, to_char(nc.kind))}, {"chi", to_json(nc.chi)}, {"values", values}};
}

inline Json to_json(const CongruenceCheck& c) {
  Json out{{"m", c.m}};
  if (c.kind) out["kind"] = std::string(1, *c.kind);
  out["modulus"] = c.modulus.get_str();
  out["expected_residue"] = c.expected_residue.get_str();
  out["observed_residue"] = c.observed_residue.get_str();
  out["lhs_valuation"] = c.lhs_valuation ? Json(*c.lhs_valuation) : Json("inf");
  out["required_valuation"] = c.required_valuation;
  out["pass"] = c.pass;
  out["vacuous"] = c.vacuous;
  return out;
}

inline Json to_json(const CongruenceReport& r) {
  Json params{{"n", r.params.n}, {"r", r.params.r}};
  if (r.params.eps != 0) params["eps"] = r.params.eps;
  params["p"] = r.params.p;
  params["M"] = r.params.M;
  params["kind"] = r.params.kind;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"params", params},
              {"checks", checks},
              {"p_integral", r.p_integral},
              {"qn_coefficients", r.qn_coefficients},
              {"nonvacuous", r.nonvacuous_count()},
              {"verdict", r.verdict ? "pass" : "fail"}};
}

inline Json to_json(const DenominatorProfile& d) {
  return Json{{"chi", to_json(d.chi)},
              {"index", d.index},
              {"p", d.p},
              {"valuations", d.valuations},
              {"predicted", d.predicted},
              {"max_valuation", d.max_valuation},
              {"max_valuation_form", d.max_valuation_form},
              {"verdict", to_string(d.verdict)}};
}

inline Json to_json(const FieldSpec& f) {
  return Json{{"p", f.p}, {"k", f.k}, {"modulus_coeffs", f.modulus}};
}

inline Json to_json(const PointCount& c) {
  return Json{{"field", to_json(c.field)}, {"affine", c.affine}, {"projective", c.projective}};
}

inline Json to_json(const LPoly& L) {
  Json coeffs = Json::array();
  for (const auto& c : L.coefficients) coeffs.push_back(integer_json(c));
  return Json{{"lpoly", coeffs}};
}

inline Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const CharSumResult& r) {
  Json out{{"value", complex_json(r.value)}};
  out["predicted"] = r.predicted ? complex_json(*r.predicted) : Json(nullptr);
  out["abs_error"] = r.abs_error;
  return out;
}

}  // namespace noncong
