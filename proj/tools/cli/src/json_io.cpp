#include "critorbit/cli/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace {

using critorbit::json;

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double get_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

template <class T>
json optional_to_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  return json(*x);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

namespace nlohmann {

void adl_serializer<critorbit::Complex>::to_json(json& j, const critorbit::Complex& z) {
  j = json::array({number(z.real()), number(z.imag())});
}

void adl_serializer<critorbit::Complex>::from_json(const json& j, critorbit::Complex& z) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
  z = {get_number(j[0]), get_number(j[1])};
}

void adl_serializer<critorbit::MapSpec>::to_json(json& j, const critorbit::MapSpec& m) {
  j = {{"numerator", m.numerator()},
       {"denominator", m.denominator()},
       {"degree", m.degree()},
       {"critical_points", m.critical_points()},
       {"critical_multiplicities", m.critical_multiplicities()}};
}

critorbit::MapSpec adl_serializer<critorbit::MapSpec>::from_json(const json& j) {
  return critorbit::MapSpec::rational(j.at("numerator").get<critorbit::Polynomial>(),
                                      j.at("denominator").get<critorbit::Polynomial>());
}

void adl_serializer<critorbit::VectorFieldSpec>::to_json(json& j, const critorbit::VectorFieldSpec& v) {
  j = {{"numerator", v.numerator()}, {"denominator", v.denominator()}};
}

critorbit::VectorFieldSpec adl_serializer<critorbit::VectorFieldSpec>::from_json(const json& j) {
  return critorbit::VectorFieldSpec(j.at("numerator").get<critorbit::Polynomial>(),
                                    j.at("denominator").get<critorbit::Polynomial>());
}

void adl_serializer<critorbit::OrbitRecord>::to_json(json& j, const critorbit::OrbitRecord& o) {
  json sums = json::array();
  for (double s : o.partial_sums_abs) sums.push_back(number(s));
  j = {{"map", o.map},
       {"critical_point", o.critical_point},
       {"start", o.start},
       {"points", o.points},
       {"cocycle", o.cocycle},
       {"partial_sums_abs", sums},
       {"escaped_at", optional_to_json(o.escaped_at)},
       {"critical_relation_at", optional_to_json(o.critical_relation_at)},
       {"truncated_at", o.truncated_at},
       {"warnings", o.warnings}};
}

critorbit::OrbitRecord adl_serializer<critorbit::OrbitRecord>::from_json(const json& j) {
  critorbit::OrbitRecord o{.map = j.at("map").get<critorbit::MapSpec>(),
                           .critical_point = j.at("critical_point").get<critorbit::Complex>(),
                           .start = j.at("start").get<critorbit::Complex>(),
                           .points = j.at("points").get<std::vector<critorbit::Complex>>(),
                           .cocycle = j.at("cocycle").get<std::vector<critorbit::XComplex>>(),
                           .partial_sums_abs = {},
                           .escaped_at = optional_from_json<std::size_t>(j.at("escaped_at")),
                           .critical_relation_at = optional_from_json<std::size_t>(j.at("critical_relation_at")),
                           .truncated_at = j.at("truncated_at").get<std::size_t>(),
                           .warnings = j.at("warnings").get<std::vector<std::string>>()};
  for (const json& s : j.at("partial_sums_abs")) o.partial_sums_abs.push_back(get_number(s));
  return o;
}

void adl_serializer<critorbit::WitnessResult>::to_json(json& j, const critorbit::WitnessResult& w) {
  j = {{"field", w.field}, {"mu_value", w.mu_value}};
}

critorbit::WitnessResult adl_serializer<critorbit::WitnessResult>::from_json(const json& j) {
  return {j.at("field").get<critorbit::VectorFieldSpec>(), j.at("mu_value").get<critorbit::Complex>()};
}

}  // namespace nlohmann

namespace critorbit {

void to_json(json& j, const XComplex& x) { j = {{"mantissa", x.mantissa()}, {"exponent", x.exponent()}}; }

void from_json(const json& j, XComplex& x) {
  x = XComplex::from_parts(j.at("mantissa").get<Complex>(), j.at("exponent").get<std::int64_t>());
}

void to_json(json& j, const Polynomial& p) {
  j = json::array();
  for (const Complex& c : p.coefficients()) j.push_back(c);
}

void from_json(const json& j, Polynomial& p) { p = Polynomial(j.get<std::vector<Complex>>()); }

void to_json(json& j, const SummabilityReport& r) {
  j = {{"partial_sum", number(r.partial_sum)},
       {"tail_ratio", number(r.tail_ratio)},
       {"tail_bound", number(r.tail_bound)},
       {"window", r.window},
       {"terms", r.terms},
       {"classification", r.classification}};
}

void from_json(const json& j, SummabilityReport& r) {
  r.partial_sum = get_number(j.at("partial_sum"));
  r.tail_ratio = get_number(j.at("tail_ratio"));
  r.tail_bound = get_number(j.at("tail_bound"));
  r.window = j.at("window").get<std::size_t>();
  r.terms = j.at("terms").get<std::size_t>();
  r.classification = j.at("classification").get<SummabilityClass>();
}

void to_json(json& j, const ParameterClass& r) {
  j = {{"kind", r.kind},
       {"period", optional_to_json(r.period)},
       {"multiplier", optional_to_json(r.multiplier)},
       {"iterations_used", r.iterations_used}};
}

void from_json(const json& j, ParameterClass& r) {
  r.kind = j.at("kind").get<ParameterKind>();
  r.period = optional_from_json<int>(j.at("period"));
  r.multiplier = optional_from_json<Complex>(j.at("multiplier"));
  r.iterations_used = j.at("iterations_used").get<std::size_t>();
}

void to_json(json& j, const MuResult& r) {
  j = {{"value", r.value},
       {"converged", r.converged},
       {"tail_bound", number(r.tail_bound)},
       {"terms_used", r.terms_used},
       {"partial", r.partial}};
}

void from_json(const json& j, MuResult& r) {
  r.value = j.at("value").get<Complex>();
  r.converged = j.at("converged").get<bool>();
  r.tail_bound = get_number(j.at("tail_bound"));
  r.terms_used = j.at("terms_used").get<std::size_t>();
  r.partial = j.at("partial").get<std::vector<Complex>>();
}

void to_json(json& j, const MuConstantResult& r) {
  j = {{"mu", r.mu}, {"threshold", number(r.threshold)}, {"nonvanishing", r.nonvanishing}};
}

void from_json(const json& j, MuConstantResult& r) {
  r.mu = j.at("mu").get<MuResult>();
  r.threshold = get_number(j.at("threshold"));
  r.nonvanishing = j.at("nonvanishing").get<bool>();
}

void to_json(json& j, const ObstructionSeries& s) {
  j = {{"growth_exponent", number(s.growth_exponent)}, {"bounded_evidence", s.bounded_evidence}, {"b", s.b}};
}

void from_json(const json& j, ObstructionSeries& s) {
  s.growth_exponent = get_number(j.at("growth_exponent"));
  s.bounded_evidence = j.at("bounded_evidence").get<BoundedEvidence>();
  s.b = j.at("b").get<std::vector<XComplex>>();
}

void to_json(json& j, const Cycle& c) {
  j = {{"period", c.period},
       {"points", c.points},
       {"multiplier", c.multiplier},
       {"residual", number(c.residual)},
       {"kind", c.kind}};
}

void from_json(const json& j, Cycle& c) {
  c.period = j.at("period").get<int>();
  c.points = j.at("points").get<std::vector<Complex>>();
  c.multiplier = j.at("multiplier").get<Complex>();
  c.residual = get_number(j.at("residual"));
  c.kind = j.at("kind").get<CycleKind>();
}

void to_json(json& j, const CycleAlphaSolution& s) {
  json res = json::array();
  for (double r : s.residuals) res.push_back(number(r));
  j = {{"alpha", s.alpha}, {"residuals", res}};
}

void from_json(const json& j, CycleAlphaSolution& s) {
  s.alpha = j.at("alpha").get<std::vector<Complex>>();
  s.residuals.clear();
  for (const json& r : j.at("residuals")) s.residuals.push_back(get_number(r));
}

void to_json(json& j, const ContinuationResult& r) {
  j = {{"lambda_path", r.lambda_path},
       {"cycles", r.cycles},
       {"velocity_at_zero", r.velocity_at_zero},
       {"stopped_reason", r.stopped_reason}};
}

void from_json(const json& j, ContinuationResult& r) {
  r.lambda_path = j.at("lambda_path").get<std::vector<Complex>>();
  r.cycles = j.at("cycles").get<std::vector<Cycle>>();
  r.velocity_at_zero = j.at("velocity_at_zero").get<Complex>();
  r.stopped_reason = j.at("stopped_reason").get<StopReason>();
}

void to_json(json& j, const MotionCheck& m) {
  j = {{"alpha", m.alpha}, {"fd_velocity", m.fd_velocity}, {"discrepancy", number(m.discrepancy)}};
}

void from_json(const json& j, MotionCheck& m) {
  m.alpha = j.at("alpha").get<Complex>();
  m.fd_velocity = j.at("fd_velocity").get<Complex>();
  m.discrepancy = get_number(j.at("discrepancy"));
}

void to_json(json& j, const ScanRow& r) {
  j = {{"c", r.c},
       {"class", cli::scan_class_name(r.kind)},
       {"period", optional_to_json(r.period)},
       {"summability", optional_to_json(r.summability)},
       {"growth_exponent", r.growth_exponent ? number(*r.growth_exponent) : json(nullptr)},
       {"mu_constant", optional_to_json(r.mu_constant)},
       {"flags", r.flags}};
}

void from_json(const json& j, ScanRow& r) {
  r.c = j.at("c").get<Complex>();
  r.kind = cli::scan_class_from_name(j.at("class").get<std::string>());
  r.period = optional_from_json<int>(j.at("period"));
  r.summability = optional_from_json<SummabilityClass>(j.at("summability"));
  r.growth_exponent = optional_from_json<double>(j.at("growth_exponent"));
  r.mu_constant = optional_from_json<Complex>(j.at("mu_constant"));
  r.flags = j.at("flags").get<std::vector<std::string>>();
}

void to_json(json& j, const EscapeGrid& g) {
  j = {{"nx", g.nx}, {"ny", g.ny}, {"max_iter", g.max_iter}, {"counts", g.counts}};
}

void from_json(const json& j, EscapeGrid& g) {
  g.nx = j.at("nx").get<int>();
  g.ny = j.at("ny").get<int>();
  g.max_iter = j.at("max_iter").get<int>();
  g.counts = j.at("counts").get<std::vector<int>>();
}

}  // namespace critorbit

namespace critorbit::cli {

const char* scan_class_name(ParameterKind k) {
  switch (k) {
    case ParameterKind::escaping:
      return "escaping";
    case ParameterKind::attracting:
      return "attracting";
    case ParameterKind::undecided:
      break;
  }
  return "candidate";
}

ParameterKind scan_class_from_name(std::string_view name) {
  if (name == "escaping") return ParameterKind::escaping;
  if (name == "attracting") return ParameterKind::attracting;
  if (name == "candidate") return ParameterKind::undecided;
  throw std::invalid_argument("unknown scan class '" + std::string(name) + "'");
}

}  // namespace critorbit::cli
