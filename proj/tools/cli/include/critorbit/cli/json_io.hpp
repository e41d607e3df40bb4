#pragma once

#include "json.hpp"

#include "critorbit/critorbit.hpp"

// Complex values are [re, im]; XComplex is {"mantissa": [re, im], "exponent": e};
// non-finite doubles are written as null and read back as +inf.

namespace nlohmann {

template <>
struct adl_serializer<critorbit::Complex> {
  static void to_json(json& j, const critorbit::Complex& z);
  static void from_json(const json& j, critorbit::Complex& z);
};

template <>
struct adl_serializer<critorbit::MapSpec> {
  static void to_json(json& j, const critorbit::MapSpec& m);
  static critorbit::MapSpec from_json(const json& j);
};

template <>
struct adl_serializer<critorbit::VectorFieldSpec> {
  static void to_json(json& j, const critorbit::VectorFieldSpec& v);
  static critorbit::VectorFieldSpec from_json(const json& j);
};

template <>
struct adl_serializer<critorbit::OrbitRecord> {
  static void to_json(json& j, const critorbit::OrbitRecord& o);
  static critorbit::OrbitRecord from_json(const json& j);
};

template <>
struct adl_serializer<critorbit::WitnessResult> {
  static void to_json(json& j, const critorbit::WitnessResult& w);
  static critorbit::WitnessResult from_json(const json& j);
};

}  // namespace nlohmann

namespace critorbit {

using json = nlohmann::json;

void to_json(json& j, const XComplex& x);
void from_json(const json& j, XComplex& x);
void to_json(json& j, const Polynomial& p);
void from_json(const json& j, Polynomial& p);

NLOHMANN_JSON_SERIALIZE_ENUM(SummabilityClass, {{SummabilityClass::summable_evidence, "summable"},
                                                {SummabilityClass::divergent_evidence, "divergent"},
                                                {SummabilityClass::inconclusive, "inconclusive"}})
NLOHMANN_JSON_SERIALIZE_ENUM(ParameterKind, {{ParameterKind::escaping, "escaping"},
                                             {ParameterKind::attracting, "attracting"},
                                             {ParameterKind::undecided, "undecided"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BoundedEvidence, {{BoundedEvidence::bounded, "bounded"},
                                               {BoundedEvidence::unbounded, "unbounded"},
                                               {BoundedEvidence::inconclusive, "inconclusive"}})
NLOHMANN_JSON_SERIALIZE_ENUM(CycleKind, {{CycleKind::attracting, "attracting"},
                                         {CycleKind::indifferent, "indifferent"},
                                         {CycleKind::repelling, "repelling"}})
NLOHMANN_JSON_SERIALIZE_ENUM(StopReason, {{StopReason::reached_target, "reached_target"},
                                          {StopReason::multiplier_degenerate, "multiplier_degenerate"},
                                          {StopReason::newton_failure, "newton_failure"}})

void to_json(json& j, const SummabilityReport& r);
void from_json(const json& j, SummabilityReport& r);
void to_json(json& j, const ParameterClass& r);
void from_json(const json& j, ParameterClass& r);
void to_json(json& j, const MuResult& r);
void from_json(const json& j, MuResult& r);
void to_json(json& j, const MuConstantResult& r);
void from_json(const json& j, MuConstantResult& r);
void to_json(json& j, const ObstructionSeries& s);
void from_json(const json& j, ObstructionSeries& s);
void to_json(json& j, const Cycle& c);
void from_json(const json& j, Cycle& c);
void to_json(json& j, const CycleAlphaSolution& s);
void from_json(const json& j, CycleAlphaSolution& s);
void to_json(json& j, const ContinuationResult& r);
void from_json(const json& j, ContinuationResult& r);
void to_json(json& j, const MotionCheck& m);
void from_json(const json& j, MotionCheck& m);
void to_json(json& j, const ScanRow& r);
void from_json(const json& j, ScanRow& r);
void to_json(json& j, const EscapeGrid& g);
void from_json(const json& j, EscapeGrid& g);

}  // namespace critorbit

namespace critorbit::cli {

// "escaping", "attracting" or "candidate" (undecided after classification).
const char* scan_class_name(ParameterKind k);
ParameterKind scan_class_from_name(std::string_view name);

}  // namespace critorbit::cli
