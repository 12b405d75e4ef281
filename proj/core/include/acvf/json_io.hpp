#pragma once

// JSON wire format for every library type. Encoders emit one canonical byte
// form; decoders validate and raise MALFORMED (or BACKEND_MISMATCH /
// DIMENSION_MISMATCH) on bad input.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "acvf/appendix.hpp"
#include "acvf/coding.hpp"
#include "acvf/gammatype.hpp"
#include "acvf/lattice.hpp"
#include "acvf/omodule.hpp"
#include "acvf/stcomp.hpp"
#include "acvf/valspace.hpp"

namespace acvf {

/// Keys keep insertion order so polynomial terms stay in grlex order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
std::string_view library_version();

Json to_json(const Rational& q);
Json to_json(const GammaVal& g);
Json to_json(const FieldElem& x);
Json to_json(const FieldVector& v);
Json to_json(const FieldMatrix& m);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const SeparatedFamily& s);
Json to_json(const LatticeCode& l);
Json to_json(const TnCode& c);
Json to_json(const ModuleDesc& m);
Json to_json(const GammaType& p);
Json to_json(const Poly& f);
Json to_json(const PolySpace& h);
Json to_json(const MonomialType& p);
Json to_json(const AffineLatticeFamily& f);
Json to_json(const IntegralType& q);
Json to_json(const CongruenceSubgroup& h);
Json to_json(const GermPair& p);
Json to_json(const MembershipVerdict& v);

Rational rational_from_json(const Json& j);
GammaVal gamma_val_from_json(const Json& j);
QVector qvector_from_json(const Json& j);
QMatrix qmatrix_from_json(const Json& j);
Backend parse_backend(std::string_view name);

/// Field-valued decoding. Every element decoded through one Decoder must use
/// the same backend; the first element fixes it unless it was given.
/// A bare "p/q" string is accepted as a constant of that backend (RATFUNC if
/// none is fixed yet).
class Decoder {
 public:
  explicit Decoder(std::optional<Backend> backend = std::nullopt) : backend_(backend) {}
  std::optional<Backend> backend() const { return backend_; }

  FieldElem elem(const Json& j);
  FieldVector vector(const Json& j);
  FieldMatrix matrix(const Json& j);
  std::vector<FieldVector> vectors(const Json& j);
  SeparatedFamily separated(const Json& j);
  LatticeCode lattice(const Json& j);
  TnCode tn(const Json& j);
  ModuleDesc module(const Json& j);
  GammaType gamma_type(const Json& j);
  Poly poly(const Json& j);
  PolySpace space(const Json& j);
  MonomialType monomial_type(const Json& j);
  AffineLatticeFamily family(const Json& j);
  IntegralType integral(const Json& j);
  CongruenceSubgroup subgroup(const Json& j);
  GermPair germ(const Json& j);
  MembershipVerdict verdict(const Json& j);

 private:
  void pin(Backend b);
  std::optional<Backend> backend_;
};

/// Member lookup that raises MALFORMED when absent.
const Json& field(const Json& j, const char* key);

/// Compact, deterministic text form.
std::string dump(const Json& j);

}  // namespace acvf
