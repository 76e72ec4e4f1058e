#ifndef NEUTRO_SERIALIZE_HPP
#define NEUTRO_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "neutro/formal_sum.hpp"
#include "neutro/magma.hpp"
#include "neutro/matrix.hpp"
#include "neutro/poly.hpp"
#include "neutro/ring_analysis.hpp"
#include "neutro/scalar.hpp"

namespace neutro {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json ring_to_json(const BaseRing& r);
BaseRing ring_from_json(const Json& j);

Json scalar_to_json(const NeutroScalar& s);
NeutroScalar scalar_from_json(const Json& j);

Json magma_to_json(const FiniteMagma& m);
FiniteMagma magma_from_json(const Json& j);
std::string magma_to_csv(const FiniteMagma& m);

Json finite_ring_to_json(const FiniteRing& r);

Json poly_to_json(const NeutroPoly& p);
NeutroPoly poly_from_json(const BaseRing& r, const Json& j);

Json matrix_to_json(const NeutroMatrix& m);
NeutroMatrix matrix_from_json(const BaseRing& r, const Json& j);

Json formal_sum_to_json(const FormalSum& f, const std::string& magma_ref = "");
FormalSum formal_sum_from_json(const AlgebraPtr& a, const Json& j);

Json scalar_ring_to_json(const ScalarRing& s);
ScalarRing scalar_ring_from_json(const Json& j);

}  // namespace neutro

#endif
