#pragma once

// JSON encodings for scalars, matrices, words, automorphism descriptions and
// decomposition reports. Integers travel as decimal strings so values stay
// exact; parse failures raise ParseError.

#include <json.hpp>

#include "posmat/decompose.hpp"

namespace posmat {

using Json = nlohmann::ordered_json;

Json to_json(const RingElement& x);
/// `expected` pins the ring when the caller already knows it.
RingElement element_from_json(const Json& j, std::optional<RingId> expected = std::nullopt);

Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Permutation& p);  // one-based image list
Permutation permutation_from_json(const Json& j);

Json to_json(const MonomialMatrix& m);

Json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json to_json(const PEquivChain& c);
PEquivChain chain_from_json(const Json& j);

Json to_json(const RingMapDescriptor& c);
RingMapDescriptor ringmap_from_json(const Json& j, RingId ring);
Json to_json(const CentralHomDescriptor& h);
CentralHomDescriptor homothety_from_json(const Json& j, RingId ring);

Json to_json(const StandardTriple& t);
Json to_json(const AutomorphismDescription& d);
AutomorphismDescription description_from_json(const Json& j);

Json to_json(const DecompositionReport& r);

/// Rational as "p" or "p/q".
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace posmat
