#ifndef IBNCUT_IO_HPP
#define IBNCUT_IO_HPP

#include <json.hpp>

#include <string>

#include "ibncut/closure.hpp"
#include "ibncut/ibn.hpp"
#include "ibncut/polyhedra.hpp"
#include "ibncut/stableset.hpp"
#include "ibncut/supernormal.hpp"

namespace ibncut {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

// Integers travel as decimal strings so downstream consumers never overflow;
// rationals as "p/q".
Json to_json(const Int& v);
Json to_json(const Rat& v);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const IntMat& m);
Json to_json(const Configuration& c);
Json to_json(const InequalitySystem& s);
Json to_json(const VRepresentation& v);
Json to_json(const HilbertBasisResult& h);
Json to_json(const RoundWitness& w);
Json to_json(const RoundLog& l);
Json to_json(const TightenResult& t);
Json to_json(const ClosureReport& r);
Json to_json(const ScrResult& r);
Json to_json(const Decision& d);
Json to_json(const Graph& g);
Json to_json(const FacetCertificate& c);
Json to_json(const VerifyResult& r);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
IntMat intmat_from_json(const Json& j);
Configuration config_from_json(const Json& j);
InequalitySystem system_from_json(const Json& j,
                                  std::vector<std::string>* warnings = nullptr);
LatticeBox box_from_json(const Json& j);
FacetCertificate certificate_from_json(const Json& j);

// stable 64-bit content hash, hex encoded
std::string fnv1a_hex(const std::string& data);

// report envelope: {"tool", "version", "input_sha", payload..., "timings"?}
Json make_report(const std::string& command, const std::string& input_bytes,
                 Json payload, bool stable_output, double seconds);

void atomic_write(const std::string& path, const std::string& data);
std::string read_file(const std::string& path);

}  // namespace ibncut

#endif
