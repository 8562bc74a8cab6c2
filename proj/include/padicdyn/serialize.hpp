#pragma once

#include "json.hpp"
#include "padicdyn/green.hpp"
#include "padicdyn/montel.hpp"

namespace padicdyn {

using Json = nlohmann::ordered_json;

Json to_json(const NormExp& e);  // {"exp": "q"} or {"exp": "-inf"}
NormExp norm_exp_from_json(const Json& j);

Json to_json(const UltraDisk& D);  // {"center": "a/b", "radius_exp": "q"}
UltraDisk disk_from_json(const Json& j, const BigInt& p);

Json to_json(const GreenValue& g);
GreenValue green_value_from_json(const Json& j);

Json to_json(const DiskOrbit& orbit);
DiskOrbit disk_orbit_from_json(const Json& j, const BigInt& p);

// self-contained document: all disks, events, witness rule, omitted point,
// and both coefficient lists, re-verifiable without this library
Json to_json(const MontelCertificate& cert);
MontelCertificate certificate_from_json(const Json& j);

// strict field access helpers shared with the task-file parser
const Json& require_field(const Json& j, const char* name, const char* context);
std::string require_string(const Json& j, const char* name, const char* context);
long require_integer(const Json& j, const char* name, const char* context);

}  // namespace padicdyn
