#include "padicdyn/serialize.hpp"

namespace padicdyn {

const Json& require_field(const Json& j, const char* name, const char* context) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string(context) + ": missing field \"" + name + "\"");
    return j.at(name);
}

std::string require_string(const Json& j, const char* name, const char* context) {
    const Json& v = require_field(j, name, context);
    if (!v.is_string())
        throw ParseError(std::string(context) + ": field \"" + name + "\" must be a string");
    return v.get<std::string>();
}

long require_integer(const Json& j, const char* name, const char* context) {
    const Json& v = require_field(j, name, context);
    if (!v.is_number_integer())
        throw ParseError(std::string(context) + ": field \"" + name + "\" must be an integer");
    return v.get<long>();
}

Json to_json(const NormExp& e) {
    Json j;
    j["exp"] = e.is_zero() ? std::string("-inf") : rational_to_string(e.exp);
    return j;
}

NormExp norm_exp_from_json(const Json& j) {
    std::string s = require_string(j, "exp", "NormExp");
    if (s == "-inf") return NormExp::of_zero();
    return NormExp::from_exp(parse_rational(s));
}

Json to_json(const UltraDisk& D) {
    Json j;
    j["center"] = rational_to_string(D.center);
    if (D.radius.is_zero()) throw InvariantViolated("UltraDisk: zero radius in serialization");
    j["radius_exp"] = rational_to_string(D.radius.exp);
    return j;
}

UltraDisk disk_from_json(const Json& j, const BigInt& p) {
    BigRat center = parse_rational(require_string(j, "center", "disk"));
    NormExp radius = NormExp::from_exp(parse_rational(require_string(j, "radius_exp", "disk")));
    return UltraDisk(p, std::move(center), std::move(radius));
}

namespace {

const char* provenance_name(GreenProvenance p) {
    switch (p) {
        case GreenProvenance::EscapeTail: return "escape_tail";
        case GreenProvenance::TrappedOrbit: return "trapped_orbit";
        case GreenProvenance::Truncated: return "truncated";
    }
    throw Error("unknown provenance");
}

GreenProvenance provenance_from_name(const std::string& s) {
    if (s == "escape_tail") return GreenProvenance::EscapeTail;
    if (s == "trapped_orbit") return GreenProvenance::TrappedOrbit;
    if (s == "truncated") return GreenProvenance::Truncated;
    throw ParseError("GreenValue: unknown provenance \"" + s + "\"");
}

const char* event_name(OrbitEventKind k) {
    switch (k) {
        case OrbitEventKind::ZeroHit: return "zero_hit";
        case OrbitEventKind::Escaped: return "escaped";
        case OrbitEventKind::ContainedInEarlier: return "contained_in_earlier";
    }
    throw Error("unknown event kind");
}

OrbitEventKind event_from_name(const std::string& s) {
    if (s == "zero_hit") return OrbitEventKind::ZeroHit;
    if (s == "escaped") return OrbitEventKind::Escaped;
    if (s == "contained_in_earlier") return OrbitEventKind::ContainedInEarlier;
    throw ParseError("DiskOrbit: unknown event kind \"" + s + "\"");
}

const char* stop_name(OrbitStopReason r) {
    switch (r) {
        case OrbitStopReason::Event: return "event";
        case OrbitStopReason::BudgetExhausted: return "budget";
        case OrbitStopReason::SizeLimit: return "size_limit";
    }
    throw Error("unknown stop reason");
}

OrbitStopReason stop_from_name(const std::string& s) {
    if (s == "event") return OrbitStopReason::Event;
    if (s == "budget") return OrbitStopReason::BudgetExhausted;
    if (s == "size_limit") return OrbitStopReason::SizeLimit;
    throw ParseError("DiskOrbit: unknown stop reason \"" + s + "\"");
}

std::vector<BigRat> coeffs_from_json(const Json& arr, const char* context) {
    if (!arr.is_array() || arr.empty())
        throw ParseError(std::string(context) + ": coefficient list must be a non-empty array");
    std::vector<BigRat> out;
    out.reserve(arr.size());
    for (const Json& c : arr) {
        if (!c.is_string())
            throw ParseError(std::string(context) + ": coefficients must be rational strings");
        out.push_back(parse_rational(c.get<std::string>()));
    }
    return out;
}

Json coeffs_to_json(const std::vector<BigRat>& cs) {
    Json arr = Json::array();
    for (const BigRat& c : cs) arr.push_back(rational_to_string(c));
    return arr;
}

}  // namespace

Json to_json(const GreenValue& g) {
    Json j;
    j["kind"] = g.exact ? "exact" : "interval";
    j["lo"] = rational_to_string(g.lo);
    j["hi"] = rational_to_string(g.hi);
    j["unit"] = "log_p";
    j["provenance"] = provenance_name(g.provenance);
    j["n"] = g.n;
    return j;
}

GreenValue green_value_from_json(const Json& j) {
    std::string kind = require_string(j, "kind", "GreenValue");
    if (kind != "exact" && kind != "interval")
        throw ParseError("GreenValue: unknown kind \"" + kind + "\"");
    if (require_string(j, "unit", "GreenValue") != "log_p")
        throw ParseError("GreenValue: unknown unit");
    GreenValue g{kind == "exact",
                 parse_rational(require_string(j, "lo", "GreenValue")),
                 parse_rational(require_string(j, "hi", "GreenValue")),
                 provenance_from_name(require_string(j, "provenance", "GreenValue")),
                 require_integer(j, "n", "GreenValue")};
    if (g.lo > g.hi) throw ParseError("GreenValue: lo > hi");
    if (g.exact && g.lo != g.hi) throw ParseError("GreenValue: exact value with lo != hi");
    return g;
}

Json to_json(const DiskOrbit& orbit) {
    Json j;
    Json disks = Json::array();
    for (const UltraDisk& D : orbit.disks) disks.push_back(to_json(D));
    j["disks"] = std::move(disks);
    Json events = Json::array();
    for (const OrbitEvent& ev : orbit.events) {
        Json e;
        e["index"] = ev.index;
        e["kind"] = event_name(ev.kind);
        if (ev.kind == OrbitEventKind::ContainedInEarlier) e["j"] = ev.contained_in;
        events.push_back(std::move(e));
    }
    j["events"] = std::move(events);
    j["stop_reason"] = stop_name(orbit.stop_reason);
    j["budget"] = orbit.budget;
    return j;
}

DiskOrbit disk_orbit_from_json(const Json& j, const BigInt& p) {
    DiskOrbit orbit;
    const Json& disks = require_field(j, "disks", "DiskOrbit");
    if (!disks.is_array() || disks.empty())
        throw ParseError("DiskOrbit: disks must be a non-empty array");
    for (const Json& d : disks) orbit.disks.push_back(disk_from_json(d, p));
    const Json& events = require_field(j, "events", "DiskOrbit");
    if (!events.is_array()) throw ParseError("DiskOrbit: events must be an array");
    for (const Json& e : events) {
        OrbitEvent ev{event_from_name(require_string(e, "kind", "event")),
                      require_integer(e, "index", "event"), -1};
        if (ev.kind == OrbitEventKind::ContainedInEarlier)
            ev.contained_in = require_integer(e, "j", "event");
        orbit.events.push_back(ev);
    }
    orbit.stop_reason = stop_from_name(require_string(j, "stop_reason", "DiskOrbit"));
    orbit.budget = require_integer(j, "budget", "DiskOrbit");
    return orbit;
}

Json to_json(const MontelCertificate& cert) {
    Json j;
    switch (cert.status) {
        case CertStatus::Certified: j["status"] = "certified"; break;
        case CertStatus::Refuted: j["status"] = "refuted"; break;
        case CertStatus::Inconclusive: j["status"] = "inconclusive"; break;
    }
    if (cert.rule == WitnessRule::EscapeWitness) {
        Json r;
        r["kind"] = "escape";
        r["n"] = cert.witness_n;
        j["rule"] = std::move(r);
    } else if (cert.rule == WitnessRule::ContainmentWitness) {
        Json r;
        r["kind"] = "containment";
        r["k"] = cert.witness_k;
        r["j"] = cert.witness_j;
        j["rule"] = std::move(r);
    } else {
        j["rule"] = nullptr;
    }
    if (cert.status == CertStatus::Refuted)
        j["zero_hit_index"] = cert.zero_hit_index;
    else
        j["zero_hit_index"] = nullptr;
    j["budget"] = cert.budget;
    j["omitted_point"] = rational_to_string(cert.omitted_point);
    j["conjugated"] = cert.conjugated;
    j["prime"] = cert.original.prime().str();
    j["original_coefficients"] = coeffs_to_json(cert.original.coeffs());
    j["translated_coefficients"] = coeffs_to_json(cert.translated.coeffs());
    j["orbit"] = to_json(cert.orbit);
    return j;
}

MontelCertificate certificate_from_json(const Json& j) {
    std::string status = require_string(j, "status", "certificate");
    CertStatus st;
    if (status == "certified")
        st = CertStatus::Certified;
    else if (status == "refuted")
        st = CertStatus::Refuted;
    else if (status == "inconclusive")
        st = CertStatus::Inconclusive;
    else
        throw ParseError("certificate: unknown status \"" + status + "\"");

    BigInt p(require_string(j, "prime", "certificate"));
    Poly original(p, coeffs_from_json(require_field(j, "original_coefficients", "certificate"),
                                      "certificate"));
    Poly translated(p, coeffs_from_json(require_field(j, "translated_coefficients", "certificate"),
                                        "certificate"));

    MontelCertificate cert{st,
                           std::nullopt,
                           -1,
                           -1,
                           -1,
                           -1,
                           require_integer(j, "budget", "certificate"),
                           disk_orbit_from_json(require_field(j, "orbit", "certificate"), p),
                           parse_rational(require_string(j, "omitted_point", "certificate")),
                           false,
                           std::move(original),
                           std::move(translated)};

    const Json& conj = require_field(j, "conjugated", "certificate");
    if (!conj.is_boolean()) throw ParseError("certificate: conjugated must be a boolean");
    cert.conjugated = conj.get<bool>();

    const Json& rule = require_field(j, "rule", "certificate");
    if (!rule.is_null()) {
        std::string kind = require_string(rule, "kind", "certificate rule");
        if (kind == "escape") {
            cert.rule = WitnessRule::EscapeWitness;
            cert.witness_n = require_integer(rule, "n", "certificate rule");
        } else if (kind == "containment") {
            cert.rule = WitnessRule::ContainmentWitness;
            cert.witness_k = require_integer(rule, "k", "certificate rule");
            cert.witness_j = require_integer(rule, "j", "certificate rule");
        } else {
            throw ParseError("certificate: unknown rule kind \"" + kind + "\"");
        }
    }
    const Json& zh = require_field(j, "zero_hit_index", "certificate");
    if (!zh.is_null()) cert.zero_hit_index = zh.get<long>();
    return cert;
}

}  // namespace padicdyn
