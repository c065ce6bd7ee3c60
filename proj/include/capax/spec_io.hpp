#pragma once

#include <string>

#include <json.hpp>

#include "capax/domains.hpp"

namespace capax {

using Json = nlohmann::ordered_json;

// Domain spec schema: {kind, dimension, params{...}, perturbations[...]}.
// Unknown fields are rejected; all numbers must be finite.
Domain parse_domain_spec(const Json& spec);
Domain parse_domain_spec_text(const std::string& text);

// Canonical serialization: fixed key order, 12 significant digits; parsing
// and re-serializing a canonical spec is byte-identical.
Json serialize_domain(const Domain& dom);
std::string to_canonical_text(const Json& j);

// FNV-1a hash of the canonical spec text, for result provenance.
std::string spec_hash(const Json& spec);

struct ResultRecord {
    std::string spec_hash;
    std::string command;
    long long k_lo = 0, k_hi = 0;
    std::vector<double> values;
    std::vector<IntVec> carrier_vectors;
    std::vector<RealVec> carrier_points;
    std::string engine;
    std::string oracle;        // empty when no verification ran
    double max_oracle_diff = 0.0;
    double tolerance = 0.0;
    double wall_time_sec = 0.0;
    Json to_json() const;
};

extern const char* kCodeVersion;

} // namespace capax
