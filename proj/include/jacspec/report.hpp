#pragma once

// Machine-readable output: JSON serialization of spectral results and the
// top-level CLI report envelope.  Key order is fixed and floats are emitted
// in their shortest round-trip form, so identical runs produce identical
// bytes (modulo the wall_time_ms stamp).

#include <string>

#include <json.hpp>

#include "jacspec/spectral.hpp"

namespace jacspec {

using Json = nlohmann::ordered_json;

Json to_json(const SpectralResult& r);
SpectralResult spectral_result_from_json(const Json& j);

// CSV flattening of the eigenvalue list only.
std::string to_csv(const SpectralResult& r);

struct Report {
    std::string command;
    std::string model;
    Json params = Json::object();
    Json tolerances = Json::object();
    Json results = Json::array();
    Json errors = Json::array();
    double wall_time_ms = 0.0;

    Json to_json() const;
};

bool operator==(const EigenEntry& a, const EigenEntry& b);
bool operator==(const SpectralResult& a, const SpectralResult& b);

} // namespace jacspec
