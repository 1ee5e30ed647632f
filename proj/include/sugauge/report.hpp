#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sugauge/lattice.hpp"

namespace sugauge {

/// Machine-readable result of one CLI invocation. Every numeric value is
/// rendered as a decimal string so the serialization round-trips without
/// precision loss; keys are emitted in sorted order, so identical inputs
/// produce byte-identical output.
struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::string status = "info";  // "pass" | "fail" | "info"
    std::vector<std::string> notes;
};

nlohmann::json report_json(const Report& r);
std::string report_dump(const Report& r);

nlohmann::json matrix_json(const IntegerMatrix& m);
nlohmann::json lattice_json(const Lattice& l);

/// Fixed-width text rendering of an integer matrix, one row per line.
std::string matrix_text(const IntegerMatrix& m, const std::string& indent = "  ");

}  // namespace sugauge
