#include "sugauge/report.hpp"

#include <algorithm>

namespace sugauge {

nlohmann::json report_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["results"] = r.results;
    j["status"] = r.status;
    j["notes"] = r.notes;
    return j;
}

std::string report_dump(const Report& r) {
    // nlohmann objects keep keys sorted, so the dump is deterministic.
    return report_json(r).dump(2) + "\n";
}

nlohmann::json matrix_json(const IntegerMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(dec(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json lattice_json(const Lattice& l) {
    nlohmann::json j;
    j["ambient_dim"] = std::to_string(l.ambient_dim());
    j["rank"] = std::to_string(l.rank());
    j["basis"] = matrix_json(l.basis());
    return j;
}

std::string matrix_text(const IntegerMatrix& m, const std::string& indent) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], dec(m(i, j)).size());

    std::string out;
    for (Index i = 0; i < m.rows(); ++i) {
        out += indent + "[";
        for (Index j = 0; j < m.cols(); ++j) {
            std::string cell = dec(m(i, j));
            out += std::string(width[static_cast<std::size_t>(j)] - cell.size(), ' ') + cell;
            if (j + 1 < m.cols()) out += "  ";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace sugauge
