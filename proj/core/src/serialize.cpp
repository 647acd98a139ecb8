#include "crepant/serialize.hpp"

#include <stdexcept>

namespace crepant {

nlohmann::json cycnum_to_json(const CycNum& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rational_str(c));
    return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const nlohmann::json& j) {
    long n = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CycNum(n, std::move(coeffs));
}

nlohmann::json matrix_to_json(const MatrixOverCyc& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(cycnum_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"conductor", m.conductor()}, {"entries", entries}};
}

MatrixOverCyc matrix_from_json(const nlohmann::json& j) {
    int n = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    std::vector<CycNum> e;
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (const auto& cell : row) e.push_back(cycnum_from_json(cell));
    }
    return MatrixOverCyc(n, std::move(e));
}

}  // namespace crepant
