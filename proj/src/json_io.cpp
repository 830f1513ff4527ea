#include "knotfog/json_io.hpp"

#include <stdexcept>

namespace knotfog {

using nlohmann::json;

json to_json(const Integer& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json to_json(const LaurentPoly& p) {
    json coeffs = json::array();
    for (const Integer& c : p.coeffs())
        coeffs.push_back(to_json(c));
    return {{"min_degree", p.min_degree()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const IntInterval& i) {
    return {{"lo", i.lo}, {"hi", i.hi ? json(*i.hi) : json(nullptr)}};
}

json to_json(const KnotFacts& f) {
    json prov = json::array();
    for (const Provenance& p : f.provenance)
        prov.push_back({{"fact", p.fact}, {"rule", p.rule}, {"anchor", p.anchor}});
    return {
        {"genus", to_json(f.genus)},
        {"alexander", f.alexander ? to_json(*f.alexander) : json("unknown")},
        {"slice", std::string(to_string(f.slice))},
        {"in_R", std::string(to_string(f.in_r))},
        {"trivial", std::string(to_string(f.trivial))},
        {"provenance", std::move(prov)},
    };
}

json to_json(const FogResult& r) {
    json prov = json::array();
    for (const FogProvenance& p : r.provenance)
        prov.push_back({{"bound", p.bound == Bound::lo ? "lo" : "hi"},
                        {"value", p.value ? json(*p.value) : json(nullptr)},
                        {"rule", p.rule},
                        {"anchor", p.anchor}});
    return {{"lo", r.interval.lo},
            {"hi", r.interval.hi ? json(*r.interval.hi) : json(nullptr)},
            {"provenance", std::move(prov)}};
}

Integer integer_from_json(const json& j) {
    if (j.is_number_unsigned())
        return Integer(j.dump());
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("malformed integer string: " + j.get<std::string>());
        return v;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_degree") || !j.contains("coeffs") || !j["min_degree"].is_number_integer() ||
        !j["coeffs"].is_array())
        throw std::invalid_argument("expected {min_degree: int, coeffs: [int]}");
    std::vector<Integer> coeffs;
    for (const json& c : j["coeffs"])
        coeffs.push_back(integer_from_json(c));
    return LaurentPoly(j["min_degree"].get<std::int64_t>(), std::move(coeffs));
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected a row-major array of arrays");
    std::vector<std::vector<Integer>> rows;
    for (const json& row : j) {
        if (!row.is_array())
            throw std::invalid_argument("expected a row-major array of arrays");
        std::vector<Integer> r;
        for (const json& v : row)
            r.push_back(integer_from_json(v));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

} // namespace knotfog
