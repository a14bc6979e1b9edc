#include "wtorsor/json_io.hpp"

#include <string>

#include "wtorsor/errors.hpp"

namespace wtorsor {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidInputError("expected a rational as \"a/b\" string or integer, got " + j.dump());
}

std::vector<long> factors_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInputError(std::string(what) + " must be an array of invariant factors");
    std::vector<long> factors;
    for (const auto& f : j) {
        if (!f.is_number_integer())
            throw InvalidInputError(std::string(what) + " entries must be integers");
        factors.push_back(f.get<long>());
    }
    return factors;
}

FiniteAbelianGroup group_from_json(const json& j, const char* what) {
    std::vector<long> factors = factors_from_json(j, what);
    FiniteAbelianGroup g = make_group(factors);
    if (g.invariant_factors() != factors)
        throw InvalidInputError(std::string(what) +
                                " must be an invariant-factor chain (n_1 | n_2 | ...); "
                                "the weight indexing depends on it");
    return g;
}

}  // namespace

json cyclotomic_to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(to_string(x));
    return json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw InvalidInputError("cyclotomic value must be {\"conductor\": N, \"coeffs\": [...]}");
    const long n = j["conductor"].get<long>();
    if (n < 1) throw InvalidInputError("conductor must be >= 1");
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(euler_phi(n)))
        throw InvalidInputError("cyclotomic coefficient vector must have length phi(conductor)");
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) buckets[i] = rational_from_json(coeffs[i]);
    return Cyclotomic::from_exponent_buckets(n, buckets);
}

json weighted_group_to_json(const WeightedGroup& w) {
    json weights = json::array();
    for (const auto& x : w.weights) weights.push_back(to_string(x));
    return json{{"group", w.group.invariant_factors()}, {"weights", std::move(weights)}};
}

WeightedGroup weighted_group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("weights"))
        throw InvalidInputError("weighted group must be {\"group\": [...], \"weights\": [...]}");
    FiniteAbelianGroup g = group_from_json(j["group"], "\"group\"");
    const auto& jw = j["weights"];
    if (!jw.is_array() || jw.size() != static_cast<std::size_t>(g.order()))
        throw InvalidInputError("\"weights\" must list one value per group element (" +
                                std::to_string(g.order()) + " expected)");
    std::vector<Rational> weights;
    weights.reserve(jw.size());
    for (const auto& x : jw) weights.push_back(rational_from_json(x));
    return WeightedGroup(std::move(g), std::move(weights));
}

json dual_weights_to_json(const DualWeights& d) {
    json values = json::array();
    for (const auto& v : d.values) values.push_back(cyclotomic_to_json(v));
    return json{{"group", d.group.invariant_factors()}, {"values", std::move(values)}};
}

DualWeights dual_weights_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("values"))
        throw InvalidInputError("dual weights must be {\"group\": [...], \"values\": [...]}");
    FiniteAbelianGroup g = group_from_json(j["group"], "\"group\"");
    const auto& jv = j["values"];
    if (!jv.is_array() || jv.size() != static_cast<std::size_t>(g.order()))
        throw InvalidInputError("\"values\" must list one value per character (" +
                                std::to_string(g.order()) + " expected)");
    std::vector<Cyclotomic> values;
    values.reserve(jv.size());
    for (const auto& v : jv) values.push_back(cyclotomic_from_json(v));
    return DualWeights(std::move(g), std::move(values));
}

json ms_multiset_to_json(const MSMultiset& ms) {
    json classes = json::array();
    for (const auto& entry : ms.entries) {
        json weights = json::array();
        for (const auto& v : entry.cls.rep.values) weights.push_back(cyclotomic_to_json(v));
        classes.push_back(json{{"subgroup_order", entry.cls.rep.group.order()},
                               {"group", entry.cls.rep.group.invariant_factors()},
                               {"multiplicity", entry.multiplicity},
                               {"weights", std::move(weights)}});
    }
    return json{{"classes", std::move(classes)}};
}

json lens_to_json(const LensSpace& l) { return json{{"p", l.p}, {"q", l.q}}; }

json classification_to_json(long p_max, const std::vector<std::vector<LensSpace>>& classes) {
    json jc = json::array();
    for (const auto& cls : classes) {
        json one = json::array();
        for (const auto& l : cls) one.push_back(lens_to_json(l));
        jc.push_back(std::move(one));
    }
    return json{{"pmax", p_max}, {"classes", std::move(jc)}};
}

json alexander_to_json(const AlexanderPolynomial& delta) {
    json coeffs = json::array();
    for (const auto& c : delta.poly().coeffs()) coeffs.push_back(to_string(c));
    return json{{"coeffs", std::move(coeffs)}};
}

std::string weighted_group_to_csv(const WeightedGroup& w) {
    std::string out = "index,weight\n";
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        out += std::to_string(i) + "," + to_string(w.weights[i]) + "\n";
    return out;
}

std::string dual_weights_to_csv(const DualWeights& d) {
    std::string out = "index,conductor,coeffs\n";
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(d.values[i].conductor()) + ",";
        const auto& c = d.values[i].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ';';
            out += to_string(c[k]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace wtorsor
