#include "spink/rhc_model.hpp"

#include <stdexcept>

namespace spink {

void RHCModel::validate() const {
    if (m < 1) throw std::invalid_argument("RHCModel.m must be >= 1");
    if (middle_betti < 0) throw std::invalid_argument("RHCModel.middle_betti must be >= 0");
    if (abs(sigma) > middle_betti) throw std::invalid_argument("RHCModel.sigma: |sigma| exceeds middle_betti");
}

namespace {

Json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Integer integer_field(const Json& j, const char* field) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("RHCModel: missing field '") + field + "'");
    const Json& v = j.at(field);
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        Integer n;
        if (n.set_str(v.get<std::string>(), 10) == 0) return n;
    }
    throw std::invalid_argument(std::string("RHCModel: field '") + field + "' is not an integer");
}

}  // namespace

Json RHCModel::to_json() const {
    return Json{{"kind", "rhc"},
                {"m", m},
                {"middle_betti", middle_betti},
                {"sigma", integer_json(sigma)},
                {"P2", integer_json(P2)},
                {"Q", integer_json(Q)}};
}

RHCModel RHCModel::from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("RHCModel: document is not an object");
    if (j.contains("kind") && j.at("kind") != "rhc") throw std::invalid_argument("RHCModel: field 'kind' must be \"rhc\"");
    for (const auto& [key, value] : j.items()) {
        if (key != "kind" && key != "m" && key != "middle_betti" && key != "sigma" && key != "P2" && key != "Q")
            throw std::invalid_argument("RHCModel: unknown field '" + key + "'");
    }
    RHCModel model;
    const Integer m = integer_field(j, "m");
    const Integer betti = integer_field(j, "middle_betti");
    if (!m.fits_slong_p()) throw std::invalid_argument("RHCModel: field 'm' out of range");
    if (!betti.fits_slong_p()) throw std::invalid_argument("RHCModel: field 'middle_betti' out of range");
    model.m = m.get_si();
    model.middle_betti = betti.get_si();
    model.sigma = integer_field(j, "sigma");
    model.P2 = integer_field(j, "P2");
    model.Q = integer_field(j, "Q");
    model.validate();
    return model;
}

}  // namespace spink
