#include "spink/certificate.hpp"

#include <sstream>
#include <stdexcept>

namespace spink {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::established: return "established";
        case Verdict::excluded: return "excluded";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict verdict_from_string(std::string_view s) {
    if (s == "established") return Verdict::established;
    if (s == "excluded") return Verdict::excluded;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

Check check_equal(std::string name, const Rational& lhs, const Rational& rhs) {
    return {std::move(name), lhs.fraction_str(), rhs.fraction_str(), "=", lhs == rhs};
}

Check check_less(std::string name, const Rational& lhs, const Rational& rhs) {
    return {std::move(name), lhs.fraction_str(), rhs.fraction_str(), "<", lhs < rhs};
}

Check check_integral(std::string name, const Rational& value) {
    return {std::move(name), value.fraction_str(), "Z", "in", value.is_integer()};
}

Check check_not_integral(std::string name, const Rational& value) {
    return {std::move(name), value.fraction_str(), "Z", "not in", !value.is_integer()};
}

Check check_dyadic(std::string name, const Rational& value) {
    return {std::move(name), value.fraction_str(), "Z[1/2]", "in", is_dyadic(value)};
}

std::string spin_structure_name(long k) {
    switch (k) {
        case 1: return "spin";
        case 2: return "spin^c";
        case 3: return "spin^h";
        default: return "spin^" + std::to_string(k);
    }
}

Certificate::Certificate(std::string claim, Verdict verdict) : claim_(std::move(claim)), verdict_(Verdict::inconclusive) {
    set_verdict(verdict);
}

bool Certificate::all_checks_passed() const {
    for (const auto& c : checks_)
        if (!c.passed) return false;
    return true;
}

Certificate& Certificate::add_parameter(const std::string& key, const Rational& value) {
    parameters_[key] = value.fraction_str();
    return *this;
}

Certificate& Certificate::add_parameter(const std::string& key, const std::string& value) {
    parameters_[key] = value;
    return *this;
}

Certificate& Certificate::add_check(Check check) {
    if (!check.passed && verdict_ != Verdict::inconclusive)
        throw std::logic_error("failed check '" + check.name + "' on a decisive certificate");
    checks_.push_back(std::move(check));
    return *this;
}

Certificate& Certificate::add_witness(const std::string& key, Json value) {
    witnesses_[key] = std::move(value);
    return *this;
}

Certificate& Certificate::set_verdict(Verdict v) {
    if (v != Verdict::inconclusive && !all_checks_passed())
        throw std::logic_error("certificate '" + claim_ + "' cannot be decisive with failed checks");
    verdict_ = v;
    return *this;
}

std::string Certificate::parameter(const std::string& key) const {
    if (!parameters_.contains(key)) throw std::out_of_range("certificate has no parameter '" + key + "'");
    return parameters_.at(key).get<std::string>();
}

Rational Certificate::rational_parameter(const std::string& key) const { return Rational::parse(parameter(key)); }

std::optional<std::string> Certificate::find_parameter(const std::string& key) const {
    if (!parameters_.contains(key)) return std::nullopt;
    return parameters_.at(key).get<std::string>();
}

Json Certificate::to_json() const {
    Json checks = Json::array();
    for (const auto& c : checks_) {
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"relation", c.relation}, {"passed", c.passed}});
    }
    return Json{{"claim", claim_},
                {"parameters", parameters_},
                {"checks", std::move(checks)},
                {"verdict", std::string(to_string(verdict_))},
                {"witnesses", witnesses_}};
}

Certificate Certificate::from_json(const Json& j) {
    Certificate cert(j.at("claim").get<std::string>());
    cert.parameters_ = j.at("parameters");
    for (const auto& c : j.at("checks")) {
        cert.checks_.push_back({c.at("name").get<std::string>(), c.at("lhs").get<std::string>(),
                                c.at("rhs").get<std::string>(), c.at("relation").get<std::string>(),
                                c.at("passed").get<bool>()});
    }
    cert.witnesses_ = j.at("witnesses");
    cert.set_verdict(verdict_from_string(j.at("verdict").get<std::string>()));
    return cert;
}

namespace {

void render_json_value(std::ostringstream& os, const Json& v, const std::string& indent) {
    if (v.is_string()) {
        os << v.get<std::string>() << "\n";
    } else if (v.is_object()) {
        os << "\n";
        for (const auto& [key, value] : v.items()) {
            os << indent << "  " << key << ": ";
            render_json_value(os, value, indent + "  ");
        }
    } else {
        os << v.dump() << "\n";
    }
}

}  // namespace

std::string Certificate::to_text() const {
    std::ostringstream os;
    os << "claim: " << claim_ << "\n";
    os << "verdict: " << to_string(verdict_) << "\n";
    if (!parameters_.empty()) {
        os << "parameters:\n";
        for (const auto& [key, value] : parameters_.items()) {
            os << "  " << key << " = ";
            render_json_value(os, value, "  ");
        }
    }
    if (!checks_.empty()) {
        os << "checks:\n";
        for (const auto& c : checks_) {
            os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.lhs << " " << c.relation << " "
               << c.rhs << "\n";
        }
    }
    if (!witnesses_.empty()) {
        os << "witnesses:\n";
        for (const auto& [key, value] : witnesses_.items()) {
            os << "  " << key << " = ";
            render_json_value(os, value, "  ");
        }
    }
    return os.str();
}

}  // namespace spink
