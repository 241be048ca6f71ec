#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "spink/exact.hpp"

namespace spink {

using Json = nlohmann::ordered_json;

enum class Verdict { established, excluded, inconclusive };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// One recorded fact: `lhs relation rhs`, and whether it holds.
struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::string relation;
    bool passed = false;

    friend bool operator==(const Check&, const Check&) = default;
};

Check check_equal(std::string name, const Rational& lhs, const Rational& rhs);
Check check_less(std::string name, const Rational& lhs, const Rational& rhs);
Check check_integral(std::string name, const Rational& value);
Check check_not_integral(std::string name, const Rational& value);
Check check_dyadic(std::string name, const Rational& value);

/// Name of the spin^k structure: spin, spin^c, spin^h, spin^4, ...
std::string spin_structure_name(long k);

/// Structured verdict on a claim together with its evidence trail. The
/// verdict may only be `established` or `excluded` when every check passed.
class Certificate {
public:
    Certificate(std::string claim, Verdict verdict = Verdict::inconclusive);

    const std::string& claim() const { return claim_; }
    Verdict verdict() const { return verdict_; }
    const std::vector<Check>& checks() const { return checks_; }
    const Json& parameters() const { return parameters_; }
    const Json& witnesses() const { return witnesses_; }

    bool all_checks_passed() const;

    Certificate& add_parameter(const std::string& key, const Rational& value);
    Certificate& add_parameter(const std::string& key, const std::string& value);
    Certificate& add_check(Check check);
    Certificate& add_witness(const std::string& key, Json value);
    /// Throws std::logic_error if the verdict is decisive and a check failed.
    Certificate& set_verdict(Verdict v);

    /// Parameter lookups; throw std::out_of_range if absent.
    std::string parameter(const std::string& key) const;
    Rational rational_parameter(const std::string& key) const;
    std::optional<std::string> find_parameter(const std::string& key) const;

    Json to_json() const;
    static Certificate from_json(const Json& j);
    /// Human-readable rendering carrying the same strings as to_json().
    std::string to_text() const;

    friend bool operator==(const Certificate& a, const Certificate& b) { return a.to_json() == b.to_json(); }

private:
    std::string claim_;
    Verdict verdict_;
    Json parameters_ = Json::object();
    std::vector<Check> checks_;
    Json witnesses_ = Json::object();
};

}  // namespace spink
