#include "spink/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "spink/certify.hpp"
#include "spink/genus.hpp"

namespace spink::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Integer parse_integer(const std::string& text, const std::string& flag) {
    Integer n;
    if (text.empty() || n.set_str(text, 10) != 0) throw UsageError("--" + flag + ": not an integer: '" + text + "'");
    return n;
}

int exit_for(const Certificate& c) { return c.verdict() == Verdict::excluded ? excluded : ok; }

struct Output {
    bool json = false;
    std::ostream& out;

    int emit(const Certificate& c) const {
        out << (json ? c.to_json().dump(2) + "\n" : c.to_text());
        return exit_for(c);
    }
    void emit(const Json& document, const std::string& text) const { out << (json ? document.dump(2) + "\n" : text); }
};

const char* kExitCodes =
    "Exit codes: 0 established or consistent, 1 excluded (an obstruction was certified), 2 usage or input error.";

}  // namespace

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("model file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("model file '" + path + "': document is not an object");
    if (!j.contains("kind")) throw std::invalid_argument("model file '" + path + "': missing field 'kind'");
    const Json& kind = j.at("kind");
    if (kind == "space") return SpaceModel::from_json(j);
    if (kind == "rhc") return RHCModel::from_json(j);
    throw std::invalid_argument("model file '" + path + "': field 'kind' must be \"space\" or \"rhc\"");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characteristic-class computations and spin^k certificates", "spink"};
    app.footer(kExitCodes);
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    // genus
    auto* genus = app.add_subcommand("genus", "Multiplicative sequence polynomials in p1, p2, ...");
    std::string series_name = "L";
    int degree = 2;
    genus->add_option("--series", series_name, "L, A-hat or mayer")->check(CLI::IsMember({"L", "A-hat", "mayer"}));
    genus->add_option("--degree", degree, "Highest weight (degree 4n)")->check(CLI::Range(1, 12));

    // s-coeffs
    auto* scoeffs = app.add_subcommand("s-coeffs", "Coefficients s_m, s_mm, s_2m of the L-polynomial");
    int s_m = 1;
    scoeffs->add_option("--m", s_m, "m >= 1")->required()->check(CLI::Range(1, 16));

    // realize
    auto* realize = app.add_subcommand("realize", "Realization conditions, or a searched realization witness");
    int r_m = 1;
    std::string r_P2, r_Q, r_sigma_min = "1", r_model;
    bool r_search = false;
    realize->add_option("--m", r_m, "m >= 1")->check(CLI::Range(1, 16));
    realize->add_option("--P2", r_P2, "int p_m^2");
    realize->add_option("--Q", r_Q, "int p_2m");
    realize->add_option("--model", r_model, "rhc model file");
    realize->add_flag("--search", r_search, "Search for a witness (m a power of two)");
    realize->add_option("--sigma-min", r_sigma_min, "Smallest signature for --search");

    // bound
    auto* bound = app.add_subcommand("bound", "Odd-signature exclusion bound for spin^k");
    long b_m = 0, b_k = 0;
    std::string b_sigma;
    bool b_first = false;
    bound->add_option("--m", b_m, "Dimension 8m");
    bound->add_option("--k", b_k, "Rank k")->required()->check(CLI::PositiveNumber);
    bound->add_option("--sigma", b_sigma, "Non-zero signature");
    bound->add_flag("--first-dimension", b_first, "First dimension where the bound excludes spin^k");

    // non-spinh8
    auto* nonspinh = app.add_subcommand("non-spinh8", "Dimension-8 family without spin^h structures");
    std::string n_a;
    nonspinh->add_option("--a", n_a, "Family parameter")->required();

    // wu-product
    auto* wu = app.add_subcommand("wu-product", "W5 verdict on M x M (default M = Wu manifold)");
    std::string w_model;
    bool w_klein = false;
    wu->add_option("--model", w_model, "space model file for M");
    wu->add_flag("--klein", w_klein, "Also certify the product with the Klein bottle");

    // pin-table
    auto* pin = app.add_subcommand("pin-table", "Structures guaranteed in each dimension");
    int p_min = 2, p_max = 7;
    pin->add_option("--min-dim", p_min, "Smallest dimension")->check(CLI::Range(2, 64));
    pin->add_option("--max-dim", p_max, "Largest dimension")->check(CLI::Range(2, 64));

    // mayer-check
    auto* mayer = app.add_subcommand("mayer-check", "Integrality of 2^l A-hat on a rationally highly connected model");
    std::string mc_model;
    long mc_k = 1;
    int mc_m = 1;
    long mc_betti = 1;
    std::string mc_sigma = "1", mc_P2, mc_Q;
    mayer->add_option("--model", mc_model, "rhc model file");
    mayer->add_option("--k", mc_k, "Rank k")->check(CLI::PositiveNumber);
    mayer->add_option("--m", mc_m, "Dimension 8m")->check(CLI::Range(1, 16));
    mayer->add_option("--betti", mc_betti, "Middle Betti number");
    mayer->add_option("--sigma", mc_sigma, "Signature");
    mayer->add_option("--P2", mc_P2, "int p_m^2");
    mayer->add_option("--Q", mc_Q, "int p_2m");

    // w4-lift
    auto* lift = app.add_subcommand("w4-lift", "Integral lift of w4 from p1 data");
    std::string l_p1M, l_p1E, l_euler = "0", l_variant = "plain";
    lift->add_option("--p1M", l_p1M, "p1 of the manifold")->required();
    lift->add_option("--p1E", l_p1E, "p1 of the bundle")->required();
    lift->add_option("--variant", l_variant, "plain, spin4-plus or spin4-minus")
        ->check(CLI::IsMember({"plain", "spin4-plus", "spin4-minus"}));
    lift->add_option("--euler", l_euler, "Euler class of the bundle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code != 0) err << "\n" << app.help();
        return code == 0 ? ok : usage;
    }

    const Output o{json, out};
    try {
        if (*genus) {
            const auto n = static_cast<std::size_t>(degree);
            const CharacteristicSeries series = series_name == "L"       ? l_series(n)
                                                : series_name == "A-hat" ? ahat_series(n)
                                                                         : mayer_series(n);
            const auto polys = genus_polynomials(series, degree);
            Json rows = Json::array();
            std::string text;
            for (int j = 1; j <= degree; ++j) {
                rows.push_back(Json{{"weight", j}, {"polynomial", polys[static_cast<std::size_t>(j)].str()}});
                text += series_name + "_" + std::to_string(j) + " = " + polys[static_cast<std::size_t>(j)].str() + "\n";
            }
            o.emit(Json{{"series", series_name}, {"polynomials", rows}}, text);
            return ok;
        }
        if (*scoeffs) {
            const SCoefficients s = l_coefficients(s_m);
            o.emit(Json{{"m", s_m},
                        {"s_m", s.s_m.fraction_str()},
                        {"s_mm", s.s_mm.fraction_str()},
                        {"s_2m", s.s_2m.fraction_str()}},
                   "s_m = " + s.s_m.str() + ", s_mm = " + s.s_mm.str() + ", s_2m = " + s.s_2m.str() + "\n");
            return ok;
        }
        if (*realize) {
            if (r_search) {
                if (!r_P2.empty() || !r_Q.empty() || !r_model.empty())
                    throw UsageError("realize --search takes only --m and --sigma-min");
                const RealizationWitness w = realization_search(r_m, parse_integer(r_sigma_min, "sigma-min"));
                const Certificate check = realization_conditions(w.m, w.P2, w.Q);
                const Json witness = w.to_json();
                const Json doc{{"witness", witness}, {"conditions", check.to_json()}};
                std::string text = "witness:\n";
                for (const auto& [key, value] : witness.items())
                    text += "  " + key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
                text += check.to_text();
                o.emit(doc, text);
                return ok;
            }
            Integer P2, Q;
            int m = r_m;
            if (!r_model.empty()) {
                if (!r_P2.empty() || !r_Q.empty()) throw UsageError("realize: give either --model or --P2/--Q");
                const Model model = load_model(r_model);
                const auto* rhc = std::get_if<RHCModel>(&model);
                if (!rhc) throw UsageError("realize: --model must be an rhc model");
                P2 = rhc->P2;
                Q = rhc->Q;
                m = static_cast<int>(rhc->m);
            } else {
                if (r_P2.empty() || r_Q.empty()) throw UsageError("realize: --P2 and --Q are required");
                P2 = parse_integer(r_P2, "P2");
                Q = parse_integer(r_Q, "Q");
            }
            return o.emit(realization_conditions(m, P2, Q));
        }
        if (*bound) {
            if (b_first) {
                const long d = bound_exclusion_dimension(b_k);
                o.emit(Json{{"k", b_k}, {"dimension", d}, {"note", "first dimension where the odd-signature bound bites"}},
                       "k = " + std::to_string(b_k) + ": first excluded dimension " + std::to_string(d) +
                           " (criterion-specific, not minimal)\n");
                return ok;
            }
            if (b_m < 1 || b_sigma.empty()) throw UsageError("bound: --m and --sigma are required");
            return o.emit(signature_bound_verdict(b_m, b_k, parse_integer(b_sigma, "sigma")));
        }
        if (*nonspinh) return o.emit(nonspinh8_certificate(parse_integer(n_a, "a")));
        if (*wu) {
            SpaceModel base = wu_manifold();
            if (!w_model.empty()) {
                Model model = load_model(w_model);
                auto* space = std::get_if<SpaceModel>(&model);
                if (!space) throw UsageError("wu-product: --model must be a space model");
                base = *space;
            }
            const Certificate c = w5_verdict(kunneth(base, base));
            if (!w_klein) return o.emit(c);
            const Certificate k = klein_product_pin_obstruction(c);
            o.emit(Json{{"product", c.to_json()}, {"klein", k.to_json()}}, c.to_text() + "\n" + k.to_text());
            return exit_for(k);
        }
        if (*pin) {
            if (p_min > p_max) throw UsageError("pin-table: --min-dim exceeds --max-dim");
            Json rows = Json::array();
            std::ostringstream text;
            text << "n  k  orientable  pin\n";
            for (int n = p_min; n <= p_max; ++n) {
                const StructureRow r = guaranteed_structures(n);
                rows.push_back(Json{{"n", r.n}, {"k", r.k}, {"orientable", r.orientable}, {"pin", r.pin}});
                text << r.n << "  " << r.k << "  " << r.orientable << "  " << r.pin << "\n";
            }
            o.emit(Json{{"rows", rows}}, text.str());
            return ok;
        }
        if (*mayer) {
            RHCModel model;
            if (!mc_model.empty()) {
                if (!mc_P2.empty() || !mc_Q.empty()) throw UsageError("mayer-check: give either --model or --P2/--Q");
                const Model loaded = load_model(mc_model);
                const auto* rhc = std::get_if<RHCModel>(&loaded);
                if (!rhc) throw UsageError("mayer-check: --model must be an rhc model");
                model = *rhc;
            } else {
                if (mc_P2.empty() || mc_Q.empty()) throw UsageError("mayer-check: --P2 and --Q are required");
                model = RHCModel{mc_m, mc_betti, parse_integer(mc_sigma, "sigma"), parse_integer(mc_P2, "P2"),
                                 parse_integer(mc_Q, "Q")};
                model.validate();
            }
            return o.emit(mayer_integrality_check(model, mc_k));
        }
        if (*lift) {
            const LiftVariant variant = l_variant == "plain"        ? LiftVariant::plain
                                        : l_variant == "spin4-plus" ? LiftVariant::spin4_plus
                                                                    : LiftVariant::spin4_minus;
            const Integer value = w4_lift(parse_integer(l_p1M, "p1M"), parse_integer(l_p1E, "p1E"), variant,
                                          parse_integer(l_euler, "euler"));
            Integer parity = value % 2;
            if (parity < 0) parity += 2;
            o.emit(Json{{"variant", l_variant},
                        {"lift", Rational(value).fraction_str()},
                        {"w4 mod 2", Rational(parity).fraction_str()}},
                   "lift = " + Rational(value).fraction_str() + ", w4 mod 2 = " + Rational(parity).fraction_str() + "\n");
            return ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    err << app.help();
    return usage;
}

}  // namespace spink::cli
