#include "spink/mod2.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spink {

// ---- F2Element --------------------------------------------------------------

F2Element F2Element::basis(std::size_t dimension, std::size_t index) {
    F2Element e(dimension);
    e.bits_.at(index) = true;
    return e;
}

bool F2Element::is_zero() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

std::vector<std::size_t> F2Element::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

F2Element& F2Element::operator+=(const F2Element& rhs) {
    if (rhs.dimension() != dimension()) throw std::invalid_argument("F2Element: dimension mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] != rhs.bits_[i];
    return *this;
}

// ---- F2Algebra --------------------------------------------------------------

F2Algebra F2Algebra::build(std::vector<BasisElement> basis, const std::vector<ProductTriple>& products,
                           const std::string& unit_name) {
    F2Algebra a;
    a.basis_ = std::move(basis);
    std::set<std::string> seen;
    for (const auto& b : a.basis_) {
        if (b.name.empty()) throw ModelError("basis element with empty name");
        if (b.degree < 0) throw ModelError("basis element '" + b.name + "' has negative degree");
        if (!seen.insert(b.name).second) throw ModelError("duplicate basis element '" + b.name + "'");
    }
    a.unit_ = a.index_of(unit_name);
    if (a.basis_[a.unit_].degree != 0) throw ModelError("unit '" + unit_name + "' must have degree 0");

    const std::size_t n = a.dimension();
    a.table_.assign(n, std::vector<F2Element>(n, F2Element(n)));
    for (std::size_t i = 0; i < n; ++i) {
        a.table_[a.unit_][i] = F2Element::basis(n, i);
        a.table_[i][a.unit_] = F2Element::basis(n, i);
    }
    for (const auto& [x, y, z] : products) {
        const std::size_t i = a.index_of(x), j = a.index_of(y), k = a.index_of(z);
        if (i == a.unit_ || j == a.unit_) {
            if ((i == a.unit_ && k == j) || (j == a.unit_ && k == i)) continue;
            throw ModelError("unit law violated: " + x + "*" + y + " listed as " + z);
        }
        a.table_[i][j].flip(k);
    }
    a.validate();
    return a;
}

void F2Algebra::validate() const {
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ij = table_[i][j];
            for (std::size_t k : ij.support()) {
                if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
                    throw ModelError("product " + basis_[i].name + "*" + basis_[j].name + " contains " + basis_[k].name +
                                     " of the wrong degree");
            }
            if (ij != table_[j][i])
                throw ModelError("commutativity fails: " + basis_[i].name + "*" + basis_[j].name + " = " + format(ij) +
                                 " but " + basis_[j].name + "*" + basis_[i].name + " = " + format(table_[j][i]));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const F2Element left = multiply(table_[i][j], F2Element::basis(n, k));
                const F2Element right = multiply(F2Element::basis(n, i), table_[j][k]);
                if (left != right)
                    throw ModelError("associativity fails on (" + basis_[i].name + ", " + basis_[j].name + ", " +
                                     basis_[k].name + ")");
            }
}

std::size_t F2Algebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    throw ModelError("unknown basis element '" + name + "'");
}

int F2Algebra::top_degree() const {
    int top = 0;
    for (const auto& b : basis_) top = std::max(top, b.degree);
    return top;
}

F2Element F2Algebra::element(std::initializer_list<std::string> names) const {
    F2Element e = zero();
    for (const auto& name : names) e.flip(index_of(name));
    return e;
}

F2Element F2Algebra::multiply(const F2Element& a, const F2Element& b) const {
    F2Element out = zero();
    for (std::size_t i : a.support())
        for (std::size_t j : b.support()) out += table_[i][j];
    return out;
}

bool F2Algebra::is_homogeneous(const F2Element& e, int d) const {
    for (std::size_t i : e.support())
        if (basis_[i].degree != d) return false;
    return true;
}

std::size_t F2Algebra::dimension_in_degree(int d) const {
    return static_cast<std::size_t>(
        std::count_if(basis_.begin(), basis_.end(), [d](const BasisElement& b) { return b.degree == d; }));
}

std::vector<std::size_t> F2Algebra::betti_numbers() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= top_degree(); ++d) out.push_back(dimension_in_degree(d));
    return out;
}

std::vector<ProductTriple> F2Algebra::product_triples() const {
    std::vector<ProductTriple> out;
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (i == unit_ || j == unit_) continue;
            for (std::size_t k : table_[i][j].support()) out.emplace_back(basis_[i].name, basis_[j].name, basis_[k].name);
        }
    return out;
}

std::string F2Algebra::format(const F2Element& e) const {
    std::string s;
    for (std::size_t i : e.support()) {
        if (!s.empty()) s += " + ";
        s += basis_[i].name;
    }
    return s.empty() ? "0" : s;
}

// ---- integral profiles ------------------------------------------------------

long IntGroup::two_torsion_count() const {
    return static_cast<long>(std::count_if(torsion.begin(), torsion.end(), [](long t) { return t % 2 == 0; }));
}

std::string IntGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (free > 0) s = free == 1 ? "Z" : "Z^" + std::to_string(free);
    for (long t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(t);
    }
    return s;
}

IntGroup IntProfile::group(int d) const {
    const auto it = groups.find(d);
    return it == groups.end() ? IntGroup{} : it->second;
}

long IntProfile::mod2_rank(int d) const {
    const IntGroup here = group(d);
    return here.free + here.two_torsion_count() + group(d + 1).two_torsion_count();
}

// ---- SpaceModel -------------------------------------------------------------

SpaceModel SpaceModel::make(std::string name, int dimension, F2Algebra algebra, SWTotal<F2Element> tangent_sw,
                            IntProfile int_profile) {
    if (dimension < 0) throw ModelError("model '" + name + "': negative dimension");
    if (algebra.top_degree() > dimension)
        throw ModelError("model '" + name + "': cohomology above the dimension");
    const F2Element zero = algebra.zero();

    auto& comps = tangent_sw.components;
    if (comps.empty()) comps.push_back(algebra.unit());
    if (comps.size() > static_cast<std::size_t>(dimension) + 1) {
        for (std::size_t d = static_cast<std::size_t>(dimension) + 1; d < comps.size(); ++d)
            if (comps[d].dimension() != algebra.dimension() || !comps[d].is_zero())
                throw ModelError("model '" + name + "': w" + std::to_string(d) + " above the dimension");
    }
    comps.resize(static_cast<std::size_t>(dimension) + 1, zero);
    if (comps[0] != algebra.unit()) throw ModelError("model '" + name + "': w0 must be 1");
    for (std::size_t d = 0; d < comps.size(); ++d) {
        if (comps[d].dimension() != algebra.dimension())
            throw ModelError("model '" + name + "': w" + std::to_string(d) + " has the wrong dimension");
        if (!algebra.is_homogeneous(comps[d], static_cast<int>(d)))
            throw ModelError("model '" + name + "': w" + std::to_string(d) + " is not of degree " + std::to_string(d));
    }

    for (auto& [d, g] : int_profile.groups) {
        if (d < 0 || d > dimension)
            throw ModelError("model '" + name + "': int_profile degree " + std::to_string(d) + " out of range");
        if (g.free < 0) throw ModelError("model '" + name + "': negative free rank in degree " + std::to_string(d));
        for (long t : g.torsion)
            if (t < 2) throw ModelError("model '" + name + "': torsion order " + std::to_string(t) + " < 2");
        std::sort(g.torsion.begin(), g.torsion.end());
    }
    std::erase_if(int_profile.groups, [](const auto& kv) { return kv.second.is_zero(); });

    for (int d = 0; d <= dimension; ++d) {
        const auto mod2 = static_cast<long>(algebra.dimension_in_degree(d));
        if (mod2 != int_profile.mod2_rank(d))
            throw ModelError("model '" + name + "': mod-2 Betti number " + std::to_string(mod2) + " in degree " +
                             std::to_string(d) + " disagrees with the integral profile (universal coefficients give " +
                             std::to_string(int_profile.mod2_rank(d)) + ")");
    }

    SpaceModel model;
    model.name_ = std::move(name);
    model.dimension_ = dimension;
    model.algebra_ = std::move(algebra);
    model.sw_ = std::move(tangent_sw);
    model.profile_ = std::move(int_profile);
    return model;
}

F2Element SpaceModel::w(int d) const {
    if (d < 0) throw std::invalid_argument("negative Stiefel-Whitney degree");
    return sw_.component(static_cast<std::size_t>(d), algebra_.zero());
}

SpaceModel wu_manifold() {
    F2Algebra algebra = F2Algebra::build({{"1", 0}, {"z2", 2}, {"z3", 3}, {"z5", 5}},
                                         {{"z2", "z3", "z5"}, {"z3", "z2", "z5"}});
    SWTotal<F2Element> w{{algebra.unit(), algebra.zero(), algebra.element("z2"), algebra.element("z3")}};
    IntProfile profile{{{0, {1, {}}}, {3, {0, {2}}}, {5, {1, {}}}}};
    return SpaceModel::make("Wu manifold SU(3)/SO(3)", 5, std::move(algebra), std::move(w), std::move(profile));
}

SpaceModel sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    const std::string top = "s" + std::to_string(n);
    F2Algebra algebra = F2Algebra::build({{"1", 0}, {top, n}}, {});
    SWTotal<F2Element> w{{algebra.unit()}};
    IntProfile profile{{{0, {1, {}}}, {n, {1, {}}}}};
    return SpaceModel::make("S^" + std::to_string(n), n, std::move(algebra), std::move(w), std::move(profile));
}

SpaceModel point() {
    F2Algebra algebra = F2Algebra::build({{"1", 0}}, {});
    return SpaceModel::make("point", 0, algebra, SWTotal<F2Element>{{algebra.unit()}}, IntProfile{{{0, {1, {}}}}});
}

// ---- Künneth ----------------------------------------------------------------

namespace {

long gcd_long(long a, long b) { return std::gcd(a, b); }

// H^*(A) ⊗ H^*(B) ⊕ Tor(H^*(A), H^*(B)) shifted down by one.
IntProfile kunneth_profile(const IntProfile& a, const IntProfile& b) {
    IntProfile out;
    for (const auto& [p, ga] : a.groups)
        for (const auto& [q, gb] : b.groups) {
            IntGroup& tensor = out.groups[p + q];
            tensor.free += ga.free * gb.free;
            for (long i = 0; i < ga.free; ++i) tensor.torsion.insert(tensor.torsion.end(), gb.torsion.begin(), gb.torsion.end());
            for (long j = 0; j < gb.free; ++j) tensor.torsion.insert(tensor.torsion.end(), ga.torsion.begin(), ga.torsion.end());
            for (long s : ga.torsion)
                for (long t : gb.torsion) {
                    const long g = gcd_long(s, t);
                    if (g > 1) {
                        tensor.torsion.push_back(g);
                        out.groups[p + q - 1].torsion.push_back(g);
                    }
                }
        }
    return out;
}

}  // namespace

SpaceModel kunneth(const SpaceModel& a, const SpaceModel& b) {
    const F2Algebra& A = a.algebra();
    const F2Algebra& B = b.algebra();
    const bool a_point = A.dimension() == 1, b_point = B.dimension() == 1;

    // Basis of A ⊗ B ordered by total degree, then by factor indices.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < A.dimension(); ++i)
        for (std::size_t j = 0; j < B.dimension(); ++j) pairs.emplace_back(i, j);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        return A.basis()[x.first].degree + B.basis()[x.second].degree <
               A.basis()[y.first].degree + B.basis()[y.second].degree;
    });
    std::vector<std::vector<std::size_t>> index(A.dimension(), std::vector<std::size_t>(B.dimension()));
    std::vector<BasisElement> basis;
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        const auto [i, j] = pairs[n];
        index[i][j] = n;
        const auto& x = A.basis()[i];
        const auto& y = B.basis()[j];
        std::string name;
        if (b_point) name = x.name;
        else if (a_point) name = y.name;
        else if (i == A.unit_index() && j == B.unit_index()) name = "1";
        else name = x.name + "⊗" + y.name;
        basis.push_back({std::move(name), x.degree + y.degree});
    }
    const std::string unit_name = basis[index[A.unit_index()][B.unit_index()]].name;

    std::vector<ProductTriple> triples;
    for (const auto& [i, j] : pairs)
        for (const auto& [k, l] : pairs)
            for (std::size_t s : A.product(i, k).support())
                for (std::size_t t : B.product(j, l).support())
                    triples.emplace_back(basis[index[i][j]].name, basis[index[k][l]].name, basis[index[s][t]].name);
    // Unit rows are implicit in build(); drop them here.
    std::erase_if(triples, [&](const ProductTriple& t) { return std::get<0>(t) == unit_name || std::get<1>(t) == unit_name; });
    F2Algebra algebra = F2Algebra::build(basis, triples, unit_name);

    auto tensor = [&](const F2Element& x, const F2Element& y) {
        F2Element out = algebra.zero();
        for (std::size_t i : x.support())
            for (std::size_t j : y.support()) out.flip(index[i][j]);
        return out;
    };
    const int dimension = a.dimension() + b.dimension();
    SWTotal<F2Element> w;
    for (int d = 0; d <= dimension; ++d) {
        F2Element wd = algebra.zero();
        for (int i = 0; i <= d; ++i) wd += tensor(a.w(i), b.w(d - i));
        w.components.push_back(std::move(wd));
    }

    std::string name = b_point ? a.name() : (a_point ? b.name() : a.name() + " x " + b.name());
    return SpaceModel::make(std::move(name), dimension, std::move(algebra), std::move(w),
                            kunneth_profile(a.int_profile(), b.int_profile()));
}

// ---- JSON -------------------------------------------------------------------

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.contains(name)) throw ModelError(std::string("SpaceModel: missing field '") + name + "'");
    return j.at(name);
}

long long_value(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ModelError("SpaceModel: field '" + where + "' is not an integer");
    return v.get<long>();
}

std::string string_value(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ModelError("SpaceModel: field '" + where + "' is not a string");
    return v.get<std::string>();
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> known, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ModelError("SpaceModel: unknown field '" + where + key + "'");
}

}  // namespace

Json SpaceModel::to_json() const {
    Json basis = Json::array();
    for (const auto& b : algebra_.basis()) basis.push_back(Json{{"name", b.name}, {"degree", b.degree}});
    Json products = Json::array();
    for (const auto& [a, b, c] : algebra_.product_triples()) products.push_back(Json::array({a, b, c}));
    Json sw = Json::object();
    for (int d = 1; d <= dimension_; ++d) {
        const F2Element wd = w(d);
        if (wd.is_zero()) continue;
        Json names = Json::array();
        for (std::size_t i : wd.support()) names.push_back(algebra_.basis()[i].name);
        sw[std::to_string(d)] = names;
    }
    Json profile = Json::object();
    for (const auto& [d, g] : profile_.groups) profile[std::to_string(d)] = Json{{"free", g.free}, {"torsion", g.torsion}};
    return Json{{"kind", "space"},
                {"name", name_},
                {"dimension", dimension_},
                {"basis", basis},
                {"unit", algebra_.basis()[algebra_.unit_index()].name},
                {"products", products},
                {"sw", sw},
                {"int_profile", profile}};
}

SpaceModel SpaceModel::from_json(const Json& j) {
    if (!j.is_object()) throw ModelError("SpaceModel: document is not an object");
    reject_unknown(j, {"kind", "name", "dimension", "basis", "unit", "products", "sw", "int_profile"}, "");
    if (j.contains("kind") && j.at("kind") != "space") throw ModelError("SpaceModel: field 'kind' must be \"space\"");

    const std::string name = string_value(field(j, "name"), "name");
    const long dimension = long_value(field(j, "dimension"), "dimension");

    const Json& basis_json = field(j, "basis");
    if (!basis_json.is_array()) throw ModelError("SpaceModel: field 'basis' is not an array");
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < basis_json.size(); ++i) {
        const Json& b = basis_json[i];
        const std::string where = "basis[" + std::to_string(i) + "]";
        if (!b.is_object()) throw ModelError("SpaceModel: field '" + where + "' is not an object");
        reject_unknown(b, {"name", "degree"}, where + ".");
        if (!b.contains("name") || !b.contains("degree"))
            throw ModelError("SpaceModel: field '" + where + "' needs 'name' and 'degree'");
        basis.push_back({string_value(b.at("name"), where + ".name"),
                         static_cast<int>(long_value(b.at("degree"), where + ".degree"))});
    }

    std::vector<ProductTriple> products;
    if (j.contains("products")) {
        const Json& pj = j.at("products");
        if (!pj.is_array()) throw ModelError("SpaceModel: field 'products' is not an array");
        for (std::size_t i = 0; i < pj.size(); ++i) {
            const std::string where = "products[" + std::to_string(i) + "]";
            const Json& t = pj[i];
            if (!t.is_array() || t.size() != 3) throw ModelError("SpaceModel: field '" + where + "' is not a triple");
            products.emplace_back(string_value(t[0], where), string_value(t[1], where), string_value(t[2], where));
        }
    }
    const std::string unit = j.contains("unit") ? string_value(j.at("unit"), "unit") : "1";
    F2Algebra algebra = [&] {
        try {
            return F2Algebra::build(basis, products, unit);
        } catch (const ModelError& e) {
            throw ModelError(std::string("SpaceModel: field 'products': ") + e.what());
        }
    }();

    SWTotal<F2Element> sw{{algebra.unit()}};
    if (j.contains("sw")) {
        const Json& sj = j.at("sw");
        if (!sj.is_object()) throw ModelError("SpaceModel: field 'sw' is not an object");
        for (const auto& [key, value] : sj.items()) {
            const std::string where = "sw." + key;
            int d = 0;
            try {
                std::size_t used = 0;
                d = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ModelError("SpaceModel: field '" + where + "' has a non-integer degree");
            }
            if (d < 1 || d > dimension) throw ModelError("SpaceModel: field '" + where + "' degree out of range");
            if (!value.is_array()) throw ModelError("SpaceModel: field '" + where + "' is not an array of basis names");
            F2Element e = algebra.zero();
            for (const auto& n : value) {
                const std::string bname = string_value(n, where);
                try {
                    e.flip(algebra.index_of(bname));
                } catch (const ModelError&) {
                    throw ModelError("SpaceModel: field '" + where + "' names unknown basis element '" + bname + "'");
                }
            }
            if (sw.components.size() <= static_cast<std::size_t>(d)) sw.components.resize(d + 1, algebra.zero());
            sw.components[d] = e;
        }
    }

    IntProfile profile;
    const Json& ij = field(j, "int_profile");
    if (!ij.is_object()) throw ModelError("SpaceModel: field 'int_profile' is not an object");
    for (const auto& [key, value] : ij.items()) {
        const std::string where = "int_profile." + key;
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ModelError("SpaceModel: field '" + where + "' has a non-integer degree");
        }
        if (!value.is_object()) throw ModelError("SpaceModel: field '" + where + "' is not an object");
        reject_unknown(value, {"free", "torsion"}, where + ".");
        IntGroup g;
        if (value.contains("free")) g.free = long_value(value.at("free"), where + ".free");
        if (value.contains("torsion")) {
            if (!value.at("torsion").is_array()) throw ModelError("SpaceModel: field '" + where + ".torsion' is not an array");
            for (const auto& t : value.at("torsion")) g.torsion.push_back(long_value(t, where + ".torsion"));
        }
        profile.groups[d] = g;
    }
    return make(name, static_cast<int>(dimension), std::move(algebra), std::move(sw), std::move(profile));
}

// ---- lifts and W5 -----------------------------------------------------------

std::string_view to_string(LiftStatus s) {
    switch (s) {
        case LiftStatus::yes: return "yes";
        case LiftStatus::no: return "no";
        case LiftStatus::unknown: return "unknown";
    }
    return "unknown";
}

LiftStatus w4_integral_lift_exists(const SpaceModel& model) {
    if (model.w(4).is_zero()) return LiftStatus::yes;
    if (model.int_profile().group(4).is_zero()) return LiftStatus::no;
    return LiftStatus::unknown;
}

Certificate w5_verdict(const SpaceModel& model) {
    const F2Element w4 = model.w(4);
    const IntGroup h4 = model.int_profile().group(4);
    const LiftStatus lift = w4_integral_lift_exists(model);

    Certificate cert(spin_structure_name(3));
    cert.add_parameter("model", model.name()).add_parameter("dimension", Rational(model.dimension()));
    const std::string w4_text = model.algebra().format(w4);
    switch (lift) {
        case LiftStatus::yes:
            cert.add_check({"w4", w4_text, "0", "=", true});
            cert.add_witness("W5", "0").add_witness("obstruction", "none: W5 vanishes");
            break;
        case LiftStatus::no:
            cert.add_check({"w4", w4_text, "0", "!=", true});
            cert.add_check({"H^4(X;Z)", h4.str(), "0", "=", true});
            cert.add_witness("W5", "nonzero")
                .add_witness("obstruction", "w4 != 0 has no integral lift because H^4(X;Z) = 0, so W5 != 0");
            cert.set_verdict(Verdict::excluded);
            break;
        case LiftStatus::unknown:
            cert.add_check({"w4", w4_text, "0", "!=", true});
            cert.add_check({"H^4(X;Z)", h4.str(), "0", "!=", true});
            cert.add_witness("W5", "unknown")
                .add_witness("obstruction", "undecided: w4 != 0 and H^4(X;Z) != 0; only sufficient criteria are implemented");
            break;
    }
    cert.add_witness("w4 integral lift", std::string(to_string(lift)));
    return cert;
}

}  // namespace spink
