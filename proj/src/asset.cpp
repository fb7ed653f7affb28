#include "godeaux/asset.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace godeaux {

using nlohmann::json;

std::vector<std::string> shipped_asset_names() {
    return {"campedelli_octic", "campedelli_conic", "op_q1",     "op_q2",    "op_c1",
            "op_c2",            "op_q",             "op_qtilde", "op_lines"};
}

std::string default_asset_dir() {
#ifdef GODEAUX_ASSET_DIR
    return GODEAUX_ASSET_DIR;
#else
    return "assets";
#endif
}

std::array<std::string, 8> tower_to_strings(const Tower& t) {
    std::array<std::string, 8> out;
    auto c = t.coords();
    for (int i = 0; i < 8; ++i) out[i] = rational_to_string(c[i]);
    return out;
}

Tower tower_from_strings(const std::vector<std::string>& s) {
    if (s.size() != 8) throw AssetError("tower coefficient needs 8 rational strings");
    std::array<Rational, 8> c;
    for (int i = 0; i < 8; ++i) {
        try {
            c[i] = parse_rational(s[i]);
        } catch (const std::exception& e) {
            throw AssetError(std::string("malformed coefficient: ") + e.what());
        }
    }
    return Tower::from_coords(c);
}

namespace {

Tower tower_from_json(const json& j) {
    if (!j.is_array()) throw AssetError("tower coefficient must be an array");
    std::vector<std::string> s;
    for (const auto& x : j) {
        if (!x.is_string()) throw AssetError("tower coordinates must be strings");
        s.push_back(x.get<std::string>());
    }
    return tower_from_strings(s);
}

json tower_to_json(const Tower& t) {
    json a = json::array();
    for (const auto& s : tower_to_strings(t)) a.push_back(s);
    return a;
}

Exps exps_from_json(const json& j, int degree) {
    if (!j.is_array() || j.size() != 3) throw AssetError("exps must be a triple");
    Exps e;
    for (int k = 0; k < 3; ++k) {
        if (!j[k].is_number_integer()) throw AssetError("exponent must be an integer");
        e[k] = j[k].get<int>();
        if (e[k] < 0) throw AssetError("negative exponent");
    }
    if (e[0] + e[1] + e[2] != degree) throw AssetError("wrong term degree");
    return e;
}

int degree_from_json(const json& d) {
    if (!d.contains("degree") || !d["degree"].is_number_integer()) throw AssetError("missing integer degree");
    int deg = d["degree"].get<int>();
    if (deg < 0) throw AssetError("negative degree");
    return deg;
}

Form<TowerField> tower_form_from_json(const json& d) {
    int deg = degree_from_json(d);
    if (!d.contains("terms") || !d["terms"].is_array()) throw AssetError("missing term list");
    Form<TowerField> f(TowerField{}, deg);
    std::set<Exps> seen;
    for (const auto& t : d["terms"]) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coeff")) throw AssetError("malformed term");
        Exps e = exps_from_json(t["exps"], deg);
        if (!seen.insert(e).second) throw AssetError("duplicate monomial");
        Tower c = tower_from_json(t["coeff"]);
        if (c.is_zero()) throw AssetError("zero coefficient stored");
        f.set(e, c);
    }
    return f;
}

json point_to_json(const Point<TowerField>& P) {
    json a = json::array();
    for (const auto& c : P) a.push_back(tower_to_json(c));
    return a;
}

Point<TowerField> point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw AssetError("point must have three coordinates");
    Point<TowerField> P{tower_from_json(j[0]), tower_from_json(j[1]), tower_from_json(j[2])};
    if (P[0].is_zero() && P[1].is_zero() && P[2].is_zero()) throw AssetError("all-zero point");
    return P;
}

json form_terms(const Form<TowerField>& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms) terms.push_back({{"exps", {e[0], e[1], e[2]}}, {"coeff", tower_to_json(c)}});
    return terms;
}

}  // namespace

CurveAsset parse_curve_asset(const std::string& text, const std::string& name) {
    json d;
    try {
        d = json::parse(text);
    } catch (const json::parse_error& e) {
        throw AssetError(std::string("parse error: ") + e.what());
    }
    if (!d.is_object()) throw AssetError("asset must be an object");
    CurveAsset a;
    a.name = name;
    if (!d.contains("ring")) throw AssetError("missing ring tag");
    a.degree = degree_from_json(d);
    const auto& ring = d["ring"];
    if (ring.is_string() && ring.get<std::string>() == "tower") {
        a.tower = tower_form_from_json(d);
    } else if (ring.is_object() && ring.size() == 1 && ring.contains("fp") && ring["fp"].is_number_unsigned()) {
        std::uint64_t p = ring["fp"].get<std::uint64_t>();
        if (!is_prime(p)) throw AssetError("fp modulus is not prime");
        Form<PrimeField> f(PrimeField(p), a.degree);
        std::set<Exps> seen;
        if (!d.contains("terms") || !d["terms"].is_array()) throw AssetError("missing term list");
        for (const auto& t : d["terms"]) {
            if (!t.is_object() || !t.contains("exps") || !t.contains("coeff")) throw AssetError("malformed term");
            Exps e = exps_from_json(t["exps"], a.degree);
            if (!seen.insert(e).second) throw AssetError("duplicate monomial");
            if (!t["coeff"].is_string()) throw AssetError("fp coefficient must be a decimal string");
            auto s = t["coeff"].get<std::string>();
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw AssetError("malformed coefficient: " + s);
            mpz_class v(s);
            if (v >= mpz_class(std::to_string(p)) || v == 0) throw AssetError("fp coefficient out of range");
            f.set(e, Fp(std::stoull(s), p));
        }
        a.fp = f;
    } else {
        throw AssetError("unknown ring tag");
    }
    if (d.contains("singularities")) {
        if (!a.tower) throw AssetError("singularities need tower coordinates");
        for (const auto& s : d["singularities"]) {
            SingularitySpec<TowerField> spec;
            if (!s.contains("kind") || !s["kind"].is_string()) throw AssetError("singularity without kind");
            try {
                spec.kind = parse_kind(s["kind"].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw AssetError(e.what());
            }
            if (!s.contains("point")) throw AssetError("singularity without point");
            spec.at.base = point_from_json(s["point"]);
            if (s.contains("multiplicity")) spec.multiplicity = s["multiplicity"].get<int>();
            if (s.contains("tangent")) spec.tangent = point_from_json(s["tangent"]);
            a.singularities.push_back(spec);
        }
    }
    if (d.contains("components")) {
        if (!a.tower) throw AssetError("components need tower coefficients");
        for (const auto& c : d["components"]) {
            if (!c.contains("name") || !c["name"].is_string()) throw AssetError("component without name");
            a.components.push_back({c["name"].get<std::string>(), tower_form_from_json(c)});
        }
        Form<TowerField> prod = Form<TowerField>::monomial(TowerField{}, {0, 0, 0}, Tower(1));
        for (const auto& [n, f] : a.components) prod = prod * f;
        if (!(prod == *a.tower)) throw AssetError("components do not multiply to the curve");
    }
    return a;
}

CurveAsset load_curve_asset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AssetError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name = name.substr(0, name.size() - 5);
    return parse_curve_asset(ss.str(), name);
}

CurveAsset load_named_asset(const std::string& dir, const std::string& name) {
    return load_curve_asset(dir + "/" + name + ".json");
}

std::string serialize_curve_asset(const CurveAsset& a) {
    json d;
    d["degree"] = a.degree;
    if (a.tower) {
        d["ring"] = "tower";
        d["terms"] = form_terms(*a.tower);
    } else if (a.fp) {
        d["ring"] = {{"fp", a.fp->F.p}};
        json terms = json::array();
        for (const auto& [e, c] : a.fp->terms) terms.push_back({{"exps", {e[0], e[1], e[2]}}, {"coeff", std::to_string(c.v)}});
        d["terms"] = terms;
    }
    if (!a.singularities.empty()) {
        json ss = json::array();
        for (const auto& s : a.singularities) {
            json j;
            j["kind"] = kind_name(s.kind);
            j["point"] = point_to_json(s.at.base);
            if (s.kind == SingKind::Ordinary) j["multiplicity"] = s.multiplicity;
            if (s.tangent) j["tangent"] = point_to_json(*s.tangent);
            ss.push_back(j);
        }
        d["singularities"] = ss;
    }
    if (!a.components.empty()) {
        json cs = json::array();
        for (const auto& [n, f] : a.components)
            cs.push_back({{"name", n}, {"ring", "tower"}, {"degree", f.degree}, {"terms", form_terms(f)}});
        d["components"] = cs;
    }
    return d.dump(1) + "\n";
}

const Form<TowerField>& require_curve(const CurveAsset& a) {
    if (!a.tower) throw AssetError(a.name + ": expected tower coefficients");
    if (a.tower->is_zero()) throw AssetError(a.name + ": zero polynomial is not a curve");
    return *a.tower;
}

}  // namespace godeaux
