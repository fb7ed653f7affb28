#include "checks_internal.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace godeaux {

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h) {
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skip: return "skip";
    }
    return "?";
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

const CheckRecord* Report::find(const std::string& example, const std::string& name) const {
    for (const auto& r : records)
        if (r.example == example && r.name == name) return &r;
    return nullptr;
}

std::vector<std::string> check_names(const std::string& example) {
    if (example == "campedelli")
        return {"condition-count", "octic-reconstruction", "residual-conditions", "reduction-match",
                "singularity-taxonomy", "smoothness-certificate", "irreducibility", "genus",
                "bezout-cq", "invariants", "torsion"};
    if (example == "oort-peters")
        return {"intersection-table", "class-table", "torsion", "bicanonical-pencil", "quadric-relation"};
    throw InputError("unknown example " + example);
}

std::uint64_t oort_peters_default_prime(std::uint64_t start) {
    for (std::uint64_t p = std::max<std::uint64_t>(start, 5);; ++p)
        if (is_prime(p) && sqrt_mod_p(-3, p)) return p;
}

namespace detail {

CurveAsset AssetStore::load(const std::string& name) {
    std::string path = dir + "/" + name + ".json";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read asset " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    raw[name] = ss.str();
    try {
        return parse_curve_asset(raw[name], name);
    } catch (const AssetError& e) {
        throw InputError(e.what());
    }
}

std::string AssetStore::digest_of(const std::vector<std::string>& names, const std::string& extra) const {
    std::uint64_t h = fnv1a(extra);
    for (const auto& n : names) {
        auto it = raw.find(n);
        h = fnv1a(n, h);
        if (it != raw.end()) h = fnv1a(it->second, h);
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Form<RationalField> rational_form(const Form<TowerField>& f) {
    Form<RationalField> r(RationalField{}, f.degree);
    for (const auto& [e, v] : f.terms) {
        if (!v.is_rational()) throw std::invalid_argument("coefficient outside Q");
        r.set(e, v.rational_part());
    }
    return r;
}

Form<PrimeField> reduce_form(const Form<RationalField>& f, std::uint64_t p) {
    return map_coefficients(f, PrimeField(p), [p](const Rational& q) { return Fp(reduce_mod(q, p), p); });
}

}  // namespace detail

Report run(const RunConfig& cfg) {
    using namespace detail;
    Report rep;
    rep.config = cfg;
    if (cfg.example != "campedelli" && cfg.example != "oort-peters" && cfg.example != "both")
        throw InputError("unknown example " + cfg.example);
    std::vector<std::string> examples;
    if (cfg.example != "oort-peters") examples.push_back("campedelli");
    if (cfg.example != "campedelli") examples.push_back("oort-peters");

    // every requested check name must exist in some selected example
    for (const auto& want : cfg.checks) {
        bool known = false;
        for (const auto& ex : examples)
            for (const auto& n : check_names(ex)) known = known || n == want;
        if (!known) throw InputError("unknown check " + want);
    }
    auto selected = [&](const std::string& name) {
        if (cfg.checks.empty()) return true;
        for (const auto& c : cfg.checks)
            if (c == name) return true;
        return false;
    };

    BranchBits bits;
    try {
        bits = BranchBits::parse(cfg.branches);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad branch bits: ") + e.what());
    }
    if (cfg.prime && !is_prime(*cfg.prime)) throw InputError("not a prime: " + std::to_string(*cfg.prime));

    AssetStore store;
    store.dir = cfg.asset_dir.empty() ? default_asset_dir() : cfg.asset_dir;

    for (const auto& ex : examples) {
        bool any = false;
        for (const auto& n : check_names(ex)) any = any || selected(n);
        if (!any) continue;
        std::vector<CheckDef> defs;
        std::vector<std::string> assets;
        std::string setup;
        if (ex == "campedelli") {
            std::uint64_t p = cfg.prime.value_or(30047);
            bool default_setup = p == 30047 && bits.str() == BranchBits{}.str();
            defs = campedelli_checks(store, p, bits, default_setup);
            assets = {"campedelli_octic", "campedelli_conic"};
            setup = ex + "|" + std::to_string(p) + "|" + bits.str();
        } else {
            std::uint64_t p = cfg.prime.value_or(oort_peters_default_prime());
            defs = oort_peters_checks(store, p);
            assets = {"op_q1", "op_q2", "op_c1", "op_c2", "op_q", "op_qtilde", "op_lines"};
            setup = ex + "|" + std::to_string(p);
        }
        for (auto& d : defs) {
            if (!selected(d.name)) continue;
            CheckRecord r;
            r.example = ex;
            r.name = d.name;
            r.anchor = d.anchor;
            r.digest = store.digest_of(assets, setup + "|" + d.name);
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto out = d.body();
                r.verdict = out.verdict;
                r.witness = std::move(out.witness);
            } catch (const InputError&) {
                throw;
            } catch (const std::exception& e) {
                r.verdict = Verdict::Fail;
                r.witness = {{"error", e.what()}};
            }
            r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            rep.records.push_back(std::move(r));
        }
    }
    return rep;
}

nlohmann::json report_json(const Report& r, bool with_times) {
    nlohmann::json out;
    out["schema"] = kReportSchema;
    nlohmann::json cfg = {{"example", r.config.example}, {"branches", r.config.branches}, {"checks", r.config.checks}};
    cfg["prime"] = r.config.prime ? nlohmann::json(*r.config.prime) : nlohmann::json(nullptr);
    out["config"] = cfg;
    out["verdict"] = r.all_pass() ? "pass" : "fail";
    auto& list = out["checks"] = nlohmann::json::array();
    for (const auto& c : r.records) {
        nlohmann::json j = {{"example", c.example},
                            {"name", c.name},
                            {"anchor", c.anchor},
                            {"digest", c.digest},
                            {"verdict", verdict_name(c.verdict)},
                            {"witness", c.witness}};
        if (with_times) j["wall_ms"] = c.wall_ms;
        list.push_back(j);
    }
    return out;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "schema " << kReportSchema << "\n";
    for (const auto& c : r.records) {
        os << std::left << std::setw(5) << verdict_name(c.verdict) << "  " << std::setw(12) << c.example << " "
           << std::setw(24) << c.name << " [" << c.anchor << "] " << std::fixed << std::setprecision(0) << c.wall_ms
           << " ms\n";
        if (c.verdict == Verdict::Fail) os << "       witness: " << c.witness.dump() << "\n";
    }
    os << "overall: " << (r.all_pass() ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace godeaux
