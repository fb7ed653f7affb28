#pragma once

#include "godeaux/asset.hpp"
#include "godeaux/checks.hpp"

#include <functional>
#include <map>

namespace godeaux::detail {

using json = nlohmann::json;

struct Outcome {
    Verdict verdict = Verdict::Fail;
    json witness = json::object();
};

inline Outcome pass_if(bool ok, json w) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(w)}; }

struct CheckDef {
    std::string name;
    std::string anchor;
    std::function<Outcome()> body;
};

// Loads a shipped asset and remembers its raw bytes for the input digest.
struct AssetStore {
    std::string dir;
    std::map<std::string, std::string> raw;
    CurveAsset load(const std::string& name);
    std::string digest_of(const std::vector<std::string>& names, const std::string& extra) const;
};

inline json fp_point(const Point<PrimeField>& P) {
    auto n = normalize_point(P);
    return json::array({n[0].v, n[1].v, n[2].v});
}

template <class Field>
json point_strings(const Field& F, const Point<Field>& P) {
    return json::array({F.str(P[0]), F.str(P[1]), F.str(P[2])});
}

// A form with rational coefficients read from a tower asset.
Form<RationalField> rational_form(const Form<TowerField>& f);
Form<PrimeField> reduce_form(const Form<RationalField>& f, std::uint64_t p);

// Kernel elements of a homogeneous condition system as forms.
template <class Field>
std::vector<Form<Field>> system_members(Field F, int d, const ConditionMatrix<Field>& sys) {
    return linear_system_basis(F, d, sys.rows);
}

std::vector<CheckDef> campedelli_checks(AssetStore& store, std::uint64_t p, const BranchBits& bits, bool default_setup);
std::vector<CheckDef> oort_peters_checks(AssetStore& store, std::uint64_t p);

}  // namespace godeaux::detail
