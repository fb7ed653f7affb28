#pragma once

#include "godeaux/poly.hpp"
#include "godeaux/singular.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

class AssetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CurveAsset {
    std::string name;
    int degree = 0;
    std::optional<Form<TowerField>> tower;  // ring "tower"
    std::optional<Form<PrimeField>> fp;     // ring {"fp": p}
    std::vector<SingularitySpec<TowerField>> singularities;
    std::vector<std::pair<std::string, Form<TowerField>>> components;
};

std::vector<std::string> shipped_asset_names();
std::string default_asset_dir();

CurveAsset parse_curve_asset(const std::string& text, const std::string& name = "");
CurveAsset load_curve_asset(const std::string& path);
CurveAsset load_named_asset(const std::string& dir, const std::string& name);
std::string serialize_curve_asset(const CurveAsset& a);

// Rejects the zero polynomial where a curve is required.
const Form<TowerField>& require_curve(const CurveAsset& a);

std::array<std::string, 8> tower_to_strings(const Tower& t);
Tower tower_from_strings(const std::vector<std::string>& s);

}  // namespace godeaux
