#include "godeaux/picard.hpp"

#include <sstream>

namespace godeaux {

int BlowupConfig::index(const std::string& name) const {
    for (int j = 0; j < size(); ++j)
        if (centers[j].name == name) return j;
    throw std::out_of_range("unknown center " + name);
}

std::vector<int> BlowupConfig::children(int j) const {
    std::vector<int> out;
    for (int k = 0; k < size(); ++k)
        if (centers[k].parent == j) out.push_back(k);
    return out;
}

int BlowupConfig::depth(int j) const {
    int d = 0;
    while (centers[j].parent != -1) {
        j = centers[j].parent;
        ++d;
    }
    return d;
}

DivClass DivClass::exceptional(int n, int j) {
    auto a = zero(n);
    a.c.at(j) = 1;
    return a;
}

namespace {
void same_size(const DivClass& a, const DivClass& b) {
    if (a.c.size() != b.c.size()) throw std::invalid_argument("classes from different blow-up configurations");
}
}  // namespace

DivClass operator+(const DivClass& a, const DivClass& b) {
    same_size(a, b);
    DivClass r = a;
    r.d += b.d;
    for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] += b.c[j];
    return r;
}

DivClass operator-(const DivClass& a, const DivClass& b) { return a + (-1) * b; }

DivClass operator*(int k, const DivClass& a) {
    DivClass r = a;
    r.d *= k;
    for (auto& x : r.c) x *= k;
    return r;
}

int intersect(const DivClass& a, const DivClass& b) {
    same_size(a, b);
    int s = a.d * b.d;
    for (std::size_t j = 0; j < a.c.size(); ++j) s -= a.c[j] * b.c[j];
    return s;
}

DivClass canonical_class(const BlowupConfig& cfg) {
    DivClass k = DivClass::zero(cfg.size());
    k.d = -3;
    for (auto& x : k.c) x = 1;
    return k;
}

DivClass proper_exceptional(const BlowupConfig& cfg, int j) {
    auto a = DivClass::exceptional(cfg.size(), j);
    for (int k : cfg.children(j)) a.c[k] -= 1;
    return a;
}

DivClass strict_transform_class(const BlowupConfig& cfg, int d, const std::map<std::string, int>& mult) {
    auto a = DivClass::zero(cfg.size());
    a.d = d;
    for (const auto& [name, m] : mult) a.c[cfg.index(name)] -= m;
    return a;
}

std::string class_str(const BlowupConfig& cfg, const DivClass& a) {
    std::ostringstream os;
    if (a.d == 1) os << "h";
    else if (a.d == -1) os << "-h";
    else os << a.d << "h";
    for (int j = 0; j < cfg.size(); ++j) {
        int x = a.c[j];
        if (x == 0) continue;
        os << (x > 0 ? " + " : " - ");
        if (std::abs(x) != 1) os << std::abs(x);
        os << cfg.centers[j].name;
    }
    return os.str();
}

const DivClass& CurveClassTable::at(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end()) throw std::out_of_range("no class named " + name);
    return it->second;
}

DivClass CurveClassTable::combine(const std::vector<std::pair<std::string, int>>& terms) const {
    auto a = DivClass::zero(config.size());
    for (const auto& [n, k] : terms) a = a + k * at(n);
    return a;
}

namespace {

void add_plane_symbols(CurveClassTable& t) {
    const auto& cfg = t.config;
    const int n = cfg.size();
    t.named["H"] = DivClass::hyperplane(n);
    t.named["K"] = canonical_class(cfg);
    for (int j = 0; j < n; ++j) {
        std::string name = cfg.centers[j].name;
        // proper transform under the upper-case name, total under lower case
        std::string upper = name;
        for (auto& ch : upper) ch = static_cast<char>(std::toupper(ch));
        t.named[name] = DivClass::exceptional(n, j);
        t.named[upper] = proper_exceptional(cfg, j);
        t.exceptional.push_back(upper);
    }
}

}  // namespace

CurveClassTable campedelli_table() {
    CurveClassTable t;
    t.config.centers.push_back({"e", -1});
    for (int i = 1; i <= 5; ++i) t.config.centers.push_back({"e" + std::to_string(i), -1});
    for (int i = 1; i <= 5; ++i) t.config.centers.push_back({"f" + std::to_string(i), i});
    add_plane_symbols(t);
    const auto& cfg = t.config;
    auto sum = [&](const std::string& stem, int from, int to) {
        auto a = DivClass::zero(cfg.size());
        for (int i = from; i <= to; ++i) a = a + t.at(stem + std::to_string(i));
        return a;
    };
    auto H = t.at("H"), e = t.at("e");
    t.named["L"] = 5 * H - 2 * e - sum("e", 1, 5) - 2 * sum("f", 1, 5);
    t.named["B"] = 2 * t.at("L");
    t.named["Cbar"] = 8 * H - 4 * e - 3 * (t.at("e1") + t.at("f1")) - 2 * (sum("e", 2, 5) + sum("f", 2, 5));
    t.named["Qbar"] = 2 * H - sum("e", 2, 5) - sum("f", 2, 5);
    return t;
}

CurveClassTable oort_peters_table() {
    CurveClassTable t;
    t.config.centers.push_back({"e", -1});
    for (int i = 1; i <= 5; ++i) t.config.centers.push_back({"e" + std::to_string(i), -1});
    for (int i = 1; i <= 5; ++i) t.config.centers.push_back({"f" + std::to_string(i), i});
    t.config.centers.push_back({"g1", t.config.index("f1")});
    t.config.centers.push_back({"e6", -1});
    add_plane_symbols(t);
    const auto& cfg = t.config;
    auto sum = [&](const std::string& stem, int from, int to) {
        auto a = DivClass::zero(cfg.size());
        for (int i = from; i <= to; ++i) a = a + t.at(stem + std::to_string(i));
        return a;
    };
    auto H = t.at("H"), e = t.at("e"), g1 = t.at("g1"), e6 = t.at("e6");
    auto e_ = [&](int i) { return t.at("e" + std::to_string(i)); };
    auto f_ = [&](int i) { return t.at("f" + std::to_string(i)); };
    t.named["L"] = 5 * H - 2 * e - sum("e", 1, 5) - 2 * sum("f", 1, 5) - g1 - e6;
    t.named["B"] = 2 * t.at("L");
    t.named["Q1bar"] = 2 * H - e - e_(1) - e_(2) - e_(3) - f_(1) - f_(2) - f_(3) - g1;
    t.named["Q2bar"] = 2 * H - e - e_(1) - e_(4) - e_(5) - f_(1) - f_(4) - f_(5) - g1;
    t.named["C1bar"] = 3 * H - sum("e", 1, 5) - sum("f", 1, 5) - e6;
    t.named["C2bar"] = 3 * H - 2 * e - sum("e", 2, 5) - sum("f", 2, 5) - e6;
    t.named["Qbar"] = 2 * H - e - sum("e", 2, 5);
    t.named["ellbar"] = H - e - e_(1);
    t.named["Qtildebar"] = 2 * H - sum("e", 1, 5) - f_(1);
    t.named["elltildebar"] = H - e_(1) - f_(1) - e6;
    t.named["L1"] = 2 * H - e - e_(1) - sum("f", 1, 5) - g1;
    t.named["L2"] = t.at("L") - t.at("L1");
    t.named["B1"] = 2 * t.at("L1");
    t.named["B2"] = 2 * t.at("L2");
    return t;
}

FixedPartResult remove_fixed_exceptional_parts(const DivClass& a, const CurveClassTable& table) {
    FixedPartResult r{a, {}};
    // each subtraction lowers the pairing with an ample-ish class; bound it anyway
    for (int guard = 0; guard < 10000; ++guard) {
        bool changed = false;
        for (const auto& name : table.exceptional) {
            const auto& R = table.at(name);
            if (intersect(R, R) < 0 && intersect(r.mobile, R) < 0) {
                r.mobile = r.mobile - R;
                r.fixed[name] += 1;
                changed = true;
            }
        }
        if (!changed) return r;
    }
    throw std::runtime_error("fixed part extraction did not terminate");
}

}  // namespace godeaux
