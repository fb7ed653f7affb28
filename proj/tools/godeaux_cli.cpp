// Command-line driver: `verify` runs the example checks, `assets` lists or
// validates the shipped curve files.

#include "godeaux/asset.hpp"
#include "godeaux/checks.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace godeaux;

namespace {

int cmd_verify(const RunConfig& cfg, const std::string& format) {
    Report rep;
    try {
        rep = run(cfg);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    if (format == "structured") std::cout << report_json(rep).dump(2) << "\n";
    else std::cout << report_text(rep);
    for (const auto& r : rep.records)
        if (r.verdict == Verdict::Fail) std::cerr << "failed: " << r.example << "/" << r.name << " [" << r.anchor << "]\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_assets(const std::string& action, const std::string& dir, const std::vector<std::string>& files) {
    std::string root = dir.empty() ? default_asset_dir() : dir;
    if (action == "list") {
        for (const auto& n : shipped_asset_names()) {
            try {
                auto a = load_named_asset(root, n);
                std::cout << n << "  degree " << a.degree << "  ring " << (a.tower ? "tower" : "fp") << "  "
                          << (a.tower ? a.tower->terms.size() : a.fp->terms.size()) << " terms\n";
            } catch (const std::exception& e) {
                std::cout << n << "  unreadable: " << e.what() << "\n";
            }
        }
        return 0;
    }
    // validate
    std::vector<std::string> paths = files;
    if (paths.empty())
        for (const auto& n : shipped_asset_names()) paths.push_back(root + "/" + n + ".json");
    int bad = 0;
    for (const auto& p : paths) {
        try {
            auto a = load_curve_asset(p);
            if (a.tower) require_curve(a);
            std::cout << "ok      " << p << "\n";
        } catch (const std::exception& e) {
            ++bad;
            std::cout << "invalid " << p << ": " << e.what() << "\n";
        }
    }
    return bad ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of two numerical Godeaux double planes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::uint64_t prime = 0;
    auto* verify = app.add_subcommand("verify", "run the example checks");
    verify->add_option("--example", cfg.example, "campedelli, oort-peters or both")
        ->check(CLI::IsMember({"campedelli", "oort-peters", "both"}));
    verify->add_option("--check", cfg.checks, "only run the named checks (repeatable)")->delimiter(',');
    verify->add_option("--prime", prime, "prime used for reductions");
    verify->add_option("--branches", cfg.branches, "square-root branch bits for alpha, beta, delta");
    verify->add_option("--report", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--assets", cfg.asset_dir, "asset directory");

    std::string action;
    std::string dir;
    std::vector<std::string> files;
    auto* assets = app.add_subcommand("assets", "list or validate curve assets");
    assets->add_option("action", action, "list or validate")->required()->check(CLI::IsMember({"list", "validate"}));
    assets->add_option("files", files, "asset files to validate");
    assets->add_option("--dir", dir, "asset directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (*verify) {
        if (verify->count("--prime")) cfg.prime = prime;
        return cmd_verify(cfg, format);
    }
    return cmd_assets(action, dir, files);
}
