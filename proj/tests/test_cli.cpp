#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godeaux/checks.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

using namespace godeaux;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(GODEAUX_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("input errors exit with 2") {
    CHECK(cli("").code == 2);
    CHECK(cli("verify --example nowhere").code == 2);
    CHECK(cli("verify --prime 30048").code == 2);
    CHECK(cli("verify --branches 12x").code == 2);
    CHECK(cli("verify --check no-such-check").code == 2);
    CHECK(cli("verify --report xml").code == 2);
    // no embedding of the tower mod 30029, no sqrt(-3) mod 30047
    CHECK(cli("verify --example campedelli --prime 30029 --check condition-count").code == 2);
    CHECK(cli("verify --example oort-peters --prime 30047").code == 2);
    CHECK(cli("verify --assets /nonexistent --example oort-peters").code == 2);
}

TEST_CASE("passing and failing checks") {
    CHECK(cli("verify --example oort-peters").code == 0);
    CHECK(cli("verify --example campedelli --check condition-count,genus").code == 0);
    CHECK(cli("verify --example campedelli --check reduction-match").code == 1);
}

TEST_CASE("structured report") {
    auto r = cli("verify --example oort-peters --report structured");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["verdict"] == "pass");
    CHECK(j["checks"].size() == check_names("oort-peters").size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("anchor"));
        CHECK(c.contains("digest"));
        CHECK(c["example"] == "oort-peters");
    }
}

TEST_CASE("asset subcommand") {
    CHECK(cli("assets list").code == 0);
    CHECK(cli("assets validate").code == 0);
    std::string bad = "/tmp/godeaux_bad_asset.json";
    std::ofstream(bad) << R"({"degree": 2, "ring": "tower", "terms": []})";
    CHECK(cli("assets validate " + bad).code == 2);
    std::remove(bad.c_str());
    CHECK(cli("assets frobnicate").code == 2);
}

TEST_CASE("reports are deterministic apart from timings") {
    RunConfig cfg;
    cfg.example = "oort-peters";
    auto a = report_json(run(cfg), false).dump();
    auto b = report_json(run(cfg), false).dump();
    CHECK(a == b);
    RunConfig camp;
    camp.example = "campedelli";
    camp.checks = {"condition-count", "singularity-taxonomy"};
    CHECK(report_json(run(camp), false).dump() == report_json(run(camp), false).dump());
}

TEST_CASE("run validates its configuration") {
    RunConfig cfg;
    cfg.example = "oort-peters";
    cfg.checks = {"genus"};  // a Campedelli check
    CHECK_THROWS_AS(run(cfg), InputError);
    cfg.checks = {};
    cfg.branches = "2";
    CHECK_THROWS_AS(run(cfg), InputError);
    CHECK(oort_peters_default_prime() == 30091);
}
