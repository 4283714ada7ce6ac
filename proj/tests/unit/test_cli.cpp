#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "fixtures.hpp"
#include "sparemine/txdb.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

std::string cli_binary() {
    const char* bin = std::getenv("SPAREMINE_BIN");
    return bin ? bin : "";
}

CliResult run_cli(const std::string& args) {
    const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), std::move(out)};
}

std::string table2_path() {
    static const std::string path = [] {
        const auto p = std::filesystem::temp_directory_path() / "sparemine_cli_table2.basket";
        std::ofstream f(p);
        f << sparemine::to_basket(sparemine::testdata::table2_db());
        return p.string();
    }();
    return path;
}

} // namespace

TEST_CASE("cli end to end") {
    if (cli_binary().empty()) {
        MESSAGE("SPAREMINE_BIN not set; skipping CLI tests");
        return;
    }

    SUBCASE("mine tsv matches the worked example") {
        const CliResult r =
            run_cli("mine --input " + table2_path() + " --minsup 4 --format tsv");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text ==
              "A\t7\nB\t4\nA,B\t4\nC\t4\nA,C\t4\nB,C\t4\nA,B,C\t4\nD\t5\nA,D\t5\n");
    }
    SUBCASE("mine with the apriori oracle gives exact counts") {
        const CliResult r = run_cli("mine --input " + table2_path() +
                                    " --minsup 4 --algo apriori --format json");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        REQUIRE(j.size() == 9);
        bool found = false;
        for (const auto& e : j)
            if (e["items"] == nlohmann::json::array({"A", "C"})) {
                found = true;
                CHECK(e["frequency"] == 6);
            }
        CHECK(found);
    }
    SUBCASE("minsup 100% yields an empty report") {
        const CliResult r =
            run_cli("mine --input " + table2_path() + " --minsup 100% --format tsv");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.empty());
    }
    SUBCASE("rules reports the rejected split") {
        const CliResult r =
            run_cli("rules --input " + table2_path() + " --minsup 4 --minconf 0.6");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j["summary"]["rules_selected"] == 11);
    }
    SUBCASE("validate is clean on the worked example, also under --strict") {
        CHECK(run_cli("validate --input " + table2_path() + " --minsup 4").exit_code == 0);
        CHECK(run_cli("validate --input " + table2_path() + " --minsup 4 --strict").exit_code ==
              0);
    }
    SUBCASE("strict validation fails when the miner over-reports") {
        // at threshold 5 the miner keeps pairs whose exact support is 4
        const CliResult r =
            run_cli("validate --input " + table2_path() + " --minsup 5 --strict");
        CHECK(r.exit_code == 1);
        const auto j = nlohmann::json::parse(r.stdout_text);
        CHECK(j["itemset_recall"] == 1.0);
        CHECK(j["spurious"].size() == 4);
    }
    SUBCASE("gen is reproducible") {
        const CliResult a = run_cli("gen --spec 50,6,9");
        const CliResult b = run_cli("gen --spec 50,6,9");
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        CHECK(!a.stdout_text.empty());
    }
    SUBCASE("usage and i/o failures exit 2") {
        CHECK(run_cli("mine --input /no/such/file --minsup 4").exit_code == 2);
        CHECK(run_cli("mine --input " + table2_path() + " --minsup 0%").exit_code == 2);
        CHECK(run_cli("mine --input " + table2_path() + " --minsup -1").exit_code == 2);
        CHECK(run_cli("mine --input " + table2_path() + " --minsup 4 --algo bogus").exit_code ==
              2);
        CHECK(run_cli("rules --input " + table2_path() + " --minsup 4 --minconf 1.5")
                  .exit_code == 2);
        CHECK(run_cli("").exit_code == 2);
    }
    SUBCASE("csv input with an id column") {
        const auto p = std::filesystem::temp_directory_path() / "sparemine_cli_rows.csv";
        {
            std::ofstream f(p);
            f << "t1,A,B\nt2,A\nt3,B\n";
        }
        const CliResult r =
            run_cli("mine --input " + p.string() + " --csv --csv-id --minsup 1 --format tsv");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("t1") == std::string::npos);
        CHECK(r.stdout_text.find("A") != std::string::npos);
    }
}
