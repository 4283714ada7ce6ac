#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "sparemine/bench.hpp"
#include "sparemine/condensed_tree.hpp"
#include "sparemine/errors.hpp"
#include "sparemine/mfi.hpp"
#include "sparemine/oracles.hpp"
#include "sparemine/report.hpp"
#include "sparemine/rules.hpp"
#include "sparemine/synth.hpp"
#include "sparemine/txdb.hpp"

namespace {

using namespace sparemine;

constexpr int kExitOk = 0;
constexpr int kExitStrictFailure = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
    std::string input_path;
    std::string spec_text;        // "n_transactions,n_items,seed"
    bool csv = false;
    bool csv_first_column_is_id = false;
    std::optional<std::uint64_t> seed_override;
};

void add_input_flags(CLI::App* cmd, InputOptions& opts, bool allow_spec) {
    cmd->add_option("--input", opts.input_path, "basket or CSV file to load");
    if (allow_spec) {
        cmd->add_option("--spec", opts.spec_text,
                        "synthetic dataset as n_transactions,n_items,seed");
        cmd->add_option("--seed", opts.seed_override, "override the --spec seed");
    }
    cmd->add_flag("--csv", opts.csv, "treat --input as CSV (comma-separated only)");
    cmd->add_flag("--csv-id", opts.csv_first_column_is_id,
                  "first CSV column is a transaction id, not an item");
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("malformed ") + what + ": " + std::string(text));
    return v;
}

SyntheticSpec parse_spec(const std::string& text) {
    SyntheticSpec spec;
    const std::size_t c1 = text.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || text.find(',', c2 + 1) != std::string::npos)
        throw std::invalid_argument("--spec wants n_transactions,n_items,seed");
    spec.n_transactions = parse_u64(std::string_view(text).substr(0, c1), "spec transaction count");
    spec.n_items = parse_u64(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), "spec item count");
    spec.seed = parse_u64(std::string_view(text).substr(c2 + 1), "spec seed");
    return spec;
}

struct LoadedInput {
    TransactionDB db;
    std::optional<SyntheticSpec> spec;   // set when synthesized
};

LoadedInput load_input(const InputOptions& opts) {
    if (!opts.input_path.empty() && !opts.spec_text.empty())
        throw std::invalid_argument("--input and --spec are mutually exclusive");
    if (!opts.spec_text.empty()) {
        SyntheticSpec spec = parse_spec(opts.spec_text);
        if (opts.seed_override) spec.seed = *opts.seed_override;
        return LoadedInput{gen_synthetic(spec), spec};
    }
    if (opts.input_path.empty())
        throw std::invalid_argument("no input: pass --input PATH (or --spec where supported)");
    std::ifstream file(opts.input_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open input file: " + opts.input_path);
    TransactionDB db = opts.csv ? load_csv(file, opts.csv_first_column_is_id) : load_basket(file);
    return LoadedInput{std::move(db), std::nullopt};
}

int cmd_mine(const InputOptions& in, const std::string& minsup_text, const std::string& algo,
             const std::string& format) {
    const LoadedInput loaded = load_input(in);
    const SupportThreshold minsup = SupportThreshold::parse(minsup_text);

    std::string report;
    if (algo == "improvised") {
        const MiningResult mined = mine(build(loaded.db, minsup));
        report = format == "tsv" ? itemset_report_tsv(loaded.db, mined)
                                 : itemset_report_json(loaded.db, mined);
    } else {
        const auto sets = algo == "apriori" ? apriori_mine(loaded.db, minsup)
                                            : fpgrowth_mine(loaded.db, minsup);
        report = format == "tsv" ? itemset_report_tsv(loaded.db, sets)
                                 : itemset_report_json(loaded.db, sets);
    }
    std::cout << report;
    return kExitOk;
}

int cmd_rules(const InputOptions& in, const std::string& minsup_text,
              const std::string& minconf_text, const std::string& format) {
    const LoadedInput loaded = load_input(in);
    const SupportThreshold minsup = SupportThreshold::parse(minsup_text);
    const ConfidenceThreshold minconf = ConfidenceThreshold::parse(minconf_text);

    const MiningResult mined = mine(build(loaded.db, minsup));
    const RuleDerivation derivation = derive_rules(mined, minconf, loaded.db.n_transactions());
    std::cout << (format == "tsv" ? rule_report_tsv(loaded.db, derivation)
                                  : rule_report_json(loaded.db, derivation));
    return kExitOk;
}

int cmd_validate(const InputOptions& in, const std::string& minsup_text, bool strict) {
    const LoadedInput loaded = load_input(in);
    const SupportThreshold minsup = SupportThreshold::parse(minsup_text);

    const MiningResult mined = mine(build(loaded.db, minsup));
    const auto exact = apriori_mine(loaded.db, minsup);
    const ValidationReport report = validate(mined, exact);
    std::cout << validation_report_json(loaded.db, report);
    if (strict && (!report.missing.empty() || !report.spurious.empty()))
        return kExitStrictFailure;
    return kExitOk;
}

int cmd_bench(const InputOptions& in, const std::string& minsup_text, std::size_t repeat) {
    const LoadedInput loaded = load_input(in);
    const SupportThreshold minsup = SupportThreshold::parse(minsup_text);

    BenchReport report = run_bench(loaded.db, minsup, repeat);
    if (loaded.spec) {
        report.dataset.source = "synthetic";
        report.dataset.spec = loaded.spec;
    }
    std::cout << bench_report_json(report);
    return kExitOk;
}

int cmd_gen(const std::string& spec_text, std::optional<std::uint64_t> seed_override) {
    SyntheticSpec spec = parse_spec(spec_text);
    if (seed_override) spec.seed = *seed_override;
    write_basket(gen_synthetic(spec), std::cout);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequent itemset mining with a single-node-per-item tree, "
                 "spare-table accounting, and exact baselines"};
    app.require_subcommand(1);

    InputOptions mine_in, rules_in, validate_in, bench_in;
    std::string minsup, minconf = "0.6";
    std::string algo = "improvised", format = "json";
    std::size_t repeat = 10;
    bool strict = false;
    std::string gen_spec;
    std::optional<std::uint64_t> gen_seed;

    CLI::App* mine_cmd = app.add_subcommand("mine", "mine frequent itemsets");
    add_input_flags(mine_cmd, mine_in, true);
    mine_cmd->add_option("--minsup", minsup, "minimum support: N or P%")->required();
    mine_cmd->add_option("--algo", algo, "improvised | fpgrowth | apriori")
        ->check(CLI::IsMember({"improvised", "fpgrowth", "apriori"}));
    mine_cmd->add_option("--format", format, "json | tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    CLI::App* rules_cmd = app.add_subcommand("rules", "derive association rules");
    add_input_flags(rules_cmd, rules_in, true);
    rules_cmd->add_option("--minsup", minsup, "minimum support: N or P%")->required();
    rules_cmd->add_option("--minconf", minconf, "minimum confidence in [0,1]");
    rules_cmd->add_option("--format", format, "json | tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "compare the improvised miner against the exact result");
    add_input_flags(validate_cmd, validate_in, true);
    validate_cmd->add_option("--minsup", minsup, "minimum support: N or P%")->required();
    validate_cmd->add_flag("--strict", strict,
                           "exit 1 when any itemset is missing or spurious");

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time the improvised pipeline against classic FP-growth");
    add_input_flags(bench_cmd, bench_in, true);
    bench_cmd->add_option("--minsup", minsup, "minimum support: N or P%")->required();
    bench_cmd->add_option("--repeat", repeat, "runs per algorithm")->check(CLI::PositiveNumber);

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a synthetic basket dataset");
    gen_cmd->add_option("--spec", gen_spec, "n_transactions,n_items,seed")->required();
    gen_cmd->add_option("--seed", gen_seed, "override the --spec seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (mine_cmd->parsed()) return cmd_mine(mine_in, minsup, algo, format);
        if (rules_cmd->parsed()) return cmd_rules(rules_in, minsup, minconf, format);
        if (validate_cmd->parsed()) return cmd_validate(validate_in, minsup, strict);
        if (bench_cmd->parsed()) return cmd_bench(bench_in, minsup, repeat);
        if (gen_cmd->parsed()) return cmd_gen(gen_spec, gen_seed);
    } catch (const std::exception& e) {
        std::cerr << "sparemine: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
