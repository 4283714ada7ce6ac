#pragma once

#include <string>
#include <vector>

#include "sparemine/bench.hpp"
#include "sparemine/mfi.hpp"
#include "sparemine/oracles.hpp"
#include "sparemine/rules.hpp"
#include "sparemine/txdb.hpp"

namespace sparemine {

// All renderings are byte-stable for fixed inputs. JSON uses two-space
// indentation; TSV uses one record per line. Every report ends with '\n'.

std::string itemset_report_json(const TransactionDB& db, const MiningResult& mining);
std::string itemset_report_json(const TransactionDB& db, const std::vector<ExactItemset>& sets);
std::string itemset_report_tsv(const TransactionDB& db, const MiningResult& mining);
std::string itemset_report_tsv(const TransactionDB& db, const std::vector<ExactItemset>& sets);

std::string rule_report_json(const TransactionDB& db, const RuleDerivation& derivation);
std::string rule_report_tsv(const TransactionDB& db, const RuleDerivation& derivation);

std::string validation_report_json(const TransactionDB& db, const ValidationReport& report);

std::string bench_report_json(const BenchReport& report);

} // namespace sparemine
