#pragma once

#include <string>
#include <vector>

namespace lap {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteOptions {
    std::string fixture_dir;
    int corpus_dim = 13;
};

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);
std::string format_result(const CriterionResult& r);

}  // namespace lap
