#include <cstring>
#include <iostream>

#include "lap/suite.hpp"

// Usage: acceptance [--quick] [--strict] [fixture_dir]
// Exits 0 once every criterion has been evaluated; --strict also requires every criterion to pass.
int main(int argc, char** argv) {
    lap::SuiteOptions opt;
    opt.fixture_dir = LAP_FIXTURE_DIR;
    bool strict = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0)
            opt.corpus_dim = 9;
        else if (std::strcmp(argv[i], "--strict") == 0)
            strict = true;
        else
            opt.fixture_dir = argv[i];
    }
    try {
        auto results = lap::run_acceptance(opt);
        int failed = 0;
        for (const auto& r : results) {
            std::cout << lap::format_result(r) << "\n";
            if (!r.pass) ++failed;
        }
        std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
        return strict && failed ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "acceptance: " << e.what() << "\n";
        return 2;
    }
}
