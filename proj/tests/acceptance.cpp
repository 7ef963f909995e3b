// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ids...]

#include "pmscheme/acceptance.hpp"
#include "pmscheme/cache.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    pmscheme::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        try {
            opts.only.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance [criterion ids...]\n";
            return 2;
        }
    }
    pmscheme::ResultCache cache(pmscheme::ResultCache::default_directory(), &std::cerr);
    opts.cache = &cache;
    opts.on_result = [](const pmscheme::CriterionResult& r) {
        std::cout << pmscheme::format_result(r) << std::endl;
    };
    const auto results = pmscheme::run_acceptance(opts);
    int failed = 0;
    for (const auto& r : results) failed += !r.passed;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
