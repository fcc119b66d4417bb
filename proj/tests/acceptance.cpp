#include <iostream>

#include "invar_app/config.hpp"
#include "invar_app/suite.hpp"

using namespace invar::app;

int main() {
    RunConfig cfg = default_config();
    int failed = 0;
    for (int id : criterion_ids()) {
        auto r = run_criterion(id, cfg);
        std::cout << summary_line(r) << "\n";
        for (const auto& d : r.details) std::cout << "      " << d << "\n";
        std::cout.flush();
        failed += !r.pass;
    }
    std::cout << (criterion_ids().size() - failed) << " of " << criterion_ids().size() << " criteria pass\n";
    return failed ? 1 : 0;
}
