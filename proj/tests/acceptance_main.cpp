#include "invpoly/acceptance.hpp"

#include <iostream>

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
int main()
{
    invpoly::acceptance::Config cfg;
    bool all = true;
    for (const auto& r : invpoly::acceptance::run_all(cfg)) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " ("
                  << r.checked - r.failed << "/" << r.checked << ")\n";
        for (const auto& d : r.details) std::cout << "    " << d << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
