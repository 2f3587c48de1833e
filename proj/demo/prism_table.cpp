// Prints the drilled-fiber case table of M_n for a few n, the way the CLI's
// `orbifold cases` does, but straight from the library.

#include <iostream>

#include "linkvol/case_analysis.hpp"

int main() {
    using namespace linkvol;
    for (std::int64_t n : {-2, -1, 1, 2, 3}) {
        const CaseAnalysis a = prism_case_analysis(n);
        std::cout << "M_" << n << ":\n";
        for (const auto& c : a.cases) {
            std::cout << "  (" << c.number << ") " << c.orbifold << "  chi_orb = " << c.chi_orb << "  degrees:";
            for (auto d : c.degrees)
                std::cout << ' ' << d;
            std::cout << '\n';
        }
    }
}
