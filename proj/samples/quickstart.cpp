// Minimal tour of the library: exact octonion arithmetic, a sandwich map,
// and one programmatic suite run.

#include "octocheck/octocheck.hpp"

#include <iostream>

int main() {
    using namespace octo;

    // Exact arithmetic: (3/5) + (4/5) i2 is a unit octonion.
    const Octonion p = Rational(3, 5) * Octonion::unit(0) + Rational(4, 5) * Octonion::unit(2);
    std::cout << "p        = " << to_string(p) << "\n";
    std::cout << "|p|^2    = " << norm_sq(p).str() << "\n";
    std::cout << "p^-1     = " << to_string(inverse(p)) << "\n";

    // The algebra is not associative; the associator of i1, i2, i4 is 2 i7.
    const Octonion assoc = associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
    std::cout << "[i1,i2,i4] = " << to_string(assoc) << "\n";

    // Sandwich maps are exact linear isometries with cached basis matrices.
    const SandwichMap a1 = SandwichMap::action_a(1);
    std::cout << a1.describe() << " applied to i7: " << to_string(a1.apply(Octonion::unit(7)))
              << "\n";

    // Run the multiplication-table suite and print the text report.
    SuiteConfig cfg;
    cfg.suite = SuiteName::table;
    const Report r = run_suite(cfg);
    std::cout << "\n" << render_text(r);
    return exit_code_for(r);
}
