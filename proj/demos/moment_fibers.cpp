// Tour of the point side: characteristic coefficients level by level, fiber
// membership, strong nilpotence, and the Jacobian rank of the level map.
#include <iostream>

#include "gtkit/kostant_wallach.hpp"

using namespace gtkit;

int main() {
    auto x = ConcreteMatrix::from_rows({{Rational(1), Rational(2)},
                                        {Rational(3), Rational(4)}});
    auto sig = phi(x);
    std::cout << "levels of [[1,2],[3,4]]:\n";
    for (std::size_t i = 0; i < sig.chi.size(); ++i) {
        std::cout << "  level " << (i + 1) << ":";
        for (const auto& c : sig.chi[i]) std::cout << " " << c.str();
        std::cout << "\n";
    }
    std::cout << "strongly nilpotent: " << (strongly_nilpotent(x) ? "yes" : "no") << "\n";

    auto strict = ConcreteMatrix::from_rows(
        {{Rational(0), Rational(0), Rational(0)},
         {Rational(5), Rational(0), Rational(0)},
         {Rational(7), Rational(9), Rational(0)}});
    std::cout << "strictly lower triangular 3x3 strongly nilpotent: "
              << (strongly_nilpotent(strict) ? "yes" : "no") << "\n";

    auto probe = jacobian_rank_probe(3, 2, 25, 2026);
    std::cout << "\nlevel map on the bottom 2 of 3 levels: expected rank "
              << probe.expected_rank << ", fiber dimension " << probe.expected_fiber_dim
              << "\n" << probe.full_rank_count << "/" << probe.trials
              << " random rational points hit full rank\n";
    return 0;
}
