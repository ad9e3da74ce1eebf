// Prints wcdim(crown(n)) over Q and small prime fields; the dimension rises by
// one exactly when the characteristic divides n - 2.
#include <iostream>

#include "wcdim.hpp"

int main() {
    using namespace wcdim;
    const auto fields = verify::fields({0, 2, 3, 5, 7});
    std::cout << "n ";
    for (const auto& f : fields) std::cout << ' ' << f.name();
    std::cout << '\n';
    for (std::size_t n = 3; n <= 9; ++n) {
        std::cout << n << ' ';
        for (const auto& r : compute_wcdim(families::crown(n), fields)) std::cout << ' ' << r.wcdim;
        std::cout << '\n';
    }
}
