#include "mrf/rng.hpp"

#include <cmath>

namespace mrf {

double Rng::normal() {
    // Box-Muller; u1 kept away from 0 so log() stays finite.
    double u1;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x51ed2701));
}

}  // namespace mrf
