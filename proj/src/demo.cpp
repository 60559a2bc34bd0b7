#include "demo.hpp"

#include <cmath>

#include "errors.hpp"

namespace frhopf {

CharPoly DemoSystem::char_poly(double mu1, double mu2) const {
    const double k11 = k[0], k12 = k[1], k13 = k[2];
    const double k21 = k[3], k22 = k[4], k23 = k[5];
    const double k31 = k[6], k32 = k[7], k33 = k[8];

    const double a1 = mu2 - k33 + 2.0 * mu1 - k22 - k11;
    const double a2 = k11 * k22 + k11 * k33 - k11 * mu1 - k11 * mu2 - k12 * k21 - k13 * k31 +
                      k22 * k33 - k22 * mu1 - k22 * mu2 - k23 * k32 - 2.0 * k33 * mu1 + mu1 * mu1 +
                      2.0 * mu1 * mu2;
    const double a3 = -k11 * k22 * k33 + k11 * k22 * mu2 + k11 * k23 * k32 + k11 * k33 * mu1 -
                      k11 * mu1 * mu2 + k12 * k21 * k33 - k12 * k21 * mu2 - k12 * k23 * k31 -
                      k13 * k21 * k32 + k13 * k22 * k31 - k13 * k31 * mu1 + k22 * k33 * mu1 -
                      k22 * mu1 * mu2 - k23 * k32 * mu1 - k33 * mu1 * mu1 + mu1 * mu1 * mu2;
    return CharPoly({a1, a2, a3});
}

void DemoSystem::vector_field(std::span<const double> x, double mu1, double mu2,
                              std::span<double> out) const {
    const double t1 = std::tanh(x[0]), t2 = std::tanh(x[1]), t3 = std::tanh(x[2]);
    out[0] = -mu1 * x[0] + k[0] * t1 + k[1] * t2 + k[2] * t3;
    out[1] = -mu1 * x[1] + k[3] * t1 + k[4] * t2 + k[5] * t3;
    out[2] = -mu2 * x[2] + k[6] * t1 + k[7] * t2 + k[8] * t3;
}

CharPoly demo_charpoly(double mu1, double mu2, double alpha,
                       const std::optional<std::array<double, 9>>& k_overrides) {
    require_alpha(alpha);
    DemoSystem sys;
    if (k_overrides) sys.k = *k_overrides;
    return sys.char_poly(mu1, mu2);
}

} // namespace frhopf
