#include "bouncer/packet_params.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bouncer {

PacketParams::PacketParams(double x0, double p0, double alpha, double hbar, double mass)
    : x0_(x0), p0_(p0), alpha_(alpha), hbar_(hbar), mass_(mass) {
    if (!std::isfinite(x0) || !std::isfinite(p0)) {
        throw std::invalid_argument("x0 and p0 must be finite");
    }
    auto require_positive = [](double v, const char* name) {
        if (!(std::isfinite(v) && v > 0.0)) {
            throw std::invalid_argument(std::string(name) + " must be positive and finite");
        }
    };
    require_positive(alpha, "alpha");
    require_positive(hbar, "hbar");
    require_positive(mass, "mass");
}

Moments Moments::from_raw(double t, double x1, double x2, double p1, double p2) {
    Moments m;
    m.time = t;
    m.x_mean = x1;
    m.x2_mean = x2;
    m.x_sd = std::sqrt(std::max(0.0, x2 - x1 * x1));
    m.p_mean = p1;
    m.p2_mean = p2;
    m.p_sd = std::sqrt(std::max(0.0, p2 - p1 * p1));
    return m;
}

}  // namespace bouncer
