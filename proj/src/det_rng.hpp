#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace slab {
namespace detail {

// Deterministic stream: mt19937_64 is fully specified by the standard, and the
// doubles below are built from raw bits, so results are platform-independent.
class DetRng {
public:
    DetRng(std::uint64_t seed, std::uint64_t stream)
        : g_(seed * 0x9E3779B97F4A7C15ULL + stream * 0xD1B54A32D192ED03ULL + 1ULL) {}

    double uniform() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }  // [0, 1)

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 g_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace detail
}  // namespace slab
