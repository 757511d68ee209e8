#include "omarray/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omarray
{

namespace
{
std::string describe(const Violations &violations)
{
    std::ostringstream oss;
    oss << "invalid parameters:";
    for (const auto &v : violations)
    {
        oss << " [" << v.field << ": " << v.message << "]";
    }
    return oss.str();
}

void require_positive(Violations &out, const char *field, double value)
{
    if (!(value > 0.0) || !std::isfinite(value))
    {
        out.push_back({field, std::string(field) + " > 0"});
    }
}

void require_non_negative(Violations &out, const char *field, double value)
{
    if (!(value >= 0.0) || !std::isfinite(value))
    {
        out.push_back({field, std::string(field) + " >= 0"});
    }
}

void require_finite(Violations &out, const char *field, cplx value)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    {
        out.push_back({field, std::string(field) + " finite"});
    }
}
} // namespace

ValidationError::ValidationError(Violations violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations))
{
}

ValidationError::ValidationError(std::string field, std::string message)
    : ValidationError(Violations{{std::move(field), std::move(message)}})
{
}

PumpAmplitudes pump_steady_state(const PumpConfig &pump)
{
    if (!(pump.kappa_d > 0.0))
    {
        throw ValidationError("kappa_d", "kappa_d > 0");
    }
    const cplx minus_i{0.0, -1.0};
    const double kd = pump.kappa_d;
    const cplx d_cw = minus_i * 2.0 * pump.Omega * kd / (kd * kd + 4.0 * pump.J_d * pump.J_d);
    const cplx d_ccw = (minus_i * 2.0 * pump.J_d / kd) * d_cw;
    return {d_cw, d_ccw};
}

LinearCouplings linearized_couplings(const PumpConfig &pump)
{
    require_valid(pump);
    const auto amps = pump_steady_state(pump);
    const cplx g_raw = pump.g_b * amps.d_cw;
    const double magnitude = std::abs(g_raw);
    if (magnitude == 0.0)
    {
        return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    }
    // g_s is built from the exact ratio rather than by rotating g_b <d_ccw>, so
    // g_s / g = -2i J_d / kappa_d holds to rounding.
    const cplx ratio{0.0, -2.0 * pump.J_d / pump.kappa_d};
    return {cplx{magnitude, 0.0}, ratio * magnitude};
}

LatticeParams LatticeParams::from_pump(const PumpConfig &pump, LatticeParams base)
{
    const auto couplings = linearized_couplings(pump);
    base.g = couplings.g.real();
    base.g_s = couplings.g_s;
    return base;
}

Violations validate(const FrameConfig &frame, double tolerance)
{
    Violations out;
    const double scale = std::max({1.0, std::abs(frame.omega_0), std::abs(frame.omega_c)});
    if (std::abs(frame.omega_p - frame.omega_d) > tolerance * scale)
    {
        out.push_back({"omega_p", "omega_p = omega_d"});
    }
    if (std::abs(frame.omega_d - (frame.omega_0 - frame.omega_c)) > tolerance * scale)
    {
        out.push_back({"omega_d", "omega_d = omega_0 - omega_c"});
    }
    return out;
}

Violations validate(const SingleCavityParams &params)
{
    Violations out;
    require_positive(out, "kappa_a", params.kappa_a);
    require_positive(out, "kappa_c", params.kappa_c);
    require_non_negative(out, "g", params.g);
    return out;
}

Violations validate(const PumpConfig &pump)
{
    Violations out;
    require_finite(out, "Omega", pump.Omega);
    if (!std::isfinite(pump.g_b))
    {
        out.push_back({"g_b", "g_b finite"});
    }
    require_positive(out, "kappa_d", pump.kappa_d);
    require_non_negative(out, "J_d", pump.J_d);
    return out;
}

Violations validate(const LatticeParams &params)
{
    Violations out;
    if (params.N < 1)
    {
        out.push_back({"N", "N >= 1"});
    }
    if (!std::isfinite(params.v))
    {
        out.push_back({"v", "v finite"});
    }
    require_non_negative(out, "g", params.g);
    require_finite(out, "g_s", params.g_s);
    require_non_negative(out, "J_a", params.J_a);
    require_non_negative(out, "J_b", params.J_b);
    require_non_negative(out, "J_c", params.J_c);
    require_positive(out, "kappa_a", params.kappa_a);
    require_positive(out, "kappa_b", params.kappa_b);
    require_positive(out, "kappa_c", params.kappa_c);
    return out;
}

} // namespace omarray
