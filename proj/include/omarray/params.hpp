#ifndef OMARRAY_PARAMS_HPP
#define OMARRAY_PARAMS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace omarray
{

using cplx = std::complex<double>;

// One violated invariant of a parameter bundle.
struct Violation
{
    std::string field;
    std::string message;

    bool operator==(const Violation &) const = default;
};

using Violations = std::vector<Violation>;

// Thrown when a parameter bundle fails validation at a point where it must be valid.
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(Violations violations);
    ValidationError(std::string field, std::string message);

    const Violations &violations() const noexcept { return violations_; }

private:
    Violations violations_;
};

// Lab-frame frequencies and wavenumbers of the probe, acoustic and pump modes.
// They drop out of the rotating frame, so nothing downstream reads them; the
// triple-resonance condition is still checked.
struct FrameConfig
{
    double omega_0 = 0.0;
    double omega_c = 0.0;
    double omega_d = 0.0;
    double omega_p = 0.0;
    double k0 = 0.0;
    double kc = 0.0;
    double kd = 0.0;
};

// Four-port Brillouin cavity. All rates in units of kappa_a.
struct SingleCavityParams
{
    double kappa_a = 1.0; // optical fiber coupling
    double kappa_c = 0.01; // acoustic damping
    double g = 0.0;        // pump-enhanced photon-phonon coupling, real >= 0

    bool operator==(const SingleCavityParams &) const = default;
};

// Classical pump driving d_cw of every cell.
struct PumpConfig
{
    cplx Omega{0.0, 0.0};
    double g_b = 0.0;     // single-photon Brillouin coupling
    double kappa_d = 1.0; // pump-mode decay
    double J_d = 0.0;     // pump-mode backscattering

    bool operator==(const PumpConfig &) const = default;
};

// Full description of the N-cell array.
struct LatticeParams
{
    int N = 1;
    double v = 0.0;
    double g = 0.0;
    cplx g_s{0.0, 0.0};
    double J_a = 0.0;
    double J_b = 0.0;
    double J_c = 0.0;
    double kappa_a = 1.0;
    double kappa_b = 1.0;
    double kappa_c = 0.01;

    static constexpr double d0 = 1.0;

    bool has_backscattering() const noexcept { return J_a != 0.0 || J_b != 0.0 || J_c != 0.0; }

    // Replaces g and g_s by the pump-linearized couplings; everything else from base.
    static LatticeParams from_pump(const PumpConfig &pump, LatticeParams base);

    bool operator==(const LatticeParams &) const = default;
};

struct PumpAmplitudes
{
    cplx d_cw;
    cplx d_ccw;
};

struct LinearCouplings
{
    cplx g;   // real and non-negative after the gauge rotation
    cplx g_s;
};

// Classical steady state of the pumped mode pair:
//   <d_cw>  = -2i Omega kappa_d / (kappa_d^2 + 4 J_d^2)
//   <d_ccw> = (-2i J_d / kappa_d) <d_cw>
PumpAmplitudes pump_steady_state(const PumpConfig &pump);

// g = g_b <d_cw>, g_s = g_b <d_ccw>, both rotated by the global phase that makes g
// real positive. g_s / g = -2i J_d / kappa_d is preserved.
LinearCouplings linearized_couplings(const PumpConfig &pump);

Violations validate(const FrameConfig &frame, double tolerance = 1e-12);
Violations validate(const SingleCavityParams &params);
Violations validate(const PumpConfig &pump);
Violations validate(const LatticeParams &params);

// Throws ValidationError when validate() reports anything.
template <class Params>
void require_valid(const Params &params)
{
    auto violations = validate(params);
    if (!violations.empty())
    {
        throw ValidationError(std::move(violations));
    }
}

} // namespace omarray

#endif // OMARRAY_PARAMS_HPP
