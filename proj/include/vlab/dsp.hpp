// Signal estimation for steady-state vibration testing: synchronous
// demodulation, harmonic least-squares extraction, multi-harmonic
// amplitude metric, frequency-domain integration.
#pragma once

#include <complex>
#include <vector>

namespace vlab {

/// Complex one-sided Fourier coefficients of a steady periodic signal,
/// x(t) = Re{ sum_h coeffs[h] * exp(i*h*omega*t) }, h = 0..order.
struct HarmonicSpectrum {
    double omega = 0.0;  // fundamental angular frequency [rad/s]
    std::vector<std::complex<double>> coeffs;  // length order+1, coeffs[0] is DC

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Running fundamental-harmonic estimate from synchronous demodulation.
/// phase is relative to the demodulation carrier, wrapped to (-pi, pi].
struct DemodResult {
    double amp = 0.0;
    double phase = 0.0;
    double carrier_phase = 0.0;
};

/// Second-order Butterworth low-pass, direct form II transposed.
class LowpassBiquad {
  public:
    LowpassBiquad() = default;
    LowpassBiquad(double cutoff_hz, double sample_rate_hz) {
        design(cutoff_hz, sample_rate_hz);
    }

    void design(double cutoff_hz, double sample_rate_hz);
    void reset() { z1_ = z2_ = 0.0; }

    double process(double x) {
        const double y = b0_ * x + z1_;
        z1_ = b1_ * x - a1_ * y + z2_;
        z2_ = b2_ * x - a2_ * y;
        return y;
    }

  private:
    double b0_ = 1.0, b1_ = 0.0, b2_ = 0.0, a1_ = 0.0, a2_ = 0.0;
    double z1_ = 0.0, z2_ = 0.0;
};

/// Synchronous (I/Q) demodulator at an externally supplied carrier phase.
/// The in-phase and quadrature products are low-pass filtered; amp/phase
/// converge to the fundamental component for a stationary input.
class Demodulator {
  public:
    Demodulator() = default;
    Demodulator(double cutoff_hz, double sample_rate_hz)
        : lp_i_(cutoff_hz, sample_rate_hz), lp_q_(cutoff_hz, sample_rate_hz) {}

    void configure(double cutoff_hz, double sample_rate_hz) {
        lp_i_.design(cutoff_hz, sample_rate_hz);
        lp_q_.design(cutoff_hz, sample_rate_hz);
    }

    void reset() {
        lp_i_.reset();
        lp_q_.reset();
    }

    DemodResult demodulate(double sample, double carrier_phase);

  private:
    LowpassBiquad lp_i_, lp_q_;
};

/// Wrap an angle to (-pi, pi].
double wrap_phase(double a);

/// Harmonic coefficients at h*omega, h = 0..order, by least squares on the
/// sample window (t_n = n*dt relative to the window start).  The window must
/// span at least 10 fundamental periods.
HarmonicSpectrum fourier_coeffs(const std::vector<double>& window, double dt,
                                double omega, int order);

/// Multi-harmonic amplitude sqrt(sum_{h>=1} |c_h|^2); equals sqrt(2) times
/// the RMS of the reconstructed zero-mean signal (DC excluded).
double amplitude_metric(const HarmonicSpectrum& spec);

/// Frequency-domain integration of a velocity spectrum: q_h = v_h/(i h W)
/// for h >= 1, DC set to zero.  Any DC velocity content is discarded; its
/// magnitude is reported through dc_discarded when given.
HarmonicSpectrum integrate_velocity(const HarmonicSpectrum& vel,
                                    double* dc_discarded = nullptr);

}  // namespace vlab
