#include "vlab/dsp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

void LowpassBiquad::design(double cutoff_hz, double sample_rate_hz) {
    if (cutoff_hz <= 0.0 || sample_rate_hz <= 0.0 || cutoff_hz >= 0.5 * sample_rate_hz)
        throw std::invalid_argument("LowpassBiquad: cutoff must lie in (0, fs/2)");
    const double w0 = 2.0 * kPi * cutoff_hz / sample_rate_hz;
    const double q = 1.0 / std::sqrt(2.0);
    const double alpha = std::sin(w0) / (2.0 * q);
    const double cw = std::cos(w0);
    const double a0 = 1.0 + alpha;
    b0_ = (1.0 - cw) / 2.0 / a0;
    b1_ = (1.0 - cw) / a0;
    b2_ = b0_;
    a1_ = (-2.0 * cw) / a0;
    a2_ = (1.0 - alpha) / a0;
    reset();
}

double wrap_phase(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

DemodResult Demodulator::demodulate(double sample, double carrier_phase) {
    const double i = lp_i_.process(2.0 * sample * std::cos(carrier_phase));
    const double q = lp_q_.process(-2.0 * sample * std::sin(carrier_phase));
    DemodResult r;
    r.amp = std::hypot(i, q);
    r.phase = (r.amp > 0.0) ? std::atan2(q, i) : 0.0;
    r.carrier_phase = carrier_phase;
    return r;
}

HarmonicSpectrum fourier_coeffs(const std::vector<double>& window, double dt,
                                double omega, int order) {
    if (omega <= 0.0 || dt <= 0.0) throw std::invalid_argument("fourier_coeffs: omega and dt must be positive");
    if (order < 1) throw std::invalid_argument("fourier_coeffs: order must be >= 1");
    const double span = static_cast<double>(window.size()) * dt;
    const double period = 2.0 * kPi / omega;
    if (span < 10.0 * period)
        throw std::invalid_argument("fourier_coeffs: window must span >= 10 fundamental periods");

    const int n = static_cast<int>(window.size());
    const int m = 2 * order + 1;  // [1, cos(h w t), sin(h w t)]
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd basis(m);
    for (int k = 0; k < n; ++k) {
        const double t = k * dt;
        basis(0) = 1.0;
        for (int h = 1; h <= order; ++h) {
            basis(2 * h - 1) = std::cos(h * omega * t);
            basis(2 * h) = std::sin(h * omega * t);
        }
        gram.selfadjointView<Eigen::Lower>().rankUpdate(basis);
        rhs += basis * window[k];
    }
    gram = gram.selfadjointView<Eigen::Lower>();
    Eigen::VectorXd sol = gram.ldlt().solve(rhs);

    HarmonicSpectrum spec;
    spec.omega = omega;
    spec.coeffs.resize(order + 1);
    spec.coeffs[0] = sol(0);
    for (int h = 1; h <= order; ++h)
        spec.coeffs[h] = std::complex<double>(sol(2 * h - 1), -sol(2 * h));
    return spec;
}

double amplitude_metric(const HarmonicSpectrum& spec) {
    double s = 0.0;
    for (int h = 1; h <= spec.order(); ++h) s += std::norm(spec.coeffs[h]);
    return std::sqrt(s);
}

HarmonicSpectrum integrate_velocity(const HarmonicSpectrum& vel, double* dc_discarded) {
    if (vel.omega <= 0.0) throw std::invalid_argument("integrate_velocity: omega must be positive");
    HarmonicSpectrum disp;
    disp.omega = vel.omega;
    disp.coeffs.assign(vel.coeffs.size(), {0.0, 0.0});
    for (int h = 1; h <= vel.order(); ++h)
        disp.coeffs[h] = vel.coeffs[h] / std::complex<double>(0.0, h * vel.omega);
    if (dc_discarded) *dc_discarded = std::abs(vel.coeffs.empty() ? 0.0 : vel.coeffs[0].real());
    return disp;
}

}  // namespace vlab
