#include "etomo/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace etomo {

namespace {

// fftw_plan_* is not thread-safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex mu;
    return mu;
}

void run_dft(const Grid& grid, const ComplexArray& in, ComplexArray& out, int sign) {
    const std::int64_t npts = grid.npoints();
    out.resize(npts);
    std::vector<int> dims(grid.samples.begin(), grid.samples.end());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft(grid.n, dims.data(),
                             reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                             reinterpret_cast<fftw_complex*>(out.data()), sign,
                             FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
}

} // namespace

ComplexArray fft_forward(const Grid& grid, const Eigen::ArrayXd& real) {
    ComplexArray in(grid.npoints());
    for (std::int64_t i = 0; i < grid.npoints(); ++i) in[i] = real[i];
    ComplexArray out;
    run_dft(grid, in, out, FFTW_FORWARD);
    return out;
}

ComplexArray fft_inverse(const Grid& grid, const ComplexArray& bins) {
    ComplexArray out;
    run_dft(grid, bins, out, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(grid.npoints());
    for (auto& z : out) z *= scale;
    return out;
}

Eigen::ArrayXd fft_inverse_real(const Grid& grid, const ComplexArray& bins,
                                double* imag_residual) {
    ComplexArray full = fft_inverse(grid, bins);
    Eigen::ArrayXd out(grid.npoints());
    double max_im = 0, max_re = 0;
    for (std::int64_t i = 0; i < grid.npoints(); ++i) {
        out[i] = full[i].real();
        max_im = std::max(max_im, std::abs(full[i].imag()));
        max_re = std::max(max_re, std::abs(full[i].real()));
    }
    if (imag_residual) *imag_residual = max_im / std::max(max_re, 1e-300);
    return out;
}

double bin_frequency(const Grid& grid, int axis, int k) {
    const int N = grid.samples[axis];
    const int kt = (k <= N / 2) ? k : k - N;
    return 2.0 * std::numbers::pi * kt / grid.extent(axis);
}

Eigen::VectorXd bin_frequency_vector(const Grid& grid, std::int64_t flat) {
    Eigen::VectorXd p(grid.n);
    for (int a = grid.n - 1; a >= 0; --a) {
        int k = static_cast<int>(flat % grid.samples[a]);
        flat /= grid.samples[a];
        p[a] = bin_frequency(grid, a, k);
    }
    return p;
}

} // namespace etomo
