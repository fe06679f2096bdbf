#include "etomo/decompose.hpp"

#include "etomo/concurrency.hpp"

#include <cmath>
#include <stdexcept>

namespace etomo {

FrequencyDecomposition decompose_field(const ElasticField& f) {
    const int n = f.grid.n;
    if (f.shape.m != 2 || f.shape.n != n)
        throw std::invalid_argument("decompose_field: rank-2 field over the grid dimension required");
    for (const auto& c : f.comp)
        if (!c.isFinite().all()) throw std::invalid_argument("decompose_field: non-finite values");

    const OrbitTable& tab2 = orbit_table(n, 2);
    const OrbitTable& tab1 = orbit_table(n, 1);
    const int dim2 = tab2.dim(), dim1 = tab1.dim();
    const std::int64_t nbins = f.grid.npoints();

    std::vector<ComplexArray> fhat(dim2);
    for (int c = 0; c < dim2; ++c) fhat[c] = fft_forward(f.grid, f.comp[c]);

    Eigen::VectorXd sqrt_mult(dim2);
    for (int c = 0; c < dim2; ++c)
        sqrt_mult[c] = std::sqrt(static_cast<double>(tab2.orbit(c).multiplicity));

    FrequencyDecomposition dec;
    dec.What.assign(nbins, Eigen::VectorXcd::Zero(n));
    dec.hhat.assign(nbins, Eigen::VectorXcd::Zero(dim1));
    dec.Shat.assign(nbins, Eigen::VectorXcd::Zero(dim2));
    dec.no_theorem_guarantee = (n < 3);

    std::vector<double> amp_W(worker_count(), 0.0), amp_h(worker_count(), 0.0);
    std::atomic<int> next_worker{0};

    parallel_for(0, nbins, [&](std::int64_t lo, std::int64_t hi) {
        const int slot = next_worker.fetch_add(1);
        const std::complex<double> minus_i(0.0, -1.0);
        Eigen::VectorXcd T(dim2);
        for (std::int64_t bin = lo; bin < hi; ++bin) {
            for (int c = 0; c < dim2; ++c) T[c] = fhat[c][bin];
            Eigen::VectorXd p = bin_frequency_vector(f.grid, bin);
            if (p.norm() == 0.0) {
                dec.Shat[bin] = T; // DC goes wholly to S
                continue;
            }
            SymbolFrame frame(p);
            auto split = frame.project(T);
            // fhat = sigmaK w + sigmaH eta + Shat, while KW and Hh transform
            // with factors i and -1: What = -i w, hhat = -eta
            dec.What[bin] = minus_i * split.W;
            dec.hhat[bin] = -split.h;
            dec.Shat[bin] = split.C;

            double tn = T.cwiseProduct(sqrt_mult.cast<std::complex<double>>()).norm();
            if (tn > 0) {
                amp_W[slot] = std::max(amp_W[slot], split.W.norm() / tn);
                amp_h[slot] = std::max(amp_h[slot], split.h.norm() / tn);
            }
        }
    });
    for (double a : amp_W) dec.amplification_W = std::max(dec.amplification_W, a);
    for (double a : amp_h) dec.amplification_h = std::max(dec.amplification_h, a);

    // DC report: |fhat(0)| against the total spectral mass, both in raw
    // DFT units with multiplicity weights
    double dc2 = 0, total2 = 0;
    for (int c = 0; c < dim2; ++c) {
        const double w = static_cast<double>(tab2.orbit(c).multiplicity);
        dc2 += w * std::norm(fhat[c][0]);
        for (std::int64_t bin = 0; bin < nbins; ++bin) total2 += w * std::norm(fhat[c][bin]);
    }
    dec.dc_magnitude = std::sqrt(dc2) * f.grid.cell_volume();
    dec.dc_relative = total2 > 0 ? std::sqrt(dc2 / total2) : 0.0;
    dec.dc_flagged = dec.dc_relative > 1e-8;

    // inverse transforms
    dec.W = GridField::zeros(f.grid, n);
    dec.h = ElasticField::zeros(f.grid, {n, 1});
    dec.S = ElasticField::zeros(f.grid, {n, 2});
    ComplexArray bins(nbins);
    double resid = 0, r = 0;
    for (int c = 0; c < n; ++c) {
        for (std::int64_t b = 0; b < nbins; ++b) bins[b] = dec.What[b][c];
        dec.W.comp[c] = fft_inverse_real(f.grid, bins, &r);
        resid = std::max(resid, r);
    }
    for (int c = 0; c < dim1; ++c) {
        for (std::int64_t b = 0; b < nbins; ++b) bins[b] = dec.hhat[b][c];
        dec.h.comp[c] = fft_inverse_real(f.grid, bins, &r);
        resid = std::max(resid, r);
    }
    for (int c = 0; c < dim2; ++c) {
        for (std::int64_t b = 0; b < nbins; ++b) bins[b] = dec.Shat[b][c];
        dec.S.comp[c] = fft_inverse_real(f.grid, bins, &r);
        resid = std::max(resid, r);
    }
    dec.imag_residual = resid;
    return dec;
}

DecompositionCertificate certify_decomposition(const ElasticField& f,
                                               const FrequencyDecomposition& dec) {
    DecompositionCertificate cert;
    const double fnorm = l2_norm(f);
    if (fnorm == 0.0) return cert;

    ElasticField KW = apply_K(dec.W, Backend::spectral);
    ElasticField Hh = apply_H(dec.h, Backend::spectral);
    ElasticField P = KW;
    for (int c = 0; c < P.ncomp(); ++c) P.comp[c] += Hh.comp[c];

    ElasticField err = f;
    for (int c = 0; c < err.ncomp(); ++c) err.comp[c] -= P.comp[c] + dec.S.comp[c];
    cert.reconstruction = l2_norm(err) / fnorm;

    const double pn = l2_norm(P), sn = l2_norm(dec.S);
    cert.orthogonality = (pn > 0 && sn > 0) ? std::abs(l2_inner(dec.S, P)) / (pn * sn) : 0.0;

    cert.solenoidal_K = l2_norm(apply_K_adjoint(dec.S, Backend::spectral)) / fnorm;
    cert.solenoidal_H = l2_norm(apply_H_adjoint(dec.S, Backend::spectral)) / fnorm;
    return cert;
}

} // namespace etomo
