#ifndef ETOMO_DECOMPOSE_HPP
#define ETOMO_DECOMPOSE_HPP

#include "etomo/field_ops.hpp"
#include "etomo/grid.hpp"
#include "etomo/symbols.hpp"

#include <complex>
#include <vector>

namespace etomo {

// Result of splitting a rank-2 field as f = K W + H h + S with
// sigmaK^T Shat(p) = sigmaH^T Shat(p) = 0 per nonzero frequency.
struct FrequencyDecomposition {
    // spatial outputs
    GridField W;     // vector field
    ElasticField h;  // rank 1
    ElasticField S;  // rank 2

    // per-frequency data (canonical components per bin; DC bin included,
    // with What = hhat = 0 there)
    std::vector<Eigen::VectorXcd> What; // length n per bin
    std::vector<Eigen::VectorXcd> hhat; // dim E^1_n per bin
    std::vector<Eigen::VectorXcd> Shat; // dim E^2_n per bin

    // DC handling: |fhat(0)| (Frobenius over weighted components) and its
    // share of the total spectral mass; the DC bin is assigned to S.
    double dc_magnitude = 0.0;
    double dc_relative = 0.0;
    bool dc_flagged = false;

    // low-frequency amplification metrics: max over bins of
    // |What(p)| / |fhat(p)| and |hhat(p)| / |fhat(p)|
    double amplification_W = 0.0;
    double amplification_h = 0.0;

    // true when n = 2 (decomposition computed without the n >= 3 guarantee)
    bool no_theorem_guarantee = false;

    // largest imaginary residue of the inverse transforms
    double imag_residual = 0.0;
};

// Fourier-domain Helmholtz decomposition of a rank-2 elastic field via
// per-bin least squares on the symbol frame. Requires n >= 2; for n = 2
// the result is computed but flagged (the closed-form theorem needs
// n >= 3).
FrequencyDecomposition decompose_field(const ElasticField& f);

// Residual certificates of a decomposition against its input, all
// relative to |f|: reconstruction |f - (KW + Hh + S)|, orthogonality
// <S, KW + Hh>, and the solenoidal norms |K* S|, |H* S|.
struct DecompositionCertificate {
    double reconstruction = 0.0;
    double orthogonality = 0.0;
    double solenoidal_K = 0.0;
    double solenoidal_H = 0.0;
};

DecompositionCertificate certify_decomposition(const ElasticField& f,
                                               const FrequencyDecomposition& dec);

} // namespace etomo

#endif
