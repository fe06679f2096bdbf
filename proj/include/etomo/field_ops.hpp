#ifndef ETOMO_FIELD_OPS_HPP
#define ETOMO_FIELD_OPS_HPP

#include "etomo/fft.hpp"
#include "etomo/grid.hpp"

namespace etomo {

enum class Backend { spectral, central_diff };

// Largest |imag| left over after the inverse FFT of a spectral-backend
// result, relative to the largest |real|. Pure bookkeeping; the spectral
// paths are real-to-real up to rounding.
struct FieldOpDiag {
    double imag_residual = 0.0;
};

// H_m: elastic (m-1)-tensor fields to elastic m-tensor fields,
// h |-> symmetrized second-derivative array of h.
ElasticField apply_H(const ElasticField& h, Backend backend, FieldOpDiag* diag = nullptr);

// K: vector fields to elastic 2-tensor fields, W |-> symmetrized
// (DW (x) I).
ElasticField apply_K(const GridField& W, Backend backend, FieldOpDiag* diag = nullptr);

// Formal adjoint of H for ranks m in {1, 2}: double divergence over the
// trailing index pair.
ElasticField apply_H_adjoint(const ElasticField& f, Backend backend, FieldOpDiag* diag = nullptr);

// Formal adjoint of K: (K* f)_i = -sum_j d_j f_ijkk.
GridField apply_K_adjoint(const ElasticField& f, Backend backend, FieldOpDiag* diag = nullptr);

// Componentwise gradient of a scalar field.
GridField gradient(const GridField& g, Backend backend, FieldOpDiag* diag = nullptr);

// g |-> g * identity, as an elastic 1-tensor field.
ElasticField scalar_times_identity(const GridField& g, int n);

// Periodic central-difference derivative of one component: first order
// along d1 if d2 < 0, otherwise the mixed/second derivative d_d1 d_d2.
Eigen::ArrayXd central_derivative(const Grid& grid, const Eigen::ArrayXd& f, int d1, int d2);

} // namespace etomo

#endif
