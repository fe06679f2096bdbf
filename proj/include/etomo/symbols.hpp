#ifndef ETOMO_SYMBOLS_HPP
#define ETOMO_SYMBOLS_HPP

#include "etomo/tensor.hpp"

#include <Eigen/Dense>

namespace etomo {

// Frequency-domain symbols of K and H and the pointwise splitting
// E^2_n = A_p (+) B_p (+) C_p for a fixed nonzero frequency p:
//   A_p = { sigmaK_p W : W perp p },  B_p = im(sigmaH_p),
//   C_p = ker(sigmaK_p^T) n ker(sigmaH_p^T).

// (sigmaK_p W)_ijkl = 1/4 (p_i W_j + p_j W_i) d_kl
//                   + 1/4 (p_k W_l + p_l W_k) d_ij
ElasticTensor sigma_K(const Eigen::VectorXd& p, const Eigen::VectorXd& W);

// (sigmaH_p h)_ijkl = 1/2 (p_i p_j h_kl + p_k p_l h_ij), h symmetric given
// in canonical rank-1 storage.
ElasticTensor sigma_H(const Eigen::VectorXd& p, const ElasticTensor& h);

// Algebraic duals w.r.t. the full-index inner products:
// (sigmaK^T T)_i = sum p_b d_lm T_iblm ; (sigmaH^T T)_ij = sum T_ijlm p_l p_m.
Eigen::VectorXd dual_K(const Eigen::VectorXd& p, const ElasticTensor& T);
ElasticTensor dual_H(const Eigen::VectorXd& p, const ElasticTensor& T);

// Explicit left inverses: lambda_K sigma_K = id on p^perp and
// lambda_H sigma_H = id.
Eigen::VectorXd lambda_K(const Eigen::VectorXd& p, const ElasticTensor& T);
ElasticTensor lambda_H(const Eigen::VectorXd& p, const ElasticTensor& T);

// Deterministic orthonormal basis of p^perp (Householder frame).
Eigen::MatrixXd orthonormal_complement(const Eigen::VectorXd& v);

// Cached least-squares frame for one frequency: the column matrix of
// phi(W, h) = sigmaK_p W + sigmaH_p h with W running over a basis of
// p^perp and h over the canonical basis of E^1_n. Columns are stored in
// multiplicity-weighted coordinates so Euclidean least squares realizes
// the E^2_n-orthogonal projection onto A_p + B_p.
class SymbolFrame {
public:
    explicit SymbolFrame(const Eigen::VectorXd& p);

    int n() const { return n_; }
    int dim_A() const { return n_ - 1; }
    int dim_B() const; // dim E^1_n
    const Eigen::VectorXd& p() const { return p_; }
    const Eigen::MatrixXd& perp_basis() const { return perp_; }

    // Split T = T_A + T_B + T_C. Components returned in canonical storage.
    struct Split {
        ElasticTensor A, B, C;
        Eigen::VectorXd W;   // coefficient with T_A = sigma_K(p, W), W perp p
        ElasticTensor h;     // coefficient with T_B = sigma_H(p, h)
    };
    Split project(const ElasticTensor& T) const;

    // Complex variant used on FFT bins: solves the same real frame against
    // real and imaginary parts.
    struct ComplexSplit {
        Eigen::VectorXcd A, B, C; // canonical components
        Eigen::VectorXcd W;
        Eigen::VectorXcd h;
    };
    ComplexSplit project(const Eigen::VectorXcd& T) const;

    // Numerical rank of the frame (expected (n-1) + dim E^1_n always).
    int rank() const { return rank_; }

private:
    int n_;
    Eigen::VectorXd p_;
    Eigen::MatrixXd perp_;               // n x (n-1)
    Eigen::MatrixXd phi_weighted_;       // weighted column matrix
    Eigen::VectorXd sqrt_mult_;          // per canonical component
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
    int rank_;
};

// T = T_A + T_B + T_C at frequency p.
SymbolFrame::Split project_pointwise(const Eigen::VectorXd& p, const ElasticTensor& T);

} // namespace etomo

#endif
