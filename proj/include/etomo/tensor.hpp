#ifndef ETOMO_TENSOR_HPP
#define ETOMO_TENSOR_HPP

#include "etomo/orbits.hpp"

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace etomo {

// An elastic m-tensor in canonical storage: one value per symmetry orbit.
struct ElasticTensor {
    TensorShape shape;
    Eigen::VectorXd comp; // length = dim E^m_n, ordered by canonical index

    ElasticTensor() = default;
    ElasticTensor(TensorShape s, Eigen::VectorXd c) : shape(s), comp(std::move(c)) {}

    static ElasticTensor zero(TensorShape s) {
        return {s, Eigen::VectorXd::Zero(orbit_table(s).dim())};
    }

    // Value at a full index tuple (0-based), via the canonical map.
    double at(const std::vector<int>& tuple) const {
        return comp[orbit_table(shape).canonical_index(tuple)];
    }
    double at4(int i, int j, int k, int l) const { return at({i, j, k, l}); }
};

enum class Branch { parallel, orthogonal };

// A (direction, polarization) pair with q in Q(v) = R v  u  v^perp.
struct Polarization {
    Eigen::VectorXd v; // unit direction
    Eigen::VectorXd q;
    Branch branch = Branch::parallel;
};

// q in Q(v) to the stated tolerance; |v| = 1.
bool polarization_valid(const Polarization& pol, double tol = 1e-12);

// Elastic symmetrization: average the raw full-index array (row-major,
// n^(2m) entries) over each symmetry orbit.
ElasticTensor symmetrize(TensorShape shape, std::span<const double> raw);

// Expand canonical storage back to the full n^(2m) array.
std::vector<double> expand(const ElasticTensor& a);

// Full-tensor Euclidean inner product, computed with orbit multiplicities.
double inner_product(const ElasticTensor& a, const ElasticTensor& b);

// Per-orbit weights w such that sum_o w_o a_o equals the full contraction
// sum a_{i1 j1 ... im jm} v_{i1} q_{j1} ... v_{im} q_{jm}.
Eigen::VectorXd contraction_weights(TensorShape shape, const Eigen::VectorXd& v,
                                    const Eigen::VectorXd& q);

// <a, (v (x) q)^(x) m> evaluated through the canonical weights.
double contract_vq(const ElasticTensor& a, const Polarization& pol);

// Basic isotropic tensors: alpha_ijkl = d_ij d_kl and
// beta_ijkl = d_ik d_jl + d_il d_jk.
std::pair<ElasticTensor, ElasticTensor> isotropic_tensors(int n);

} // namespace etomo

#endif
