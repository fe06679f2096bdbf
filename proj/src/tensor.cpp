#include "etomo/tensor.hpp"

namespace etomo {

bool polarization_valid(const Polarization& pol, double tol) {
    if (pol.v.size() != pol.q.size() || pol.v.size() == 0) return false;
    if (std::abs(pol.v.norm() - 1.0) > tol) return false;
    if (pol.branch == Branch::parallel) return (pol.q - pol.v).norm() <= tol * std::max(1.0, pol.q.norm());
    return std::abs(pol.q.dot(pol.v)) <= tol * std::max(1.0, pol.q.norm());
}

ElasticTensor symmetrize(TensorShape shape, std::span<const double> raw) {
    const OrbitTable& tab = orbit_table(shape);
    if (static_cast<std::int64_t>(raw.size()) != tab.full_size())
        throw std::invalid_argument("symmetrize: raw array has wrong size");
    Eigen::VectorXd comp = Eigen::VectorXd::Zero(tab.dim());
    for (std::int64_t flat = 0; flat < tab.full_size(); ++flat)
        comp[tab.canonical_of_flat(flat)] += raw[flat];
    for (int c = 0; c < tab.dim(); ++c)
        comp[c] /= static_cast<double>(tab.orbit(c).multiplicity);
    return {shape, std::move(comp)};
}

std::vector<double> expand(const ElasticTensor& a) {
    const OrbitTable& tab = orbit_table(a.shape);
    std::vector<double> full(tab.full_size());
    for (std::int64_t flat = 0; flat < tab.full_size(); ++flat)
        full[flat] = a.comp[tab.canonical_of_flat(flat)];
    return full;
}

double inner_product(const ElasticTensor& a, const ElasticTensor& b) {
    if (!(a.shape == b.shape)) throw std::invalid_argument("inner_product: shape mismatch");
    const OrbitTable& tab = orbit_table(a.shape);
    double s = 0;
    for (int c = 0; c < tab.dim(); ++c)
        s += static_cast<double>(tab.orbit(c).multiplicity) * a.comp[c] * b.comp[c];
    return s;
}

Eigen::VectorXd contraction_weights(TensorShape shape, const Eigen::VectorXd& v,
                                    const Eigen::VectorXd& q) {
    const int n = shape.n;
    if (v.size() != n || q.size() != n)
        throw std::invalid_argument("contraction_weights: dimension mismatch");
    const OrbitTable& tab = orbit_table(shape);
    // Summing v_i q_j over the two orientations of each pair is independent
    // across blocks, so the orbit total factorizes into per-pair sums times
    // the number of distinct pair orderings.
    Eigen::MatrixXd M = v * q.transpose();
    Eigen::VectorXd w(tab.dim());
    for (int c = 0; c < tab.dim(); ++c) {
        const Orbit& o = tab.orbit(c);
        double prod = static_cast<double>(o.perm_count);
        for (int t = 0; t < shape.m; ++t) {
            int a = o.rep[2 * t], b = o.rep[2 * t + 1];
            prod *= (a == b) ? M(a, a) : M(a, b) + M(b, a);
        }
        w[c] = prod;
    }
    return w;
}

double contract_vq(const ElasticTensor& a, const Polarization& pol) {
    if (pol.v.size() != a.shape.n)
        throw std::invalid_argument("contract_vq: dimension mismatch");
    return contraction_weights(a.shape, pol.v, pol.q).dot(a.comp);
}

std::pair<ElasticTensor, ElasticTensor> isotropic_tensors(int n) {
    TensorShape shape{n, 2};
    const OrbitTable& tab = orbit_table(shape);
    ElasticTensor alpha = ElasticTensor::zero(shape);
    ElasticTensor beta = ElasticTensor::zero(shape);
    // Both formulas are constant on orbits, so evaluating at the
    // representative tuple is exact.
    for (int c = 0; c < tab.dim(); ++c) {
        const auto& r = tab.orbit(c).rep;
        int i = r[0], j = r[1], k = r[2], l = r[3];
        alpha.comp[c] = (i == j && k == l) ? 1.0 : 0.0;
        beta.comp[c] = ((i == k && j == l) ? 1.0 : 0.0) + ((i == l && j == k) ? 1.0 : 0.0);
    }
    return {std::move(alpha), std::move(beta)};
}

} // namespace etomo
