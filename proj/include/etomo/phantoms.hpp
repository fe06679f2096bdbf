#ifndef ETOMO_PHANTOMS_HPP
#define ETOMO_PHANTOMS_HPP

#include "etomo/field_ops.hpp"
#include "etomo/grid.hpp"

#include <random>
#include <string>

namespace etomo {

// exp(-|x - center|^2 / width^2) sampled on the grid.
GridField gaussian_bump_scalar(const Grid& grid, const Eigen::VectorXd& center, double width);

// Independent random band-limited components: white noise filtered to
// integer frequencies |k_a| <= kmax with a Gaussian spectral taper.
// Deterministic for a fixed seed.
GridField random_bandlimited(const Grid& grid, int ncomp, int kmax, std::uint64_t seed);

ElasticField random_bandlimited_elastic(const Grid& grid, TensorShape shape, int kmax,
                                        std::uint64_t seed);

// Phantom kinds exposed by the command line.
enum class PhantomKind {
    gaussian_H_potential, // H h for a Gaussian-bump elastic 1-tensor field h
    gaussian_K_potential, // K W for a Gaussian-bump vector field W
    isotropic,            // g(x) (lambda alpha + mu beta)
    random_bandlimited,   // band-limited noise, rank 2
    solenoidal,           // band-limited noise projected onto ker H* n ker K*
};

PhantomKind phantom_kind_from_string(const std::string& s);

struct PhantomConfig {
    std::uint64_t seed = 1;
    double lambda = 2.0; // isotropic kind only
    double mu = 1.0;
    int kmax = 4; // band-limited kinds
};

// Rank-2 phantom on the grid. Gaussian-bump kinds place the bump at the
// box center with width extent/8 and seeded canonical amplitudes.
ElasticField make_phantom(const Grid& grid, PhantomKind kind, const PhantomConfig& cfg);

// Gaussian-bump potentials used by the phantom kinds; exposed so tests can
// pair the potential with its image.
ElasticField gaussian_bump_rank1(const Grid& grid, std::uint64_t seed);
GridField gaussian_bump_vector(const Grid& grid, std::uint64_t seed);

} // namespace etomo

#endif
