#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etomo/orbits.hpp"
#include "etomo/tensor.hpp"
#include "oracle_helpers.hpp"

#include <random>

using namespace etomo;

TEST_CASE("canonical index is constant on orbits and counts match enumeration") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 2; ++m) {
            const OrbitTable& tab = orbit_table(n, m);
            CHECK(tab.dim() == oracle::count_orbits(n, m));
            CHECK(tab.dim() == elastic_dim(n, m));
            // every member of every orbit maps to the same canonical index,
            // and distinct orbits get distinct indices
            std::vector<char> hit(tab.dim(), 0);
            for (int c = 0; c < tab.dim(); ++c) {
                for (const auto& t : oracle::orbit_members(tab.orbit(c).rep))
                    CHECK(tab.canonical_index(t) == c);
                CHECK(!hit[c]);
                hit[c] = 1;
            }
        }
    }
}

TEST_CASE("n=3 m=2 has 21 canonical components, n=1 collapses to 1") {
    CHECK(orbit_table(3, 2).dim() == 21);
    CHECK(oracle::count_orbits(3, 2) == 21);
    CHECK(orbit_table(1, 0).dim() == 1);
    CHECK(orbit_table(1, 2).dim() == 1);
    CHECK(orbit_table(1, 3).dim() == 1);
    // dim E^2_5 = 120, used by the dimension-5 lemma systems
    CHECK(orbit_table(5, 2).dim() == 120);
}

TEST_CASE("pair-swap symmetry: (1,2,1,1) and (2,1,1,1) share an index") {
    const OrbitTable& tab = orbit_table(3, 2);
    CHECK(tab.canonical_index({0, 1, 0, 0}) == tab.canonical_index({1, 0, 0, 0}));
    CHECK(tab.canonical_index({0, 1, 0, 0}) == tab.canonical_index({0, 0, 0, 1}));
    // stiffness symmetry in full: a_ijkl = a_jikl = a_klij, but not a_ikjl
    CHECK(tab.canonical_index({0, 1, 1, 1}) == tab.canonical_index({1, 1, 0, 1}));
    CHECK(tab.canonical_index({0, 1, 0, 2}) != tab.canonical_index({0, 0, 1, 2}));
}

TEST_CASE("canonical_index rejects out-of-range indices") {
    const OrbitTable& tab = orbit_table(2, 2);
    CHECK_THROWS_AS((void)tab.canonical_index({0, 2, 0, 0}), std::out_of_range);
    CHECK_THROWS_AS((void)tab.canonical_index({-1, 0, 0, 0}), std::out_of_range);
}

TEST_CASE("symmetrize averages the indicator of (1,2,1,1) over its 4-tuple orbit") {
    TensorShape shape{2, 2};
    std::vector<double> raw(16, 0.0);
    raw[oracle::encode({0, 1, 0, 0}, 2)] = 1.0;
    ElasticTensor a = symmetrize(shape, raw);
    auto full = expand(a);
    std::set<std::vector<int>> orbit = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    for (std::int64_t f = 0; f < 16; ++f) {
        bool in_orbit = orbit.count(oracle::decode(f, 2, 4)) > 0;
        CHECK(full[f] == doctest::Approx(in_orbit ? 0.25 : 0.0).epsilon(1e-15));
    }
}

TEST_CASE("symmetrize is idempotent and fixes fully symmetric tensors") {
    std::mt19937_64 rng(7);
    for (int n : {2, 3}) {
        TensorShape shape{n, 2};
        auto raw = oracle::random_raw(n, 2, rng);
        ElasticTensor a = symmetrize(shape, raw);
        ElasticTensor b = symmetrize(shape, expand(a));
        CHECK((a.comp - b.comp).lpNorm<Eigen::Infinity>() <= 1e-14 * a.comp.norm());

        // fully symmetric raw tensor: symmetrize over all 2m index
        // permutations first; elastic symmetrization must leave it alone
        std::vector<double> fullsym(raw.size(), 0.0);
        for (std::int64_t f = 0; f < static_cast<std::int64_t>(raw.size()); ++f) {
            auto t = oracle::decode(f, n, 4);
            std::sort(t.begin(), t.end());
            double s = 0;
            int cnt = 0;
            do {
                s += raw[oracle::encode(t, n)];
                ++cnt;
            } while (std::next_permutation(t.begin(), t.end()));
            fullsym[f] = s / cnt;
        }
        ElasticTensor c = symmetrize(shape, fullsym);
        auto cfull = expand(c);
        for (size_t f = 0; f < fullsym.size(); ++f)
            CHECK(cfull[f] == doctest::Approx(fullsym[f]).epsilon(1e-12));
    }
}

TEST_CASE("inner product matches brute-force full-index summation") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 2; ++m) {
            TensorShape shape{n, m};
            auto ra = oracle::random_raw(n, m, rng);
            auto rb = oracle::random_raw(n, m, rng);
            ElasticTensor a = symmetrize(shape, ra);
            ElasticTensor b = symmetrize(shape, rb);
            double got = inner_product(a, b);
            double want = oracle::full_inner(expand(a), expand(b));
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
            CHECK(inner_product(a, b) == inner_product(b, a));
            CHECK(inner_product(a, ElasticTensor::zero(shape)) == 0.0);
        }
    }
}

TEST_CASE("orbit-indicator self inner product: 4 members at value 1/4 give 1/4") {
    TensorShape shape{2, 2};
    std::vector<double> raw(16, 0.0);
    raw[oracle::encode({0, 1, 0, 0}, 2)] = 1.0;
    ElasticTensor a = symmetrize(shape, raw);
    CHECK(inner_product(a, a) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("contract_vq equals the full-index contraction for raw and symmetrized input") {
    std::mt19937_64 rng(13);
    for (int n : {2, 3, 4}) {
        for (int m : {0, 1, 2}) {
            TensorShape shape{n, m};
            auto raw = oracle::random_raw(n, m, rng);
            ElasticTensor a = symmetrize(shape, raw);
            for (int rep = 0; rep < 5; ++rep) {
                Eigen::VectorXd v = oracle::random_unit(n, rng);
                Polarization pol;
                pol.v = v;
                if (rep % 2 == 0) {
                    pol.q = v;
                    pol.branch = Branch::parallel;
                } else {
                    Eigen::VectorXd u = oracle::random_unit(n, rng);
                    pol.q = (n == 1) ? Eigen::VectorXd::Zero(1)
                                     : Eigen::VectorXd((u - u.dot(v) * v));
                    pol.branch = Branch::orthogonal;
                }
                double got = contract_vq(a, pol);
                double want = oracle::full_contract(expand(a), n, m, pol.v, pol.q);
                CHECK(got == doctest::Approx(want).epsilon(1e-12));
                // symmetrization is invisible to the (v (x) q)^m pairing for
                // tensors that are already symmetric within each index pair
                // (the case the kernel argument needs: second derivatives)
                std::vector<double> pairsym(raw.size());
                for (std::int64_t f = 0; f < static_cast<std::int64_t>(raw.size()); ++f) {
                    auto t = oracle::decode(f, n, 2 * m);
                    double s = 0;
                    int cnt = 0;
                    for (int mask = 0; mask < (1 << m); ++mask) {
                        auto u = t;
                        for (int b = 0; b < m; ++b)
                            if (mask & (1 << b)) std::swap(u[2 * b], u[2 * b + 1]);
                        s += raw[oracle::encode(u, n)];
                        ++cnt;
                    }
                    pairsym[f] = s / cnt;
                }
                ElasticTensor aps = symmetrize(shape, pairsym);
                CHECK((aps.comp - a.comp).lpNorm<Eigen::Infinity>() <= 1e-13);
                double ps_contract = oracle::full_contract(pairsym, n, m, pol.v, pol.q);
                CHECK(got == doctest::Approx(ps_contract).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("isotropic tensors: Kronecker spot checks and elastic symmetry") {
    auto [alpha, beta] = isotropic_tensors(3);
    CHECK(alpha.at4(0, 0, 1, 1) == 1.0);
    CHECK(alpha.at4(0, 1, 0, 1) == 0.0);
    CHECK(beta.at4(0, 1, 0, 1) == 1.0);
    CHECK(beta.at4(0, 0, 1, 1) == 0.0);
    CHECK(beta.at4(0, 0, 0, 0) == 2.0);
    // symmetrize(expand(.)) round-trips both
    ElasticTensor rb = symmetrize(beta.shape, expand(beta));
    CHECK((rb.comp - beta.comp).lpNorm<Eigen::Infinity>() == 0.0);
    ElasticTensor ra = symmetrize(alpha.shape, expand(alpha));
    CHECK((ra.comp - alpha.comp).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("isotropic contraction values: lambda + 2 mu parallel, mu orthogonal") {
    std::mt19937_64 rng(17);
    for (int n : {2, 3, 4}) {
        auto [alpha, beta] = isotropic_tensors(n);
        const double lambda = 2.0, mu = 1.0;
        ElasticTensor iso{alpha.shape, lambda * alpha.comp + mu * beta.comp};
        for (int rep = 0; rep < 10; ++rep) {
            Eigen::VectorXd v = oracle::random_unit(n, rng);
            Polarization par{v, v, Branch::parallel};
            CHECK(contract_vq(iso, par) == doctest::Approx(lambda + 2 * mu).epsilon(1e-12));
            double want_par = oracle::full_contract(expand(iso), n, 2, v, v);
            CHECK(contract_vq(iso, par) == doctest::Approx(want_par).epsilon(1e-12));

            Eigen::VectorXd u = oracle::random_unit(n, rng);
            Eigen::VectorXd q = (u - u.dot(v) * v).normalized();
            Polarization ort{v, q, Branch::orthogonal};
            // the direct n^4 summation gives coefficient 1 on mu for the
            // orthogonal branch (not 2)
            CHECK(contract_vq(iso, ort) == doctest::Approx(mu).epsilon(1e-12));
            double want_ort = oracle::full_contract(expand(iso), n, 2, v, q);
            CHECK(contract_vq(iso, ort) == doctest::Approx(want_ort).epsilon(1e-12));
        }
        Polarization par{Eigen::VectorXd::Unit(n, 0), Eigen::VectorXd::Unit(n, 0), Branch::parallel};
        CHECK(contract_vq(ElasticTensor::zero(alpha.shape), par) == 0.0);
    }
}

TEST_CASE("polarization validity encodes Q(v)") {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(3, 2);
    CHECK(polarization_valid({v, v, Branch::parallel}));
    CHECK(polarization_valid({v, Eigen::VectorXd::Unit(3, 0), Branch::orthogonal}));
    CHECK(!polarization_valid({v, Eigen::VectorXd::Unit(3, 0), Branch::parallel}));
    Eigen::VectorXd skew(3);
    skew << 1.0, 0.0, 0.5;
    CHECK(!polarization_valid({v, skew, Branch::orthogonal}));
    CHECK(!polarization_valid({2.0 * v, v, Branch::parallel}));
}
