#include <cmath>
#include <random>

#include <doctest.h>

#include "boolconv/measure.hpp"
#include "oracles.hpp"

using namespace boolconv;

namespace {

void check_valid(const AtomicMeasure& mu) {
    double total = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        CHECK(mu.atoms()[i].weight > 0.0);
        total += mu.atoms()[i].weight;
        if (i > 0) CHECK(mu.atoms()[i].position > mu.atoms()[i - 1].position);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

}  // namespace

TEST_CASE("make_measure basics") {
    const AtomicMeasure b = make_measure({{-1.0, 0.5}, {1.0, 0.5}});
    REQUIRE(b.size() == 2);
    CHECK(b.atoms()[0].position == -1.0);
    CHECK(b.atoms()[1].position == 1.0);
    check_valid(b);

    const AtomicMeasure d = make_measure({{0.0, 1.0}});
    REQUIRE(d.size() == 1);
    CHECK(d.atoms()[0].weight == 1.0);

    // near-duplicate positions merge
    const AtomicMeasure merged = make_measure({{1.0, 0.5}, {1.0 + 1e-15, 0.5}});
    REQUIRE(merged.size() == 1);
    CHECK(merged.atoms()[0].position == doctest::Approx(1.0));
    CHECK(merged.atoms()[0].weight == doctest::Approx(1.0));

    // unsorted input is sorted
    const AtomicMeasure s = make_measure({{2.0, 0.25}, {-3.0, 0.75}});
    CHECK(s.atoms()[0].position == -3.0);
}

TEST_CASE("make_measure validation") {
    CHECK_THROWS_AS(make_measure({{0.0, 0.9}}), InvalidMeasure);
    CHECK_THROWS_AS(make_measure({{0.0, 0.6}, {1.0, 0.6}}), InvalidMeasure);
    CHECK_THROWS_AS(make_measure({{0.0, 1.1}, {1.0, -0.1}}), InvalidMeasure);
    CHECK_THROWS_AS(make_measure({{std::nan(""), 1.0}}), InvalidMeasure);
    // a weight of -1e-13 is rounding dust, clipped and pruned
    const AtomicMeasure ok = make_measure({{0.0, 1.0}, {1.0, -1e-13}});
    CHECK(ok.size() == 1);
}

TEST_CASE("bernoulli") {
    const AtomicMeasure b = bernoulli();
    REQUIRE(b.size() == 2);
    CHECK(b.atoms()[0].position == -1.0);
    CHECK(b.atoms()[0].weight == 0.5);
    CHECK(moment(b, 2) == doctest::Approx(1.0));
    CHECK(moment(b, 3) == doctest::Approx(0.0));
    CHECK(moment(b, 4) == doctest::Approx(1.0));
}

TEST_CASE("moments") {
    CHECK(moment(bernoulli(), 0) == 1.0);
    CHECK(moment(sharpness_measure(0.1), 4) == doctest::Approx(1.002).epsilon(1e-12));
    const AtomicMeasure d = dirac(1.7);
    CHECK(moment(d, 5) == doctest::Approx(std::pow(1.7, 5)).epsilon(1e-15));
}

TEST_CASE("boolean cumulants") {
    const auto rb = boolean_cumulants(bernoulli(), 4);
    REQUIRE(rb.size() == 4);
    CHECK(rb[0] == doctest::Approx(0.0));
    CHECK(rb[1] == doctest::Approx(1.0));
    CHECK(rb[2] == doctest::Approx(0.0));
    CHECK(rb[3] == doctest::Approx(0.0));

    CHECK(boolean_cumulants(dirac(2.5), 1)[0] == doctest::Approx(2.5));

    CHECK_THROWS_AS((void)boolean_cumulants(bernoulli(), 0), InvalidArgument);

    // r4 = m4 - 1 for standardized measures
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const AtomicMeasure mu = standardize(oracles::random_measure(eng));
        const auto r = boolean_cumulants(mu, 4);
        CHECK(r[3] == doctest::Approx(moment(mu, 4) - 1.0).epsilon(1e-10));
    }
}

TEST_CASE("cumulants round-trip to moments") {
    std::mt19937_64 eng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const AtomicMeasure mu = oracles::random_measure(eng);
        const unsigned upto = 8;
        const auto r = boolean_cumulants(mu, upto);
        // rebuild moments from the recursion m_n = sum r_k m_{n-k}
        std::vector<double> m(upto + 1, 0.0);
        m[0] = 1.0;
        for (unsigned n = 1; n <= upto; ++n)
            for (unsigned k = 1; k <= n; ++k) m[n] += r[k - 1] * m[n - k];
        for (unsigned n = 1; n <= upto; ++n) {
            const double want = moment(mu, n);
            CHECK(std::abs(m[n] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("dilate") {
    const AtomicMeasure d2 = dilate(bernoulli(), 2.0);
    CHECK(d2.atoms()[0].position == -2.0);
    CHECK(d2.atoms()[1].position == 2.0);

    const AtomicMeasure mu = make_measure({{-0.5, 0.25}, {0.75, 0.75}});
    const AtomicMeasure same = dilate(mu, 1.0);
    CHECK(same.atoms()[0].position == mu.atoms()[0].position);

    CHECK_THROWS_AS(dilate(mu, 0.0), InvalidArgument);
    CHECK_THROWS_AS(dilate(mu, -2.0), InvalidArgument);

    // r_i(D_a mu) = a^i r_i(mu)
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const AtomicMeasure m = oracles::random_measure(eng);
        const double a = oracles::uniform(eng, 0.3, 2.5);
        const auto r = boolean_cumulants(m, 4);
        const auto rd = boolean_cumulants(dilate(m, a), 4);
        double pw = 1.0;
        for (std::size_t i = 0; i < 4; ++i) {
            pw *= a;
            CHECK(rd[i] == doctest::Approx(pw * r[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("square pushforward") {
    const AtomicMeasure sq = square_pushforward(bernoulli());
    REQUIRE(sq.size() == 1);
    CHECK(sq.atoms()[0].position == doctest::Approx(1.0));

    // Var of the square equals the fourth Boolean cumulant: 2 eps^3 here
    const AtomicMeasure mu = sharpness_measure(0.1);
    const AtomicMeasure mu2 = square_pushforward(mu);
    const double var = moment(mu2, 2) - moment(mu2, 1) * moment(mu2, 1);
    CHECK(var == doctest::Approx(0.002).epsilon(1e-10));

    const AtomicMeasure d = square_pushforward(dirac(-1.5));
    CHECK(d.atoms()[0].position == doctest::Approx(2.25));
}

TEST_CASE("mass of the squared variable concentrates at 1") {
    // mass of mu^2 on (1-eps, 1+eps) is at least 1 - r4/eps^2
    std::mt19937_64 eng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const AtomicMeasure mu = standardize(oracles::random_measure(eng));
        const double r4 = boolean_cumulants(mu, 4)[3];
        const AtomicMeasure squared = square_pushforward(mu);
        for (double eps : {0.5, 0.25, 0.1}) {
            double mass = 0.0;
            for (const Atom& a : squared.atoms())
                if (a.position > 1.0 - eps && a.position < 1.0 + eps) mass += a.weight;
            CHECK(mass + 1e-12 >= 1.0 - r4 / (eps * eps));
        }
    }
}

TEST_CASE("standardize") {
    const AtomicMeasure b = standardize(bernoulli());
    CHECK(b.atoms()[0].position == doctest::Approx(-1.0));
    CHECK(b.atoms()[1].position == doctest::Approx(1.0));

    const AtomicMeasure shifted = standardize(make_measure({{0.0, 0.5}, {2.0, 0.5}}));
    CHECK(shifted.atoms()[0].position == doctest::Approx(-1.0));
    CHECK(shifted.atoms()[1].position == doctest::Approx(1.0));
    CHECK(shifted.atoms()[0].weight == doctest::Approx(0.5));

    CHECK_THROWS_AS((void)standardize(dirac(3.0)), DegenerateMeasure);

    std::mt19937_64 eng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const AtomicMeasure mu = standardize(oracles::random_measure(eng));
        CHECK(std::abs(moment(mu, 1)) <= 1e-10);
        CHECK(std::abs(moment(mu, 2) - 1.0) <= 1e-10);
        check_valid(mu);
    }
}

TEST_CASE("sharpness family") {
    const AtomicMeasure mu = sharpness_measure(0.1);
    REQUIRE(mu.size() == 6);
    CHECK(mu.atoms()[0].position == doctest::Approx(-std::sqrt(1.1)).epsilon(1e-15));
    CHECK(mu.atoms()[1].position == -1.0);
    CHECK(mu.atoms()[2].position == doctest::Approx(-std::sqrt(0.9)).epsilon(1e-15));
    CHECK(mu.atoms()[0].weight == doctest::Approx(0.05));
    CHECK(mu.atoms()[1].weight == doctest::Approx(0.4));
    CHECK(moment(mu, 1) == doctest::Approx(0.0));
    CHECK(moment(mu, 2) == doctest::Approx(1.0).epsilon(1e-12));

    for (double eps : {0.3, 0.2, 0.1, 0.05}) {
        CHECK(levy_distance(sharpness_measure(eps), bernoulli()) >= eps / 4.0);
        check_valid(sharpness_measure(eps));
    }

    CHECK_THROWS_AS((void)sharpness_measure(0.5), InvalidArgument);
    CHECK_THROWS_AS((void)sharpness_measure(0.0), InvalidArgument);
    CHECK_THROWS_AS((void)sharpness_measure(-0.1), InvalidArgument);
}

TEST_CASE("two-atom closed-form family") {
    const AtomicMeasure m1 = example_measure(1);
    REQUIRE(m1.size() == 2);
    CHECK(m1.atoms()[0].position == doctest::Approx(-0.61803398875).epsilon(1e-10));
    CHECK(m1.atoms()[0].weight == doctest::Approx(0.72360679775).epsilon(1e-10));
    CHECK(m1.atoms()[1].position == doctest::Approx(1.61803398875).epsilon(1e-10));
    CHECK(m1.atoms()[1].weight == doctest::Approx(0.27639320225).epsilon(1e-10));

    const AtomicMeasure m4 = example_measure(4);
    CHECK(m4.atoms()[0].position == doctest::Approx(-0.78077640640442).epsilon(1e-10));
    CHECK(m4.atoms()[0].weight == doctest::Approx(0.62126781251817).epsilon(1e-10));
    CHECK(m4.atoms()[1].position == doctest::Approx(1.28077640640442).epsilon(1e-10));
    CHECK(m4.atoms()[1].weight == doctest::Approx(0.37873218748183).epsilon(1e-10));

    for (long long n : {1LL, 2LL, 3LL, 10LL, 100LL, 1000000LL}) {
        const AtomicMeasure mu = example_measure(n);
        CHECK(std::abs(moment(mu, 1)) <= 1e-12);
        CHECK(moment(mu, 2) == doctest::Approx(1.0).epsilon(1e-12));
        check_valid(mu);
    }

    CHECK_THROWS_AS((void)example_measure(0), InvalidArgument);
}
