#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "floer/algebra/rational.hpp"
#include "floer/flat/hermitian.hpp"
#include "floer/flat/spectral_flow.hpp"
#include "floer/flat/spectrum.hpp"
#include "floer/flat/spin.hpp"
#include "oracles.hpp"

using namespace floer;
using namespace floer::flat;
using std::numbers::pi;

namespace {

int multiplicity_of(const SpectrumWindow& w, double value) {
  for (const auto& e : w.entries)
    if (std::fabs(e.value - value) < 1e-9) return e.multiplicity;
  return 0;
}

std::array<double, 3> random_point(std::mt19937_64& rng, double delta) {
  std::uniform_real_distribution<double> coord(-2 * pi, 4 * pi);
  while (true) {
    std::array<double, 3> p{coord(rng), coord(rng), coord(rng)};
    // keep away from the spheres so rounding cannot decide the answer
    bool near = false;
    for (double r : {delta - 1e-6, delta + 1e-6})
      if (oracle::outside(p, r) != oracle::outside(p, delta)) near = true;
    if (!near) return p;
  }
}

PolyPath path_of(const std::vector<std::array<double, 3>>& pts) {
  PolyPath path;
  for (const auto& p : pts) path.vertices.push_back(Point3(p));
  return path;
}

// Steps of length below pi, so consecutive vertices stay within one period.
std::vector<std::array<double, 3>> random_walk(std::mt19937_64& rng, std::array<double, 3> start, int steps, double delta) {
  std::uniform_real_distribution<double> step(-2.5, 2.5);
  std::vector<std::array<double, 3>> pts{start};
  for (int i = 0; i < steps; ++i) {
    std::array<double, 3> next;
    do {
      next = pts.back();
      for (auto& c : next) c += step(rng);
    } while (kernel_locus_membership(Point3(next), delta) == LocusSide::on);
    pts.push_back(next);
  }
  return pts;
}

}  // namespace

TEST(DiracSpectrum, ParallelSpinors) {
  const auto w = dirac_spectrum(FlatPoint(0, 0, 0), 0, 1);
  ASSERT_EQ(w.entries.size(), 1u);
  EXPECT_EQ(w.entries[0].value, 0.0);
  EXPECT_EQ(w.entries[0].multiplicity, 2);
}

TEST(DiracSpectrum, HalfPeriodPoint) {
  const auto w = dirac_spectrum(FlatPoint(pi, 0, 0), 0, 3.2);
  ASSERT_FALSE(w.entries.empty());
  EXPECT_NEAR(w.entries.front().value, -pi, 1e-12);
  EXPECT_NEAR(w.entries.back().value, pi, 1e-12);
  EXPECT_EQ(multiplicity_of(w, pi), 2);
  EXPECT_EQ(multiplicity_of(w, -pi), 2);
  int mult = 0;
  EXPECT_NEAR(oracle::smallest_abs_eigenvalue({pi, 0, 0}, 3, &mult), pi, 1e-12);
  EXPECT_EQ(mult, 2);
}

TEST(DiracSpectrum, KernelOnTheSphere) {
  for (double delta : {0.1, 0.5, 2.0, 3.0}) {
    const auto w = dirac_spectrum(FlatPoint(delta, 0, 0), delta, 0.5);
    EXPECT_EQ(multiplicity_of(w, 0.0), 1) << delta;
  }
}

TEST(DiracSpectrum, SmallestEigenvalueMatchesOracle) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> coord(0, 2 * pi);
  for (int trial = 0; trial < 50; ++trial) {
    const std::array<double, 3> b{coord(rng), coord(rng), coord(rng)};
    int mult = 0;
    const double lo = oracle::smallest_abs_eigenvalue(b, 2, &mult);
    const auto w = dirac_spectrum(FlatPoint(b[0], b[1], b[2]), 0, lo + 1e-6);
    EXPECT_EQ(multiplicity_of(w, lo), mult);
    EXPECT_EQ(multiplicity_of(w, -lo), mult);
  }
}

TEST(DiracSpectrum, SymmetricWithoutShift) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coord(0, 2 * pi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = dirac_spectrum(FlatPoint(coord(rng), coord(rng), coord(rng)), 0, 15);
    const auto& e = w.entries;
    for (std::size_t i = 0; i < e.size(); ++i) {
      EXPECT_NEAR(e[i].value, -e[e.size() - 1 - i].value, 1e-9);
      EXPECT_EQ(e[i].multiplicity, e[e.size() - 1 - i].multiplicity);
    }
  }
}

TEST(DiracSpectrum, LatticePeriodic) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coord(0.5, 5.5);
  for (int trial = 0; trial < 10; ++trial) {
    const double x = coord(rng), y = coord(rng), z = coord(rng);
    const auto a = dirac_spectrum(FlatPoint(x, y, z), 0.4, 12);
    for (int axis = 0; axis < 3; ++axis) {
      std::array<double, 3> s{x, y, z};
      s[axis] += 2 * pi;
      const auto b = dirac_spectrum(FlatPoint(s[0], s[1], s[2]), 0.4, 12);
      ASSERT_EQ(a.entries.size(), b.entries.size());
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_NEAR(a.entries[i].value, b.entries[i].value, 1e-9);
        EXPECT_EQ(a.entries[i].multiplicity, b.entries[i].multiplicity);
      }
    }
  }
}

TEST(DiracSpectrum, RejectsNonPositiveRadius) {
  EXPECT_THROW(dirac_spectrum(FlatPoint(0, 0, 0), 0, 0), Error);
  EXPECT_THROW(dirac_spectrum(FlatPoint(0, 0, 0), 0, -1), Error);
}

TEST(FlatPoint, ReducesToFundamentalDomain) {
  const FlatPoint p(Point3::parse("-pi/2,5pi,2pi"));
  EXPECT_NEAR(p.values()[0], 1.5 * pi, 1e-12);
  EXPECT_NEAR(p.values()[1], pi, 1e-12);
  EXPECT_EQ(p.values()[2], 0.0);
  ASSERT_TRUE(p.beta().exact.has_value());
  EXPECT_EQ((*p.beta().exact)[0].pi_coeff, Rational(3, 2));
}

TEST(PiLinear, Parsing) {
  EXPECT_EQ(parse_pi_linear("pi").pi_coeff, 1);
  EXPECT_EQ(parse_pi_linear("0.5pi").pi_coeff, Rational(1, 2));
  EXPECT_EQ(parse_pi_linear("3pi/4").pi_coeff, Rational(3, 4));
  EXPECT_EQ(parse_pi_linear("2*pi").pi_coeff, 2);
  const auto m = parse_pi_linear("pi-0.3");
  EXPECT_EQ(m.pi_coeff, 1);
  EXPECT_EQ(m.offset, Rational(-3, 10));
  EXPECT_EQ(parse_pi_linear("-1.5e-1").offset, Rational(-3, 20));
  EXPECT_THROW(parse_pi_linear("pie"), Error);
  EXPECT_THROW(parse_pi_linear(""), Error);
  EXPECT_THROW(Point3::parse("1,2"), Error);
}

TEST(KernelLocus, Examples) {
  EXPECT_EQ(kernel_locus_membership(Point3(0, 0, 0), 0.3), LocusSide::inside);
  EXPECT_EQ(kernel_locus_membership(Point3(0.3, 0, 0), 0.3), LocusSide::on);
  EXPECT_EQ(kernel_locus_membership(Point3::parse("pi,pi,pi"), Real::parse("0.3")), LocusSide::outside);
}

TEST(KernelLocus, ExactComparison) {
  EXPECT_EQ(kernel_locus_membership(Point3::parse("0.3,0,0"), Real::parse("0.3")), LocusSide::on);
  EXPECT_EQ(kernel_locus_membership(Point3::parse("pi/2,0,0"), Real::parse("pi/2")), LocusSide::on);
  EXPECT_EQ(kernel_locus_membership(Point3::parse("2pi,0.3,0.4"), Real::parse("0.5")), LocusSide::on);
  EXPECT_EQ(kernel_locus_membership(Point3::parse("pi/2,0,0"), Real::parse("1.5707963")), LocusSide::outside);
  EXPECT_EQ(kernel_locus_membership(Point3::parse("0.3,0,0"), Real::parse("0.30000000000001")), LocusSide::inside);
}

TEST(KernelLocus, RejectsLargePerturbation) {
  for (const char* d : {"0", "pi", "-0.1", "3.2"}) {
    try {
      kernel_locus_membership(Point3(0, 0, 0), Real::parse(d));
      ADD_FAILURE() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.token(), "perturbation_not_small");
    }
  }
}

TEST(KernelLocus, AgreesWithNeighbourScan) {
  std::mt19937_64 rng(4);
  for (double delta : {0.1, 1.0, 3.0})
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = random_point(rng, delta);
      const auto side = kernel_locus_membership(Point3(p), delta);
      EXPECT_EQ(side == LocusSide::outside, oracle::outside(p, delta));
    }
}

TEST(SpectralFlow, CenterToCorner) {
  EXPECT_EQ(spectral_flow(PolyPath::parse("0,0,0;pi,pi,pi"), Real::parse("0.3")), 1);
  EXPECT_EQ(spectral_flow(PolyPath::parse("pi,pi,pi;0,0,0"), Real::parse("0.3")), -1);
  EXPECT_EQ(spectral_flow(PolyPath::parse("pi,0,0;pi,pi,0;pi,pi,pi"), Real::parse("0.3")), 0);
}

TEST(SpectralFlow, ChordThroughBall) {
  // enters and leaves the same ball
  EXPECT_EQ(spectral_flow(PolyPath::parse("-1,0.1,0;1,0.1,0"), 0.3), 0);
  // tangent to the sphere
  EXPECT_EQ(spectral_flow(PolyPath::parse("-1,0.3,0;1,0.3,0"), Real::parse("0.3")), 0);
}

TEST(SpectralFlow, Errors) {
  auto token_of = [](const char* path, const char* delta) {
    try {
      spectral_flow(PolyPath::parse(path), Real::parse(delta));
    } catch (const Error& e) {
      return e.token();
    }
    return std::string("none");
  };
  EXPECT_EQ(token_of("0.3,0,0;pi,pi,pi", "0.3"), "endpoint_on_locus");
  EXPECT_EQ(token_of("0,0,0;0,0.3,0;pi,pi,pi", "0.3"), "vertex_on_locus");
  EXPECT_EQ(token_of("0,0,0", "0.3"), "invalid_path");
  EXPECT_EQ(token_of("pi,pi,pi;3pi,pi,pi", "0.3"), "invalid_path");
  EXPECT_EQ(token_of("0,0,0;pi,pi,pi", "4"), "perturbation_not_small");
}

TEST(SpectralFlow, LoopsVanish) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const double delta = trial % 2 ? 0.3 : 2.5;
    auto pts = random_walk(rng, random_point(rng, delta), 2 + trial % 6, delta);
    // closed in the torus: the final vertex is the start shifted by a lattice vector
    auto end = pts.front();
    std::uniform_int_distribution<int> shift(-1, 1);
    for (auto& c : end) c += 2 * pi * shift(rng);
    // walk there in short steps
    const auto last = pts.back();
    for (int s = 1; s <= 8; ++s) {
      std::array<double, 3> q;
      for (int i = 0; i < 3; ++i) q[i] = last[i] + (end[i] - last[i]) * s / 8.0;
      if (s < 8 && kernel_locus_membership(Point3(q), delta) == LocusSide::on) continue;
      pts.push_back(q);
    }
    EXPECT_EQ(spectral_flow(path_of(pts), delta), 0);
  }
}

TEST(SpectralFlow, AdditiveAndMatchesEndpointOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const double delta = 0.2 + 2.8 * (trial % 7) / 7.0;
    const auto a = random_walk(rng, random_point(rng, delta), 1 + trial % 4, delta);
    auto b = random_walk(rng, a.back(), 1 + trial % 3, delta);
    const auto pa = path_of(a), pb = path_of(b);
    const int sa = spectral_flow(pa, delta), sb = spectral_flow(pb, delta);
    EXPECT_EQ(spectral_flow(pa.then(pb), delta), sa + sb);
    EXPECT_EQ(sa, oracle::endpoint_flow(a.front(), a.back(), delta));
  }
}

TEST(SpectralFlow, ZeroFromCenterExactlyInside) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double delta = 2.0;
    std::array<double, 3> p{coord(rng), coord(rng), coord(rng)};
    if (kernel_locus_membership(Point3(p), delta) == LocusSide::on) continue;
    // straight segments from the centre, split to respect the step bound
    const auto path = path_of({{0, 0, 0}, {p[0] / 2, p[1] / 2, p[2] / 2}, p});
    if (kernel_locus_membership(path.vertices[1], delta) == LocusSide::on) continue;
    const bool inside = kernel_locus_membership(Point3(p), delta) == LocusSide::inside;
    EXPECT_EQ(spectral_flow(path, delta) == 0, inside);
  }
}

TEST(SpinPoints, Classification) {
  for (const char* d : {"0.1", "0.3", "3.0"}) {
    const auto pts = spin_points(Real::parse(d));
    ASSERT_EQ(pts.size(), 8u);
    int inside = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const bool origin = pts[i].point.values() == std::array<double, 3>{0, 0, 0};
      EXPECT_EQ(pts[i].is_s0, origin);
      EXPECT_EQ(pts[i].side, origin ? LocusSide::inside : LocusSide::outside);
      inside += pts[i].side == LocusSide::inside;
    }
    EXPECT_EQ(inside, 1);
    EXPECT_NEAR(pts[1].point.values()[0], pi, 1e-15);
  }
  EXPECT_THROW(spin_points(Real::parse("pi")), Error);
}

TEST(Hermitian, Examples) {
  EXPECT_EQ(hermitian2_stratum(0.0, 0.0, {0.0, 0.0}), 2);
  EXPECT_EQ(hermitian2_stratum(1.0, 1.0, {1.0, 0.0}), 1);
  EXPECT_EQ(hermitian2_stratum(1.0, -1.0, {0.0, 0.0}), 0);
}

TEST(Hermitian, AgreesWithEigenSolver) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> small(-4, 4), den(1, 3), kind(0, 3);
  for (int trial = 0; trial < 400; ++trial) {
    Rational a(small(rng), den(rng)), zr(small(rng), den(rng)), zi(small(rng), den(rng)), b(small(rng), den(rng));
    switch (kind(rng)) {
      case 0:  // on the quadric
        if (a != 0) b = (zr * zr + zi * zi) / a;
        break;
      case 1:
        a = b = zr = zi = 0;
        break;
      default:
        break;
    }
    const int exact = hermitian2_stratum(a, b, zr, zi);
    Eigen::Matrix2cd m;
    const std::complex<double> z(to_double(zr), to_double(zi));
    m << to_double(a), std::conj(z), z, to_double(b);
    const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(m).eigenvalues();
    const int zeros = (std::fabs(ev[0]) < 1e-9) + (std::fabs(ev[1]) < 1e-9);
    EXPECT_EQ(exact, zeros) << a << " " << b << " " << zr << " " << zi;
  }
}
