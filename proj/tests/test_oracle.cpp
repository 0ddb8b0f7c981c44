#include "doctest.h"
#include "liespec/oracle.hpp"

#include <cmath>
#include <random>

using namespace liespec;
using namespace liespec::oracle;

namespace {

const double kPi = std::acos(-1.0);

SO3Metric metric(Q alpha, Q A) { return SO3Metric::make(Surd(alpha), Surd(A)); }

FixComponent comp(GeodesicType t, int dim, int sign = 1) {
  FixComponent c;
  c.type = t;
  c.dim = dim;
  c.sign = sign;
  return c;
}

}  // namespace

TEST_CASE("exponential") {
  CHECK((so3_exp(Mat3::Zero()) - Mat3::Identity()).norm() < 1e-15);
  Vec3 axis(1, 2, 2);
  axis /= axis.norm();
  Mat3 X = hat(axis * 2 * kPi * std::sqrt(2.0));  // angle 2 pi
  CHECK((so3_exp(X) - Mat3::Identity()).norm() < 1e-10);
  // a g0-unit vector returns to the identity after ell0
  CHECK((so3_exp(hat(Vec3(0, 0, ell0()))) - Mat3::Identity()).norm() < 1e-10);
  CHECK((so3_exp(hat(Vec3(0, 0, ell0() / 2))) - Mat3::Identity()).norm() > 1);
}

TEST_CASE("closure residuals") {
  auto g = metric(1, Q(1, 2));
  auto two = representative(g, comp(GeodesicType::TypeII, 3));
  double L = length_from_coeff(Surd(Q(1, 2)));
  CHECK(closure_residual(two.V, two.W, L) < 1e-9);
  CHECK(closure_residual(two.V, two.W, 1.3 * L) > 1e-2);
  auto three = type3_data(g, {1, 2});
  CHECK(closure_residual(three.V, three.W, type3_length(g, {1, 2})) < 1e-9);
  CHECK(std::abs(energy(g, three.velocity()) - 1) < 1e-12);
  CHECK(closure_residual(Vec3(0.3, -0.2, 0.5), Vec3(0.1, 0.4, 0.0), 3.7) > 0.1);
}

TEST_CASE("euler flow") {
  auto g = metric(1, Q(1, 2));
  FlowState s;
  s.body_velocity = Vec3(0, 0, 0.7);
  auto e = euler_flow(g, s, 5.0);
  CHECK((e.body_velocity - s.body_velocity).norm() < 1e-10);
  auto bi = metric(1, 1);
  FlowState b;
  b.body_velocity = Vec3(0.3, -0.5, 0.8);
  auto eb = euler_flow(bi, b, 4.0);
  CHECK((eb.attitude - so3_exp(hat(4.0 * b.body_velocity))).norm() < 1e-8);
  auto d = type3_data(g, {1, 2});
  FlowState t;
  t.body_velocity = d.velocity();
  auto et = euler_flow(g, t, type3_length(g, {1, 2}));
  CHECK((et.attitude - Mat3::Identity()).norm() < 1e-7);
  CHECK((et.body_velocity - t.body_velocity).norm() < 1e-7);
}

TEST_CASE("monodromy fixed dimension") {
  auto g = metric(1, Q(1, 2));
  auto v = representative(g, comp(GeodesicType::TypeII, 3)).velocity();
  CHECK(monodromy_fixed_dim(g, v, length_from_coeff(Surd(Q(1, 2)))).fixed_dim == 4);
  // 16 A = 8, unclean by the (j, k) rule
  CHECK(monodromy_fixed_dim(g, v, length_from_coeff(Surd(8))).fixed_dim == 6);
  // kA/alpha integral already at k = 2 (r = 2), see the decisions notes
  CHECK(monodromy_fixed_dim(g, v, length_from_coeff(Surd(2))).fixed_dim == 6);
  auto bi = metric(1, 1);
  auto r = monodromy_fixed_dim(bi, Vec3(1, 0, 0), length_from_coeff(Surd(1)));
  CHECK(r.fixed_dim == 6);
  CHECK(r.geometric_dim == 5);
}

TEST_CASE("numeric conjugate points") {
  auto bi = metric(1, 1);
  auto r = numeric_conjugate_count(bi, Vec3(1, 0, 0), 1.5 * ell0());
  REQUIRE(r.events.size() == 1);
  CHECK(std::abs(r.events[0].time - ell0()) < 1e-6);
  CHECK(r.events[0].multiplicity == 2);
  CHECK(numeric_conjugate_count(bi, Vec3(1, 0, 0), 0.9 * ell0()).count == 0);
}

TEST_CASE("brute enumeration") {
  auto id = brute_enumerate({{1, 0}, {0, 1}}, 1);
  CHECK(id.size() == 4);
  CHECK_THROWS_AS(brute_enumerate({{1, 0}, {0, 1}}, 85), DomainError);
  // same scan with the form scaled by 1/4 keeps the bound inside the guard rail
  auto b2 = brute_enumerate({{Q(1, 4), 0}, {0, Q(1, 4)}}, Q(85, 4));
  bool v = false, w = false;
  for (const auto& e : b2) {
    v = v || e.coords == std::vector<std::int64_t>{7, 6};
    w = w || e.coords == std::vector<std::int64_t>{9, 2};
  }
  CHECK(v);
  CHECK(w);
  CHECK_THROWS_AS(brute_enumerate(RatMat(7, RatVec(7, 0)), 1), DomainError);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-1, 1);
  for (int t = 0; t < 5; ++t) {
    std::size_t n = 2 + t;
    RatMat B(n, RatVec(n));
    for (auto& row : B)
      for (auto& x : row) x = e(rng);
    RatMat G = gram(B);
    for (std::size_t i = 0; i < n; ++i) G[i][i] += 1;
    auto a = brute_enumerate(G, 6);
    auto b = lattice::enumerate_coords(lattice::QuadraticForm(G), 6, false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].coords == b[i].coords);
      CHECK(a[i].value == b[i].value);
    }
  }
}

TEST_CASE("energy and momentum norm are conserved") {
  auto g = metric(1, Q(1, 3));
  FlowState s;
  s.body_velocity = Vec3(0.4, -0.3, 0.6);
  Vec3 I = inertia(g);
  double e0 = energy(g, s.body_velocity);
  double m0 = I.cwiseProduct(s.body_velocity).norm();
  for (double t : {1.0, 5.0, 20.0}) {
    auto e = euler_flow(g, s, t);
    CHECK(std::abs(energy(g, e.body_velocity) - e0) < 1e-10 * t);
    CHECK(std::abs(I.cwiseProduct(e.body_velocity).norm() - m0) < 1e-10 * t);
  }
  auto lin = linearized_flow(g, s.body_velocity, 10.0);
  CHECK(lin.energy_drift < 1e-9);
}

TEST_CASE("conjugate scan agrees with a finite-difference endpoint map") {
  // sign changes of det d/dv [R(t; v)] from central differences of euler_flow
  auto g = metric(1, Q(1, 2));
  auto d = type3_data(g, {1, 2});
  Vec3 v = d.velocity();
  double L = type3_length(g, {1, 2});
  auto vee = [](const Mat3& M) { return Vec3(M(2, 1), M(0, 2), M(1, 0)); };
  const double h = 1e-6;
  std::vector<double> crossings;
  double prev = 0;
  for (double t = 0.05; t < L; t += 0.02) {
    FlowState s;
    s.body_velocity = v;
    Mat3 R0 = euler_flow(g, s, t).attitude;
    Mat3 J;
    for (int k = 0; k < 3; ++k) {
      FlowState a = s, b = s;
      a.body_velocity[k] += h;
      b.body_velocity[k] -= h;
      J.col(k) = vee(R0.transpose() * (euler_flow(g, a, t).attitude - euler_flow(g, b, t).attitude)) / (2 * h);
    }
    double det = J.determinant();
    if (prev != 0 && (det > 0) != (prev > 0)) crossings.push_back(t);
    prev = det;
  }
  auto rep = numeric_conjugate_count(g, v, L);
  REQUIRE(crossings.size() == rep.events.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) CHECK(std::abs(crossings[i] - rep.events[i].time) < 0.03);
  CHECK(rep.count == 3);
}
