#include "doctest.h"
#include "liespec/so3nat.hpp"

#include <cmath>
#include <numeric>
#include <set>

using namespace liespec;

namespace {

const double kPi = std::acos(-1.0);

SO3Metric metric(Q alpha, Q A) { return SO3Metric::make(Surd(alpha), Surd(A)); }

std::set<std::string> coeffs(const std::vector<SO3Period>& spec) {
  std::set<std::string> out;
  for (const auto& p : spec) out.insert(p.r.str());
  return out;
}

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(SO3Metric::make(Surd(0), Surd(1)), DomainError);
  CHECK_THROWS_AS(SO3Metric::make(Surd(1), Surd(-1)), DomainError);
  auto g = metric(1, Q(1, 2));
  CHECK(g.kappa() == Surd(1));
  CHECK(g.abar() == Surd(1));
  CHECK(std::abs(ell0() - 2 * std::sqrt(2.0) * kPi) < 1e-15);
}

TEST_CASE("epsilon set against a direct search") {
  auto g = metric(1, Q(1, 2));
  CHECK(epsilon_set(Surd(5), g) == std::vector<PQ>{{1, 2}});
  CHECK(epsilon_set(Surd(Q(1, 2)), g).empty());
  CHECK(epsilon_set(Surd(Q(26, 9)), metric(1, 10)) == std::vector<PQ>{{1, 2}});
  // r = q^2 + p^2 for kappa = 1: every coprime pair with q > p
  for (long r = 1; r <= 60; ++r) {
    std::vector<PQ> want;
    for (long p = 1; p * p <= r; ++p)
      for (long q = p + 1; q * q + p * p <= r; ++q)
        if (q * q + p * p == r && std::gcd(p, q) == 1) want.push_back({p, q});
    CHECK(epsilon_set(Surd(r), g) == want);
  }
}

TEST_CASE("admissibility and primitive coefficients") {
  auto g = metric(1, 2);  // kappa = -2
  CHECK_FALSE(admissible(g, {1, 2}));
  CHECK(admissible(g, {1, 3}));
  CHECK(admissible(g, {3, 7}));
  CHECK_FALSE(admissible(g, {2, 4}));
  CHECK(type3_primitive_coeff(g, {1, 3}) == Surd(7));
  CHECK(type3_primitive_coeff(metric(1, Q(1, 2)), {1, 2}) == Surd(5));
  CHECK(type3_sigma(metric(1, Q(1, 2)), {1, 2}) == Surd(3));
  CHECK(type3_sigma(metric(1, Q(1, 2)), {2, 3}) == Surd(Q(5, 4)));
}

TEST_CASE("length spectrum against direct enumeration") {
  CHECK(coeffs(length_spectrum(metric(1, 1), Surd(4))) == std::set<std::string>{"0", "1", "4"});
  CHECK(coeffs(length_spectrum(metric(1, 1), Surd(0))) == std::set<std::string>{"0"});
  for (auto [alpha, A] : std::vector<std::pair<Q, Q>>{{1, Q(1, 2)}, {1, 2}, {2, 3}, {1, 10}}) {
    auto g = metric(alpha, A);
    Q bound = 20;
    std::set<Q> want{0};
    for (long m = 1; m * m * alpha <= bound; ++m) want.insert(m * m * alpha);
    for (long m = 1; m * m * A <= bound; ++m) want.insert(m * m * A);
    Q kappa = A / (alpha - A);
    for (long p = 1; p <= 20; ++p)
      for (long q = 1; q <= 20; ++q) {
        if (std::gcd(p, q) != 1 || Q(q) <= p * abs(kappa)) continue;
        Q r0 = alpha * (q * q + p * p * kappa);
        for (long m = 1; m * m * r0 <= bound; ++m) want.insert(m * m * r0);
      }
    std::set<std::string> ws;
    for (const auto& w : want) ws.insert(Surd(w).str());
    CAPTURE(g.str());
    CHECK(coeffs(length_spectrum(g, Surd(bound))) == ws);
  }
}

TEST_CASE("cleanliness") {
  auto c = classify_cleanliness(metric(1, Q(1, 2)));
  CHECK_FALSE(c.clean);
  CHECK(c.j == 1);
  CHECK(c.k == 4);
  auto u = c.unclean_coeffs(Surd(40));
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Surd(8));
  CHECK(u[1] == Surd(32));
  CHECK(c.unclean_at(Surd(8)));
  CHECK_FALSE(c.unclean_at(Surd(2)));
  CHECK(classify_cleanliness(SO3Metric::make(Surd(1), Surd::sqrt_of(2))).clean);
  CHECK(classify_cleanliness(metric(3, 3)).clean);
}

TEST_CASE("fixed-point components") {
  auto bi = fix_components(metric(1, 1), Surd(1));
  REQUIRE(bi.size() == 1);
  CHECK(bi[0].dim == 5);
  auto two = fix_components(metric(1, Q(1, 2)), Surd(Q(1, 2)));
  REQUIRE(two.size() == 2);
  CHECK(two[0].dim == 3);
  CHECK(two[0].sign == -two[1].sign);
  auto one = fix_components(metric(1, 2), Surd(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].dim == 4);
  CHECK(one[0].type == GeodesicType::TypeI);
  auto three = fix_components(metric(1, Q(1, 2)), Surd(5));
  REQUIRE(three.size() == 1);
  CHECK(three[0].type == GeodesicType::TypeIII);
}

TEST_CASE("volumes and wave0") {
  auto bi = fix_components(metric(1, 1), Surd(1));
  auto v = dg_volume(bi[0], metric(1, 1), Surd(1));
  CHECK(v.str() == "64*sqrt(2)*pi^3");
  CHECK(std::abs(v.value() - 64 * std::sqrt(2.0) * std::pow(kPi, 3)) < 1e-9);
  auto g = metric(1, Q(1, 2));
  auto two = fix_components(g, Surd(Q(1, 2)));
  CHECK(dg_volume(two[0], g, Surd(Q(1, 2))).str() == "8*pi");
  auto w = wave0_taumin(metric(1, 1));
  CHECK(w.sign == -1);
  CHECK(w.magnitude.str() == "16*sqrt(2)*pi");
  CHECK(w.parity == "odd");
  auto w2 = wave0_taumin(g);
  CHECK(w2.magnitude.str() == "8");
  CHECK(w2.sigma_numeric);
  CHECK(wave0_taumin(metric(1, 2)).parity == "even");
}

TEST_CASE("closed forms") {
  ClosedForm f(Surd(2));
  f.times_power(Surd(2), Q(1, 2)).times_pi(1);
  CHECK(f.str() == "2*sqrt(2)*pi");
  ClosedForm h(Surd(1));
  h.times_power(Surd(8), Q(1, 4));
  CHECK(std::abs(h.value() - std::pow(8.0, 0.25)) < 1e-14);
}

TEST_CASE("Type III conjugate times") {
  auto g = metric(1, Q(1, 2));
  CHECK(type3_a_squared(g, {1, 2}) == Surd(Q(7, 16)));
  double L = type3_length(g, {1, 2});
  CHECK(std::abs(L - 2 * std::sqrt(10.0) * kPi) < 1e-12);
  auto t = type3_conjugate_times(g, {1, 2}, L);
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t[0].time - 8 * kPi / std::sqrt(7.0)) < 1e-12);
  CHECK(t[0].multiplicity == 1);
  CHECK(type3_morse_index(g, {1, 2}) == static_cast<int>(std::floor(std::sqrt(70.0) / 4)));
  CHECK(type3_conjugate_times(g, {1, 2}, 1.0).empty());
  auto both = type3_conjugate_times(metric(1, 2), {3, 7}, 200.0);
  std::set<std::string> families;
  for (const auto& c : both) families.insert(c.family);
  CHECK(families == std::set<std::string>{"isolated", "periodic"});
  CHECK_THROWS_AS(type3_conjugate_times(metric(1, 2), {1, 2}, 10.0), DomainError);
}

TEST_CASE("singular support") {
  auto s = certified_singular_support(metric(1, 1), Surd(9));
  CHECK(s.undetermined.empty());
  CHECK(s.certified.size() == 3);
  auto g = SO3Metric::make(Surd(1), Surd::sqrt_of(2));
  auto t = certified_singular_support(g, Surd(16));
  for (long m = 1; m <= 4; ++m) {
    bool found = false;
    for (const auto& r : t.certified) found = found || r == Surd(m * m);
    CHECK(found);
  }
  CHECK(t.unclean.empty());
  auto u = certified_singular_support(metric(1, Q(1, 2)), Surd(10));
  bool five_undetermined = false;
  for (const auto& r : u.undetermined) five_undetermined = five_undetermined || r == Surd(5);
  CHECK(five_undetermined);
  bool eight_unclean = false;
  for (const auto& r : u.unclean) eight_unclean = eight_unclean || r == Surd(8);
  CHECK(eight_unclean);
}
