#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liespec/lattice.hpp"
#include "liespec/so3nat.hpp"

namespace liespec::oracle {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Theta-coordinates -> so(3) matrix; Theta_a is e_a-hat / sqrt(2), g0-orthonormal.
Mat3 hat(const Vec3& theta);
Mat3 so3_exp(const Mat3& X);
// || exp(L V) exp(-L W) - I ||_F
double closure_residual(const Vec3& V, const Vec3& W, double L);

struct FlowState {
  Mat3 attitude = Mat3::Identity();
  Vec3 body_velocity = Vec3::Zero();
};

struct FlowOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double initial_dt = 1e-3;
};

struct FlowError : NumericGuard {
  double last_good_time;
  FlowError(const std::string& what, double t) : NumericGuard(what), last_good_time(t) {}
};

Vec3 inertia(const SO3Metric& g);
double energy(const SO3Metric& g, const Vec3& body_velocity);  // g-norm squared

FlowState euler_flow(const SO3Metric& g, const FlowState& start, double t, const FlowOptions& opt = {});

struct Linearization {
  FlowState end;
  Mat6 monodromy;  // d(xi, d omega)(t) / d(xi, d omega)(0), left-trivialized
  double energy_drift = 0;
};
Linearization linearized_flow(const SO3Metric& g, const Vec3& v0, double t, const FlowOptions& opt = {});

struct MonodromyReport {
  int fixed_dim = 0;      // generalized eigenvalue-1 space: kernel of (M - I)^2
  int geometric_dim = 0;  // kernel of (M - I)
  std::vector<double> singular_values;          // of (M - I)^2, descending
  std::vector<double> geometric_singular_values;  // of (M - I)
  double closure = 0;
  double tol = 1e-5;
};
// Throws NumericGuard when a singular value sits within a factor 100 of tol.
MonodromyReport monodromy_fixed_dim(const SO3Metric& g, const Vec3& v0, double tau, double tol = 1e-5);

struct ConjugateEvent {
  double time = 0;
  int multiplicity = 0;
  double min_singular = 0;
  bool sign_change = false;
};
struct ConjugateReport {
  int count = 0;
  std::vector<ConjugateEvent> events;
  std::vector<std::string> flags;  // tangencies and near-endpoint events
};
ConjugateReport numeric_conjugate_count(const SO3Metric& g, const Vec3& v0, double L, const FlowOptions& opt = {});

// Naturally reductive data (V, W) and unit initial body velocity V - W for a component.
struct NatRedData {
  Vec3 V = Vec3::Zero(), W = Vec3::Zero();
  Vec3 velocity() const { return V - W; }
};
NatRedData representative(const SO3Metric& g, const FixComponent& c);
NatRedData type3_data(const SO3Metric& g, const PQ& pq);

// Exhaustive box scan of {x in Z^n : x^T G x <= bound}, sorted like enumerate_coords.
std::vector<lattice::EnumeratedVector> brute_enumerate(const RatMat& gram, const Q& bound);

}  // namespace liespec::oracle
