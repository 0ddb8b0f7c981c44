#include "liespec/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace liespec::oracle {

namespace odeint = boost::numeric::odeint;
__extension__ typedef __int128 i128;

namespace {

const double kRt2 = std::sqrt(2.0);
constexpr double kPi = 3.14159265358979323846;

Mat3 cross(const Vec3& v) {
  Mat3 m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

// attitude (9), body velocity (3), optional 6x6 variational matrix (36)
using State = std::array<double, 48>;

struct Rhs {
  Vec3 I;
  bool variational;

  void operator()(const State& x, State& dx, double /*t*/) const {
    Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>> R(x.data());
    Vec3 w(x[9], x[10], x[11]);
    Vec3 m = I.cwiseProduct(w);
    Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>> dR(dx.data());
    dR = R * hat(w);
    Vec3 dw = m.cross(w).cwiseQuotient(I) / kRt2;
    dx[9] = dw.x();
    dx[10] = dw.y();
    dx[11] = dw.z();
    if (!variational) {
      std::fill(dx.begin() + 12, dx.end(), 0.0);
      return;
    }
    Mat6 A = Mat6::Zero();
    A.block<3, 3>(0, 0) = -cross(w) / kRt2;
    A.block<3, 3>(0, 3) = Mat3::Identity();
    Mat3 lower = -cross(w) * I.asDiagonal() + cross(m);
    A.block<3, 3>(3, 3) = I.cwiseInverse().asDiagonal() * lower / kRt2;
    Eigen::Map<const Eigen::Matrix<double, 6, 6, Eigen::RowMajor>> Phi(x.data() + 12);
    Eigen::Map<Eigen::Matrix<double, 6, 6, Eigen::RowMajor>> dPhi(dx.data() + 12);
    dPhi = A * Phi;
  }
};

State pack(const FlowState& s, bool variational) {
  State x{};
  Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(x.data()) = s.attitude;
  x[9] = s.body_velocity.x();
  x[10] = s.body_velocity.y();
  x[11] = s.body_velocity.z();
  if (variational) Eigen::Map<Eigen::Matrix<double, 6, 6, Eigen::RowMajor>>(x.data() + 12) = Mat6::Identity();
  return x;
}

FlowState unpack(const State& x) {
  FlowState s;
  s.attitude = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(x.data());
  s.body_velocity = Vec3(x[9], x[10], x[11]);
  return s;
}

Mat6 unpack_phi(const State& x) { return Eigen::Map<const Eigen::Matrix<double, 6, 6, Eigen::RowMajor>>(x.data() + 12); }

void advance(const Rhs& rhs, State& x, double t0, double t1, const FlowOptions& opt) {
  if (t1 <= t0) return;
  double last = t0;
  try {
    auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, rhs, x, t0, t1, std::min(opt.initial_dt, t1 - t0),
                               [&](const State&, double t) { last = t; });
  } catch (const std::exception& e) {
    throw FlowError(std::string("integration failed: ") + e.what(), last);
  }
  for (double v : x)
    if (!std::isfinite(v)) throw FlowError("integration produced a non-finite state", last);
}

Mat3 jacobi_block(const State& x) { return unpack_phi(x).block<3, 3>(0, 3); }

}  // namespace

Mat3 hat(const Vec3& theta) { return cross(theta) / kRt2; }

Mat3 so3_exp(const Mat3& X) {
  Vec3 w(X(2, 1), X(0, 2), X(1, 0));
  double th = w.norm();
  Mat3 K = X;
  if (th < 1e-8) return Mat3::Identity() + K + 0.5 * K * K;
  return Mat3::Identity() + std::sin(th) / th * K + (1 - std::cos(th)) / (th * th) * K * K;
}

double closure_residual(const Vec3& V, const Vec3& W, double L) {
  return (so3_exp(hat(L * V)) * so3_exp(hat(-L * W)) - Mat3::Identity()).norm();
}

Vec3 inertia(const SO3Metric& g) {
  double a = g.alpha.to_double(), A = g.A.to_double();
  return Vec3(a, a, A);
}

double energy(const SO3Metric& g, const Vec3& w) { return w.dot(inertia(g).cwiseProduct(w)); }

FlowState euler_flow(const SO3Metric& g, const FlowState& start, double t, const FlowOptions& opt) {
  State x = pack(start, false);
  advance(Rhs{inertia(g), false}, x, 0, t, opt);
  return unpack(x);
}

Linearization linearized_flow(const SO3Metric& g, const Vec3& v0, double t, const FlowOptions& opt) {
  FlowState s;
  s.body_velocity = v0;
  State x = pack(s, true);
  advance(Rhs{inertia(g), true}, x, 0, t, opt);
  Linearization out;
  out.end = unpack(x);
  out.monodromy = unpack_phi(x);
  double e0 = energy(g, v0);
  out.energy_drift = std::abs(energy(g, out.end.body_velocity) - e0);
  return out;
}

MonodromyReport monodromy_fixed_dim(const SO3Metric& g, const Vec3& v0, double tau, double tol) {
  Linearization lin = linearized_flow(g, v0, tau);
  MonodromyReport rep;
  rep.tol = tol;
  rep.closure = (lin.end.attitude - Mat3::Identity()).norm() + (lin.end.body_velocity - v0).norm();
  Mat6 D = lin.monodromy - Mat6::Identity();
  Eigen::JacobiSVD<Mat6> s1(D), s2(D * D);
  auto count = [&](const Eigen::Matrix<double, 6, 1>& sv, std::vector<double>& keep) {
    int n = 0;
    for (int i = 0; i < 6; ++i) {
      keep.push_back(sv(i));
      if (sv(i) < tol) ++n;
    }
    return n;
  };
  rep.geometric_dim = count(s1.singularValues(), rep.geometric_singular_values);
  rep.fixed_dim = count(s2.singularValues(), rep.singular_values);
  for (double v : rep.singular_values)
    if (v > tol * 1e-2 && v < tol * 1e2) {
      std::ostringstream os;
      os << "monodromy singular values straddle tol " << tol << ":";
      for (double w : rep.singular_values) os << " " << w;
      throw NumericGuard(os.str());
    }
  return rep;
}

ConjugateReport numeric_conjugate_count(const SO3Metric& g, const Vec3& v0, double L, const FlowOptions& opt) {
  ConjugateReport rep;
  if (L <= 0) return rep;
  Rhs rhs{inertia(g), true};
  const int N = std::max(2000, static_cast<int>(L * 300));
  const double h = L / N;
  std::vector<State> states(N + 1);
  std::vector<double> smin(N + 1), det(N + 1);
  FlowState s0;
  s0.body_velocity = v0;
  states[0] = pack(s0, true);
  auto stepper = odeint::make_dense_output(opt.abs_tol, opt.rel_tol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(states[0], 0.0, std::min(opt.initial_dt, h));
  for (int i = 1; i <= N; ++i) {
    double ti = i == N ? L : i * h;
    while (stepper.current_time() < ti) stepper.do_step(rhs);
    stepper.calc_state(ti, states[i]);
  }
  auto measure = [](const State& x, double& d) {
    Mat3 J = jacobi_block(x);
    d = J.determinant();
    return Eigen::JacobiSVD<Mat3>(J).singularValues();
  };
  for (int i = 0; i <= N; ++i) smin[i] = measure(states[i], det[i])(2);

  auto state_at = [&](double t) {
    int i = std::clamp(static_cast<int>(std::floor(t / h)), 0, N);
    State x = states[i];
    advance(rhs, x, i * h, t, opt);
    return x;
  };
  auto sigma_at = [&](double t) {
    double d;
    return measure(state_at(t), d)(2);
  };

  for (int i = 1; i < N; ++i) {
    if (!(smin[i] <= smin[i - 1] && smin[i] <= smin[i + 1])) continue;
    if (smin[i] > 50 * h) continue;
    double a = (i - 1) * h, b = (i + 1) * h;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = sigma_at(c), fd = sigma_at(d);
    for (int it = 0; it < 60 && b - a > 1e-14 * L; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = sigma_at(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = sigma_at(d);
      }
    }
    double t = (a + b) / 2, dd;
    auto sv = measure(state_at(t), dd);
    double scale = std::max(1.0, sv(0));
    ConjugateEvent ev;
    ev.time = t;
    ev.min_singular = sv(2);
    ev.sign_change = (det[i - 1] > 0) != (det[i + 1] > 0);
    if (sv(2) > 1e-6 * scale) {
      if (sv(2) < 1e-3 * scale) {
        std::ostringstream os;
        os << "near-singular tangency at t=" << t << " (sigma_min " << sv(2) << ")";
        rep.flags.push_back(os.str());
      }
      continue;
    }
    for (int k = 0; k < 3; ++k)
      if (sv(k) <= 1e-5 * scale) ++ev.multiplicity;
    if (t >= L * (1 - 1e-9)) {
      rep.flags.push_back("conjugate point at the endpoint, not counted");
      continue;
    }
    rep.count += ev.multiplicity;
    rep.events.push_back(ev);
  }
  if (smin[N] < 1e-3 * std::max(1.0, L)) rep.flags.push_back("Jacobi block nearly singular at L");
  return rep;
}

NatRedData type3_data(const SO3Metric& g, const PQ& pq) {
  if (!admissible(g, pq)) throw DomainError("inadmissible (p,q)");
  double a = g.alpha.to_double(), A = g.A.to_double();
  double s = type3_sigma(g, pq).to_double(), ab = g.abar().to_double();
  double z = 1 / std::sqrt(a * s + A * (ab + a) * (ab + a));
  double x = std::sqrt(s) * z;
  NatRedData d;
  d.V = Vec3(x, 0, ab * z);
  d.W = Vec3(0, 0, -a * z);
  return d;
}

NatRedData representative(const SO3Metric& g, const FixComponent& c) {
  NatRedData d;
  double a = g.alpha.to_double(), A = g.A.to_double();
  switch (c.type) {
    case GeodesicType::Trivial:
    case GeodesicType::BiInvariant:
    case GeodesicType::TypeI: d.V = Vec3(1 / std::sqrt(a), 0, 0); break;
    case GeodesicType::TypeII: {
      double ab = g.abar().to_double();
      double z = c.sign / (std::sqrt(A) * std::abs(ab + a));
      d.V = Vec3(0, 0, ab * z);
      d.W = Vec3(0, 0, -a * z);
      break;
    }
    case GeodesicType::TypeIII: d = type3_data(g, *c.pq); break;
  }
  return d;
}

std::vector<lattice::EnumeratedVector> brute_enumerate(const RatMat& gram, const Q& bound) {
  lattice::QuadraticForm qf(gram);
  const std::size_t n = qf.dim();
  if (n == 0 || n > 6) throw DomainError("brute_enumerate: dimension must be 1..6");
  if (bound > 30) throw DomainError("brute_enumerate: bound must be <= 30");
  std::vector<lattice::EnumeratedVector> out;
  if (bound <= 0) return out;
  RatMat inv = inverse(gram);
  std::vector<std::int64_t> box(n);
  double volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box[i] = to_i64(floor_sqrt(Surd(bound * inv[i][i])));
    volume *= 2.0 * box[i] + 1;
  }
  if (volume > 5e7) throw NumericGuard("brute_enumerate: box too large");
  RatVec flat;
  for (const auto& row : gram) flat.insert(flat.end(), row.begin(), row.end());
  Z M = lcm_of_denominators(flat);
  std::vector<std::vector<std::int64_t>> G(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G[i][j] = to_i64(Q(gram[i][j] * M).get_num());
  const std::int64_t cap = to_i64(floor_q(bound * M));
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -box[i];
  while (true) {
    i128 v = 0;
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i]) zero = false;
      for (std::size_t j = 0; j < n; ++j) v += static_cast<i128>(G[i][j]) * x[i] * x[j];
    }
    if (!zero && v <= cap) out.push_back({x, Q(Z(static_cast<long>(v)), M)});
    std::size_t k = 0;
    while (k < n && x[k] == box[k]) {
      x[k] = -box[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  for (auto& e : out) e.value.canonicalize();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value < b.value : a.coords < b.coords;
  });
  return out;
}

}  // namespace liespec::oracle
