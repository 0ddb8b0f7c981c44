#include "liespec/so3nat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "liespec/oracle.hpp"

namespace liespec {

namespace {

constexpr double kPi = 3.14159265358979323846;

Surd sq(long x) { return Surd(Q(x) * Q(x)); }

Q pow_q(const Q& b, long e) {
  Q out = 1;
  for (long i = 0; i < std::labs(e); ++i) out *= b;
  return e < 0 ? Q(1) / out : out;
}

Surd pow_s(const Surd& b, long e) {
  Surd out = 1;
  for (long i = 0; i < std::labs(e); ++i) out = out * b;
  return e < 0 ? Surd(1) / out : out;
}

std::vector<std::pair<long, long>> factor(const Z& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw NumericGuard("closed form: integer too large to factor");
  long v = n.get_si();
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * p <= v; ++p) {
    long k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

FixComponent component(GeodesicType t, int dim, long m = 1, std::optional<PQ> pq = std::nullopt, int sign = 1) {
  FixComponent c;
  c.type = t;
  c.dim = dim;
  c.multiple = m;
  c.pq = pq;
  c.sign = sign;
  return c;
}

std::string exponent_str(const Q& e) { return e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")"; }

}  // namespace

// ---------------------------------------------------------------- metric

SO3Metric SO3Metric::make(const Surd& alpha, const Surd& A) {
  if (alpha.sign() <= 0 || A.sign() <= 0) throw DomainError("SO(3) metric needs alpha > 0 and A > 0");
  if (alpha.field() && A.field() && alpha.field() != A.field())
    throw DomainError("alpha and A lie in different quadratic fields");
  return SO3Metric{alpha, A};
}

Surd SO3Metric::kappa() const {
  if (bi_invariant()) throw DomainError("kappa undefined for alpha = A");
  return A / (alpha - A);
}

Surd SO3Metric::abar() const {
  if (bi_invariant()) throw DomainError("A-bar undefined for alpha = A");
  return A * alpha / (alpha - A);
}

std::string SO3Metric::str() const { return "g(" + alpha.str() + "," + alpha.str() + "," + A.str() + ")"; }

double ell0() { return 2.0 * std::sqrt(2.0) * kPi; }
double length_from_coeff(const Surd& r) { return ell0() * std::sqrt(r.to_double()); }

// ---------------------------------------------------------------- closed forms

ClosedForm& ClosedForm::times(const Surd& c) {
  coeff_ = coeff_ * c;
  return *this;
}

ClosedForm& ClosedForm::times_pi(const Q& e) {
  pi_ += e;
  return *this;
}

void ClosedForm::times_rational_power(const Q& base, const Q& e) {
  if (base == 0) {
    if (e <= 0) throw DomainError("0 to a nonpositive power");
    coeff_ = 0;
    return;
  }
  if (base < 0) {
    if (!is_integer(e)) throw DomainError("fractional power of a negative number");
    if (e.get_num() % 2 != 0) coeff_ = -coeff_;
    times_rational_power(-base, e);
    return;
  }
  for (auto [p, k] : factor(base.get_num())) primes_[p] += e * k;
  for (auto [p, k] : factor(base.get_den())) primes_[p] -= e * k;
  for (auto it = primes_.begin(); it != primes_.end();) {
    Z fl = floor_q(it->second);
    if (fl != 0) {
      coeff_ = coeff_ * Surd(pow_q(Q(it->first), fl.get_si()));
      it->second -= fl;
    }
    it = it->second == 0 ? primes_.erase(it) : std::next(it);
  }
}

ClosedForm& ClosedForm::times_power(const Surd& base, const Q& e) {
  if (base.is_rational()) {
    times_rational_power(base.to_rational(), e);
    return *this;
  }
  if (is_integer(e)) {
    coeff_ = coeff_ * pow_s(base, floor_q(e).get_si());
    return *this;
  }
  if (base.sign() <= 0) throw DomainError("fractional power of a nonpositive number");
  for (auto it = surds_.begin(); it != surds_.end(); ++it) {
    if (it->first != base) continue;
    it->second += e;
    if (is_integer(it->second)) {
      coeff_ = coeff_ * pow_s(base, floor_q(it->second).get_si());
      surds_.erase(it);
    }
    return *this;
  }
  surds_.emplace_back(base, e);
  return *this;
}

double ClosedForm::value() const {
  double v = coeff_.to_double();
  for (const auto& [p, e] : primes_) v *= std::pow(static_cast<double>(p), e.get_d());
  for (const auto& [b, e] : surds_) v *= std::pow(b.to_double(), e.get_d());
  return v * std::pow(kPi, pi_.get_d());
}

std::string ClosedForm::str() const {
  std::vector<std::string> parts;
  std::map<Q, Z> by_exp;
  for (const auto& [p, e] : primes_) {
    auto [it, fresh] = by_exp.emplace(e, Z(1));
    it->second *= p;
  }
  for (const auto& [e, n] : by_exp)
    parts.push_back(e == Q(1, 2) ? "sqrt(" + n.get_str() + ")" : n.get_str() + "^" + exponent_str(e));
  for (const auto& [b, e] : surds_)
    parts.push_back(e == Q(1, 2) ? "sqrt(" + b.str() + ")" : "(" + b.str() + ")^" + exponent_str(e));
  if (pi_ == 1)
    parts.push_back("pi");
  else if (pi_ != 0)
    parts.push_back("pi^" + exponent_str(pi_));

  std::string head;
  if (coeff_.is_rational()) {
    Q c = coeff_.to_rational();
    if (parts.empty() || (c != 1 && c != -1))
      head = c.get_str();
    else if (c == -1)
      head = "-";
  } else {
    head = "(" + coeff_.str() + ")";
  }
  std::string out = head;
  for (const auto& p : parts) {
    if (!out.empty() && out != "-") out += "*";
    out += p;
  }
  return out;
}

// ---------------------------------------------------------------- classification

std::string type_name(GeodesicType t) {
  switch (t) {
    case GeodesicType::Trivial: return "trivial";
    case GeodesicType::BiInvariant: return "bi-invariant";
    case GeodesicType::TypeI: return "I";
    case GeodesicType::TypeII: return "II";
    case GeodesicType::TypeIII: return "III";
  }
  return "?";
}

bool admissible(const SO3Metric& g, const PQ& pq) {
  if (g.bi_invariant() || pq.p < 1 || pq.q < 1 || std::gcd(pq.p, pq.q) != 1) return false;
  return Surd(Q(pq.q)) > Surd(Q(pq.p)) * abs(g.kappa());
}

Surd type3_primitive_coeff(const SO3Metric& g, const PQ& pq) {
  return g.alpha * (sq(pq.q) + sq(pq.p) * g.kappa());
}

Surd type3_sigma(const SO3Metric& g, const PQ& pq) {
  Surd d = g.alpha - g.A;
  return sq(pq.q) * g.alpha * g.alpha / sq(pq.p) - g.A * g.A * g.alpha * g.alpha / (d * d);
}

namespace {

// Largest p worth scanning for Type III pairs with alpha (q^2 + p^2 kappa) <= alpha R.
Z p_limit(const Surd& kappa, const Surd& R) {
  if (kappa.sign() > 0) return floor_sqrt(R / kappa);
  Surd k = abs(kappa);
  return floor_sqrt(R / (k * k - k));  // q > p|kappa| and q^2 = R + p^2 |kappa|
}

void check_primitive(const SO3Metric& g, const PQ& pq) {
  if (!(type3_primitive_coeff(g, pq) > g.alpha))
    throw std::logic_error("Type III length not above sqrt(alpha) l0 for (" + std::to_string(pq.p) + "," +
                           std::to_string(pq.q) + ")");
}

// All admissible pairs with primitive coefficient <= bound (or == bound when exact).
std::vector<PQ> scan_pairs(const SO3Metric& g, const Surd& bound, bool exact) {
  std::vector<PQ> out;
  if (bound.sign() <= 0) return out;
  Surd kappa = g.kappa(), R = bound / g.alpha, ak = abs(kappa);
  Z P = p_limit(kappa, R);
  for (long p = 1; p <= P; ++p) {
    Surd rest = R - sq(p) * kappa;  // q^2 <= rest
    if (rest.sign() <= 0) continue;
    Z qmax = floor_sqrt(rest);
    long qmin = floor_sqrt(sq(p) * ak * ak).get_si();
    for (long q = std::max(1L, qmin); q <= qmax; ++q) {
      PQ pq{p, q};
      if (!admissible(g, pq)) continue;
      if (exact && sq(q) != rest) continue;
      check_primitive(g, pq);
      out.push_back(pq);
    }
  }
  return out;
}

}  // namespace

std::vector<PQ> epsilon_set(const Surd& r, const SO3Metric& g) {
  if (g.bi_invariant()) throw DomainError("epsilon set needs alpha != A");
  if (r.sign() <= 0) throw DomainError("epsilon set needs r > 0");
  return scan_pairs(g, r, true);
}

bool Cleanliness::unclean_at(const Surd& r) const {
  if (clean) return false;
  Z m;
  return integer_square(r / (A * Surd(Q(k) * Q(k))), m) && m > 0;
}

std::vector<Surd> Cleanliness::unclean_coeffs(const Surd& bound) const {
  std::vector<Surd> out;
  if (clean) return out;
  for (long m = 1;; ++m) {
    Surd r = sq(m * k) * A;
    if (r > bound) break;
    out.push_back(r);
  }
  return out;
}

Cleanliness classify_cleanliness(const SO3Metric& g) {
  Cleanliness c;
  c.A = g.A;
  Surd ratio = g.A / g.alpha;
  if (!ratio.is_rational() || ratio == 1) return c;
  Q half = ratio.to_rational() / 2;  // j / k
  c.clean = false;
  c.j = half.get_num().get_si();
  c.k = half.get_den().get_si();
  return c;
}

std::vector<FixComponent> fix_components(const SO3Metric& g, const Surd& r) {
  std::vector<FixComponent> out;
  if (r.sign() == 0) {
    out.push_back(component(GeodesicType::Trivial, 5));
    return out;
  }
  if (r.sign() < 0) throw DomainError("negative period coefficient");
  Z m;
  if (g.bi_invariant()) {
    if (integer_square(r / g.alpha, m)) out.push_back(component(GeodesicType::BiInvariant, 5, m.get_si()));
  } else {
    if (integer_square(r / g.alpha, m)) out.push_back(component(GeodesicType::TypeI, 4, m.get_si()));
    if (integer_square(r / g.A, m)) {
      out.push_back(component(GeodesicType::TypeII, 3, m.get_si(), std::nullopt, 1));
      out.push_back(component(GeodesicType::TypeII, 3, m.get_si(), std::nullopt, -1));
    }
    for (long k = 1; sq(k) * g.alpha < r; ++k)
      for (const PQ& pq : scan_pairs(g, r / sq(k), true)) out.push_back(component(GeodesicType::TypeIII, 4, k, pq));
  }
  if (out.empty()) throw DomainError("r = " + r.str() + " is not a period of " + g.str());
  return out;
}

std::vector<SO3Period> length_spectrum(const SO3Metric& g, const Surd& bound, const SpectrumOptions& opt) {
  if (bound.sign() < 0) throw DomainError("bound must be nonnegative");
  std::vector<Surd> rs{Surd(0)};
  for (long m = 1; sq(m) * g.alpha <= bound; ++m) rs.push_back(sq(m) * g.alpha);
  if (!g.bi_invariant()) {
    for (long m = 1; sq(m) * g.A <= bound; ++m) rs.push_back(sq(m) * g.A);
    for (long m = 1; sq(m) * g.alpha < bound; ++m)
      for (const PQ& pq : scan_pairs(g, bound / sq(m), false)) rs.push_back(sq(m) * type3_primitive_coeff(g, pq));
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  Cleanliness cl = classify_cleanliness(g);
  std::vector<SO3Period> out;
  for (const Surd& r : rs) {
    SO3Period per;
    per.r = r;
    per.length = length_from_coeff(r);
    per.components = fix_components(g, r);
    per.clean = !cl.unclean_at(r);
    for (auto& c : per.components) {
      if (std::find(per.types_present.begin(), per.types_present.end(), c.type) == per.types_present.end())
        per.types_present.push_back(c.type);
      if (opt.volumes && c.type != GeodesicType::Trivial) c.dg_volume = dg_volume(c, g, r);
      if (opt.morse && c.type != GeodesicType::Trivial) {
        if (c.type == GeodesicType::TypeIII && c.multiple == 1) {
          c.morse = type3_morse_index(g, *c.pq);
        } else {
          auto data = oracle::representative(g, c);
          c.morse = oracle::numeric_conjugate_count(g, data.velocity(), per.length).count;
          c.morse_numeric = true;
        }
      }
    }
    if (cl.clean) {
      auto has = [&](GeodesicType t) {
        return std::find(per.types_present.begin(), per.types_present.end(), t) != per.types_present.end();
      };
      if (has(GeodesicType::TypeI) && (has(GeodesicType::TypeII) || has(GeodesicType::TypeIII)))
        throw std::logic_error("Type I co-occurs with Type II/III for a clean metric at r = " + r.str());
    }
    out.push_back(std::move(per));
  }
  return out;
}

// ---------------------------------------------------------------- volumes and wave invariants

ClosedForm volume(const SO3Metric& g) {
  ClosedForm v(g.alpha * Surd(16));
  v.times_power(g.A, Q(1, 2)).times_power(Surd(2), Q(1, 2)).times_pi(2);
  return v;
}

namespace {

// tau^e with tau = 2 sqrt(2) pi sqrt(r)
ClosedForm& times_tau(ClosedForm& f, const Surd& r, const Q& e) {
  f.times_power(Surd(2), e * Q(3, 2)).times_pi(e).times_power(r, e / 2);
  return f;
}

}  // namespace

ClosedForm dg_volume(const FixComponent& c, const SO3Metric& g, const Surd& r) {
  ClosedForm f = volume(g);
  switch (c.type) {
    case GeodesicType::Trivial: return f;
    case GeodesicType::BiInvariant: f.times(Surd(4)).times_pi(1); return f;
    case GeodesicType::TypeI: f.times(Surd(2)).times_pi(1); return times_tau(f, r, Q(-1, 2));
    case GeodesicType::TypeII: return times_tau(f, r, Q(-1));
    case GeodesicType::TypeIII: {
      Surd s = type3_sigma(g, *c.pq);
      f.times(Surd(2)).times_pi(1).times_power(s / (s + Surd(1)), Q(1, 2));
      return times_tau(f, r, Q(-1, 2));
    }
  }
  return f;
}

Wave0 wave0_taumin(const SO3Metric& g) {
  Wave0 w;
  if (g.bi_invariant()) {
    w.parity = "odd";
    w.r_min = g.alpha;
    w.magnitude = volume(g);
    w.magnitude.times_pi(-1);
    w.sign = -1;
    w.note = "even part vanishes";
    return w;
  }
  bool type2 = g.A < g.alpha;
  w.r_min = type2 ? g.A : g.alpha;
  w.realized_by = type2 ? GeodesicType::TypeII : GeodesicType::TypeI;
  FixComponent c = component(w.realized_by, type2 ? 3 : 4);
  auto data = oracle::representative(g, c);
  w.sigma = oracle::numeric_conjugate_count(g, data.velocity(), length_from_coeff(w.r_min)).count;
  w.sigma_numeric = true;
  w.magnitude = volume(g);
  if (type2) {
    w.parity = "odd";
    w.magnitude.times_pi(-1);
    times_tau(w.magnitude, w.r_min, Q(-1));
    w.phase_power = ((-(w.sigma + 1)) % 4 + 4) % 4;
    w.note = "even part vanishes";
  } else {
    w.parity = "even";
    w.magnitude.times(Surd(2)).times_pi(1);
    times_tau(w.magnitude, w.r_min, Q(-1, 2));
    w.magnitude.times_power(Surd(2), Q(-3, 2)).times_pi(Q(-3, 2));
    w.phase_power = ((-w.sigma) % 4 + 4) % 4;
    w.note = "odd part vanishes; branch of i^(-3/2) in (1/(2 pi i))^(3/2) not fixed";
  }
  return w;
}

// ---------------------------------------------------------------- Type III conjugate points

namespace {

void require_admissible(const SO3Metric& g, const PQ& pq) {
  if (!admissible(g, pq))
    throw DomainError("(p,q) = (" + std::to_string(pq.p) + "," + std::to_string(pq.q) +
                      ") is not an admissible coprime pair for " + g.str());
}

Surd sigma_ratio(const SO3Metric& g, const PQ& pq) {
  Surd s = type3_sigma(g, pq);
  return s / (s + Surd(1));
}

}  // namespace

Surd type3_a_squared(const SO3Metric& g, const PQ& pq) {
  require_admissible(g, pq);
  Surd phi2 = g.A / (Surd(2) * g.alpha * g.alpha);
  return phi2 + sigma_ratio(g, pq) / (Surd(2) * (g.abar() + g.alpha));
}

double type3_length(const SO3Metric& g, const PQ& pq) {
  require_admissible(g, pq);
  return length_from_coeff(type3_primitive_coeff(g, pq));
}

std::vector<ConjugateTime> type3_conjugate_times(const SO3Metric& g, const PQ& pq, double up_to) {
  Surd a2 = type3_a_squared(g, pq);
  double step = 2 * kPi / std::sqrt(a2.to_double());
  std::vector<ConjugateTime> out;
  for (long k = 1; k * step <= up_to; ++k) {
    ClosedForm t(Surd(Q(2 * k)));
    t.times_pi(1).times_power(a2, Q(-1, 2));
    out.push_back({k * step, 1, "periodic", t.str()});
  }
  if (g.alpha < g.A) {
    Surd t = Surd(4) * g.alpha * g.alpha / ((g.A - g.alpha) * sigma_ratio(g, pq));
    double tv = t.to_double();
    if (tv <= up_to) {
      auto hit = std::find_if(out.begin(), out.end(),
                              [&](const ConjugateTime& c) { return std::abs(c.time - tv) <= 1e-12 * tv; });
      if (hit != out.end())
        hit->multiplicity += 1;
      else
        out.push_back({tv, 1, "isolated", t.str()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.time < y.time; });
  return out;
}

int type3_morse_index(const SO3Metric& g, const PQ& pq) {
  Surd a2 = type3_a_squared(g, pq);
  Surd r = type3_primitive_coeff(g, pq);
  // (2 pi k / a)^2 < 8 pi^2 r  <=>  k^2 < 2 a^2 r
  Surd cap = Surd(2) * a2 * r;
  int count = 0;
  for (long k = 1; sq(k) < cap; ++k) ++count;
  if (g.alpha < g.A) {
    Surd t = Surd(4) * g.alpha * g.alpha / ((g.A - g.alpha) * sigma_ratio(g, pq));
    long double t2 = static_cast<long double>(t.to_double()) * t.to_double();
    long double L2 = 8.0L * 3.14159265358979323846264338327950288L * 3.14159265358979323846264338327950288L *
                     static_cast<long double>(r.to_double());
    if (std::fabs(t2 - L2) <= 1e-12L * L2) throw NumericGuard("isolated conjugate time indistinguishable from L");
    if (t2 < L2) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- singular support

SingularSupport certified_singular_support(const SO3Metric& g, const Surd& bound) {
  SingularSupport out;
  SpectrumOptions opt;
  opt.volumes = false;
  Cleanliness cl = classify_cleanliness(g);
  for (const auto& per : length_spectrum(g, bound, opt)) {
    if (per.r.sign() == 0) continue;
    if (cl.unclean_at(per.r)) {
      out.unclean.push_back(per.r);
      continue;
    }
    int top = 0;
    for (const auto& c : per.components) top = std::max(top, c.dim);
    bool mixed = false;
    GeodesicType first = GeodesicType::Trivial;
    int n = 0;
    for (const auto& c : per.components) {
      if (c.dim != top) continue;
      if (n++ == 0) first = c.type;
      if (c.type == GeodesicType::TypeIII || c.type != first) mixed = true;
    }
    (mixed ? out.undetermined : out.certified).push_back(per.r);
  }
  return out;
}

}  // namespace liespec
