#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liespec/surd.hpp"

namespace liespec {

// g(alpha, alpha, A) on SO(3); both scalars live in Q or one common Q(sqrt d).
struct SO3Metric {
  Surd alpha = 1;
  Surd A = 1;

  static SO3Metric make(const Surd& alpha, const Surd& A);
  bool bi_invariant() const { return alpha == A; }
  Surd kappa() const;  // A / (alpha - A)
  Surd abar() const;   // A alpha / (alpha - A)
  std::string str() const;
};

double ell0();  // 2 sqrt(2) pi
double length_from_coeff(const Surd& r);

// Product coeff * prod p^e (e in (0,1)) * prod base^e * pi^k, kept exact.
class ClosedForm {
 public:
  ClosedForm() = default;
  explicit ClosedForm(const Surd& c) : coeff_(c) {}

  ClosedForm& times(const Surd& c);
  ClosedForm& times_power(const Surd& base, const Q& e);
  ClosedForm& times_pi(const Q& e);

  const Surd& coefficient() const { return coeff_; }
  const std::map<long, Q>& radicals() const { return primes_; }
  const Q& pi_power() const { return pi_; }
  double value() const;
  std::string str() const;
  friend bool operator==(const ClosedForm& a, const ClosedForm& b) { return a.str() == b.str(); }

 private:
  void times_rational_power(const Q& base, const Q& e);
  Surd coeff_ = 1;
  std::map<long, Q> primes_;
  std::vector<std::pair<Surd, Q>> surds_;
  Q pi_ = 0;
};

struct PQ {
  long p = 0, q = 0;
  friend bool operator==(const PQ& a, const PQ& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator<(const PQ& a, const PQ& b) { return a.p != b.p ? a.p < b.p : a.q < b.q; }
};

enum class GeodesicType { Trivial, BiInvariant, TypeI, TypeII, TypeIII };
std::string type_name(GeodesicType t);

struct FixComponent {
  GeodesicType type = GeodesicType::TypeI;
  int dim = 0;
  long multiple = 1;  // r = m^2 * primitive coefficient
  std::optional<PQ> pq;
  int sign = 1;  // Type II: the two components +Z and -Z
  std::optional<int> morse;
  bool morse_numeric = false;
  std::optional<ClosedForm> dg_volume;
};

struct SO3Period {
  Surd r;
  double length = 0;
  std::vector<GeodesicType> types_present;
  std::vector<FixComponent> components;
  bool clean = true;
};

struct Cleanliness {
  bool clean = true;
  long j = 0, k = 0;  // A = 2 alpha j / k
  Surd A;
  bool unclean_at(const Surd& r) const;
  // {(m k)^2 A : m >= 1} up to bound
  std::vector<Surd> unclean_coeffs(const Surd& bound) const;
};

bool admissible(const SO3Metric& g, const PQ& pq);  // q/p > |A/(A - alpha)|, gcd 1
Surd type3_primitive_coeff(const SO3Metric& g, const PQ& pq);  // alpha (q^2 + p^2 kappa)
Surd type3_sigma(const SO3Metric& g, const PQ& pq);
std::vector<PQ> epsilon_set(const Surd& r, const SO3Metric& g);

Cleanliness classify_cleanliness(const SO3Metric& g);
std::vector<FixComponent> fix_components(const SO3Metric& g, const Surd& r);

struct SpectrumOptions {
  bool morse = false;  // fill Morse indices (Type I/II numerically)
  bool volumes = true;
};
std::vector<SO3Period> length_spectrum(const SO3Metric& g, const Surd& bound, const SpectrumOptions& opt = {});

Surd volume_coefficient(const SO3Metric& g);  // vol(g) / (16 sqrt(2) pi^2) = alpha sqrt(A) (symbolic below)
ClosedForm volume(const SO3Metric& g);
ClosedForm dg_volume(const FixComponent& c, const SO3Metric& g, const Surd& r);

struct Wave0 {
  std::string parity;  // "odd" or "even"
  Surd r_min;
  GeodesicType realized_by = GeodesicType::BiInvariant;
  ClosedForm magnitude;
  int sign = 1;  // alpha = A: Wave0 = sign * magnitude
  int sigma = 0;
  bool sigma_numeric = false;
  int phase_power = 0;  // phase i^phase_power, reduced mod 4
  std::string note;
};
Wave0 wave0_taumin(const SO3Metric& g);

struct ConjugateTime {
  double time = 0;
  int multiplicity = 1;
  std::string family;  // "periodic" or "isolated"
  std::string exact;
};
Surd type3_a_squared(const SO3Metric& g, const PQ& pq);
std::vector<ConjugateTime> type3_conjugate_times(const SO3Metric& g, const PQ& pq, double up_to);
int type3_morse_index(const SO3Metric& g, const PQ& pq);
double type3_length(const SO3Metric& g, const PQ& pq);

struct SingularSupport {
  std::vector<Surd> certified, undetermined, unclean;
};
SingularSupport certified_singular_support(const SO3Metric& g, const Surd& bound);

}  // namespace liespec
