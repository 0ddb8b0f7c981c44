#include "liespec/symspec.hpp"

#include <algorithm>
#include <set>

namespace liespec::symspec {

using rootsys::Label;

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Group: return "group";
    case FactorKind::TypeI: return "typeI";
    case FactorKind::MaximalRank: return "maximal_rank";
  }
  return "?";
}

FactorKind parse_kind(const std::string& s) {
  if (s == "group") return FactorKind::Group;
  if (s == "typeI" || s == "type_i" || s == "typei") return FactorKind::TypeI;
  if (s == "maximal_rank") return FactorKind::MaximalRank;
  throw DomainError("unknown factor kind '" + s + "' (expected group, typeI or maximal_rank)");
}

Factor group_factor(Label label, int rank, RatMat gamma) {
  return {rootsys::build_root_system(label, rank, {{"all", 2}}), FactorKind::Group, std::move(gamma)};
}

std::size_t SymmetricSpaceSpec::ambient_dim() const {
  std::size_t n = torus_dim;
  for (const auto& f : factors) n += static_cast<std::size_t>(f.rs.ambient_dim);
  return n;
}

std::size_t SymmetricSpaceSpec::offset(std::size_t factor) const {
  std::size_t n = torus_dim;
  for (std::size_t k = 0; k < factor; ++k) n += static_cast<std::size_t>(factors[k].rs.ambient_dim);
  return n;
}

int SymmetricSpaceSpec::dim() const {
  int d = static_cast<int>(torus_dim);
  for (const auto& f : factors) d += f.rs.rank + f.rs.positive_mult_sum();
  return d;
}

RatVec SymmetricSpaceSpec::factor_part(const RatVec& v, std::size_t factor) const {
  auto o = static_cast<long>(offset(factor));
  return RatVec(v.begin() + o, v.begin() + o + factors[factor].rs.ambient_dim);
}

RatVec SymmetricSpaceSpec::torus_part(const RatVec& v) const {
  return RatVec(v.begin(), v.begin() + static_cast<long>(torus_dim));
}

RatVec SymmetricSpaceSpec::assemble(const RatVec& torus, const std::vector<RatVec>& parts) const {
  RatVec v = torus;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  if (v.size() != ambient_dim()) throw DomainError("vector blocks do not match the space");
  return v;
}

void SymmetricSpaceSpec::validate() const {
  if (factors.empty() && torus_dim == 0) throw DomainError("space has no factors");
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.rs.roots.size(); ++i) {
      int m = f.rs.mult[i];
      if (f.kind == FactorKind::Group && m != 2)
        throw DomainError("group factor " + f.rs.name() + " must carry multiplicity 2 on every root");
      if (f.kind == FactorKind::TypeI && m % 2 != 0)
        throw DomainError("split-rank factor " + f.rs.name() + " needs even multiplicities");
      if (f.kind == FactorKind::MaximalRank && m != 1)
        throw DomainError("maximal-rank factor " + f.rs.name() + " must have multiplicity 1");
    }
    if (!f.rs.reduced() && f.kind == FactorKind::Group)
      throw DomainError("BC is not the root system of a group factor");
  }
  (void)integral_lattice();
}

lattice::IntegerLattice SymmetricSpaceSpec::integral_lattice() const {
  std::vector<const rootsys::WeightedRootSystem*> rs;
  for (const auto& f : factors) rs.push_back(&f.rs);
  auto tuples = gamma;
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& g : factors[k].gamma) {
      std::vector<RatVec> t;
      if (torus_dim > 0) t.push_back(zeros(torus_dim));
      for (std::size_t j = 0; j < factors.size(); ++j)
        t.push_back(j == k ? g : zeros(static_cast<std::size_t>(factors[j].rs.ambient_dim)));
      tuples.push_back(t);
    }
  return lattice::product_integral_lattice(rs, torus_dim, tuples);
}

lattice::IntegerLattice SymmetricSpaceSpec::projected_lattice(std::size_t factor) const {
  RatMat gens;
  for (const auto& b : integral_lattice().basis) {
    RatVec p = factor_part(b, factor);
    if (!is_zero(p)) gens.push_back(p);
  }
  return lattice::lattice_from_generators(gens);
}

MetricSpec MetricSpec::standard(const SymmetricSpaceSpec& space) {
  MetricSpec m;
  m.torus_gram.assign(space.torus_dim, RatVec(space.torus_dim, Q(0)));
  for (std::size_t i = 0; i < space.torus_dim; ++i) m.torus_gram[i][i] = 1;
  m.scales.assign(space.factors.size(), Q(1));
  return m;
}

void MetricSpec::validate(const SymmetricSpaceSpec& space) const {
  if (scales.size() != space.factors.size())
    throw DomainError("metric has " + std::to_string(scales.size()) + " scales for " +
                      std::to_string(space.factors.size()) + " factors");
  for (const auto& c : scales)
    if (c <= 0) throw DomainError("metric scale " + c.get_str() + " is not positive");
  if (torus_gram.size() != space.torus_dim) throw DomainError("torus gram has the wrong size");
  if (space.torus_dim > 0) lattice::QuadraticForm check(torus_gram);
}

RatMat MetricSpec::ambient(const SymmetricSpaceSpec& space) const {
  std::size_t n = space.ambient_dim();
  RatMat g(n, RatVec(n, Q(0)));
  for (std::size_t i = 0; i < space.torus_dim; ++i)
    for (std::size_t j = 0; j < space.torus_dim; ++j) g[i][j] = torus_gram[i][j];
  for (std::size_t k = 0; k < space.factors.size(); ++k) {
    std::size_t o = space.offset(k);
    for (int i = 0; i < space.factors[k].rs.ambient_dim; ++i) g[o + static_cast<std::size_t>(i)][o + static_cast<std::size_t>(i)] = scales[k];
  }
  return g;
}

namespace {

void require_dims(const SymmetricSpaceSpec& space, const RatVec& v) {
  if (v.size() != space.ambient_dim())
    throw DomainError("vector has dimension " + std::to_string(v.size()) + ", space expects " +
                      std::to_string(space.ambient_dim()));
  for (std::size_t k = 0; k < space.factors.size(); ++k) space.factors[k].rs.require_in_subspace(space.factor_part(v, k));
}

Q torus_value(const SymmetricSpaceSpec& space, const MetricSpec& metric, const RatVec& t) {
  Q s = 0;
  for (std::size_t i = 0; i < space.torus_dim; ++i)
    for (std::size_t j = 0; j < space.torus_dim; ++j) s += t[i] * metric.torus_gram[i][j] * t[j];
  return s;
}

// Ziller: sum n|beta(v)| - sum_{beta(v) != 0} n
int factor_morse(const rootsys::WeightedRootSystem& rs, const RatVec& v) {
  Q s = 0;
  for (auto i : rs.positives) {
    Q p = dot(rs.roots[i].functional, v);
    if (p != 0) s += rs.mult[i] * (abs(p) - 1);
  }
  if (!is_integer(s)) throw DomainError("vector " + to_string(v) + " is not in the central lattice of " + rs.name());
  return static_cast<int>(s.get_num().get_si());
}

int factor_dim_fix(const rootsys::WeightedRootSystem& rs, const RatVec& v) {
  int n = rs.positive_mult_sum();
  if (is_zero(v)) return rs.rank + n;
  return rs.rank + 2 * n - rootsys::degree_of_singularity(rs, v);
}

}  // namespace

Q squared_length(const SymmetricSpaceSpec& space, const MetricSpec& metric, const RatVec& v) {
  require_dims(space, v);
  Q s = torus_value(space, metric, space.torus_part(v));
  for (std::size_t k = 0; k < space.factors.size(); ++k) {
    RatVec p = space.factor_part(v, k);
    s += metric.scales[k] * dot(p, p);
  }
  return s;
}

int morse_index(const SymmetricSpaceSpec& space, const RatVec& v) {
  require_dims(space, v);
  int s = 0;
  for (std::size_t k = 0; k < space.factors.size(); ++k) s += factor_morse(space.factors[k].rs, space.factor_part(v, k));
  return s;
}

int degree_of_singularity(const SymmetricSpaceSpec& space, const RatVec& v) {
  require_dims(space, v);
  int s = 0;
  for (std::size_t k = 0; k < space.factors.size(); ++k)
    s += rootsys::degree_of_singularity(space.factors[k].rs, space.factor_part(v, k));
  return s;
}

int dim_fix(const SymmetricSpaceSpec& space, const RatVec& v) {
  require_dims(space, v);
  if (is_zero(v)) throw DomainError("the zero vector has no Fix component");
  int d = static_cast<int>(space.torus_dim);
  for (std::size_t k = 0; k < space.factors.size(); ++k) d += factor_dim_fix(space.factors[k].rs, space.factor_part(v, k));
  return d;
}

namespace {

bool has_half_integer_coordinate(const lattice::IntegerLattice& lat) {
  for (const auto& b : lat.basis)
    for (const auto& x : b)
      if (!is_integer(x)) return true;
  return false;
}

// A_n, n odd: some v in the lattice has (n+1)|v|^2 odd, i.e. an odd multiple of L1.
// The parity is additive on the central lattice, so the basis decides.
bool has_odd_l1_class(const lattice::IntegerLattice& lat, int n) {
  for (const auto& b : lat.basis) {
    Q y = dot(b, b) * (n + 1);
    if (is_integer(y) && mpz_odd_p(y.get_num_mpz_t())) return true;
  }
  return false;
}

int mod4(long long x) { return static_cast<int>(((x % 4) + 4) % 4); }

}  // namespace

int f_mod4(const Factor& factor, const lattice::IntegerLattice& projected, const Q& c, const Q& s) {
  const auto& rs = factor.rs;
  if (factor.kind == FactorKind::MaximalRank)
    throw DomainError("f undefined: factor " + rs.name() + " is not split-rank");
  if (c <= 0) throw DomainError("scale must be positive");
  const auto coroot = lattice::coroot_lattice(rs);
  const bool trivial = projected == coroot;
  if (factor.kind == FactorKind::TypeI) {
    bool all4 = std::all_of(rs.mult.begin(), rs.mult.end(), [](int m) { return m % 4 == 0; });
    if (all4 || trivial) return 0;
    throw DomainError("f undefined: split-rank factor " + rs.name() +
                      " with multiplicity 2 mod 4 and nontrivial projection of Gamma");
  }
  const Q x = s / c;
  const bool full = projected == lattice::central_lattice(rs);
  const int n = rs.rank;
  switch (rs.label) {
    case Label::A:
      if (n % 2 == 1 && has_odd_l1_class(projected, n)) {
        Q y = x * (n + 1);
        return is_integer(y) && mpz_odd_p(y.get_num_mpz_t()) ? 2 : 0;
      }
      return 0;
    case Label::B:
      if (full) return is_integer(x) && mpz_odd_p(x.get_num_mpz_t()) ? 2 : 0;
      return 0;
    case Label::C:
      if ((n % 4 == 1 || n % 4 == 2) && full) return is_integer(x) ? 0 : 2;
      return 0;
    case Label::D:
      if ((n % 4 == 2 || n % 4 == 3) && has_half_integer_coordinate(projected)) return is_integer(x) ? 0 : 2;
      return 0;
    case Label::E7:
      if (full) return is_integer(x) ? 0 : 2;
      return 0;
    case Label::E6:
    case Label::E8:
    case Label::F4:
    case Label::G2:
      return 0;
    case Label::BC:
      break;
  }
  throw DomainError("f undefined for factor " + rs.name());
}

int predicted_morse_mod4(const SymmetricSpaceSpec& space, const MetricSpec& metric, const RatVec& v) {
  require_dims(space, v);
  metric.validate(space);
  if (is_zero(v)) return 0;
  long long total = 0;
  bool euclidean = true;
  for (std::size_t k = 0; k < space.factors.size(); ++k) {
    RatVec p = space.factor_part(v, k);
    if (is_zero(p)) continue;
    euclidean = false;
    total += f_mod4(space.factors[k], space.projected_lattice(k), metric.scales[k], metric.scales[k] * dot(p, p));
  }
  if (euclidean) return 0;
  total += -dim_fix(space, v) + space.dim();
  return mod4(total);
}

std::size_t SpectrumReport::size() const {
  std::size_t n = 0;
  for (const auto& [len2, cls] : classes) n += cls.size();
  return n;
}

namespace {

struct ClassBuilder {
  const SymmetricSpaceSpec& space;
  const MetricSpec& metric;

  RatVec key(const RatVec& v) const {
    RatVec out = space.torus_part(v);
    for (std::size_t k = 0; k < space.factors.size(); ++k) {
      RatVec d = rootsys::dominant_representative(space.factors[k].rs, space.factor_part(v, k));
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }

  GeodesicClass make(const RatVec& dominant) const {
    GeodesicClass g;
    g.torus = space.torus_part(dominant);
    g.len2 = squared_length(space, metric, dominant);
    if (space.torus_dim > 0) g.component_norms.push_back(torus_value(space, metric, g.torus));
    g.regular = !space.factors.empty();
    for (std::size_t k = 0; k < space.factors.size(); ++k) {
      RatVec p = space.factor_part(dominant, k);
      g.parts.push_back(p);
      g.component_norms.push_back(dot(p, p));
      if (is_zero(p) || rootsys::degree_of_singularity(space.factors[k].rs, p) != 0) g.regular = false;
    }
    g.degsing = degree_of_singularity(space, dominant);
    g.dim_fix = dim_fix(space, dominant);
    g.morse = morse_index(space, dominant);
    g.morse_mod4 = g.morse % 4;
    return g;
  }
};

}  // namespace

SpectrumReport enumerate_spectrum(const SymmetricSpaceSpec& space, const MetricSpec& metric, const Q& bound) {
  space.validate();
  metric.validate(space);
  SpectrumReport report;
  report.bound = bound;
  report.space_dim = space.dim();
  report.torus_dim = static_cast<int>(space.torus_dim);
  auto lat = space.integral_lattice();
  auto q = lattice::restrict_form(lat, metric.ambient(space));
  ClassBuilder cb{space, metric};
  std::map<Q, std::set<RatVec>> keys;
  for (const auto& e : lattice::enumerate_coords(q, bound, true)) {
    RatVec v = lat.vector(e.coords);
    RatVec a = cb.key(v), b = cb.key(neg(v));
    keys[e.value].insert(std::min(a, b));
  }
  for (const auto& [len2, set] : keys)
    for (const auto& k : set) report.classes[len2].push_back(cb.make(k));
  return report;
}

std::vector<WaveTermReport> wave_analysis(const SpectrumReport& report) {
  std::vector<WaveTermReport> out;
  for (const auto& [len2, cls] : report.classes) {
    WaveTermReport w;
    w.len2 = len2;
    for (int parity = 0; parity < 2; ++parity) {
      WaveParity& p = parity == 0 ? w.even : w.odd;
      for (const auto& c : cls)
        if (c.dim_fix % 2 == parity) {
          if (!p.present || c.dim_fix > p.max_dim) {
            p.max_dim = c.dim_fix;
            p.residues.clear();
          }
          p.present = true;
          if (c.dim_fix == p.max_dim) p.residues.push_back(c.morse_mod4);
        }
      std::sort(p.residues.begin(), p.residues.end());
      p.certified_nonzero = !p.residues.empty() && p.residues.front() == p.residues.back();
    }
    out.push_back(w);
  }
  return out;
}

int recover_rank(const SpectrumReport& report, int dim_u) {
  if (report.torus_dim == report.space_dim)
    throw DomainError("flat torus: rank recovery needs roots; rank = dim = " + std::to_string(report.space_dim));
  int max_dim = -1;
  bool regular = false;
  for (const auto& [len2, cls] : report.classes)
    for (const auto& c : cls) {
      max_dim = std::max(max_dim, c.dim_fix);
      regular = regular || c.regular;
    }
  if (!regular) throw DomainError("no regular lattice vector within bound " + report.bound.get_str());
  return 2 * dim_u - max_dim;
}

Q smallest_regular_len2(const SymmetricSpaceSpec& space, const MetricSpec& metric) {
  if (space.factors.empty()) throw DomainError("flat torus has no regular vectors");
  Q bound = 1;
  for (int iter = 0; iter < 40; ++iter, bound *= 2) {
    auto rep = enumerate_spectrum(space, metric, bound);
    for (const auto& [len2, cls] : rep.classes)
      for (const auto& c : cls)
        if (c.regular) return len2;
  }
  throw NumericGuard("no regular vector found below " + bound.get_str());
}

CluVerdict clu_check(const SpectrumReport& report) {
  CluVerdict v;
  for (const auto& [len2, cls] : report.classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (cls[i].component_norms != cls[0].component_norms) {
        v.clu = false;
        v.v = cls[0];
        v.w = cls[i];
        return v;
      }
  return v;
}

ClassHVerdict in_class_H(const SymmetricSpaceSpec& space) {
  ClassHVerdict out;
  for (const auto& f : space.factors)
    if (f.kind == FactorKind::MaximalRank)
      throw DomainError("factor " + f.rs.name() + " is not split-rank; class H is not defined");
  if (space.torus_dim == 0 && space.factors.size() == 1) {
    out.member = true;
    out.reasons.push_back("irreducible");
    return out;
  }
  std::vector<const rootsys::WeightedRootSystem*> rs;
  for (const auto& f : space.factors) rs.push_back(&f.rs);
  if (space.integral_lattice() == lattice::product_integral_lattice(rs, space.torus_dim, {})) {
    out.member = true;
    out.reasons.push_back("Gamma trivial");
    return out;
  }
  out.member = true;
  for (std::size_t k = 0; k < space.factors.size(); ++k) {
    const auto& f = space.factors[k];
    auto proj = space.projected_lattice(k);
    bool trivial = proj == lattice::coroot_lattice(f.rs);
    int n = f.rs.rank;
    std::string name = "factor " + std::to_string(k + 1) + " (" + f.rs.name() + "): ";
    bool ok = true;
    std::string clause;
    if (f.kind == FactorKind::TypeI) {
      clause = "(vii) split-rank symmetric space, no restriction";
    } else {
      switch (f.rs.label) {
        case Label::A:
          if (n % 2 == 1) {
            ok = !has_odd_l1_class(proj, n);
            clause = "(i) projection must not contain an odd multiple of L1 in Z" + std::to_string(n + 1);
          } else {
            clause = "(vii) no restriction";
          }
          break;
        case Label::B:
          ok = trivial;
          clause = "(ii) projection must be trivial";
          break;
        case Label::C:
          if (n % 4 == 1 || n % 4 == 2) {
            ok = trivial;
            clause = "(iii) projection must be trivial";
          } else {
            clause = "(vii) no restriction";
          }
          break;
        case Label::D:
          if (n % 4 == 2) {
            ok = !has_half_integer_coordinate(proj);
            clause = "(iv) projection must be trivial or <e1>";
          } else if (n % 4 == 3) {
            ok = !has_half_integer_coordinate(proj);
            clause = "(v) projection must be trivial or Z2";
          } else {
            clause = "(vii) no restriction";
          }
          break;
        case Label::E7:
          ok = trivial;
          clause = "(vi) projection must be trivial";
          break;
        default:
          clause = "(vii) no restriction";
      }
    }
    out.reasons.push_back(name + clause + (ok ? ": satisfied" : ": violated"));
    out.member = out.member && ok;
  }
  return out;
}

std::vector<std::int64_t> weighted_sum_functional(const rootsys::WeightedRootSystem& rs,
                                                  const lattice::IntegerLattice& lat) {
  RatVec w = zeros(static_cast<std::size_t>(rs.ambient_dim));
  for (auto i : rs.positives) w = add(w, scale(Q(rs.mult[i]), rs.roots[i].functional));
  std::vector<std::int64_t> out;
  for (const auto& b : lat.basis) {
    Q p = dot(w, b);
    if (!is_integer(p)) throw DomainError("lattice is not inside the central lattice of " + rs.name());
    out.push_back(to_i64(p.get_num()));
  }
  return out;
}

}  // namespace liespec::symspec
