#include "liespec/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "liespec/lattice.hpp"

namespace liespec::rootsys {

Label parse_label(const std::string& s) {
  static const std::map<std::string, Label> table = {
      {"A", Label::A},   {"B", Label::B},   {"C", Label::C},   {"D", Label::D},
      {"BC", Label::BC}, {"E6", Label::E6}, {"E7", Label::E7}, {"E8", Label::E8},
      {"F4", Label::F4}, {"G2", Label::G2}};
  std::string up;
  for (char c : s) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  auto it = table.find(up);
  if (it == table.end()) throw DomainError("unknown root system label '" + s + "'");
  return it->second;
}

std::string label_name(Label l) {
  switch (l) {
    case Label::A: return "A";
    case Label::B: return "B";
    case Label::C: return "C";
    case Label::D: return "D";
    case Label::BC: return "BC";
    case Label::E6: return "E6";
    case Label::E7: return "E7";
    case Label::E8: return "E8";
    case Label::F4: return "F4";
    case Label::G2: return "G2";
  }
  return "?";
}

Z FiniteAbelianGroup::order() const {
  Z o = 1;
  for (const auto& f : invariant_factors) o *= f;
  return o;
}

std::string FiniteAbelianGroup::name() const {
  if (invariant_factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += "+";
    s += "Z" + invariant_factors[i].get_str();
  }
  return s;
}

bool WeightedRootSystem::in_subspace(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim) return false;
  for (const auto& n : normals)
    if (dot(n, v) != 0) return false;
  return true;
}

void WeightedRootSystem::require_in_subspace(const RatVec& v) const {
  if (!in_subspace(v))
    throw DomainError("vector " + to_string(v) + " is not in the subspace V of " + name());
}

std::string WeightedRootSystem::name() const {
  std::string l = label_name(label);
  if (label == Label::E6 || label == Label::E7 || label == Label::E8 || label == Label::F4 ||
      label == Label::G2)
    return l;
  return l + std::to_string(rank);
}

int WeightedRootSystem::positive_mult_sum() const {
  int s = 0;
  for (auto i : positives) s += mult[i];
  return s;
}

namespace {

Q half(1, 2);

RatVec ev(int n, std::initializer_list<std::pair<int, Q>> entries) {
  RatVec v = zeros(static_cast<std::size_t>(n));
  for (const auto& [i, c] : entries) v[static_cast<std::size_t>(i)] += c;
  return v;
}

// Sign patterns over k coordinates whose count of minus signs has the given
// parity (-1 means any parity).
std::vector<std::vector<int>> sign_patterns(int k, int parity) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    int minus = __builtin_popcount(static_cast<unsigned>(mask));
    if (parity >= 0 && minus % 2 != parity) continue;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

void add_pm_pairs(RatMat& out, int n, int upto) {
  for (int i = 0; i < upto; ++i)
    for (int j = i + 1; j < upto; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) out.push_back(ev(n, {{i, Q(s)}, {j, Q(t)}}));
}

struct RawData {
  int ambient = 0;
  RatMat basis, normals, functionals;
  RatVec regular;
};

RawData raw_data(Label label, int n) {
  RawData d;
  switch (label) {
    case Label::A: {
      d.ambient = n + 1;
      for (int i = 0; i < n; ++i) d.basis.push_back(ev(n + 1, {{i, Q(1)}, {i + 1, Q(-1)}}));
      d.normals.push_back(RatVec(static_cast<std::size_t>(n + 1), Q(1)));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) d.functionals.push_back(ev(n + 1, {{i, Q(1)}, {j, Q(-1)}}));
      d.regular = zeros(static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i) d.regular[static_cast<std::size_t>(i)] = Q(2 * (n - i) - n);
      break;
    }
    case Label::B:
    case Label::C:
    case Label::D:
    case Label::BC: {
      d.ambient = n;
      for (int i = 0; i < n; ++i) d.basis.push_back(unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
      add_pm_pairs(d.functionals, n, n);
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
          if (label == Label::B || label == Label::BC) d.functionals.push_back(ev(n, {{i, Q(s)}}));
          if (label == Label::C || label == Label::BC) d.functionals.push_back(ev(n, {{i, Q(2 * s)}}));
        }
      d.regular = zeros(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) d.regular[static_cast<std::size_t>(i)] = Q(n - i);
      break;
    }
    case Label::F4: {
      d.ambient = 4;
      for (int i = 0; i < 4; ++i) d.basis.push_back(unit(4, static_cast<std::size_t>(i)));
      add_pm_pairs(d.functionals, 4, 4);
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) d.functionals.push_back(ev(4, {{i, Q(s)}}));
      for (const auto& sg : sign_patterns(4, -1)) {
        RatVec v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = half * sg[static_cast<std::size_t>(i)];
        d.functionals.push_back(v);
      }
      d.regular = {Q(8), Q(3), Q(2), Q(1)};
      break;
    }
    case Label::G2: {
      d.ambient = 3;
      d.basis = {ev(3, {{0, Q(1)}, {1, Q(-1)}}), ev(3, {{1, Q(1)}, {2, Q(-1)}})};
      d.normals = {RatVec{Q(1), Q(1), Q(1)}};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) d.functionals.push_back(ev(3, {{i, Q(1)}, {j, Q(-1)}}));
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          RatVec v(3, Q(-s, 3));
          v[static_cast<std::size_t>(i)] = Q(2 * s, 3);
          d.functionals.push_back(v);
        }
      d.regular = {Q(3), Q(2), Q(-5)};
      break;
    }
    case Label::E8: {
      d.ambient = 8;
      for (int i = 0; i < 8; ++i) d.basis.push_back(unit(8, static_cast<std::size_t>(i)));
      add_pm_pairs(d.functionals, 8, 8);
      for (const auto& sg : sign_patterns(8, 0)) {
        RatVec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = half * sg[static_cast<std::size_t>(i)];
        d.functionals.push_back(v);
      }
      d.regular = {Q(0), Q(1), Q(2), Q(3), Q(4), Q(5), Q(6), Q(23)};
      break;
    }
    case Label::E7: {
      d.ambient = 8;
      for (int i = 0; i < 6; ++i) d.basis.push_back(unit(8, static_cast<std::size_t>(i)));
      d.basis.push_back(ev(8, {{6, Q(1)}, {7, Q(-1)}}));
      d.normals = {ev(8, {{6, Q(1)}, {7, Q(1)}})};
      add_pm_pairs(d.functionals, 8, 6);
      for (int s : {1, -1}) d.functionals.push_back(ev(8, {{6, Q(s)}, {7, Q(-s)}}));
      for (int s : {1, -1})
        for (const auto& sg : sign_patterns(6, 1)) {
          RatVec v = zeros(8);
          for (int i = 0; i < 6; ++i) v[static_cast<std::size_t>(i)] = half * s * sg[static_cast<std::size_t>(i)];
          v[6] = half * s;
          v[7] = -half * s;
          d.functionals.push_back(v);
        }
      d.regular = {Q(6), Q(5), Q(4), Q(3), Q(2), Q(1), Q(11), Q(-11)};
      break;
    }
    case Label::E6: {
      d.ambient = 8;
      for (int i = 0; i < 5; ++i) d.basis.push_back(unit(8, static_cast<std::size_t>(i)));
      d.basis.push_back(ev(8, {{5, Q(1)}, {6, Q(1)}, {7, Q(-1)}}));
      d.normals = {ev(8, {{5, Q(1)}, {6, Q(-1)}}), ev(8, {{6, Q(1)}, {7, Q(1)}})};
      add_pm_pairs(d.functionals, 8, 5);
      for (int s : {1, -1})
        for (const auto& sg : sign_patterns(5, 1)) {
          RatVec v = zeros(8);
          for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = half * s * sg[static_cast<std::size_t>(i)];
          v[5] = half * s;
          v[6] = half * s;
          v[7] = -half * s;
          d.functionals.push_back(v);
        }
      d.regular = {Q(5), Q(4), Q(3), Q(2), Q(1), Q(6), Q(6), Q(-6)};
      break;
    }
  }
  return d;
}

int fixed_rank(Label l) {
  switch (l) {
    case Label::E6: return 6;
    case Label::E7: return 7;
    case Label::E8: return 8;
    case Label::F4: return 4;
    case Label::G2: return 2;
    default: return 0;
  }
}

int min_rank(Label l) {
  switch (l) {
    case Label::B: return 2;
    case Label::C: return 3;
    case Label::D: return 4;
    default: return 1;
  }
}

}  // namespace

WeightedRootSystem build_root_system(Label label, int rank, const MultProfile& mult) {
  if (int f = fixed_rank(label); f != 0 && rank != f)
    throw DomainError(label_name(label) + " has rank " + std::to_string(f) + ", got " + std::to_string(rank));
  if (rank < min_rank(label))
    throw DomainError(label_name(label) + " requires rank >= " + std::to_string(min_rank(label)) +
                      ", got " + std::to_string(rank));
  if (rank > 64) throw DomainError("rank " + std::to_string(rank) + " is too large");

  RawData d = raw_data(label, rank);
  WeightedRootSystem rs;
  rs.label = label;
  rs.rank = rank;
  rs.ambient_dim = d.ambient;
  rs.subspace_basis = d.basis;
  rs.normals = d.normals;
  rs.regular = d.regular;

  std::sort(d.functionals.begin(), d.functionals.end());
  d.functionals.erase(std::unique(d.functionals.begin(), d.functionals.end()), d.functionals.end());
  for (auto& f : d.functionals) rs.roots.push_back({f, scale(Q(2) / dot(f, f), f)});

  std::set<Q> lengths;
  for (const auto& r : rs.roots) lengths.insert(dot(r.functional, r.functional));
  std::vector<Q> lens(lengths.begin(), lengths.end());
  if (lens.size() == 1) rs.orbit_names = {"root"};
  else if (lens.size() == 2) rs.orbit_names = {"short", "long"};
  else rs.orbit_names = {"short", "middle", "long"};
  std::vector<int> orbit_mult(lens.size(), 1);
  for (const auto& [key, value] : mult) {
    if (value <= 0)
      throw DomainError("multiplicity for '" + key + "' must be positive, got " + std::to_string(value));
    if (key == "all") {
      std::fill(orbit_mult.begin(), orbit_mult.end(), value);
      continue;
    }
    auto it = std::find(rs.orbit_names.begin(), rs.orbit_names.end(), key);
    if (it == rs.orbit_names.end())
      throw DomainError("root system " + rs.name() + " has no root orbit '" + key + "'");
    orbit_mult[static_cast<std::size_t>(it - rs.orbit_names.begin())] = value;
  }
  for (const auto& r : rs.roots) {
    auto o = std::lower_bound(lens.begin(), lens.end(), dot(r.functional, r.functional)) - lens.begin();
    rs.orbit.push_back(static_cast<int>(o));
    rs.mult.push_back(orbit_mult[static_cast<std::size_t>(o)]);
  }

  std::map<RatVec, std::size_t> index;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    index[rs.roots[i].functional] = i;
    Q p = dot(rs.roots[i].functional, d.regular);
    if (p == 0) throw std::logic_error("chamber vector is singular for " + rs.name());
    if (p > 0) rs.positives.push_back(i);
  }
  std::set<std::size_t> pos(rs.positives.begin(), rs.positives.end());
  for (auto i : rs.positives) {
    bool decomposable = false;
    for (auto j : rs.positives) {
      auto it = index.find(sub(rs.roots[i].functional, rs.roots[j].functional));
      if (it != index.end() && pos.count(it->second)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rs.simples.push_back(i);
  }
  std::sort(rs.simples.begin(), rs.simples.end(), [&](std::size_t a, std::size_t b) {
    return rs.roots[b].functional < rs.roots[a].functional;
  });
  if (static_cast<int>(rs.simples.size()) != rank)
    throw std::logic_error("simple root count mismatch for " + rs.name());
  return rs;
}

Q pairing(const WeightedRootSystem& rs, std::size_t root_index, const RatVec& v) {
  rs.require_in_subspace(v);
  if (root_index >= rs.roots.size()) throw DomainError("root index out of range");
  return dot(rs.roots[root_index].functional, v);
}

RatVec reflect(const WeightedRootSystem& rs, std::size_t i, const RatVec& v) {
  return sub(v, scale(dot(rs.roots[i].functional, v), rs.roots[i].coroot));
}

RatVec dominant_representative(const WeightedRootSystem& rs, const RatVec& v) {
  rs.require_in_subspace(v);
  RatVec w = v;
  for (;;) {
    bool moved = false;
    for (auto s : rs.simples) {
      if (dot(rs.roots[s].functional, w) < 0) {
        w = reflect(rs, s, w);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

bool is_dominant(const WeightedRootSystem& rs, const RatVec& v) {
  for (auto s : rs.simples)
    if (dot(rs.roots[s].functional, v) < 0) return false;
  return true;
}

Q weighted_pos_sum(const WeightedRootSystem& rs, const RatVec& v, bool use_abs) {
  rs.require_in_subspace(v);
  Q s = 0;
  for (auto i : rs.positives) {
    Q p = dot(rs.roots[i].functional, v);
    s += rs.mult[i] * (use_abs ? abs(p) : p);
  }
  return s;
}

Q rho_pairing(const WeightedRootSystem& rs, const RatVec& v) {
  rs.require_in_subspace(v);
  return dot(two_rho(rs), v) / 2;
}

int degree_of_singularity(const WeightedRootSystem& rs, const RatVec& v) {
  rs.require_in_subspace(v);
  int d = 0;
  for (auto i : rs.positives)
    if (dot(rs.roots[i].functional, v) == 0) d += rs.mult[i];
  return d;
}

RatVec two_rho(const WeightedRootSystem& rs) {
  RatVec s = zeros(static_cast<std::size_t>(rs.ambient_dim));
  for (auto i : rs.positives) s = add(s, rs.roots[i].functional);
  return s;
}

std::vector<std::vector<Z>> cartan_matrix(const WeightedRootSystem& rs) {
  std::vector<std::vector<Z>> c;
  for (auto i : rs.simples) {
    std::vector<Z> row;
    for (auto j : rs.simples) {
      Q p = dot(rs.roots[i].functional, rs.roots[j].coroot);
      row.push_back(p.get_num());
    }
    c.push_back(row);
  }
  return c;
}

CenterStructure center_structure(const WeightedRootSystem& rs) {
  auto central = lattice::central_lattice(rs);
  auto coroot = lattice::coroot_lattice(rs);
  IntMat m;
  for (const auto& c : coroot.basis) {
    RatVec x = solve_row_combination(central.basis, c);
    std::vector<Z> row;
    for (const auto& q : x) {
      if (!is_integer(q)) throw std::logic_error("coroot lattice not inside the central lattice");
      row.push_back(q.get_num());
    }
    m.push_back(row);
  }
  auto snf = lattice::smith_normal_form(m);
  RatMat right(snf.right.size());
  for (std::size_t i = 0; i < snf.right.size(); ++i)
    for (const auto& z : snf.right[i]) right[i].push_back(Q(z));
  RatMat rinv = inverse(right);
  CenterStructure out;
  for (std::size_t i = 0; i < snf.S.size(); ++i) {
    Z s = snf.S[i][i];
    if (s < 2) continue;
    out.group.invariant_factors.push_back(s);
    RatVec g = zeros(static_cast<std::size_t>(rs.ambient_dim));
    for (std::size_t j = 0; j < rinv[i].size(); ++j) g = add(g, scale(rinv[i][j], central.basis[j]));
    out.generators.push_back(g);
  }
  return out;
}

namespace {

RatVec named_atom(const WeightedRootSystem& rs, const std::string& name) {
  auto n = static_cast<std::size_t>(rs.ambient_dim);
  if (name == "0") return zeros(n);
  if (!name.empty() && name.front() == '(') {
    if (name.back() != ')') throw DomainError("unterminated vector literal '" + name + "'");
    RatVec v;
    std::string cur;
    for (std::size_t i = 1; i + 1 < name.size(); ++i) {
      if (name[i] == ',') {
        v.push_back(parse_rational(cur));
        cur.clear();
      } else {
        cur.push_back(name[i]);
      }
    }
    v.push_back(parse_rational(cur));
    if (v.size() != n) throw DomainError("vector literal '" + name + "' has wrong dimension");
    return v;
  }
  auto index_suffix = [&](std::size_t prefix) {
    std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("malformed name '" + name + "'");
    return std::stoi(digits);
  };
  Label l = rs.label;
  bool classical = l == Label::B || l == Label::C || l == Label::D || l == Label::BC;
  if (name[0] == 'L' && l == Label::A) {
    int k = index_suffix(1);
    if (k < 1 || k > rs.rank) throw DomainError("L" + std::to_string(k) + " out of range for " + rs.name());
    RatVec v(n, Q(-k, rs.rank + 1));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] += 1;
    return v;
  }
  if (name[0] == 'e' && classical) {
    int k = index_suffix(1);
    if (k < 1 || k > rs.rank) throw DomainError(name + " out of range for " + rs.name());
    return unit(n, static_cast<std::size_t>(k - 1));
  }
  if (name == "F") {
    if (l == Label::C || l == Label::D) return RatVec(n, half);
    if (l == Label::E6) return ev(8, {{5, Q(2, 3)}, {6, Q(2, 3)}, {7, Q(-2, 3)}});
    if (l == Label::E7) return ev(8, {{0, Q(1)}, {1, Q(1)}, {2, Q(1)}, {6, half}, {7, -half}});
  }
  if (name[0] == 'z') {
    int k = index_suffix(1);
    auto c = center_structure(rs);
    if (k < 1 || static_cast<std::size_t>(k) > c.generators.size())
      throw DomainError(name + " out of range: center of " + rs.name() + " is " + c.group.name());
    return c.generators[static_cast<std::size_t>(k - 1)];
  }
  throw DomainError("unknown vector name '" + name + "' for " + rs.name());
}

}  // namespace

RatVec named_vector(const WeightedRootSystem& rs, const std::string& expr) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty vector expression");
  RatVec total = zeros(static_cast<std::size_t>(rs.ambient_dim));
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    if (end < s.size() && s[end] == '(') {
      end = s.find(')', end);
      if (end == std::string::npos) throw DomainError("unterminated vector literal in '" + expr + "'");
      ++end;
    } else {
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    }
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw DomainError("malformed vector expression '" + expr + "'");
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    Q coeff = 1;
    if (k > 0 && k < term.size()) {
      coeff = Q(term.substr(0, k));
      term = term.substr(k);
      if (term[0] == '*') term = term.substr(1);
    }
    total = add(total, scale(coeff * sign, named_atom(rs, term)));
    pos = end;
  }
  rs.require_in_subspace(total);
  return total;
}

}  // namespace liespec::rootsys
