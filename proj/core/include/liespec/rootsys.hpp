#pragma once

#include <map>
#include <string>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec::rootsys {

enum class Label { A, B, C, D, BC, E6, E7, E8, F4, G2 };

Label parse_label(const std::string& s);
std::string label_name(Label l);

struct Root {
  RatVec functional;  // beta(v) = <functional, v>
  RatVec coroot;      // 2 functional / <functional, functional>
};

// One multiplicity per Weyl orbit of roots. Orbits are named by length:
// "root" when all roots have one length, "short"/"long" for two lengths and
// "short"/"middle"/"long" for BC. The key "all" sets every orbit at once.
using MultProfile = std::map<std::string, int>;

struct FiniteAbelianGroup {
  std::vector<Z> invariant_factors;  // each >= 2, each divides the next
  Z order() const;
  std::string name() const;  // "1", "Z4", "Z2+Z2"
};

struct CenterStructure {
  FiniteAbelianGroup group;
  RatMat generators;  // lifts to the central lattice, one per invariant factor
};

struct WeightedRootSystem {
  Label label;
  int rank = 0;
  int ambient_dim = 0;
  RatMat subspace_basis;
  RatMat normals;  // spans the orthogonal complement of V in the ambient space
  RatVec regular;  // a vector in the open positive chamber
  std::vector<Root> roots;  // sorted lexicographically by functional
  std::vector<std::size_t> positives;
  std::vector<std::size_t> simples;
  std::vector<int> mult;
  std::vector<std::string> orbit_names;  // ascending squared length
  std::vector<int> orbit;                // orbit index of each root

  bool in_subspace(const RatVec& v) const;
  void require_in_subspace(const RatVec& v) const;
  bool reduced() const { return label != Label::BC; }
  std::string name() const;  // "B2", "E8"
  int positive_mult_sum() const;
};

WeightedRootSystem build_root_system(Label label, int rank, const MultProfile& mult = {});

Q pairing(const WeightedRootSystem& rs, std::size_t root_index, const RatVec& v);
RatVec reflect(const WeightedRootSystem& rs, std::size_t root_index, const RatVec& v);
RatVec dominant_representative(const WeightedRootSystem& rs, const RatVec& v);
bool is_dominant(const WeightedRootSystem& rs, const RatVec& v);
Q weighted_pos_sum(const WeightedRootSystem& rs, const RatVec& v, bool use_abs);
Q rho_pairing(const WeightedRootSystem& rs, const RatVec& v);
int degree_of_singularity(const WeightedRootSystem& rs, const RatVec& v);
RatVec two_rho(const WeightedRootSystem& rs);
std::vector<std::vector<Z>> cartan_matrix(const WeightedRootSystem& rs);
CenterStructure center_structure(const WeightedRootSystem& rs);

// Named vectors in the standard coordinates: "L3" (type A), "e2" (types
// B, C, D, BC), "F" (types C, D, E6, E7), "0", integer combinations such as
// "2F" or "e1+F", and literal vectors "(1/2,-1/2)".
RatVec named_vector(const WeightedRootSystem& rs, const std::string& expr);

}  // namespace liespec::rootsys
