#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liespec/lattice.hpp"
#include "liespec/rootsys.hpp"

namespace liespec::symspec {

enum class FactorKind { Group, TypeI, MaximalRank };

std::string kind_name(FactorKind k);
FactorKind parse_kind(const std::string& s);

struct Factor {
  rootsys::WeightedRootSystem rs;
  FactorKind kind = FactorKind::Group;
  RatMat gamma;  // center classes of this factor alone
};

// Group factor: every root has multiplicity 2.
Factor group_factor(rootsys::Label label, int rank, RatMat gamma = {});

struct SymmetricSpaceSpec {
  std::size_t torus_dim = 0;
  std::vector<Factor> factors;
  // One vector per block: the torus block first when torus_dim > 0.
  std::vector<std::vector<RatVec>> gamma;

  std::size_t ambient_dim() const;
  std::size_t offset(std::size_t factor) const;  // first ambient coordinate
  std::size_t blocks() const { return factors.size() + (torus_dim > 0 ? 1 : 0); }
  int dim() const;
  RatVec factor_part(const RatVec& v, std::size_t factor) const;
  RatVec torus_part(const RatVec& v) const;
  RatVec assemble(const RatVec& torus, const std::vector<RatVec>& parts) const;
  lattice::IntegerLattice integral_lattice() const;
  // pi_j of the integral lattice
  lattice::IntegerLattice projected_lattice(std::size_t factor) const;
  void validate() const;
};

struct MetricSpec {
  RatMat torus_gram;
  std::vector<Q> scales;

  static MetricSpec standard(const SymmetricSpaceSpec& space);
  void validate(const SymmetricSpaceSpec& space) const;
  RatMat ambient(const SymmetricSpaceSpec& space) const;
};

struct GeodesicClass {
  RatVec torus;
  std::vector<RatVec> parts;  // dominant per factor
  Q len2;
  std::vector<Q> component_norms;  // torus form value first (if any), then Euclidean per factor
  int degsing = 0;
  int dim_fix = 0;
  int morse = 0;
  int morse_mod4 = 0;
  bool regular = false;  // every factor component nonzero and regular
};

struct SpectrumReport {
  Q bound;
  int space_dim = 0;
  int torus_dim = 0;
  std::map<Q, std::vector<GeodesicClass>> classes;
  std::size_t size() const;
};

struct WaveParity {
  bool present = false;
  int max_dim = 0;
  std::vector<int> residues;  // sorted morse mod 4 of the classes attaining max_dim
  bool certified_nonzero = false;
};

struct WaveTermReport {
  Q len2;
  WaveParity even, odd;
};

struct ClassHVerdict {
  bool member = false;
  std::vector<std::string> reasons;
};

struct CluVerdict {
  bool clu = true;
  std::optional<GeodesicClass> v, w;
};

Q squared_length(const SymmetricSpaceSpec& space, const MetricSpec& metric, const RatVec& v);
int morse_index(const SymmetricSpaceSpec& space, const RatVec& v);
int dim_fix(const SymmetricSpaceSpec& space, const RatVec& v);
int degree_of_singularity(const SymmetricSpaceSpec& space, const RatVec& v);
int f_mod4(const Factor& factor, const lattice::IntegerLattice& projected, const Q& c, const Q& s);
int predicted_morse_mod4(const SymmetricSpaceSpec& space, const MetricSpec& metric, const RatVec& v);
SpectrumReport enumerate_spectrum(const SymmetricSpaceSpec& space, const MetricSpec& metric, const Q& bound);
std::vector<WaveTermReport> wave_analysis(const SpectrumReport& report);
int recover_rank(const SpectrumReport& report, int dim_u);
// Smallest squared length of a class whose every factor component is regular.
Q smallest_regular_len2(const SymmetricSpaceSpec& space, const MetricSpec& metric);
CluVerdict clu_check(const SpectrumReport& report);
ClassHVerdict in_class_H(const SymmetricSpaceSpec& space);

// Integer data for fast scans of a single factor: for v = sum x_k b_k over a
// basis of `lat`, sum_{beta>0} n_beta beta(v) = <weighted, x>.
std::vector<std::int64_t> weighted_sum_functional(const rootsys::WeightedRootSystem& rs,
                                                  const lattice::IntegerLattice& lat);

}  // namespace liespec::symspec
