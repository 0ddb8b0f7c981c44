#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "liespec/rational.hpp"
#include "liespec/rootsys.hpp"

namespace liespec::lattice {

struct IntegerLattice {
  RatMat basis;  // canonical: Hermite normal form of the scaled generators
  std::size_t ambient_dim = 0;

  std::size_t rank() const { return basis.size(); }
  bool contains(const RatVec& v) const;
  // Integer coordinates of v in the basis; throws DomainError if v is not in
  // the lattice.
  std::vector<Z> coords(const RatVec& v) const;
  RatVec vector(const std::vector<std::int64_t>& x) const;
  bool operator==(const IntegerLattice& o) const { return basis == o.basis; }
};

IntegerLattice lattice_from_generators(const RatMat& gens, std::size_t ambient_dim = 0);
bool is_sublattice(const IntegerLattice& sub, const IntegerLattice& super);
// [super : sub] for lattices of equal rank.
Z index_in(const IntegerLattice& sub, const IntegerLattice& super);

IntMat hermite_normal_form(IntMat m);

struct SmithForm {
  IntMat S, left, right;  // left * M * right = S
};
SmithForm smith_normal_form(const IntMat& m);

IntegerLattice coroot_lattice(const rootsys::WeightedRootSystem& rs);
IntegerLattice root_lattice(const rootsys::WeightedRootSystem& rs);
IntegerLattice central_lattice(const rootsys::WeightedRootSystem& rs);

// Lambda_I = preimage of the subgroup generated by the classes of gamma.
IntegerLattice integral_lattice(const rootsys::WeightedRootSystem& rs, const RatMat& gamma);

// Ambient space of a product: torus coordinates first, then each factor's
// ambient coordinates. A tuple lists one vector per block in that order.
IntegerLattice product_integral_lattice(const std::vector<const rootsys::WeightedRootSystem*>& factors,
                                        std::size_t torus_dim,
                                        const std::vector<std::vector<RatVec>>& gamma_tuples);

struct QuadraticForm {
  RatMat gram;
  // Checks symmetry and positive definiteness by leading principal minors.
  explicit QuadraticForm(RatMat g);
  Q operator()(const std::vector<std::int64_t>& x) const;
  std::size_t dim() const { return gram.size(); }
};

// Gram matrix of a lattice basis for the ambient form diag-blocked by `metric`
// (a square rational matrix on the ambient space).
QuadraticForm restrict_form(const IntegerLattice& lat, const RatMat& metric);

// Streaming form of the enumeration. Values are reported as integers over the
// common denominator scale(): q(x) = scaled / scale().
class Enumerator {
 public:
  Enumerator(const QuadraticForm& q, const Q& bound, bool dedup = true);
  const Z& scale() const { return M_; }
  void run(const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit) const;

 private:
  std::size_t r_ = 0;
  bool dedup_ = true, empty_ = false;
  Z M_ = 1;
  std::int64_t budget_ = 0;
  std::vector<std::int64_t> den_, a_;
  std::vector<std::vector<std::int64_t>> n_;
};

struct EnumeratedVector {
  std::vector<std::int64_t> coords;
  Q value;
};

// All nonzero integer x with q(x) <= bound, sorted by (value, coords). With
// dedup only the representative whose last nonzero coordinate is positive is
// kept from each pair {x, -x}.
std::vector<EnumeratedVector> enumerate_coords(const QuadraticForm& q, const Q& bound, bool dedup = true);

std::vector<RatVec> enumerate_up_to(const IntegerLattice& lat, const QuadraticForm& q, const Q& bound,
                                    bool dedup = true);

}  // namespace liespec::lattice
