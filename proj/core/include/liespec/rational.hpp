#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liespec {

using Q = mpq_class;
using Z = mpz_class;
using RatVec = std::vector<Q>;
using RatMat = std::vector<RatVec>;
using IntMat = std::vector<std::vector<Z>>;

// Raised when an input is outside the documented domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact computation would leave its fixed-width fast path.
struct NumericGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const RatVec& v);

inline bool is_integer(const Q& q) { return q.get_den() == 1; }
Z floor_q(const Q& q);
Z ceil_q(const Q& q);
std::int64_t to_i64(const Z& z);

Q dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Q& c, const RatVec& a);
RatVec neg(const RatVec& a);
RatVec zeros(std::size_t n);
RatVec unit(std::size_t n, std::size_t i);
bool is_zero(const RatVec& a);
RatVec concat(const RatVec& a, const RatVec& b);

// Rank of the row space, exact.
std::size_t rank(RatMat rows);
// Solve x * rows = target for x (rows are independent); throws DomainError if
// target is outside the row space.
RatVec solve_row_combination(const RatMat& rows, const RatVec& target);
RatMat inverse(const RatMat& m);
Q determinant(RatMat m);
RatMat gram(const RatMat& rows);

Z lcm_of_denominators(const RatVec& v);

}  // namespace liespec
