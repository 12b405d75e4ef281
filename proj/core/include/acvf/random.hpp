#pragma once

// Seeded generators. Draws are done by hand from mt19937_64 output so that a
// seed produces the same stream on every standard library.

#include <cstdint>
#include <random>

#include "acvf/field.hpp"
#include "acvf/matrix.hpp"

namespace acvf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi] (modulo bias is irrelevant at these ranges).
  long uniform(long lo, long hi);
  bool coin() { return (engine_() & 1U) != 0; }
  template <class C>
  auto& pick(C& c) { return c[static_cast<std::size_t>(uniform(0, static_cast<long>(c.size()) - 1))]; }

  /// p/q with |p| ≤ num_bound, 1 ≤ q ≤ den_bound.
  Rational rational(long num_bound, long den_bound);

  /// Sparse Laurent polynomial with exponents in [lo, hi], possibly zero.
  FieldElem laurent(long lo, long hi, int terms = 3);
  /// A random element of ℚ(t): small Laurent numerator over a small
  /// polynomial denominator with nonzero constant term (or a monomial).
  FieldElem ratfunc(long lo, long hi);
  /// Exact Puiseux polynomial with exponents in (1/den)ℤ ∩ [lo, hi].
  FieldElem puiseux(long lo, long hi, long den);
  /// Element of O with valuation exactly 0.
  FieldElem unit(Backend b);
  /// Element of O (valuation ≥ 0, possibly 0).
  FieldElem integral(Backend b);

  FieldMatrix invertible(Backend b, std::size_t n, long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace acvf
