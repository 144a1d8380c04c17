#pragma once

#include <map>

#include "mixt/partition.hpp"

namespace mixt {

// Finite integer-linear combination of bipartitions; zero terms are absent.
class RingElement {
 public:
  RingElement() = default;
  static RingElement monomial(const Bipartition& b, Integer c = 1);

  const std::map<Bipartition, Integer>& terms() const { return terms_; }
  Integer coefficient(const Bipartition& b) const;
  bool zero() const { return terms_.empty(); }

  void add(const Bipartition& b, const Integer& c);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Integer& c);
  friend RingElement operator+(RingElement a, const RingElement& b) {
    return a += b;
  }
  friend RingElement operator-(RingElement a, const RingElement& b) {
    return a -= b;
  }
  friend RingElement operator*(const Integer& c, RingElement a) {
    return a *= c;
  }

  bool operator==(const RingElement&) const = default;

 private:
  std::map<Bipartition, Integer> terms_;
};

}  // namespace mixt
