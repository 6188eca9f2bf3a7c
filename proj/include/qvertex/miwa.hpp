#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvertex {

using Rat = mpq_class;

struct CutoffTooSmall : std::domain_error {
  explicit CutoffTooSmall(const std::string& what) : std::domain_error(what) {}
};

/// Polynomial in the Miwa time variables t_1..t_K with exact rational
/// coefficients.  t_k carries weighted degree k (it stands in for p_k / k).
/// An optional bound D truncates products: terms of weighted degree > D are
/// dropped as they arise.
class MiwaPoly {
 public:
  using Key = std::vector<int>;  // exponent of t_1..t_K

  explicit MiwaPoly(int nvars, long bound = -1) : nvars_(nvars), bound_(bound) {
    if (nvars < 0) throw std::invalid_argument("MiwaPoly: negative variable count");
  }
  /// Custom variable weights (weights[i] for the i-th variable); the series
  /// over several component blocks reuses weights 1..K per block.
  MiwaPoly(int nvars, long bound, std::vector<long> weights)
      : nvars_(nvars), bound_(bound), weights_(std::move(weights)) {
    if (nvars < 0) throw std::invalid_argument("MiwaPoly: negative variable count");
    if (static_cast<int>(weights_.size()) != nvars)
      throw std::invalid_argument("MiwaPoly: weight count mismatch");
  }

  int nvars() const { return nvars_; }
  long bound() const { return bound_; }
  const std::vector<long>& weights() const { return weights_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }

  static long weighted_degree(const Key& k);
  /// Weighted degree under this polynomial's weights (default: t_k has
  /// weight k).
  long wdeg(const Key& k) const;
  /// Largest weighted degree present (-1 for the zero polynomial).
  long degree() const;

  Rat coeff(const Key& k) const;
  void add_term(const Key& k, const Rat& c);

  MiwaPoly operator-() const;
  MiwaPoly operator+(const MiwaPoly& o) const;
  MiwaPoly operator-(const MiwaPoly& o) const;
  MiwaPoly operator*(const MiwaPoly& o) const;
  MiwaPoly& operator+=(const MiwaPoly& o);
  MiwaPoly& operator-=(const MiwaPoly& o);
  bool operator==(const MiwaPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MiwaPoly& o) const { return !(*this == o); }

  MiwaPoly scaled(const Rat& c) const;

  std::string str() const;

 private:
  int nvars_;
  long bound_;
  std::vector<long> weights_;  // empty: default weights 1..nvars
  std::map<Key, Rat> terms_;
};

}  // namespace qvertex
