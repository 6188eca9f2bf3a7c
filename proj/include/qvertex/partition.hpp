#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qvertex {

struct InvalidFrobenius : std::domain_error {
  explicit InvalidFrobenius(const std::string& what) : std::domain_error(what) {}
};

/// Integer partition: weakly decreasing strictly positive parts.  The empty
/// partition is the default value.  Constructors validate rather than
/// normalize, so malformed input (zeros, increases) is an error the caller
/// has to deal with.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  /// Number of parts.
  size_t length() const { return parts_.size(); }
  /// Sum of the parts.
  long size() const;
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0-based, 0 beyond the last row.
  long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Multiplicity view of the conjugate: number of parts >= k.
  long conj_part(long k) const;

  Partition conjugate() const;
  bool contains(const Partition& inner) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;

 private:
  std::vector<long> parts_;
};

/// Frobenius coordinates (m_1,...,m_r | n_1,...,n_r): arm and leg lengths
/// measured from the diagonal, both strictly decreasing and nonnegative.
struct Frobenius {
  std::vector<long> ms, ns;
  size_t rank() const { return ms.size(); }
};

/// Diagonal (Frobenius) coordinates of a partition.
Frobenius frobenius(const Partition& p);
/// Inverse of frobenius(); throws InvalidFrobenius on malformed coordinates.
Partition from_frobenius(const Frobenius& f);

/// kappa invariant: sum of mu_i (mu_i - 2i + 1), always even.
long kappa(const Partition& p);
/// Same invariant from the diagonal coordinates:
/// sum (m_i + 1/2)^2 - sum (n_i + 1/2)^2.
long kappa_frobenius(const Frobenius& f);

/// Hook lengths in row-major cell order.
std::vector<long> hooks(const Partition& p);

/// All partitions of exactly n, first part at most max_part, in descending
/// lexicographic order.
std::vector<Partition> partitions_of(long n, long max_part = -1);
/// All partitions of size 0..N ordered by size, then descending lex.
std::vector<Partition> enumerate_upto(long n);

}  // namespace qvertex
