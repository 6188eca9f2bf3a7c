#include "qvertex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qvertex {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

long Partition::conj_part(long k) const {
  long count = 0;
  for (long p : parts_)
    if (p >= k) ++count;
  return count;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<long> conj(static_cast<size_t>(parts_[0]));
  for (long j = 1; j <= parts_[0]; ++j) conj[static_cast<size_t>(j - 1)] = conj_part(j);
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
  for (size_t i = 0; i < inner.length(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Frobenius frobenius(const Partition& p) {
  Frobenius f;
  Partition q = p.conjugate();
  for (size_t i = 0; static_cast<long>(i) < static_cast<long>(p.length()); ++i) {
    long m = p.part(i) - static_cast<long>(i) - 1;
    long n = q.part(i) - static_cast<long>(i) - 1;
    if (m < 0 || n < 0) break;  // past the diagonal
    f.ms.push_back(m);
    f.ns.push_back(n);
  }
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  if (f.ms.size() != f.ns.size())
    throw InvalidFrobenius("Frobenius: arm/leg lists differ in length");
  auto strictly_decreasing_nonneg = [](const std::vector<long>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing_nonneg(f.ms) || !strictly_decreasing_nonneg(f.ns))
    throw InvalidFrobenius("Frobenius: coordinates must strictly decrease and be >= 0");

  const size_t r = f.ms.size();
  std::vector<long> parts;
  // Rows on or above the diagonal.
  for (size_t i = 0; i < r; ++i) parts.push_back(f.ms[i] + static_cast<long>(i) + 1);
  // Rows below the diagonal, reconstructed from the legs via the conjugate.
  // Row i (0-based, i >= r) has length #{j : n_j >= i - j}; scan downward
  // until rows run out.
  for (long i = static_cast<long>(r);; ++i) {
    long len = 0;
    for (size_t j = 0; j < r; ++j)
      if (f.ns[j] + static_cast<long>(j) >= i) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

long kappa(const Partition& p) {
  long acc = 0;
  for (size_t i = 0; i < p.length(); ++i) {
    long mu = p.part(i);
    acc += mu * (mu - 2 * static_cast<long>(i + 1) + 1);
  }
  return acc;
}

long kappa_frobenius(const Frobenius& f) {
  // (m + 1/2)^2 - (n + 1/2)^2 = m(m+1) - n(n+1); the quarters cancel.
  long acc = 0;
  for (size_t i = 0; i < f.rank(); ++i)
    acc += f.ms[i] * (f.ms[i] + 1) - f.ns[i] * (f.ns[i] + 1);
  return acc;
}

std::vector<long> hooks(const Partition& p) {
  std::vector<long> out;
  Partition q = p.conjugate();
  for (size_t i = 0; i < p.length(); ++i)
    for (long j = 1; j <= p.part(i); ++j)
      out.push_back(p.part(i) - j + q.part(static_cast<size_t>(j - 1)) -
                    static_cast<long>(i) - 1 + 1);
  return out;
}

namespace {
void gen_partitions(long n, long max_part, std::vector<long>& stack,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (long k = std::min(n, max_part); k >= 1; --k) {
    stack.push_back(k);
    gen_partitions(n - k, k, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long n, long max_part) {
  if (n < 0) return {};
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  std::vector<long> stack;
  if (n == 0) {
    out.push_back(Partition());
    return out;
  }
  gen_partitions(n, max_part, stack, out);
  return out;
}

std::vector<Partition> enumerate_upto(long n) {
  std::vector<Partition> out;
  for (long k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

}  // namespace qvertex
