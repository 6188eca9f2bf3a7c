#include "qvertex/miwa.hpp"

#include <sstream>

namespace qvertex {

long MiwaPoly::weighted_degree(const Key& k) {
  long d = 0;
  for (size_t i = 0; i < k.size(); ++i) d += static_cast<long>(i + 1) * k[i];
  return d;
}

long MiwaPoly::wdeg(const Key& k) const {
  if (weights_.empty()) return weighted_degree(k);
  long d = 0;
  for (size_t i = 0; i < k.size(); ++i) d += weights_[i] * k[i];
  return d;
}

long MiwaPoly::degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, wdeg(k));
  return d;
}

Rat MiwaPoly::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MiwaPoly::add_term(const Key& k, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(k.size()) != nvars_)
    throw std::invalid_argument("MiwaPoly: key arity mismatch");
  if (bound_ >= 0 && wdeg(k) > bound_) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MiwaPoly MiwaPoly::operator-() const {
  MiwaPoly r(nvars_, bound_);
  r.weights_ = weights_;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

MiwaPoly MiwaPoly::operator+(const MiwaPoly& o) const {
  MiwaPoly r = *this;
  r += o;
  return r;
}

MiwaPoly MiwaPoly::operator-(const MiwaPoly& o) const {
  MiwaPoly r = *this;
  r -= o;
  return r;
}

MiwaPoly& MiwaPoly::operator+=(const MiwaPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MiwaPoly& MiwaPoly::operator-=(const MiwaPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, Rat(-c));
  return *this;
}

MiwaPoly MiwaPoly::operator*(const MiwaPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MiwaPoly: variable count mismatch");
  long b = bound_ >= 0 ? bound_ : o.bound_;
  MiwaPoly r(nvars_, b);
  r.weights_ = weights_.empty() ? o.weights_ : weights_;
  Key sum(static_cast<size_t>(nvars_));
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) sum[static_cast<size_t>(i)] = ka[i] + kb[i];
      r.add_term(sum, Rat(ca * cb));
    }
  return r;
}

MiwaPoly MiwaPoly::scaled(const Rat& c) const {
  MiwaPoly r(nvars_, bound_);
  r.weights_ = weights_;
  if (c == 0) return r;
  for (const auto& [k, cc] : terms_) r.terms_[k] = Rat(cc * c);
  return r;
}

std::string MiwaPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    for (int i = 0; i < nvars_; ++i)
      if (k[static_cast<size_t>(i)] != 0) {
        os << "*t" << (i + 1);
        if (k[static_cast<size_t>(i)] != 1) os << "^" << k[static_cast<size_t>(i)];
      }
    first = false;
  }
  return os.str();
}

}  // namespace qvertex
