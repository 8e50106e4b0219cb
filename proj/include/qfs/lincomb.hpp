#pragma once

// Sparse linear combinations of basis keys with CycloScalar coefficients,
// and tensor powers of them.

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "qfs/cyclo.hpp"

namespace qfs {

template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, CycloScalar>;

  LinComb() = default;
  explicit LinComb(int p) : p_(p) {}

  static LinComb term(int p, const Key& k, const CycloScalar& c) {
    LinComb r(p);
    r.add_term(k, c);
    return r;
  }
  static LinComb basis(int p, const Key& k) { return term(p, k, CycloScalar::one(p)); }

  int order() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }

  CycloScalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? CycloScalar::zero(p_) : it->second;
  }

  void add_term(const Key& k, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    adopt(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinComb& operator*=(const CycloScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const CycloScalar& s) { return a *= s; }
  friend LinComb operator*(const CycloScalar& s, LinComb a) { return a *= s; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies a linear map given on basis keys.
  template <class Fn>
  auto map_linear(Fn&& f) const -> decltype(f(std::declval<Key>())) {
    using Out = decltype(f(std::declval<Key>()));
    Out out(p_);
    for (const auto& [k, c] : terms_) out += f(k) * c;
    return out;
  }

  /// Applies a scalar-valued linear functional given on basis keys.
  template <class Fn>
  CycloScalar eval_linear(Fn&& f) const {
    CycloScalar acc = CycloScalar::zero(p_);
    for (const auto& [k, c] : terms_) {
      CycloScalar v = f(k);
      if (!v.is_zero()) acc += v * c;
    }
    return acc;
  }

 private:
  void adopt(const LinComb& o) {
    if (p_ == 0) p_ = o.p_;
  }

  int p_ = 0;
  Map terms_;
};

template <class M, std::size_t N>
using TensorKey = std::array<M, N>;

template <class M, std::size_t N>
using Tensor = LinComb<TensorKey<M, N>>;

/// a (x) b for plain elements.
template <class M>
Tensor<M, 2> outer(const LinComb<M>& a, const LinComb<M>& b) {
  Tensor<M, 2> r(a.order() ? a.order() : b.order());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add_term({ka, kb}, ca * cb);
  return r;
}

/// Appends one more leg: t (x) b.
template <class M, std::size_t N>
Tensor<M, N + 1> outer(const Tensor<M, N>& t, const LinComb<M>& b) {
  Tensor<M, N + 1> r(t.order() ? t.order() : b.order());
  for (const auto& [kt, ct] : t.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TensorKey<M, N + 1> k;
      for (std::size_t i = 0; i < N; ++i) k[i] = kt[i];
      k[N] = kb;
      r.add_term(k, ct * cb);
    }
  return r;
}

/// Prepends one more leg: b (x) t.
template <class M, std::size_t N>
Tensor<M, N + 1> outer(const LinComb<M>& b, const Tensor<M, N>& t) {
  Tensor<M, N + 1> r(t.order() ? t.order() : b.order());
  for (const auto& [kb, cb] : b.terms())
    for (const auto& [kt, ct] : t.terms()) {
      TensorKey<M, N + 1> k;
      k[0] = kb;
      for (std::size_t i = 0; i < N; ++i) k[i + 1] = kt[i];
      r.add_term(k, ct * cb);
    }
  return r;
}

/// Leg-wise product in the tensor power of an algebra; mul(M, M) -> LinComb<M>.
template <class M, std::size_t N, class Mul>
Tensor<M, N> tensor_mul(const Tensor<M, N>& a, const Tensor<M, N>& b, Mul&& mul) {
  const int p = a.order() ? a.order() : b.order();
  Tensor<M, N> r(p);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::array<LinComb<M>, N> legs;
      for (std::size_t i = 0; i < N; ++i) legs[i] = mul(ka[i], kb[i]);
      CycloScalar c = ca * cb;
      // expand the product of N leg combinations
      TensorKey<M, N> key{};
      auto rec = [&](auto&& self, std::size_t leg, const CycloScalar& acc) -> void {
        if (leg == N) {
          r.add_term(key, acc);
          return;
        }
        for (const auto& [m, cm] : legs[leg].terms()) {
          key[leg] = m;
          self(self, leg + 1, acc * cm);
        }
      };
      rec(rec, 0, c);
    }
  return r;
}

/// Applies a linear map f: M -> LinComb<M> to leg `leg` of an N-fold tensor.
template <class M, std::size_t N, class Fn>
Tensor<M, N> apply_on_leg(const Tensor<M, N>& t, std::size_t leg, Fn&& f) {
  Tensor<M, N> r(t.order());
  for (const auto& [k, c] : t.terms()) {
    LinComb<M> img = f(k[leg]);
    for (const auto& [m, cm] : img.terms()) {
      TensorKey<M, N> k2 = k;
      k2[leg] = m;
      r.add_term(k2, c * cm);
    }
  }
  return r;
}

/// Replaces leg `leg` of an N-fold tensor by the legs of f(M) -> Tensor<M, 2>, producing N+1 legs.
template <class M, std::size_t N, class Fn>
Tensor<M, N + 1> expand_leg(const Tensor<M, N>& t, std::size_t leg, Fn&& f) {
  Tensor<M, N + 1> r(t.order());
  for (const auto& [k, c] : t.terms()) {
    Tensor<M, 2> img = f(k[leg]);
    for (const auto& [m, cm] : img.terms()) {
      TensorKey<M, N + 1> k2;
      for (std::size_t i = 0, j = 0; i < N; ++i) {
        if (i == leg) {
          k2[j++] = m[0];
          k2[j++] = m[1];
        } else {
          k2[j++] = k[i];
        }
      }
      r.add_term(k2, c * cm);
    }
  }
  return r;
}

}  // namespace qfs
