#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "framegeo/rat.hpp"

namespace framegeo {

enum class Slot { Upper, Lower };

/// Dense multi-index array of exact rationals with a declared valence
/// (one Slot per index position). Index order is significant; no implicit
/// symmetrization. API indices are 0-based; reports render them 1-based.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, std::vector<Slot> valence);

  static Tensor identity_map(int dim);     // (1,1) delta
  static Tensor identity_metric(int dim);  // (0,2) delta

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(valence_.size()); }
  const std::vector<Slot>& valence() const { return valence_; }
  const std::vector<Rat>& components() const { return comp_; }

  const Rat& at(std::span<const int> idx) const { return comp_[offset(idx)]; }
  Rat& at(std::span<const int> idx) { return comp_[offset(idx)]; }
  const Rat& at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }
  Rat& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }

  /// Flat component access; index layout is row-major over the slots.
  const Rat& flat(std::size_t i) const { return comp_[i]; }
  Rat& flat(std::size_t i) { return comp_[i]; }
  std::size_t size() const { return comp_.size(); }
  std::vector<int> unflatten(std::size_t flat_index) const;

  Rat scalar() const;  // rank-0 tensors only
  bool is_zero() const;
  /// Indices of the first nonzero component in lexicographic order.
  std::optional<std::vector<int>> first_nonzero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rat& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rat& s, Tensor t) { return t *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.valence_ == b.valence_ && a.comp_ == b.comp_;
  }

 private:
  std::size_t offset(std::span<const int> idx) const;

  int dim_ = 0;
  std::vector<Slot> valence_;
  std::vector<Rat> comp_;
};

/// Contracts slot_a with slot_b (0-based positions). Slots of opposite kind
/// contract by a plain trace; two slots of the same kind require the metric
/// (paired against g for two upper slots, against g^-1 for two lower ones).
/// Throws std::invalid_argument on bad slots, a missing metric, or a
/// non-invertible metric.
Tensor contract(const Tensor& t, int slot_a, int slot_b, const Tensor* metric = nullptr);

/// Exact inverse of a (0,2) metric, returned as a (2,0) tensor.
/// Throws std::invalid_argument if the metric is singular.
Tensor invert_metric(const Tensor& g);

}  // namespace framegeo
