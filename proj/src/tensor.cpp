#include "framegeo/tensor.hpp"

#include <stdexcept>

namespace framegeo {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Slot> valence) : dim_(dim), valence_(std::move(valence)) {
  if (dim <= 0) throw std::invalid_argument("Tensor: dimension must be positive");
  comp_.assign(pow_size(dim_, rank()), Rat(0));
}

Tensor Tensor::identity_map(int dim) {
  Tensor t(dim, {Slot::Upper, Slot::Lower});
  for (int i = 0; i < dim; ++i) t.at({i, i}) = Rat(1);
  return t;
}

Tensor Tensor::identity_metric(int dim) {
  Tensor t(dim, {Slot::Lower, Slot::Lower});
  for (int i = 0; i < dim; ++i) t.at({i, i}) = Rat(1);
  return t;
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) throw std::invalid_argument("Tensor: wrong number of indices");
  std::size_t off = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("Tensor: index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return off;
}

std::vector<int> Tensor::unflatten(std::size_t flat_index) const {
  std::vector<int> idx(static_cast<std::size_t>(rank()), 0);
  for (int s = rank() - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat_index % static_cast<std::size_t>(dim_));
    flat_index /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

Rat Tensor::scalar() const {
  if (rank() != 0) throw std::logic_error("Tensor: scalar() on tensor of nonzero rank");
  return comp_[0];
}

bool Tensor::is_zero() const {
  for (const Rat& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::vector<int>> Tensor::first_nonzero() const {
  for (std::size_t i = 0; i < comp_.size(); ++i)
    if (!comp_[i].is_zero()) return unflatten(i);
  return std::nullopt;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || valence_ != o.valence_) throw std::invalid_argument("Tensor: shape mismatch in +=");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || valence_ != o.valence_) throw std::invalid_argument("Tensor: shape mismatch in -=");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rat& s) {
  for (Rat& c : comp_) c *= s;
  return *this;
}

Tensor invert_metric(const Tensor& g) {
  if (g.rank() != 2) throw std::invalid_argument("invert_metric: expected a rank-2 tensor");
  const int n = g.dim();
  // Gauss-Jordan on [g | I].
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(2 * n), Rat(0));
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.at({i, j});
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (!a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("invert_metric: metric not invertible");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    const Rat inv_p = Rat(1) / a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = 0; j < 2 * n; ++j) a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv_p;
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rat f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < 2 * n; ++j)
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
    }
  }
  Tensor inv(n, {Slot::Upper, Slot::Upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at({i, j}) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return inv;
}

Tensor contract(const Tensor& t, int slot_a, int slot_b, const Tensor* metric) {
  const int r = t.rank();
  if (slot_a < 0 || slot_a >= r || slot_b < 0 || slot_b >= r)
    throw std::invalid_argument("contract: slot out of range");
  if (slot_a == slot_b) throw std::invalid_argument("contract: slots must differ");
  const Slot ka = t.valence()[static_cast<std::size_t>(slot_a)];
  const Slot kb = t.valence()[static_cast<std::size_t>(slot_b)];

  // Pairing weight w(p, q): delta for mixed slots, g or g^-1 for same-kind ones.
  Tensor weight;
  bool mixed = (ka != kb);
  if (!mixed) {
    if (metric == nullptr) throw std::invalid_argument("contract: metric required for same-kind slots");
    weight = (ka == Slot::Lower) ? invert_metric(*metric) : *metric;
  }

  std::vector<Slot> out_valence;
  for (int s = 0; s < r; ++s)
    if (s != slot_a && s != slot_b) out_valence.push_back(t.valence()[static_cast<std::size_t>(s)]);
  Tensor out(t.dim(), out_valence);

  const int dim = t.dim();
  std::vector<int> full(static_cast<std::size_t>(r), 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const std::vector<int> out_idx = out.unflatten(flat);
    std::size_t oi = 0;
    for (int s = 0; s < r; ++s)
      if (s != slot_a && s != slot_b) full[static_cast<std::size_t>(s)] = out_idx[oi++];
    Rat sum(0);
    for (int p = 0; p < dim; ++p) {
      if (mixed) {
        full[static_cast<std::size_t>(slot_a)] = p;
        full[static_cast<std::size_t>(slot_b)] = p;
        sum += t.at(full);
      } else {
        for (int q = 0; q < dim; ++q) {
          const Rat& w = weight.at({p, q});
          if (w.is_zero()) continue;
          full[static_cast<std::size_t>(slot_a)] = p;
          full[static_cast<std::size_t>(slot_b)] = q;
          sum += w * t.at(full);
        }
      }
    }
    out.flat(flat) = sum;
  }
  return out;
}

}  // namespace framegeo
