#include "framegeo/connection.hpp"

namespace framegeo {

std::vector<Rat> Connection::derive(int i, std::span<const Rat> v) const {
  const int n = gamma.dim();
  std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
  for (int j = 0; j < n; ++j) {
    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(j)] * gamma.at({k, i, j});
  }
  return out;
}

Connection levi_civita(const FrameManifold& m) {
  const int n = m.dim;
  const Tensor ginv = invert_metric(m.g);
  // g(e_a, [e_b, e_c])
  const auto g_bracket = [&](int a, int b, int c) {
    Rat sum(0);
    for (int mm = 0; mm < n; ++mm) sum += m.g.at({a, mm}) * m.c.at({mm, b, c});
    return sum;
  };
  Connection conn{Tensor(n, {Slot::Upper, Slot::Lower, Slot::Lower})};
  const Rat half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> rhs(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        rhs[static_cast<std::size_t>(k)] = -g_bracket(i, j, k) - g_bracket(j, i, k) + g_bracket(k, i, j);
      for (int l = 0; l < n; ++l) {
        Rat sum(0);
        for (int k = 0; k < n; ++k) sum += ginv.at({l, k}) * rhs[static_cast<std::size_t>(k)];
        conn.gamma.at({l, i, j}) = half * sum;
      }
    }
  return conn;
}

}  // namespace framegeo
