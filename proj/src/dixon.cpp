// Dixon's character table algorithm over a prime field.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fsind/character.hpp"

namespace fsind {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 generator_mod(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

// Everything the eigenvector search needs, reduced mod p.
struct Field {
  u64 p;
  u64 omega;  // primitive e-th root of unity
};

Field choose_field(u64 exponent, u64 order) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  u64 p = exponent + 1;
  while (static_cast<double>(p) <= bound || !is_prime(p)) p += exponent;
  const u64 g = p == 2 ? 1 : generator_mod(p);
  return {p, pow_mod(g, (p - 1) / exponent, p)};
}

// Characteristic polynomial (lowest degree first) via Hessenberg reduction.
Vec char_poly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const u64 inv = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const u64 u = h[i][m - 1] * inv % p;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - u * h[m][j] % p) % p;
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + u * h[j][i]) % p;
    }
  }
  // polys[k] is the char poly of the leading k x k block.
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    const Vec& prev = polys[k - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      next[t + 1] = (next[t + 1] + prev[t]) % p;
      next[t] = (next[t] + p - h[k - 1][k - 1] * prev[t] % p) % p;
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = prod * h[i + 1][i] % p;
      if (prod == 0) break;
      const u64 coef = h[i][k - 1] * prod % p;
      for (std::size_t t = 0; t < polys[i].size(); ++t) {
        next[t] = (next[t] + p - coef * polys[i][t] % p) % p;
      }
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

// Basis of the null space of m (rows x cols), as vectors of length cols.
std::vector<Vec> null_space(Mat m, u64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Subspace of F_p^r in reduced row echelon form; pivots[i] is the pivot
// coordinate of vectors[i].
struct Subspace {
  std::vector<Vec> vectors;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<Vec> vs, u64 p) {
  Subspace out;
  const std::size_t dim = vs.empty() ? 0 : vs[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < vs.size(); ++c) {
    std::size_t piv = r;
    while (piv < vs.size() && vs[piv][c] == 0) ++piv;
    if (piv == vs.size()) continue;
    std::swap(vs[piv], vs[r]);
    const u64 inv = inv_mod(vs[r][c], p);
    for (auto& x : vs[r]) x = x * inv % p;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == r || vs[i][c] == 0) continue;
      const u64 f = vs[i][c];
      for (std::size_t j = 0; j < dim; ++j) vs[i][j] = (vs[i][j] + p - f * vs[r][j] % p) % p;
    }
    out.pivots.push_back(c);
    ++r;
  }
  vs.resize(r);
  out.vectors = std::move(vs);
  return out;
}

class Dixon {
 public:
  Dixon(const ClassDataPtr& classes, const TableOptions& options)
      : cd_(*classes), classes_(classes), options_(options), rng_(options.seed) {
    r_ = cd_.num_classes();
    field_ = choose_field(cd_.exponent(), cd_.group_order());
    build_class_matrices();
  }

  CharacterTable run() {
    const u64 p = field_.p;
    std::vector<Subspace> done;
    std::vector<Subspace> pending;
    {
      std::vector<Vec> full(r_, Vec(r_, 0));
      for (std::size_t i = 0; i < r_; ++i) full[i][i] = 1;
      pending.push_back(echelon(std::move(full), p));
    }
    int attempts = 0;
    while (!pending.empty()) {
      std::vector<Subspace> next;
      for (auto& space : pending) {
        if (space.vectors.size() == 1) {
          done.push_back(std::move(space));
          continue;
        }
        auto parts = split(space);
        for (auto& part : parts) next.push_back(std::move(part));
      }
      pending = std::move(next);
      if (!pending.empty() && ++attempts > options_.max_attempts) {
        throw ConsistencyError("character table: eigenspaces did not split");
      }
    }
    if (done.size() != r_) throw ConsistencyError("character table: wrong number of eigenvectors");

    std::vector<Character> rows;
    rows.reserve(r_);
    for (const auto& space : done) rows.push_back(lift(space.vectors[0]));
    std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
      const auto da = a.degree(), db = b.degree();
      const bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb) return ta;
      if (da != db) return da < db;
      return a.values() < b.values();
    });
    return CharacterTable(classes_, std::move(rows));
  }

 private:
  static bool is_trivial(const Character& chi) {
    return std::all_of(chi.values().begin(), chi.values().end(),
                       [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  }

  // c[j][k][l] = #{x in C_j : x^-1 z_l in C_k}, z_l the rep of C_l.
  void build_class_matrices() {
    const u64 p = field_.p;
    const PermGroup& g = cd_.group();
    const auto& elements = g.elements(options_.limits);
    c_.assign(r_, Mat(r_, Vec(r_, 0)));
    std::vector<Permutation> inverses;
    inverses.reserve(elements.size());
    for (const auto& x : elements) inverses.push_back(x.inverse());
    for (std::size_t l = 0; l < r_; ++l) {
      const Permutation& z = cd_.reps()[l];
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const std::size_t j = cd_.class_of_element(i);
        const std::size_t k = cd_.class_of_element(*g.index_of(inverses[i] * z));
        ++c_[j][k][l];
      }
    }
    for (auto& a : c_) {
      for (auto& row : a) {
        for (auto& x : row) x %= p;
      }
    }
  }

  // Splits an invariant subspace by the eigenspaces of a random combination
  // of class matrices; returns the space unchanged if it did not split.
  std::vector<Subspace> split(const Subspace& space) {
    const u64 p = field_.p;
    const std::size_t d = space.vectors.size();
    Mat combo(r_, Vec(r_, 0));
    for (std::size_t j = 0; j < r_; ++j) {
      const u64 a = rng_() % p;
      if (a == 0) continue;
      for (std::size_t k = 0; k < r_; ++k) {
        for (std::size_t l = 0; l < r_; ++l) combo[k][l] = (combo[k][l] + a * c_[j][k][l]) % p;
      }
    }
    // Matrix of the combination in the basis of the subspace.
    Mat restricted(d, Vec(d, 0));
    for (std::size_t b = 0; b < d; ++b) {
      const Vec& w = space.vectors[b];
      for (std::size_t a = 0; a < d; ++a) {
        const Vec& row = combo[space.pivots[a]];
        u64 sum = 0;
        for (std::size_t l = 0; l < r_; ++l) sum = (sum + row[l] * w[l]) % p;
        restricted[a][b] = sum;
      }
    }
    const Vec poly = char_poly(restricted, p);
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (u64 lambda = 0; lambda < p && total < d; ++lambda) {
      u64 value = 0;
      for (std::size_t t = poly.size(); t-- > 0;) value = (value * lambda + poly[t]) % p;
      if (value != 0) continue;
      Mat shifted = restricted;
      for (std::size_t a = 0; a < d; ++a) shifted[a][a] = (shifted[a][a] + p - lambda) % p;
      auto kernel = null_space(std::move(shifted), p);
      std::vector<Vec> vs;
      for (const auto& coords : kernel) {
        Vec v(r_, 0);
        for (std::size_t b = 0; b < d; ++b) {
          if (coords[b] == 0) continue;
          for (std::size_t i = 0; i < r_; ++i) v[i] = (v[i] + coords[b] * space.vectors[b][i]) % p;
        }
        vs.push_back(std::move(v));
      }
      total += vs.size();
      parts.push_back(echelon(std::move(vs), p));
    }
    // The class algebra is split semisimple mod p, so the combination must be
    // diagonalizable; anything else is a bug, not bad luck.
    if (total != d) throw ConsistencyError("character table: class matrix not diagonalizable mod p");
    return parts;
  }

  Character lift(Vec v) const {
    const u64 p = field_.p;
    const u64 e = cd_.exponent();
    if (v[0] == 0) throw ConsistencyError("character table: eigenvector vanishes at the identity");
    const u64 inv0 = inv_mod(v[0], p);
    for (auto& x : v) x = x * inv0 % p;
    // chi(1)^2 = |G| / sum_j v_j v_j' / |C_j|.
    u64 s = 0;
    for (std::size_t j = 0; j < r_; ++j) {
      const u64 size = cd_.sizes()[j] % p;
      s = (s + v[j] * v[cd_.inverse_class(j)] % p * inv_mod(size, p)) % p;
    }
    if (s == 0) throw ConsistencyError("character table: degenerate norm");
    const u64 target = cd_.group_order() % p * inv_mod(s, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d * d <= cd_.group_order(); ++d) {
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw ConsistencyError("character table: no admissible degree");
    Vec theta(r_);
    for (std::size_t j = 0; j < r_; ++j) {
      theta[j] = v[j] * (degree % p) % p * inv_mod(cd_.sizes()[j] % p, p) % p;
    }

    std::vector<Cyclotomic> values;
    values.reserve(r_);
    for (std::size_t k = 0; k < r_; ++k) {
      const u64 o = cd_.rep_order(k);
      const u64 w = pow_mod(field_.omega, e / o, p);
      const u64 w_inv = inv_mod(w, p);
      const u64 o_inv = inv_mod(o % p, p);
      std::vector<long long> mult(o);
      long long total = 0;
      for (u64 i = 0; i < o; ++i) {
        // m_i = (1/o) sum_l theta(g^l) w^(-il).
        u64 acc = 0;
        const u64 step = pow_mod(w_inv, i, p);
        u64 root = 1;
        for (u64 l = 0; l < o; ++l) {
          acc = (acc + theta[cd_.power_map(k, static_cast<long long>(l))] * root) % p;
          root = root * step % p;
        }
        acc = acc * o_inv % p;
        if (acc > degree) throw ConsistencyError("character table: eigenvalue multiplicity out of range");
        mult[i] = static_cast<long long>(acc);
        total += mult[i];
      }
      if (total != static_cast<long long>(degree)) {
        throw ConsistencyError("character table: multiplicities do not sum to the degree");
      }
      values.push_back(Cyclotomic::from_exponents(o, std::span<const long long>(mult)));
    }
    return Character(classes_, std::move(values));
  }

  const ClassData& cd_;
  ClassDataPtr classes_;
  TableOptions options_;
  std::mt19937_64 rng_;
  std::size_t r_ = 0;
  Field field_{};
  std::vector<Mat> c_;
};

}  // namespace

CharacterTable character_table(const ClassDataPtr& classes, const TableOptions& options) {
  return Dixon(classes, options).run();
}

CharacterTable character_table(const PermGroup& group, const TableOptions& options) {
  return character_table(ClassData::compute(group, options.limits), options);
}

}  // namespace fsind
