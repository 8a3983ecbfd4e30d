#include "rcx/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "rcx/error.hpp"

namespace rcx {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::size_t kMaxExactFaces = 2000;

struct OverflowSignal {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw OverflowSignal{};
  return out;
}

BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t abs_value(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw OverflowSignal{};
  return x < 0 ? -x : x;
}

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

template <typename Int>
class Elimination {
 public:
  Elimination(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), a_(std::move(data)) {}

  std::vector<Int> run() {
    std::vector<Int> diag;
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (at(i, t) == 0) continue;
          Int q = at(i, t) / at(t, t);
          if (q != 0)
            for (std::size_t j = t; j < cols_; ++j) at(i, j) = sub_mul(at(i, j), q, at(t, j));
          if (at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (at(t, j) == 0) continue;
          Int q = at(t, j) / at(t, t);
          if (q != 0)
            for (std::size_t i = t; i < rows_; ++i) at(i, j) = sub_mul(at(i, j), q, at(i, t));
          if (at(t, j) != 0) clean = false;
        }
        if (clean) break;
        move_smallest_in_cross(t);
      }
      diag.push_back(abs_value(at(t, t)));
    }
    // Enforce the divisibility chain: (x, y) -> (gcd, lcm) keeps the group.
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    return diag;
  }

 private:
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  static Int gcd(Int x, Int y) {
    while (y != 0) {
      Int r = x % y;
      x = y;
      y = r;
    }
    return x;
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r1, j), at(r2, j));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, c1), at(i, c2));
  }

  // Moves the entry of smallest nonzero absolute value in the trailing block
  // to (t, t). Returns false if the block is zero.
  bool move_smallest_to(std::size_t t) {
    bool found = false;
    Int best = 0;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows_ && !(found && best == 1); ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Int& x = a_[i * cols_ + j];
        if (x == 0) continue;
        Int ax = abs_value(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Remainders are left in row t / column t; bring the smallest to the pivot.
  void move_smallest_in_cross(std::size_t t) {
    Int best = abs_value(at(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (at(i, t) != 0 && abs_value(at(i, t)) < best) {
        best = abs_value(at(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (at(t, j) != 0 && abs_value(at(t, j)) < best) {
        best = abs_value(at(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> a_;
};

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::InvalidParameter, "matrix shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

BoundaryMatrices boundary_matrices(const Complex2& s) {
  BoundaryMatrices bm;
  bm.d2 = IntMatrix(s.num_edges(), s.num_faces());
  for (std::size_t f = 0; f < s.num_faces(); ++f) {
    // d[a,b,c] = [b,c] - [a,c] + [a,b]; edges_of_face is ({a,b}, {a,c}, {b,c}).
    const auto& fe = s.edges_of_face(f);
    bm.d2(fe[0], f) = 1;
    bm.d2(fe[1], f) = -1;
    bm.d2(fe[2], f) = 1;
  }
  bm.d1 = IntMatrix(s.num_vertices(), s.num_edges());
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const Edge& edge = s.edges()[e];
    bm.d1(*s.vertex_index(edge.a), e) = -1;
    bm.d1(*s.vertex_index(edge.b), e) = 1;
  }
  return bm;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  try {
    out.invariant_factors = Elimination<std::int64_t>(m.rows, m.cols, m.data).run();
  } catch (const OverflowSignal&) {
    std::vector<BigInt> big(m.data.begin(), m.data.end());
    auto diag = Elimination<BigInt>(m.rows, m.cols, std::move(big)).run();
    out.invariant_factors.clear();
    for (const BigInt& d : diag) {
      if (d > std::numeric_limits<std::int64_t>::max())
        throw Error(ErrorCode::Overflow, "invariant factor exceeds 64 bits");
      out.invariant_factors.push_back(static_cast<std::int64_t>(d));
    }
  }
  out.rank = out.invariant_factors.size();
  return out;
}

std::size_t rank_mod2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m(i, j) % 2 != 0) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < m.rows; ++i)
      if (i != rank && (rows[i][w] & bit))
        for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

HomologyProfile homology_profile(const Complex2& s) {
  if (s.num_faces() > kMaxExactFaces)
    throw Error(ErrorCode::TooLargeForOracle,
                "exact homology is limited to " + std::to_string(kMaxExactFaces) + " faces");
  const auto bm = boundary_matrices(s);
  const auto snf1 = smith_normal_form(bm.d1);
  const auto snf2 = smith_normal_form(bm.d2);
  const auto v = static_cast<std::int64_t>(s.num_vertices());
  const auto e = static_cast<std::int64_t>(s.num_edges());
  const auto f = static_cast<std::int64_t>(s.num_faces());
  const auto r1 = static_cast<std::int64_t>(snf1.rank);
  const auto r2 = static_cast<std::int64_t>(snf2.rank);
  const auto q1 = static_cast<std::int64_t>(rank_mod2(bm.d1));
  const auto q2 = static_cast<std::int64_t>(rank_mod2(bm.d2));

  HomologyProfile h;
  h.b0 = v - r1;
  h.b1 = e - r1 - r2;
  h.b2 = f - r2;
  h.b0_mod2 = v - q1;
  h.b1_mod2 = e - q1 - q2;
  h.b2_mod2 = f - q2;
  for (std::int64_t d : snf2.invariant_factors)
    if (d >= 2) h.torsion_h1.push_back(d);
  h.chi = euler_characteristic(s);
  return h;
}

bool is_orientable_closed_surface(const Complex2& s) {
  if (!classify(s).pseudo_surface || !is_closed_surface_combinatorially(s))
    throw Error(ErrorCode::NotAClosedSurface, "complex is not a connected closed surface");
  const auto bm = boundary_matrices(s);
  const auto r2 = smith_normal_form(bm.d2).rank;
  return s.num_faces() - r2 == 1;
}

}  // namespace rcx
