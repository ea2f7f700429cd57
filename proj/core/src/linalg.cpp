#include "fiberscope/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fiberscope {

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntegerMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw ValidationError("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& e : data_)
    if (e != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("matrix product: inner dimensions disagree");
  IntegerMatrix out(rows_, rhs.cols_);
  Int acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        acc = a * rhs.at(k, j);
        out.at(i, j) += acc;
      }
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("matrix sum: shapes disagree");
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("matrix difference: shapes disagree");
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

IntegerMatrix IntegerMatrix::pow(const Int& k) const {
  if (!is_square()) throw ValidationError("pow: matrix must be square");
  if (k < 0) throw ValidationError("pow: negative exponent");
  IntegerMatrix result = identity(rows_);
  IntegerMatrix base = *this;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows())
    throw ValidationError("hstack: row counts disagree");
  IntegerMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

IntegerMatrix hstack(const std::vector<IntegerMatrix>& mats,
                     std::size_t rows_hint) {
  std::size_t cols = 0;
  for (const auto& m : mats) cols += m.cols();
  IntegerMatrix out(rows_hint, cols);
  std::size_t off = 0;
  for (const auto& m : mats) {
    if (m.rows() != rows_hint)
      throw ValidationError("hstack: row counts disagree");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out.at(i, off + j) = m.at(i, j);
    off += m.cols();
  }
  return out;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols())
    throw ValidationError("vstack: column counts disagree");
  IntegerMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

IntegerMatrix vstack(const std::vector<IntegerMatrix>& mats,
                     std::size_t cols_hint) {
  std::size_t rows = 0;
  for (const auto& m : mats) rows += m.rows();
  IntegerMatrix out(rows, cols_hint);
  std::size_t off = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols_hint)
      throw ValidationError("vstack: column counts disagree");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out.at(off + i, j) = m.at(i, j);
    off += m.rows();
  }
  return out;
}

}  // namespace fiberscope

namespace fiberscope::linalg {

namespace {

struct SnfState {
  IntegerMatrix U, D, V;

  void row_swap(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < D.cols(); ++c) D.at(i, c) -= q * D.at(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(j, c);
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < D.rows(); ++r) D.at(r, i) -= q * D.at(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, i) -= q * V.at(r, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
  }
  // rows (i, j) <- (x*row_i + y*row_j, u*row_i + v*row_j); needs xv - yu = 1
  void row_pair(std::size_t i, std::size_t j, const Int& x, const Int& y,
                const Int& u, const Int& v) {
    for (std::size_t c = 0; c < D.cols(); ++c) {
      Int a = D.at(i, c), b = D.at(j, c);
      D.at(i, c) = x * a + y * b;
      D.at(j, c) = u * a + v * b;
    }
    for (std::size_t c = 0; c < U.cols(); ++c) {
      Int a = U.at(i, c), b = U.at(j, c);
      U.at(i, c) = x * a + y * b;
      U.at(j, c) = u * a + v * b;
    }
  }
};

// Smallest nonzero |entry| in D[s.., s..]; first hit in row-major order wins
// so the decomposition is reproducible.
bool find_pivot(const IntegerMatrix& d, std::size_t s, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = s; i < d.rows(); ++i) {
    for (std::size_t j = s; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SnfState st{IntegerMatrix::identity(a.rows()), a,
              IntegerMatrix::identity(a.cols())};
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pi = s, pj = s;
    if (!find_pivot(st.D, s, pi, pj)) break;
    st.row_swap(s, pi);
    st.col_swap(s, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < st.D.rows(); ++i) {
        if (st.D.at(i, s) == 0) continue;
        Int q = st.D.at(i, s) / st.D.at(s, s);  // truncated division
        st.row_sub(i, s, q);
        if (st.D.at(i, s) != 0) {
          // remainder smaller than pivot: promote it
          st.row_swap(s, i);
          clean = false;
        }
      }
      for (std::size_t j = s + 1; j < st.D.cols(); ++j) {
        if (st.D.at(s, j) == 0) continue;
        Int q = st.D.at(s, j) / st.D.at(s, s);
        st.col_sub(j, s, q);
        if (st.D.at(s, j) != 0) {
          st.col_swap(s, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // pivot row/col are clear; force pivot to divide the rest of the block
      bool divides = true;
      for (std::size_t i = s + 1; i < st.D.rows() && divides; ++i)
        for (std::size_t j = s + 1; j < st.D.cols() && divides; ++j)
          if (st.D.at(i, j) % st.D.at(s, s) != 0) {
            st.row_sub(s, i, Int(-1));  // row_s += row_i, then re-eliminate
            divides = false;
          }
      if (divides) break;
    }
  }

  // signs
  for (std::size_t s = 0; s < n; ++s)
    if (st.D.at(s, s) < 0) st.row_negate(s);

  // divisibility chain among the nonzero diagonal entries
  std::size_t rank = 0;
  while (rank < n && st.D.at(rank, rank) != 0) ++rank;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < rank; ++i) {
      const Int &di = st.D.at(i, i), &dj = st.D.at(i + 1, i + 1);
      if (dj % di == 0) continue;
      changed = true;
      // place d_{i+1} below d_i in column i, then 2x2-reduce
      st.col_sub(i, i + 1, Int(-1));  // col_i += col_{i+1}
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), di.get_mpz_t(),
                 dj.get_mpz_t());
      Int u = -dj / g, v = di / g;
      st.row_pair(i, i + 1, x, y, u, v);
      // now D[i][i] = g, D[i][i+1] = y*dj, D[i+1][i+1] = lcm
      Int q = st.D.at(i, i + 1) / g;
      st.col_sub(i + 1, i, q);
      if (st.D.at(i + 1, i + 1) < 0) st.row_negate(i + 1);
    }
  }

  SmithDecomposition out{std::move(st.U), std::move(st.D), std::move(st.V),
                         {}};
  for (std::size_t s = 0; s < n; ++s)
    if (out.D.at(s, s) != 0) out.invariant_factors.push_back(out.D.at(s, s));
  return out;
}

AbelianInvariants cokernel_invariants(const IntegerMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  AbelianInvariants inv;
  inv.free_rank = a.rows() - snf.invariant_factors.size();
  for (const Int& d : snf.invariant_factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

namespace {

// Fraction-free elimination; returns rank, and the determinant of square
// input through `det` when requested.
std::size_t bareiss(IntegerMatrix m, Int* det) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Int prev(1);
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      m.swap_rows(piv, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  if (det) {
    if (rows != cols) throw ValidationError("determinant: matrix not square");
    *det = rank < rows ? Int(0) : Int(sign * prev);
  }
  return rank;
}

}  // namespace

std::size_t rank_q(const IntegerMatrix& a) { return bareiss(a, nullptr); }

Int determinant(const IntegerMatrix& a) {
  if (a.rows() == 0) return Int(1);
  Int det;
  bareiss(a, &det);
  return det;
}

namespace {

std::size_t check_square_same(const std::vector<IntegerMatrix>& mats) {
  if (mats.empty())
    throw ValidationError("coinvariant/invariant rank: empty matrix list");
  std::size_t n = mats.front().rows();
  for (const auto& m : mats)
    if (!m.is_square() || m.rows() != n)
      throw ValidationError(
          "coinvariant/invariant rank: matrices must be square of equal size");
  return n;
}

}  // namespace

std::size_t coinvariant_rank(const std::vector<IntegerMatrix>& mats) {
  std::size_t n = check_square_same(mats);
  std::vector<IntegerMatrix> blocks;
  blocks.reserve(mats.size());
  const IntegerMatrix id = IntegerMatrix::identity(n);
  for (const auto& m : mats) blocks.push_back(m - id);
  return n - rank_q(hstack(blocks, n));
}

std::size_t invariant_rank(const std::vector<IntegerMatrix>& mats) {
  std::size_t n = check_square_same(mats);
  std::vector<IntegerMatrix> blocks;
  blocks.reserve(mats.size());
  const IntegerMatrix id = IntegerMatrix::identity(n);
  for (const auto& m : mats) blocks.push_back(m - id);
  return n - rank_q(vstack(blocks, n));
}

// --- polynomials over Z, low degree first ---------------------------------

namespace {

using Poly = std::vector<Int>;

void normalize(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor; returns false if not divisible
bool divide_monic(const Poly& num, const Poly& den, Poly& quot) {
  if (den.empty() || den.back() != 1)
    throw ValidationError("divide_monic: divisor must be monic");
  if (num.size() < den.size()) {
    Poly r = num;
    normalize(r);
    return r.size() == 1 && r[0] == 0;
  }
  Poly rem = num;
  quot.assign(num.size() - den.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      rem[k + j] -= c * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) return false;
  return true;
}

// x^d - 1
Poly x_pow_minus_one(unsigned long d) {
  Poly p(d + 1, Int(0));
  p[0] = -1;
  p[d] = 1;
  return p;
}

// Cyclotomic polynomials Phi_d for every d with phi(d) <= max_degree.
std::map<unsigned long, Poly> cyclotomics_up_to_degree(
    std::size_t max_degree) {
  if (max_degree == 0) return {};
  // phi(d) >= sqrt(d/2) for all d >= 1, so phi(d) <= n forces d <= 2n^2.
  unsigned long bound = 2 * static_cast<unsigned long>(max_degree) *
                            static_cast<unsigned long>(max_degree) +
                        1;
  std::vector<unsigned long> phi(bound + 1);
  for (unsigned long i = 0; i <= bound; ++i) phi[i] = i;
  for (unsigned long p = 2; p <= bound; ++p) {
    if (phi[p] != p) continue;  // not prime
    for (unsigned long k = p; k <= bound; k += p) phi[k] -= phi[k] / p;
  }
  std::map<unsigned long, Poly> table;
  for (unsigned long d = 1; d <= bound; ++d) {
    if (phi[d] > max_degree) continue;
    Poly num = x_pow_minus_one(d);
    for (auto& [e, pe] : table) {
      if (d % e != 0) continue;
      Poly q;
      if (!divide_monic(num, pe, q))
        throw Error("cyclotomic table: internal division failure");
      num = std::move(q);
    }
    normalize(num);
    table[d] = std::move(num);
  }
  return table;
}

}  // namespace

std::vector<Int> characteristic_polynomial(const IntegerMatrix& a) {
  if (!a.is_square())
    throw ValidationError("characteristic_polynomial: matrix not square");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: exact over Z, the divisions are integral.
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Int tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    Int ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(),
                    static_cast<unsigned long>(k));
    ck = -ck;
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return c;
}

CyclotomicSplit split_cyclotomic(const std::vector<Int>& poly) {
  Poly p = poly;
  normalize(p);
  if (p.empty() || p.back() != 1)
    throw ValidationError("split_cyclotomic: polynomial must be monic");
  CyclotomicSplit out;
  std::size_t deg = p.size() - 1;
  auto table = cyclotomics_up_to_degree(deg);
  for (const auto& [d, phi_d] : table) {
    for (;;) {
      Poly q;
      if (p.size() < phi_d.size() || !divide_monic(p, phi_d, q)) break;
      normalize(q);
      p = std::move(q);
      Int dd(static_cast<unsigned long>(d));
      mpz_lcm(out.order_lcm.get_mpz_t(), out.order_lcm.get_mpz_t(),
              dd.get_mpz_t());
    }
  }
  out.residual = p;
  out.all_cyclotomic = (p.size() == 1 && p[0] == 1);
  return out;
}

MatrixOrder matrix_order(const IntegerMatrix& a, const Int& cap) {
  if (!a.is_square())
    throw ValidationError("matrix_order: matrix not square");
  MatrixOrder result;
  if (a.rows() == 0 || a.is_identity()) {
    result.kind = cap >= 1 ? MatrixOrder::Kind::Finite
                           : MatrixOrder::Kind::Unknown;
    result.order = 1;
    return result;
  }

  auto split = split_cyclotomic(characteristic_polynomial(a));
  if (!split.all_cyclotomic) {
    result.kind = MatrixOrder::Kind::Infinite;
    result.certificate =
        "characteristic polynomial has a non-cyclotomic factor";
    return result;
  }

  const Int n = split.order_lcm;
  if (!a.pow(n).is_identity()) {
    // all eigenvalues are roots of unity of order dividing n, so A^n is
    // unipotent; A^n != I certifies infinite order
    result.kind = MatrixOrder::Kind::Infinite;
    result.certificate = "power A^" + n.get_str() +
                         " is unipotent and not the identity";
    return result;
  }

  // order divides n: strip prime factors
  Int order = n;
  Int rest = n;
  for (Int p(2); rest > 1;) {
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      while (order % p == 0 && a.pow(order / p).is_identity()) order /= p;
    }
    p += (p == 2) ? 1 : 2;
    if (p * p > rest && rest > 1) {
      while (order % rest == 0 && a.pow(order / rest).is_identity())
        order /= rest;
      break;
    }
  }
  if (order <= cap) {
    result.kind = MatrixOrder::Kind::Finite;
    result.order = order;
  } else {
    result.kind = MatrixOrder::Kind::Unknown;
  }
  return result;
}

}  // namespace fiberscope::linalg
