#include "gauge_torsion/matfp.hpp"

#include <algorithm>
#include <sstream>

#include "gauge_torsion/errors.hpp"

namespace gauge {

  namespace {

    void check_dim(std::size_t n)
    {
      if (n < 2)
        throw DomainError("matrix dimension must be >= 2, got " + std::to_string(n));
    }

    std::string render_rows(const std::vector<std::vector<std::string>>& cells)
    {
      std::size_t width = 0;
      for (const auto& row : cells)
        for (const auto& c : row)
          width = std::max(width, c.size());
      std::ostringstream os;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
          if (j)
            os << ' ';
          os << std::string(width - cells[i][j].size(), ' ') << cells[i][j];
        }
        os << ']';
        if (i + 1 < cells.size())
          os << '\n';
      }
      return os.str();
    }

    std::string render_inline(const std::vector<std::vector<std::string>>& cells)
    {
      std::string s = "[";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
          s += ',';
        s += '[';
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
          if (j)
            s += ',';
          s += cells[i][j];
        }
        s += ']';
      }
      return s + ']';
    }

  } // namespace

  IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n)
  {
    check_dim(n);
  }

  IntMatrix IntMatrix::identity(std::size_t n)
  {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  bool IntMatrix::is_upper_triangular() const
  {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != 0)
          return false;
    return true;
  }

  bool IntMatrix::is_lower_triangular() const
  {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != 0)
          return false;
    return true;
  }

  std::vector<std::vector<std::string>> IntMatrix::to_strings() const
  {
    std::vector<std::vector<std::string>> cells(n_, std::vector<std::string>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        cells[i][j] = (*this)(i, j).get_str();
    return cells;
  }

  std::string IntMatrix::to_text() const
  {
    return render_rows(to_strings());
  }

  std::string IntMatrix::to_inline() const
  {
    return render_inline(to_strings());
  }

  FpMatrix::FpMatrix(std::size_t n, Prime p) : n_(n), p_(p), entries_(n * n, FpScalar::zero(p))
  {
    check_dim(n);
  }

  FpMatrix FpMatrix::identity(std::size_t n, Prime p)
  {
    FpMatrix m(n, p);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = FpScalar::one(p);
    return m;
  }

  bool FpMatrix::is_identity() const
  {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j).residue() != (i == j ? 1u : 0u))
          return false;
    return true;
  }

  FpMatrix FpMatrix::pow(std::uint64_t e) const
  {
    FpMatrix result = identity(n_, p_);
    FpMatrix base = *this;
    while (e) {
      if (e & 1)
        result = mat_mul(result, base);
      e >>= 1;
      if (e)
        base = mat_mul(base, base);
    }
    return result;
  }

  FpScalar FpMatrix::determinant() const
  {
    FpMatrix work = *this;
    FpScalar det = FpScalar::one(p_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && work(pivot, col).is_zero())
        ++pivot;
      if (pivot == n_)
        return FpScalar::zero(p_);
      if (pivot != col) {
        for (std::size_t j = 0; j < n_; ++j)
          std::swap(work(pivot, j), work(col, j));
        det = -det;
      }
      det *= work(col, col);
      const FpScalar inv = work(col, col).inverse();
      for (std::size_t i = col + 1; i < n_; ++i) {
        if (work(i, col).is_zero())
          continue;
        const FpScalar factor = work(i, col) * inv;
        for (std::size_t j = col; j < n_; ++j)
          work(i, j) -= factor * work(col, j);
      }
    }
    return det;
  }

  bool operator==(const FpMatrix& a, const FpMatrix& b)
  {
    if (a.n_ != b.n_ || a.p_ != b.p_)
      return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (a.entries_[k].residue() != b.entries_[k].residue())
        return false;
    return true;
  }

  std::vector<std::vector<std::string>> FpMatrix::to_strings() const
  {
    std::vector<std::vector<std::string>> cells(n_, std::vector<std::string>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        cells[i][j] = std::to_string((*this)(i, j).residue());
    return cells;
  }

  std::string FpMatrix::to_text() const
  {
    return render_rows(to_strings());
  }

  std::string FpMatrix::to_inline() const
  {
    return render_inline(to_strings());
  }

  IntMatrix build_B(std::size_t n)
  {
    IntMatrix b(n);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t j = 1; j <= n; ++j) {
      mpz_class c = binom_int(sn, static_cast<std::int64_t>(j));
      b(0, j - 1) = (j % 2 == 1) ? c : mpz_class(-c);
    }
    for (std::size_t i = 1; i < n; ++i)
      b(i, i - 1) = 1;
    return b;
  }

  IntMatrix build_A(std::size_t n)
  {
    IntMatrix a(n);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        a(i - 1, j - 1) = binom_int(sn - static_cast<std::int64_t>(i), sn - static_cast<std::int64_t>(j));
    return a;
  }

  IntMatrix build_D(std::size_t n)
  {
    IntMatrix d = IntMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i)
      d(i, i - 1) = 1;
    return d;
  }

  IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y)
  {
    if (x.dim() != y.dim())
      throw StructuralError("matrix dimension mismatch");
    const std::size_t n = x.dim();
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (x(i, l) == 0)
          continue;
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) += x(i, l) * y(l, j);
      }
    return out;
  }

  FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y)
  {
    if (x.dim() != y.dim())
      throw StructuralError("matrix dimension mismatch");
    if (x.prime() != y.prime())
      throw StructuralError("matrix modulus mismatch");
    const std::size_t n = x.dim();
    const std::uint64_t p = x.prime();
    std::vector<std::uint64_t> acc(n);
    FpMatrix out(n, x.prime());
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t l = 0; l < n; ++l) {
        const std::uint64_t a = x(i, l).residue();
        if (a == 0)
          continue;
        for (std::size_t j = 0; j < n; ++j)
          acc[j] = (acc[j] + a * y(l, j).residue()) % p;
      }
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) = FpScalar(static_cast<std::int64_t>(acc[j]), x.prime());
    }
    return out;
  }

  FpMatrix mat_reduce(const IntMatrix& x, Prime p)
  {
    FpMatrix out(x.dim(), p);
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j)
        out(i, j) = FpScalar(x(i, j), p);
    return out;
  }

  IntMatrix mat_inv_unitriangular(const IntMatrix& x)
  {
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i < n; ++i)
      if (x(i, i) != 1)
        throw PreconditionError("inverse requires a unit diagonal");
    const bool upper = x.is_upper_triangular();
    if (!upper && !x.is_lower_triangular())
      throw PreconditionError("inverse requires a triangular matrix");

    // Solve X Y = I column by column with back (or forward) substitution.
    IntMatrix y(n);
    for (std::size_t col = 0; col < n; ++col) {
      if (upper) {
        for (std::size_t ii = n; ii-- > 0;) {
          mpz_class s = (ii == col) ? 1 : 0;
          for (std::size_t l = ii + 1; l < n; ++l)
            s -= x(ii, l) * y(l, col);
          y(ii, col) = s;
        }
      } else {
        for (std::size_t ii = 0; ii < n; ++ii) {
          mpz_class s = (ii == col) ? 1 : 0;
          for (std::size_t l = 0; l < ii; ++l)
            s -= x(ii, l) * y(l, col);
          y(ii, col) = s;
        }
      }
    }
    return y;
  }

  mpz_class determinant(const IntMatrix& x)
  {
    const std::size_t n = x.dim();
    IntMatrix m = x;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t swap_row = k + 1;
        while (swap_row < n && m(swap_row, k) == 0)
          ++swap_row;
        if (swap_row == n)
          return 0;
        for (std::size_t j = 0; j < n; ++j)
          std::swap(m(k, j), m(swap_row, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          m(i, j) = v;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  ConjugationCheck verify_conjugation(std::size_t n)
  {
    const IntMatrix b = build_B(n);
    const IntMatrix a = build_A(n);
    const IntMatrix d = build_D(n);
    IntMatrix ba = mat_mul(b, a);
    IntMatrix ad = mat_mul(a, d);
    IntMatrix conj = mat_mul(mat_inv_unitriangular(a), ba);

    bool binomials = true;
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t i = 1; i <= n && binomials; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (ba(i - 1, j - 1) != binom_int(sn - static_cast<std::int64_t>(i) + 1, sn - static_cast<std::int64_t>(j))) {
          binomials = false;
          break;
        }

    const bool same = ba == ad;
    const bool conjugate = conj == d;
    return {same && binomials && conjugate, same, binomials, conjugate, std::move(ba), std::move(ad), std::move(conj)};
  }

  std::uint64_t mat_order_mod_p(const FpMatrix& m, std::uint64_t bound)
  {
    if (m.determinant().is_zero())
      throw PreconditionError("matrix is singular mod " + std::to_string(m.prime().value()));
    const Prime p = m.prime();
    // M^(p^k) by repeated p-th powers; the first hit is the order because
    // any order dividing p^k is itself a p-power.
    FpMatrix power = m;
    std::uint64_t exponent = 1;
    while (exponent <= bound) {
      if (power.is_identity())
        return exponent;
      if (exponent > bound / p)
        break;
      power = power.pow(p);
      exponent *= p;
    }
    throw NotAPPowerError("no power p^k <= " + std::to_string(bound) + " of the matrix is the identity mod "
                          + std::to_string(p.value()));
  }

  OrderCheck verify_b_order(std::size_t n, Prime p)
  {
    const std::uint64_t expected = p_power_ceil(n, p);
    const FpMatrix b = mat_reduce(build_B(n), p);
    std::uint64_t order = 0;
    try {
      // n <= p^k < n p bounds the order of any unipotent n x n matrix
      order = mat_order_mod_p(b, expected * p);
    } catch (const NotAPPowerError&) {
      return {false, false, 0, expected};
    }
    return {is_power_of(order, p), order == expected, order, expected};
  }

} // namespace gauge
