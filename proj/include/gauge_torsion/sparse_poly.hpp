#ifndef GAUGE_TORSION_SPARSE_POLY_HPP
#define GAUGE_TORSION_SPARSE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/fp_core.hpp"

namespace gauge {

  // Exponent vector of fixed length n. Variable i (0-based) carries the weight
  // Vars::weight(i); the weighted degree orders terms.
  template <class Vars>
  class Monomial {
  public:
    explicit Monomial(std::size_t n) : exponents_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

    static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1)
    {
      Monomial m(n);
      m.exponents_.at(i) = power;
      return m;
    }

    std::size_t size() const { return exponents_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }

    std::uint64_t degree() const
    {
      std::uint64_t d = 0;
      for (std::size_t i = 0; i < exponents_.size(); ++i)
        d += std::uint64_t(Vars::weight(i)) * exponents_[i];
      return d;
    }

    bool is_one() const
    {
      return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
    }

    Monomial operator*(const Monomial& other) const
    {
      Monomial out(*this);
      for (std::size_t i = 0; i < exponents_.size(); ++i)
        out.exponents_[i] += other.exponents_[i];
      return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const
    {
      std::string s;
      for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0)
          continue;
        if (!s.empty())
          s += '*';
        s += Vars::name(i);
        if (exponents_[i] > 1)
          s += '^' + std::to_string(exponents_[i]);
      }
      return s.empty() ? "1" : s;
    }

  private:
    std::vector<std::uint32_t> exponents_;
  };

  // Graded lexicographic order: weighted degree first, then exponent vectors
  // compared lexicographically (variable 1 most significant).
  template <class Vars>
  struct GradedLexLess {
    bool operator()(const Monomial<Vars>& a, const Monomial<Vars>& b) const
    {
      auto da = a.degree(), db = b.degree();
      if (da != db)
        return da < db;
      return a.exponents() < b.exponents();
    }
  };

  // Sparse polynomial over F_p in n variables; never stores a zero coefficient.
  template <class Vars>
  class SparsePoly {
  public:
    using monomial_type = Monomial<Vars>;
    using term_map = std::map<monomial_type, FpScalar, GradedLexLess<Vars>>;

    SparsePoly(std::size_t n, Prime p) : n_(n), p_(p) {}

    static SparsePoly zero(std::size_t n, Prime p) { return SparsePoly(n, p); }

    static SparsePoly constant(std::size_t n, Prime p, const FpScalar& c)
    {
      SparsePoly f(n, p);
      f.add_term(monomial_type(n), c);
      return f;
    }

    static SparsePoly one(std::size_t n, Prime p) { return constant(n, p, FpScalar::one(p)); }

    // The i-th generator, 1-based as in t_1..t_n / c_1..c_n.
    static SparsePoly generator(std::size_t n, Prime p, std::size_t i)
    {
      if (i < 1 || i > n)
        throw DomainError("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
      SparsePoly f(n, p);
      f.add_term(monomial_type::variable(n, i - 1), FpScalar::one(p));
      return f;
    }

    static SparsePoly from_monomial(Prime p, const monomial_type& m, const FpScalar& c)
    {
      SparsePoly f(m.size(), p);
      f.add_term(m, c);
      return f;
    }

    std::size_t nvars() const { return n_; }
    Prime prime() const { return p_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    FpScalar coefficient(const monomial_type& m) const
    {
      auto it = terms_.find(m);
      return it == terms_.end() ? FpScalar::zero(p_) : it->second;
    }

    // Adds c * m in place, keeping the canonical sparse form.
    void add_term(const monomial_type& m, const FpScalar& c)
    {
      if (m.size() != n_)
        throw StructuralError("monomial length " + std::to_string(m.size()) + " in a ring of "
                              + std::to_string(n_) + " variables");
      if (c.modulus() != p_)
        throw StructuralError("coefficient field differs from polynomial ring");
      if (c.is_zero())
        return;
      auto [it, inserted] = terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
          terms_.erase(it);
      }
    }

    SparsePoly& operator+=(const SparsePoly& g)
    {
      check_ring(g);
      for (const auto& [m, c] : g.terms_)
        add_term(m, c);
      return *this;
    }

    SparsePoly& operator-=(const SparsePoly& g)
    {
      check_ring(g);
      for (const auto& [m, c] : g.terms_)
        add_term(m, -c);
      return *this;
    }

    SparsePoly operator-() const
    {
      SparsePoly out(n_, p_);
      for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, -c);
      return out;
    }

    SparsePoly scaled(const FpScalar& s) const
    {
      SparsePoly out(n_, p_);
      if (s.is_zero())
        return out;
      for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, c * s);
      return out;
    }

    friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
    friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }

    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g)
    {
      f.check_ring(g);
      SparsePoly out(f.n_, f.p_);
      for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_)
          out.add_term(mf * mg, cf * cg);
      return out;
    }

    SparsePoly& operator*=(const SparsePoly& g) { return *this = *this * g; }

    SparsePoly pow(std::uint64_t e) const
    {
      SparsePoly result = one(n_, p_);
      SparsePoly base = *this;
      while (e) {
        if (e & 1)
          result *= base;
        e >>= 1;
        if (e)
          base *= base;
      }
      return result;
    }

    friend bool operator==(const SparsePoly& f, const SparsePoly& g)
    {
      f.check_ring(g);
      if (f.terms_.size() != g.terms_.size())
        return false;
      auto it = g.terms_.begin();
      for (const auto& [m, c] : f.terms_) {
        if (!(m == it->first) || c.residue() != it->second.residue())
          return false;
        ++it;
      }
      return true;
    }

    // Terms in descending graded-lex order, e.g. "t1^2*t2 + t1*t2^2".
    std::string to_string() const
    {
      if (terms_.empty())
        return "0";
      std::ostringstream os;
      bool first = true;
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
          os << " + ";
        first = false;
        const auto& [m, c] = *it;
        if (m.is_one())
          os << c.residue();
        else if (c.residue() == 1)
          os << m.to_string();
        else
          os << c.residue() << '*' << m.to_string();
      }
      return os.str();
    }

    void check_ring(const SparsePoly& g) const
    {
      if (n_ != g.n_ || p_ != g.p_)
        throw StructuralError("polynomial ring mismatch: (n=" + std::to_string(n_) + ", p=" + std::to_string(p_.value())
                              + ") vs (n=" + std::to_string(g.n_) + ", p=" + std::to_string(g.p_.value()) + ")");
    }

  private:
    std::size_t n_;
    Prime p_;
    term_map terms_;
  };

} // namespace gauge

#endif // GAUGE_TORSION_SPARSE_POLY_HPP
