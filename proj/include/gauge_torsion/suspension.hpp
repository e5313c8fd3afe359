#ifndef GAUGE_TORSION_SUSPENSION_HPP
#define GAUGE_TORSION_SUSPENSION_HPP

// A formal model of the composite phi* . sigma from H*(BU(n)) to F_p[u].
//
// D is a derivation over phi*:  D(xy) = D(x) phi*(y) + phi*(x) D(y),
// determined by its values on the Chern classes,
//   D(c_1) = k,   D(c_j) = gamma_j u^(j-1)  (j >= 2, gamma_j unknown).
// The coefficients alpha_i of D(s_(i+1)) = alpha_i u^i are affine forms in
// the gamma_j. The engine re-derives the linear recurrence satisfied by the
// alpha_i when p | n and solves for alpha_p without ever fixing gamma_j.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gauge_torsion/chern.hpp"
#include "gauge_torsion/fp_core.hpp"
#include "gauge_torsion/matfp.hpp"
#include "gauge_torsion/polyring.hpp"

namespace gauge {

  // An unknown scalar: gamma_j (coefficient of D(c_j)), or alpha_m held
  // symbolically while a relation is being derived. gamma_1 stands for k
  // when k itself is kept symbolic.
  struct Symbol {
    enum class Kind : std::uint8_t { gamma, alpha };
    Kind kind;
    std::uint32_t index;

    static Symbol gamma(std::uint32_t j) { return {Kind::gamma, j}; }
    static Symbol alpha(std::uint32_t m) { return {Kind::alpha, m}; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;

    std::string to_string() const;
  };

  // constant + sum of coefficient * symbol over F_p.
  class LinearForm {
  public:
    explicit LinearForm(Prime p) : constant_(FpScalar::zero(p)) {}
    explicit LinearForm(const FpScalar& constant) : constant_(constant) {}

    static LinearForm of(Prime p, Symbol s, std::int64_t coeff = 1);

    Prime prime() const { return constant_.modulus(); }
    const FpScalar& constant() const { return constant_; }
    const std::map<Symbol, FpScalar>& unknowns() const { return unknowns_; }
    FpScalar coefficient(Symbol s) const;

    bool is_zero() const { return constant_.is_zero() && unknowns_.empty(); }
    bool is_constant() const { return unknowns_.empty(); }
    bool depends_on(Symbol::Kind kind) const;

    void add(Symbol s, const FpScalar& c);
    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    LinearForm scaled(const FpScalar& s) const;

    // Replaces s by value.
    LinearForm substituted(Symbol s, const LinearForm& value) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b);

    // "2 + g2 + 4*g3"
    std::string to_string() const;

  private:
    FpScalar constant_;
    std::map<Symbol, FpScalar> unknowns_;
  };

  // sum_d L_d u^d with L_d a LinearForm; zero forms are never stored.
  class GradedForm {
  public:
    explicit GradedForm(Prime p) : p_(p) {}

    Prime prime() const { return p_; }
    const std::map<std::uint64_t, LinearForm>& components() const { return components_; }
    LinearForm coefficient(std::uint64_t degree) const;
    bool is_zero() const { return components_.empty(); }

    void add(std::uint64_t degree, const LinearForm& form);
    GradedForm& operator+=(const GradedForm& other);
    GradedForm& operator-=(const GradedForm& other);
    friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
    friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
    GradedForm scaled(const FpScalar& s) const;

    // Product with a passive factor from F_p[u].
    GradedForm times(const UniPoly& f) const;

    friend bool operator==(const GradedForm& a, const GradedForm& b);

    // "(1 + g2)*u^2 + (3)"
    std::string to_string() const;

  private:
    Prime p_;
    std::map<std::uint64_t, LinearForm> components_;
  };

  // (alpha_(n-1), ..., alpha_0): top index first.
  struct AlphaVector {
    std::vector<LinearForm> entries;

    std::size_t size() const { return entries.size(); }
    // alpha_i for 0 <= i < size()
    const LinearForm& alpha(std::size_t i) const { return entries[entries.size() - 1 - i]; }
  };

  // D on an arbitrary element of H*(BU(n)):
  //   D(P) = sum_j phi*(dP/dc_j) D(c_j).
  GradedForm apply_D(const ChernPoly& f, const FpScalar& k);

  // D applied to the Milnor primitive Q_l acting on F_p[u], Q_l(u) = u^(p^l).
  GradedForm apply_milnor_u(const GradedForm& form, unsigned l);

  // alpha_i = coefficient of u^i in apply_D(lift_power_sum(i + 1)).
  // Expands S_(i+1) in full; practical only for small n.
  LinearForm alpha_expanded(std::size_t i, std::size_t n, Prime p, std::int64_t k);

  // alpha_0..alpha_(n-1), obtained by differentiating Newton's identities
  // term by term (forward mode along the recurrence for S_m) rather than
  // expanding S_m. Agrees with alpha_expanded.
  AlphaVector alpha_init(std::size_t n, Prime p, std::int64_t k);

  // D applied to s_(n+i+1) + sum_j (-1)^j c_j s_(n+i+1-j) with every alpha
  // kept symbolic. With k absent, D(c_1) is the symbol gamma_1.
  GradedForm newton_relation_image(std::size_t n, Prime p, std::size_t i, std::optional<std::int64_t> k);

  // The matrix carrying (alpha_(n-1+i), ..., alpha_i) to
  // (alpha_(n+i), ..., alpha_(1+i)), read off the images of the Newton
  // relations. Requires p | n.
  FpMatrix derive_recurrence(std::size_t n, Prime p);

  // alpha_i; for i >= n obtained as the first entry of B^(i-n+1) alpha_init.
  // Requires p | n.
  LinearForm alpha_at(std::size_t i, std::size_t n, Prime p, std::int64_t k);

  // Q_l D(c_2) - D(s_1 s_(p^l) - s_(p^l+1)): must vanish. Alphas symbolic.
  LinearForm milnor_relation(std::size_t n, Prime p, std::int64_t k, unsigned l);

  struct TraceRecord {
    std::string relation;
    std::string source;
    std::string resolved_value;
  };

  struct AlphaSolution {
    FpScalar alpha_p;
    LinearForm alpha_p_form;           // alpha_p before the relations are imposed
    std::vector<TraceRecord> trace;
    std::vector<std::uint32_t> pinned_gammas;   // pivot unknowns of the solved system
    std::vector<std::uint32_t> free_gammas;     // gamma_j never determined
  };

  // Imposes gamma_2 = -alpha_(p^l) for l = 1..m (p^m = p_power_ceil(n, p))
  // and solves for alpha_p. Throws ContradictionError if the system is
  // inconsistent or leaves alpha_p undetermined. Requires p | n.
  AlphaSolution solve_alpha_p(std::size_t n, Prime p, std::int64_t k);

} // namespace gauge

#endif // GAUGE_TORSION_SUSPENSION_HPP
