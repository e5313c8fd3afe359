#include "gauge_torsion/suspension.hpp"

#include <sstream>
#include <utility>

#include "gauge_torsion/errors.hpp"

namespace gauge {

  std::string Symbol::to_string() const
  {
    if (kind == Kind::gamma)
      return index == 1 ? "k" : "g" + std::to_string(index);
    return "a" + std::to_string(index);
  }

  // LinearForm

  LinearForm LinearForm::of(Prime p, Symbol s, std::int64_t coeff)
  {
    LinearForm f(p);
    f.add(s, FpScalar(coeff, p));
    return f;
  }

  FpScalar LinearForm::coefficient(Symbol s) const
  {
    auto it = unknowns_.find(s);
    return it == unknowns_.end() ? FpScalar::zero(prime()) : it->second;
  }

  bool LinearForm::depends_on(Symbol::Kind kind) const
  {
    for (const auto& [s, c] : unknowns_)
      if (s.kind == kind)
        return true;
    return false;
  }

  void LinearForm::add(Symbol s, const FpScalar& c)
  {
    if (c.modulus() != prime())
      throw StructuralError("linear form modulus mismatch");
    if (c.is_zero())
      return;
    auto [it, inserted] = unknowns_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        unknowns_.erase(it);
    }
  }

  LinearForm& LinearForm::operator+=(const LinearForm& other)
  {
    constant_ += other.constant_;
    for (const auto& [s, c] : other.unknowns_)
      add(s, c);
    return *this;
  }

  LinearForm& LinearForm::operator-=(const LinearForm& other)
  {
    constant_ -= other.constant_;
    for (const auto& [s, c] : other.unknowns_)
      add(s, -c);
    return *this;
  }

  LinearForm LinearForm::scaled(const FpScalar& s) const
  {
    LinearForm out(constant_ * s);
    if (s.is_zero())
      return out;
    for (const auto& [sym, c] : unknowns_)
      out.unknowns_.emplace_hint(out.unknowns_.end(), sym, c * s);
    return out;
  }

  LinearForm LinearForm::substituted(Symbol s, const LinearForm& value) const
  {
    auto it = unknowns_.find(s);
    if (it == unknowns_.end())
      return *this;
    LinearForm out = *this;
    const FpScalar c = it->second;
    out.unknowns_.erase(s);
    out += value.scaled(c);
    return out;
  }

  bool operator==(const LinearForm& a, const LinearForm& b)
  {
    return a.constant_ == b.constant_ && a.unknowns_ == b.unknowns_;
  }

  std::string LinearForm::to_string() const
  {
    std::ostringstream os;
    bool first = true;
    if (!constant_.is_zero() || unknowns_.empty()) {
      os << constant_.residue();
      first = false;
    }
    for (const auto& [s, c] : unknowns_) {
      if (!first)
        os << " + ";
      first = false;
      if (c.residue() != 1)
        os << c.residue() << '*';
      os << s.to_string();
    }
    return os.str();
  }

  // GradedForm

  LinearForm GradedForm::coefficient(std::uint64_t degree) const
  {
    auto it = components_.find(degree);
    return it == components_.end() ? LinearForm(p_) : it->second;
  }

  void GradedForm::add(std::uint64_t degree, const LinearForm& form)
  {
    if (form.prime() != p_)
      throw StructuralError("graded form modulus mismatch");
    if (form.is_zero())
      return;
    auto [it, inserted] = components_.try_emplace(degree, form);
    if (!inserted) {
      it->second += form;
      if (it->second.is_zero())
        components_.erase(it);
    }
  }

  GradedForm& GradedForm::operator+=(const GradedForm& other)
  {
    for (const auto& [d, f] : other.components_)
      add(d, f);
    return *this;
  }

  GradedForm& GradedForm::operator-=(const GradedForm& other)
  {
    for (const auto& [d, f] : other.components_)
      add(d, f.scaled(-FpScalar::one(p_)));
    return *this;
  }

  GradedForm GradedForm::scaled(const FpScalar& s) const
  {
    GradedForm out(p_);
    for (const auto& [d, f] : components_)
      out.add(d, f.scaled(s));
    return out;
  }

  GradedForm GradedForm::times(const UniPoly& f) const
  {
    GradedForm out(p_);
    for (const auto& [d, form] : components_)
      for (const auto& [e, c] : f.coeffs())
        out.add(d + e, form.scaled(c));
    return out;
  }

  bool operator==(const GradedForm& a, const GradedForm& b)
  {
    return a.p_ == b.p_ && a.components_ == b.components_;
  }

  std::string GradedForm::to_string() const
  {
    if (components_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
      if (!first)
        os << " + ";
      first = false;
      os << '(' << it->second.to_string() << ')';
      if (it->first == 1)
        os << "*u";
      else if (it->first > 1)
        os << "*u^" << it->first;
    }
    return os.str();
  }

  namespace {

    std::uint64_t ipow(std::uint64_t base, unsigned e)
    {
      std::uint64_t r = 1;
      while (e--)
        r *= base;
      return r;
    }

    void require_divides(std::size_t n, Prime p)
    {
      if (n % p.value() != 0)
        throw PreconditionError("the alpha recurrence needs p | n; got n = " + std::to_string(n)
                                + ", p = " + std::to_string(p.value()));
    }

    // A factor in a product of generators: c_j or the power sum s_m.
    struct Factor {
      enum class Kind { chern, power_sum } kind;
      std::uint32_t index;
    };

    struct ProductTerm {
      std::int64_t coeff;
      std::vector<Factor> factors;
    };

    // Values of D and phi* on generators. Power sums whose alpha is not in
    // `resolved` stay symbolic.
    struct Derivation {
      std::size_t n;
      Prime p;
      std::optional<FpScalar> k;
      std::map<std::uint32_t, LinearForm> resolved;

      UniPoly phi(const Factor& f) const
      {
        if (f.kind == Factor::Kind::chern)
          return UniPoly::monomial(p, f.index,
                                   binom_mod(static_cast<std::int64_t>(n), f.index, p));
        return UniPoly::monomial(p, f.index, FpScalar(static_cast<std::int64_t>(n), p));
      }

      GradedForm derive(const Factor& f) const
      {
        GradedForm out(p);
        if (f.kind == Factor::Kind::chern) {
          if (f.index == 1 && k)
            out.add(0, LinearForm(*k));
          else
            out.add(f.index - 1, LinearForm::of(p, Symbol::gamma(f.index)));
          return out;
        }
        const std::uint32_t a = f.index - 1;
        auto it = resolved.find(a);
        out.add(a, it != resolved.end() ? it->second : LinearForm::of(p, Symbol::alpha(a)));
        return out;
      }

      // Leibniz rule over each product.
      GradedForm apply(const std::vector<ProductTerm>& expr) const
      {
        GradedForm out(p);
        for (const auto& term : expr) {
          for (std::size_t i = 0; i < term.factors.size(); ++i) {
            GradedForm piece = derive(term.factors[i]);
            for (std::size_t l = 0; l < term.factors.size(); ++l)
              if (l != i)
                piece = piece.times(phi(term.factors[l]));
            out += piece.scaled(FpScalar(term.coeff, p));
          }
        }
        return out;
      }
    };

    Factor chern(std::size_t j) { return {Factor::Kind::chern, static_cast<std::uint32_t>(j)}; }
    Factor psum(std::size_t m) { return {Factor::Kind::power_sum, static_cast<std::uint32_t>(m)}; }

    // The single homogeneous component of a form expected in one degree.
    LinearForm homogeneous_part(const GradedForm& g, std::uint64_t degree, const char* what)
    {
      for (const auto& [d, f] : g.components())
        if (d != degree)
          throw ContradictionError(std::string(what) + ": unexpected component in u-degree " + std::to_string(d));
      return g.coefficient(degree);
    }

    // Fully reduced solved form of a linear system over the gamma unknowns.
    class LinearSystem {
    public:
      explicit LinearSystem(Prime p) : p_(p) {}

      LinearForm reduce(const LinearForm& f) const
      {
        LinearForm out = f;
        for (const auto& [s, value] : pivots_)
          out = out.substituted(s, value);
        return out;
      }

      // Adds the equation f = 0. Returns false if it contradicts the system.
      bool impose(const LinearForm& f)
      {
        LinearForm r = reduce(f);
        if (r.is_constant())
          return r.constant().is_zero();
        auto [pivot, coeff] = *r.unknowns().begin();
        // pivot = -(r - coeff * pivot) / coeff
        LinearForm rest = r;
        rest.add(pivot, -coeff);
        LinearForm value = rest.scaled(-coeff.inverse());
        for (auto& [s, v] : pivots_)
          v = v.substituted(pivot, value);
        pivots_.emplace(pivot, std::move(value));
        return true;
      }

      const std::map<Symbol, LinearForm>& pivots() const { return pivots_; }

    private:
      Prime p_;
      std::map<Symbol, LinearForm> pivots_;
    };

  } // namespace

  GradedForm apply_D(const ChernPoly& f, const FpScalar& k)
  {
    const Prime p = f.prime();
    if (k.modulus() != p)
      throw StructuralError("k lives in a different field than the Chern ring");
    Derivation d{f.nvars(), p, k, {}};
    GradedForm out(p);
    for (std::size_t j = 1; j <= f.nvars(); ++j) {
      ChernPoly partial = partial_derivative(f, j);
      if (partial.is_zero())
        continue;
      out += d.derive(chern(j)).times(phi_star(partial));
    }
    return out;
  }

  GradedForm apply_milnor_u(const GradedForm& form, unsigned l)
  {
    if (l == 0)
      throw DomainError("Milnor primitive index must be >= 1");
    const Prime p = form.prime();
    const std::uint64_t bump = ipow(p, l) - 1;
    GradedForm out(p);
    for (const auto& [d, f] : form.components())
      if (d > 0)
        out.add(d + bump, f.scaled(FpScalar(static_cast<std::int64_t>(d % p), p)));
    return out;
  }

  LinearForm alpha_expanded(std::size_t i, std::size_t n, Prime p, std::int64_t k)
  {
    const ChernPoly& s = lift_power_sum(i + 1, n, p);
    return homogeneous_part(apply_D(s, FpScalar(k, p)), i, "alpha_expanded");
  }

  AlphaVector alpha_init(std::size_t n, Prime p, std::int64_t k)
  {
    if (n < 2)
      throw DomainError("alpha_init needs n >= 2");
    Derivation d{n, p, FpScalar(k, p), {}};
    // S_m = sum_{j<m} (-1)^(j-1) c_j S_(m-j) + (-1)^(m-1) m c_m  (m <= n)
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<ProductTerm> expr;
      for (std::size_t j = 1; j < m; ++j)
        expr.push_back({j % 2 == 1 ? 1 : -1, {chern(j), psum(m - j)}});
      const auto sm = static_cast<std::int64_t>(m);
      expr.push_back({m % 2 == 1 ? sm : -sm, {chern(m)}});
      d.resolved.emplace(m - 1, homogeneous_part(d.apply(expr), m - 1, "alpha_init"));
    }
    AlphaVector out;
    for (std::size_t i = n; i-- > 0;)
      out.entries.push_back(d.resolved.at(static_cast<std::uint32_t>(i)));
    return out;
  }

  GradedForm newton_relation_image(std::size_t n, Prime p, std::size_t i, std::optional<std::int64_t> k)
  {
    if (n < 2)
      throw DomainError("Newton relation needs n >= 2");
    std::optional<FpScalar> kk;
    if (k)
      kk = FpScalar(*k, p);
    Derivation d{n, p, kk, {}};
    const std::size_t top = n + i + 1;
    std::vector<ProductTerm> expr;
    expr.push_back({1, {psum(top)}});
    for (std::size_t j = 1; j <= n; ++j)
      expr.push_back({j % 2 == 0 ? 1 : -1, {chern(j), psum(top - j)}});
    return d.apply(expr);
  }

  FpMatrix derive_recurrence(std::size_t n, Prime p)
  {
    require_divides(n, p);
    FpMatrix out(n, p);
    std::optional<std::vector<FpScalar>> first_row;
    // The relation for every shift i must give the same row.
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t lead = static_cast<std::uint32_t>(n + i);
      LinearForm rel = homogeneous_part(newton_relation_image(n, p, i, std::nullopt), lead, "Newton relation");
      if (!rel.constant().is_zero() || rel.depends_on(Symbol::Kind::gamma))
        throw ContradictionError("Newton relation image still involves D(c_j) although p | n: " + rel.to_string());
      const FpScalar lead_coeff = rel.coefficient(Symbol::alpha(lead));
      if (lead_coeff.is_zero())
        throw ContradictionError("Newton relation image lost its leading alpha");
      const FpScalar scale = -lead_coeff.inverse();
      std::vector<FpScalar> row;
      for (std::size_t j = 1; j <= n; ++j)
        row.push_back(rel.coefficient(Symbol::alpha(static_cast<std::uint32_t>(n + i - j))) * scale);
      for (const auto& [s, c] : rel.unknowns())
        if (s.index > lead || s.index < i)
          throw ContradictionError("Newton relation image involves alpha outside its window");
      if (!first_row)
        first_row = row;
      else if (*first_row != row)
        throw ContradictionError("Newton relation images disagree across shifts");
    }
    for (std::size_t j = 0; j < n; ++j)
      out(0, j) = (*first_row)[j];
    // remaining rows: alpha_(n-1+i) = alpha_(n-1+i), ...
    for (std::size_t r = 1; r < n; ++r)
      out(r, r - 1) = FpScalar::one(p);
    return out;
  }

  namespace {

    LinearForm first_entry_of_power(const FpMatrix& b, std::uint64_t e, const AlphaVector& init)
    {
      const FpMatrix be = b.pow(e);
      LinearForm out(b.prime());
      for (std::size_t j = 0; j < b.dim(); ++j)
        if (!be(0, j).is_zero())
          out += init.entries[j].scaled(be(0, j));
      return out;
    }

  } // namespace

  LinearForm alpha_at(std::size_t i, std::size_t n, Prime p, std::int64_t k)
  {
    require_divides(n, p);
    const AlphaVector init = alpha_init(n, p, k);
    if (i < n)
      return init.alpha(i);
    return first_entry_of_power(mat_reduce(build_B(n), p), i - n + 1, init);
  }

  LinearForm milnor_relation(std::size_t n, Prime p, std::int64_t k, unsigned l)
  {
    if (l == 0)
      throw DomainError("Milnor primitive index must be >= 1");
    const std::uint64_t q = ipow(p, l);
    Derivation d{n, p, FpScalar(k, p), {}};
    GradedForm lhs = apply_milnor_u(d.apply({{1, {chern(2)}}}), l);
    GradedForm rhs = d.apply({{1, {psum(1), psum(q)}}, {-1, {psum(q + 1)}}});
    return homogeneous_part(lhs - rhs, q, "Milnor relation");
  }

  AlphaSolution solve_alpha_p(std::size_t n, Prime p, std::int64_t k)
  {
    require_divides(n, p);
    const FpScalar kk(k, p);
    const std::uint64_t top = p_power_ceil(n, p);
    unsigned m = 0;
    for (std::uint64_t q = 1; q < top; q *= p)
      ++m;

    const AlphaVector init = alpha_init(n, p, k);
    const FpMatrix b = mat_reduce(build_B(n), p);
    auto alpha = [&](std::uint64_t i) {
      return i < n ? init.alpha(i) : first_entry_of_power(b, i - n + 1, init);
    };

    std::vector<TraceRecord> trace;
    trace.push_back({"a0 = k", "suspension-of-c1", alpha(0).to_string()});

    const LinearForm top_alpha = alpha(top);
    trace.push_back({"a" + std::to_string(top) + " = a0", "unipotent-order", top_alpha.to_string()});
    if (!(top_alpha == LinearForm(kk)))
      throw ContradictionError("alpha at the order of B is " + top_alpha.to_string() + ", expected k");

    LinearSystem system(p);
    std::uint64_t q = 1;
    for (unsigned l = 1; l <= m; ++l) {
      q *= p;
      LinearForm rel = milnor_relation(n, p, k, l);
      const std::string symbolic = rel.to_string();
      for (std::uint64_t idx : {std::uint64_t{0}, q - 1, q})
        rel = rel.substituted(Symbol::alpha(static_cast<std::uint32_t>(idx)), alpha(idx));
      if (rel.depends_on(Symbol::Kind::alpha))
        throw ContradictionError("Milnor relation kept an unresolved alpha: " + rel.to_string());
      trace.push_back({"g2 = -a" + std::to_string(q) + "  [" + symbolic + " = 0]", "milnor-commutation",
                       rel.to_string() + " = 0"});
      if (!system.impose(rel))
        throw ContradictionError("imposed relations are inconsistent at l = " + std::to_string(l));
    }

    const LinearForm alpha_p_form = alpha(p);
    const LinearForm reduced = system.reduce(alpha_p_form);
    if (!reduced.is_constant())
      throw ContradictionError("alpha_p is not determined by the relations: " + reduced.to_string());
    trace.push_back({"a" + std::to_string(p.value()), "recurrence", reduced.to_string()});
    if (!(reduced.constant() == kk))
      throw ContradictionError("alpha_p = " + reduced.to_string() + " differs from k = " + std::to_string(kk.residue()));

    AlphaSolution out{reduced.constant(), alpha_p_form, std::move(trace), {}, {}};
    for (std::uint32_t j = 2; j <= n; ++j) {
      if (system.pivots().count(Symbol::gamma(j)))
        out.pinned_gammas.push_back(j);
      else
        out.free_gammas.push_back(j);
    }
    return out;
  }

} // namespace gauge
