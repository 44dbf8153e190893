#include "signstab/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace signstab {

MPoly MPoly::constant(std::size_t nvars, Int c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), std::move(c));
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  ExpVec e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e), 1);
}

MPoly MPoly::monomial(std::size_t nvars, ExpVec e, Int c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](std::int32_t x) { return x == 0; });
}

void MPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out(nvars_);
  ExpVec e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MPoly mul_budgeted(const MPoly& a, const MPoly& b, std::size_t max_ops) {
  if (max_ops && a.nterms() * b.nterms() > max_ops)
    throw TermBudgetExceeded("polynomial multiplication exceeds the operation budget");
  return a * b;
}

MPoly MPoly::pow(unsigned n, std::size_t max_ops) const {
  MPoly acc = MPoly::one(nvars_);
  MPoly base = *this;
  while (n) {
    if (n & 1u) acc = mul_budgeted(acc, base, max_ops);
    n >>= 1u;
    if (n) base = mul_budgeted(base, base, max_ops);
  }
  return acc;
}

MPoly MPoly::exact_div(const MPoly& divisor, std::size_t max_ops) const {
  if (divisor.is_zero()) throw DivisionNotExact("division by zero polynomial");
  if (is_zero()) return MPoly(nvars_);
  // Lex-leading-term reduction over rationals; exactness of the cluster and
  // F-polynomial recursions means the remainder vanishes and the quotient is
  // integral, both of which are asserted.
  std::map<ExpVec, Rat> rem;
  for (const auto& [e, c] : terms_) rem.emplace(e, Rat(c));
  const auto& dlead = *divisor.terms_.rbegin();  // lex-largest
  std::map<ExpVec, Rat> quo;
  ExpVec shift(nvars_);
  std::size_t ops = 0;
  while (!rem.empty()) {
    ops += divisor.terms_.size();
    if (max_ops && ops > max_ops)
      throw TermBudgetExceeded("polynomial division exceeds the operation budget");
    const auto& rlead = *rem.rbegin();
    bool divisible = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      shift[i] = rlead.first[i] - dlead.first[i];
      if (shift[i] < 0) divisible = false;
    }
    if (!divisible) throw DivisionNotExact("polynomial division has a remainder");
    Rat f = rlead.second / Rat(dlead.second);
    quo[shift] += f;
    ExpVec e(nvars_);
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = shift[i] + de[i];
      auto it = rem.find(e);
      Rat delta = f * Rat(dc);
      if (it == rem.end()) {
        if (delta != 0) rem.emplace(e, -delta);
      } else {
        it->second -= delta;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  MPoly out(nvars_);
  for (const auto& [e, c] : quo) {
    if (c == 0) continue;
    if (denominator(c) != 1) throw DivisionNotExact("polynomial quotient is not integral");
    out.terms_.emplace(e, numerator(c));
  }
  return out;
}

std::int64_t MPoly::total_degree() const {
  std::int64_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = std::accumulate(e.begin(), e.end(), std::int64_t(0));
    best = std::max(best, d);
  }
  return best;
}

std::int32_t MPoly::max_degree_in(std::size_t var) const {
  std::int32_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

ExpVec MPoly::min_exponents() const {
  ExpVec m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

bool MPoly::divisible_by_variable(std::size_t var) const {
  if (terms_.empty()) return false;
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) return false;
  return true;
}

MPoly MPoly::shifted(const ExpVec& shift) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      ne[i] = e[i] + shift[i];
      if (ne[i] < 0) throw std::logic_error("MPoly::shifted: negative exponent");
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print lex-largest first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ac = c < 0 ? Int(-c) : c;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0)
      os << "-";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](std::int32_t x) { return x != 0; });
    if (ac != 1 || !has_var) os << ac.str();
    bool printed = ac != 1 || !has_var;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << var_names[i];
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

LaurentExpr LaurentExpr::from_poly(MPoly p) {
  LaurentExpr out;
  out.den.assign(p.nvars(), 0);
  out.num = std::move(p);
  out.reduce();
  return out;
}

LaurentExpr LaurentExpr::variable(std::size_t nvars, std::size_t i) {
  return from_poly(MPoly::variable(nvars, i));
}

LaurentExpr LaurentExpr::one(std::size_t nvars) { return from_poly(MPoly::one(nvars)); }

LaurentExpr LaurentExpr::monomial(std::size_t nvars, const std::vector<Int>& exps) {
  ExpVec up(nvars, 0), down(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (exps[i] >= 0) up[i] = exps[i].convert_to<std::int32_t>();
    else
      down[i] = static_cast<std::int32_t>(-exps[i].convert_to<long long>());
  }
  LaurentExpr out;
  out.num = MPoly::monomial(nvars, std::move(up), 1);
  out.den = std::move(down);
  return out;
}

void LaurentExpr::reduce() {
  if (num.is_zero()) {
    std::fill(den.begin(), den.end(), 0);
    return;
  }
  ExpVec m = num.min_exponents();
  ExpVec shift(num.nvars(), 0);
  bool any = false;
  for (std::size_t i = 0; i < den.size(); ++i) {
    std::int32_t g = std::min(m[i], den[i]);
    if (g > 0) {
      shift[i] = -g;
      den[i] -= g;
      any = true;
    }
  }
  if (any) num = num.shifted(shift);
}

LaurentExpr operator+(const LaurentExpr& a, const LaurentExpr& b) {
  const std::size_t n = a.nvars();
  ExpVec den(n);
  ExpVec sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    den[i] = std::max(a.den[i], b.den[i]);
    sa[i] = den[i] - a.den[i];
    sb[i] = den[i] - b.den[i];
  }
  LaurentExpr out;
  out.num = a.num.shifted(sa) + b.num.shifted(sb);
  out.den = std::move(den);
  out.reduce();
  return out;
}

LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) {
  return mul_budgeted(a, b, 0);
}

LaurentExpr mul_budgeted(const LaurentExpr& a, const LaurentExpr& b, std::size_t max_ops) {
  LaurentExpr out;
  out.num = mul_budgeted(a.num, b.num, max_ops);
  out.den.resize(a.den.size());
  for (std::size_t i = 0; i < a.den.size(); ++i) out.den[i] = a.den[i] + b.den[i];
  out.reduce();
  return out;
}

LaurentExpr laurent_div(const LaurentExpr& a, const LaurentExpr& b, std::size_t max_ops) {
  if (b.num.is_zero()) throw DivisionNotExact("laurent_div: division by zero");
  const std::size_t n = a.nvars();
  // Split the divisor numerator as x^m * bhat with bhat free of monomial
  // content; if a/b is Laurent at all, bhat divides a.num as a polynomial.
  ExpVec m = b.num.min_exponents();
  ExpVec neg_m(n);
  for (std::size_t i = 0; i < n; ++i) neg_m[i] = -m[i];
  MPoly bhat = b.num.shifted(neg_m);
  LaurentExpr out;
  out.num = a.num.exact_div(bhat, max_ops);
  std::vector<std::int32_t> net(n);
  for (std::size_t i = 0; i < n; ++i) net[i] = a.den[i] + m[i] - b.den[i];
  ExpVec up(n, 0);
  out.den.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (net[i] >= 0) out.den[i] = net[i];
    else
      up[i] = -net[i];
  }
  out.num = out.num.shifted(up);
  out.reduce();
  return out;
}

std::int64_t degree_reduced(const LaurentExpr& e) {
  std::int64_t dden = std::accumulate(e.den.begin(), e.den.end(), std::int64_t(0));
  return std::max(e.num.total_degree(), dden);
}

std::string LaurentExpr::to_string(const std::vector<std::string>& var_names) const {
  bool trivial_den = std::all_of(den.begin(), den.end(), [](std::int32_t x) { return x == 0; });
  std::string ns = num.to_string(var_names);
  if (trivial_den) return ns;
  std::ostringstream os;
  if (num.nterms() > 1) os << "(" << ns << ")";
  else
    os << ns;
  os << "/";
  std::ostringstream ds;
  bool printed = false;
  int nontrivial = 0;
  for (std::size_t i = 0; i < den.size(); ++i)
    if (den[i] != 0) ++nontrivial;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (den[i] == 0) continue;
    if (printed) ds << "*";
    ds << var_names[i];
    if (den[i] != 1) ds << "^" << den[i];
    printed = true;
  }
  if (nontrivial > 1) os << "(" << ds.str() << ")";
  else
    os << ds.str();
  return os.str();
}

}  // namespace signstab
