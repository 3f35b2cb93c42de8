#include "turaev/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace turaev {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

Laurent Laurent::constant(const Int& c, std::string var) {
  return monomial(c, 0, std::move(var));
}

Laurent Laurent::monomial(const Int& c, long exp, std::string var) {
  Laurent p(std::move(var));
  p.set(exp, c);
  return p;
}

Int Laurent::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

long Laurent::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long Laurent::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

long Laurent::span() const {
  if (is_zero()) throw std::domain_error("span of zero polynomial");
  return max_exp() - min_exp();
}

void Laurent::set(long exp, Int c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

Laurent Laurent::operator-() const {
  Laurent r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (is_zero())
    var_ = o.var_;
  else
    require(o.is_zero() || var_ == o.var_, "Laurent: mixed variable tags");
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  return *this += -o;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  require(a.var_ == b.var_, "Laurent: mixed variable tags");
  Laurent r(a.var_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (is_zero() && o.is_zero()) return true;
  return var_ == o.var_ && terms_ == o.terms_;
}

Laurent Laurent::pow(unsigned long k) const {
  Laurent r = constant(1, var_);
  Laurent base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Laurent Laurent::shifted(long d) const {
  Laurent r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
  return r;
}

Laurent Laurent::scaled(const Int& c) const {
  Laurent r(var_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

Laurent Laurent::with_var(std::string var) const {
  Laurent r = *this;
  r.var_ = std::move(var);
  return r;
}

Int Laurent::eval_unit(int u) const {
  if (u != 1 && u != -1) throw std::domain_error("eval_unit: argument must be +-1");
  Int s = 0;
  for (const auto& [e, c] : terms_) s += (u == -1 && (e % 2 != 0)) ? -c : c;
  return s;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << var_;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Json Laurent::to_json() const {
  Json j;
  j["var"] = var_;
  j["terms"] = Json::array();
  for (const auto& [e, c] : terms_) j["terms"].push_back(Json::array({e, c.str()}));
  return j;
}

Laurent Laurent::from_json(const Json& j) {
  Laurent p(j.at("var").get<std::string>());
  for (const auto& t : j.at("terms")) {
    long e = t.at(0).get<long>();
    Int c(t.at(1).get<std::string>());
    p.set(e, p.coeff(e) + c);
  }
  return p;
}

std::optional<UnitWitness> equal_up_to_units(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return UnitWitness{1, 0};
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.var() != b.var()) return std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  long d = a.min_exp() - b.min_exp();
  if (a.max_exp() - b.max_exp() != d) return std::nullopt;
  const Int& la = a.terms().begin()->second;
  const Int& lb = b.terms().begin()->second;
  int sign;
  if (la == lb)
    sign = 1;
  else if (la == -lb)
    sign = -1;
  else
    return std::nullopt;
  for (const auto& [e, c] : b.terms()) {
    Int want = sign == 1 ? c : Int(-c);
    if (a.coeff(e + d) != want) return std::nullopt;
  }
  return UnitWitness{sign, d};
}

Laurent divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return Laurent(b.var());
  require(a.var() == b.var(), "divide_exact: mixed variable tags");

  // Long division from the top; Laurent shifts make both operands ordinary
  // polynomials first.  Every leading-coefficient quotient must be exact.
  long offset = a.min_exp() - b.min_exp();
  Laurent r = a.shifted(-a.min_exp());
  Laurent d = b.shifted(-b.min_exp());
  Laurent q(a.var());
  while (!r.is_zero()) {
    long e = r.max_exp() - d.max_exp();
    if (e < 0) throw std::domain_error("divide_exact: nonzero remainder");
    Int lead_r = r.terms().rbegin()->second;
    const Int& lead_d = d.terms().rbegin()->second;
    if (lead_r % lead_d != 0)
      throw std::domain_error("divide_exact: leading coefficient does not divide");
    Laurent t = Laurent::monomial(lead_r / lead_d, e, a.var());
    q += t;
    r -= t * d;
  }
  return q.shifted(offset);
}

MultiPoly MultiPoly::constant(const Int& c, std::vector<std::string> vars) {
  std::vector<long> exps(vars.size(), 0);
  return monomial(c, std::move(exps), std::move(vars));
}

MultiPoly MultiPoly::monomial(const Int& c, std::vector<long> exps,
                              std::vector<std::string> vars) {
  require(exps.size() == vars.size(), "MultiPoly: exponent/variable count mismatch");
  MultiPoly p(std::move(vars));
  p.set(exps, c);
  return p;
}

Int MultiPoly::coeff(const std::vector<long>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

bool MultiPoly::polynomial_in_all_vars() const {
  for (const auto& [es, c] : terms_)
    for (long e : es)
      if (e < 0) return false;
  return true;
}

std::size_t MultiPoly::var_index(const std::string& var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return i;
  throw std::logic_error("MultiPoly: unknown variable " + var);
}

long MultiPoly::min_exp(const std::string& var) const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  std::size_t i = var_index(var);
  long m = terms_.begin()->first[i];
  for (const auto& [es, c] : terms_) m = std::min(m, es[i]);
  return m;
}

long MultiPoly::max_exp(const std::string& var) const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  std::size_t i = var_index(var);
  long m = terms_.begin()->first[i];
  for (const auto& [es, c] : terms_) m = std::max(m, es[i]);
  return m;
}

void MultiPoly::set(const std::vector<long>& exps, Int c) {
  if (c == 0)
    terms_.erase(exps);
  else
    terms_[exps] = std::move(c);
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  require(vars_ == o.vars_, "MultiPoly: mismatched variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [es, c] : terms_) r.terms_[es] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_.empty() && terms_.empty())
    vars_ = o.vars_;
  else
    check_same_vars(o);
  for (const auto& [es, c] : o.terms_) set(es, coeff(es) + c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  return *this += -o;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r(a.vars_);
  std::vector<long> es(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < es.size(); ++i) es[i] = ea[i] + eb[i];
      r.set(es, r.coeff(es) + ca * cb);
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned long k) const {
  MultiPoly r = constant(1, vars_);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::map<long, MultiPoly> MultiPoly::group_by(const std::string& var) const {
  std::size_t i = var_index(var);
  std::map<long, MultiPoly> out;
  for (const auto& [es, c] : terms_) {
    auto it = out.find(es[i]);
    if (it == out.end()) it = out.emplace(es[i], MultiPoly(vars_)).first;
    std::vector<long> rest = es;
    rest[i] = 0;
    it->second.set(rest, c);
  }
  return out;
}

Laurent MultiPoly::eval(const std::map<std::string, Laurent>& values) const {
  std::string target;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    require(it != values.end(), "MultiPoly::eval: missing variable value");
    if (target.empty())
      target = it->second.var();
    else
      require(it->second.var() == target, "MultiPoly::eval: mixed value variables");
  }
  if (target.empty()) target = "A";

  Laurent out(target);
  for (const auto& [es, c] : terms_) {
    Laurent term = Laurent::constant(c, target);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      long n = es[i];
      if (n == 0) continue;
      const Laurent& v = values.at(vars_[i]);
      if (n > 0) {
        term *= v.pow(static_cast<unsigned long>(n));
      } else {
        if (v.terms().size() != 1)
          throw std::domain_error("MultiPoly::eval: negative power of non-monomial");
        const auto& [e, k] = *v.terms().begin();
        if (k != 1 && k != -1)
          throw std::domain_error("MultiPoly::eval: negative power needs unit coefficient");
        term *= Laurent::monomial(k, -e, target).pow(static_cast<unsigned long>(-n));
      }
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [es, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any_var = false;
    for (long e : es) any_var = any_var || e != 0;
    if (!any_var) {
      out << mag.str();
      continue;
    }
    if (mag != 1) out << mag.str();
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i] == 0) continue;
      out << vars_[i];
      if (es[i] != 1) out << "^" << es[i];
    }
  }
  return out.str();
}

Json MultiPoly::to_json() const {
  Json j;
  j["vars"] = vars_;
  j["terms"] = Json::array();
  for (const auto& [es, c] : terms_)
    j["terms"].push_back(Json::array({Json(es), c.str()}));
  return j;
}

MultiPoly MultiPoly::from_json(const Json& j) {
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    auto es = t.at(0).get<std::vector<long>>();
    Int c(t.at(1).get<std::string>());
    p.set(es, p.coeff(es) + c);
  }
  return p;
}

}  // namespace turaev
