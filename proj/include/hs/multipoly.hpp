#pragma once

// Sparse multivariate polynomials over a coefficient-ring descriptor.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hs/errors.hpp"
#include "hs/ring.hpp"

namespace hs {

enum class VarRole { t, y };

inline bool is_identifier(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

/// Ordered variable names, each tagged as specializable (t) or kept (y).
class VarSet {
 public:
  VarSet() = default;
  VarSet(const std::vector<std::string>& t_names, const std::vector<std::string>& y_names) {
    for (const auto& n : t_names) push(n, VarRole::t);
    for (const auto& n : y_names) push(n, VarRole::y);
  }

  static VarSet with_roles(const std::vector<std::pair<std::string, VarRole>>& vars) {
    VarSet v;
    for (const auto& [n, r] : vars) v.push(n, r);
    return v;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarRole role(std::size_t i) const { return roles_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == n) return i;
    }
    return std::nullopt;
  }
  std::size_t index(const std::string& n) const {
    auto i = find(n);
    if (!i) throw UnknownVariable("unknown variable '" + n + "'", n);
    return *i;
  }

  std::vector<std::size_t> indices(VarRole r) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      if (roles_[i] == r) out.push_back(i);
    }
    return out;
  }
  std::vector<std::string> names_of(VarRole r) const {
    std::vector<std::string> out;
    for (std::size_t i : indices(r)) out.push_back(names_[i]);
    return out;
  }

  /// The variables not listed in `removed`, in the original order.
  VarSet without(const std::vector<std::size_t>& removed) const {
    VarSet v;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (std::find(removed.begin(), removed.end(), i) == removed.end()) v.push(names_[i], roles_[i]);
    }
    return v;
  }

  bool operator==(const VarSet&) const = default;

 private:
  void push(const std::string& n, VarRole r) {
    if (!is_identifier(n)) throw InvalidArgument("bad variable name '" + n + "'", n);
    if (find(n)) throw InvalidArgument("duplicate variable '" + n + "'", n);
    names_.push_back(n);
    roles_.push_back(r);
  }

  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

using Exps = std::vector<unsigned>;

inline unsigned total_degree(const Exps& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

/// Graded lexicographic order, largest monomial first.
struct GrlexDesc {
  bool operator()(const Exps& a, const Exps& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
  }
};

template <CoefficientRing R>
class MultiPoly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;
  using Terms = std::map<Exps, Elem, GrlexDesc>;

  MultiPoly() = default;
  MultiPoly(R ring, VarSet vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

  static MultiPoly constant(const R& ring, const VarSet& vars, const Elem& c) {
    MultiPoly p(ring, vars);
    p.add_term(Exps(vars.size(), 0), c);
    return p;
  }
  static MultiPoly from_int(const R& ring, const VarSet& vars, const Integer& n) {
    return constant(ring, vars, ring.from_int(n));
  }
  static MultiPoly variable(const R& ring, const VarSet& vars, std::size_t i, unsigned power = 1) {
    MultiPoly p(ring, vars);
    Exps e(vars.size(), 0);
    e.at(i) = power;
    p.add_term(e, ring.one());
    return p;
  }
  static MultiPoly variable(const R& ring, const VarSet& vars, const std::string& name) {
    return variable(ring, vars, vars.index(name));
  }

  const R& ring() const { return ring_; }
  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && hs::total_degree(terms_.begin()->first) == 0);
  }
  /// Value of a constant polynomial.
  Elem constant_value() const {
    if (!is_constant()) throw InvalidArgument("polynomial is not constant");
    return terms_.empty() ? ring_.zero() : terms_.begin()->second;
  }
  Elem coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }
  const Exps& leading_exps() const { return terms_.begin()->first; }
  const Elem& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exps& e, const Elem& c) {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  MultiPoly operator-() const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.ring_, a.vars_);
    Exps e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, a.ring_.mul(ca, cb));
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const {
    if (!(vars_ == o.vars_) || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || !ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  MultiPoly scale(const Elem& c) const {
    MultiPoly r(ring_, vars_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, ring_.mul(x, c));
    return r;
  }

  /// Multiplies by a monomial given by an exponent vector.
  MultiPoly shift(const Exps& m) const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) {
      Exps f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(ring_, vars_, ring_.one());
    MultiPoly base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  /// Degree in variable i; -1 for the zero polynomial.
  int degree(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(hs::total_degree(e)));
    return d;
  }
  /// Indices of variables that occur with positive degree.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (degree(i) > 0) out.push_back(i);
    }
    return out;
  }

  /// Coefficients with respect to variable i: out[d] is the coefficient of x_i^d,
  /// kept in the same variable set (with x_i absent).
  std::vector<MultiPoly> coeffs_in(std::size_t i) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree(i) + 1)), MultiPoly(ring_, vars_));
    for (const auto& [e, c] : terms_) {
      Exps f = e;
      f[i] = 0;
      out[e[i]].terms_.emplace(std::move(f), c);
    }
    return out;
  }
  MultiPoly leading_coeff_in(std::size_t i) const {
    if (is_zero()) return *this;
    return coeffs_in(i).back();
  }
  static MultiPoly from_coeffs_in(std::size_t i, const std::vector<MultiPoly>& coeffs, const R& ring,
                                  const VarSet& vars) {
    MultiPoly r(ring, vars);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      for (const auto& [e, c] : coeffs[d].terms_) {
        Exps f = e;
        f[i] += static_cast<unsigned>(d);
        r.add_term(f, c);
      }
    }
    return r;
  }

  /// Coefficients with respect to a group of variables: maps each monomial in
  /// those variables to its coefficient (a polynomial in the other variables,
  /// same variable set). Ordered by the monomial.
  std::map<Exps, MultiPoly, GrlexDesc> coeffs_in(const std::vector<std::size_t>& group) const {
    std::map<Exps, MultiPoly, GrlexDesc> out;
    for (const auto& [e, c] : terms_) {
      Exps key(group.size()), rest = e;
      for (std::size_t g = 0; g < group.size(); ++g) {
        key[g] = e[group[g]];
        rest[group[g]] = 0;
      }
      out.try_emplace(key, ring_, vars_).first->second.add_term(rest, c);
    }
    return out;
  }

  /// Substitutes ring elements for some variables; the result lives in the
  /// remaining variables.
  MultiPoly eval_partial(const std::vector<std::pair<std::size_t, Elem>>& assignment) const {
    std::vector<std::size_t> removed;
    std::vector<std::optional<Elem>> value(nvars());
    for (const auto& [i, v] : assignment) {
      if (i >= nvars()) throw UnknownVariable("assignment to a variable outside the set");
      if (!value[i]) removed.push_back(i);
      value[i] = v;
    }
    const VarSet rest = vars_.without(removed);
    MultiPoly r(ring_, rest);
    std::vector<std::vector<Elem>> powers(nvars());
    for (const auto& [e, c] : terms_) {
      Elem coeff = c;
      Exps f;
      f.reserve(rest.size());
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (value[i]) {
          coeff = ring_.mul(coeff, power_of(*value[i], e[i], powers[i]));
        } else {
          f.push_back(e[i]);
        }
      }
      r.add_term(f, coeff);
    }
    return r;
  }
  MultiPoly eval_partial(const std::map<std::string, Elem>& assignment) const {
    std::vector<std::pair<std::size_t, Elem>> a;
    for (const auto& [n, v] : assignment) a.emplace_back(vars_.index(n), v);
    return eval_partial(a);
  }

  /// Value at a full point (one element per variable).
  Elem eval(const std::vector<Elem>& point) const {
    if (point.size() != nvars()) throw InvalidArgument("point has the wrong number of coordinates");
    std::vector<std::pair<std::size_t, Elem>> a;
    for (std::size_t i = 0; i < point.size(); ++i) a.emplace_back(i, point[i]);
    return eval_partial(a).constant_value();
  }

  /// Replaces x_i by a polynomial over the same variable set.
  MultiPoly substitute(std::size_t i, const MultiPoly& value) const {
    check_compatible(value);
    auto cs = coeffs_in(i);
    MultiPoly r(ring_, vars_);
    for (std::size_t d = cs.size(); d-- > 0;) {
      r = r * value + cs[d];
    }
    return r;
  }

  /// Re-expresses the polynomial over another variable set, matching by name.
  MultiPoly with_vars(const VarSet& target) const {
    std::vector<std::optional<std::size_t>> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      where[i] = target.find(vars_.name(i));
      if (!where[i] && degree(i) > 0) {
        throw UnknownVariable("variable '" + vars_.name(i) + "' missing from target set", vars_.name(i));
      }
    }
    MultiPoly r(ring_, target);
    for (const auto& [e, c] : terms_) {
      Exps f(target.size(), 0);
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (where[i]) f[*where[i]] = e[i];
      }
      r.add_term(f, c);
    }
    return r;
  }

  template <class F>
  MultiPoly map_coeffs(F&& f) const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const {
    if (!(vars_ == o.vars_)) throw InvalidArgument("polynomials over different variable sets");
    if (!(ring_ == o.ring_)) throw InvalidArgument("polynomials over different rings");
  }

  Elem power_of(const Elem& v, unsigned e, std::vector<Elem>& cache) const {
    if (cache.empty()) cache.push_back(ring_.one());
    while (cache.size() <= e) cache.push_back(ring_.mul(cache.back(), v));
    return cache[e];
  }

  R ring_{};
  VarSet vars_;
  Terms terms_;
};

template <CoefficientRing R>
std::string MultiPoly<R>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = ring_.is_negative(c);
    const Elem mag = neg ? ring_.neg(c) : c;
    const bool is_const = hs::total_degree(e) == 0;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (is_const) {
      body = ring_.coeff_string(mag);
    } else if (ring_.equal(mag, ring_.one())) {
      body = mono;
    } else {
      body = ring_.coeff_string(mag) + "*" + mono;
    }
    if (first) {
      if (neg) {
        // a leading negative coefficient is carried by the literal itself
        body = is_const || !ring_.equal(mag, ring_.one()) ? "-" + body : "-1*" + body;
      }
      out = body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

template <CoefficientRing R>
std::string to_string(const MultiPoly<R>& p) {
  return p.to_string();
}

}  // namespace hs
