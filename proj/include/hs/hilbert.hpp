#pragma once

// Search for integer specializations of the t-variables at which every input
// polynomial stays irreducible over Q and primitive over Z, walking the
// t-variables one at a time along arithmetic progressions.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hs/factor.hpp"
#include "hs/gcd.hpp"
#include "hs/schinzel.hpp"

namespace hs {

using ZMultiPoly = MultiPoly<IntegerRing>;

struct HilbertBudget {
  std::size_t hits = 5;
  std::uint64_t members = 10'000;
  bool trace = false;
};

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

struct HilbertVerdict {
  std::string specialized;
  Integer content;
  bool primitive = false;
  bool irreducible = false;
  std::string evidence;
  std::string certificate_hash;
};

struct HilbertHit {
  std::vector<Integer> m;
  std::vector<HilbertVerdict> verdicts;
  Integer guard_value;

  bool ok() const {
    if (guard_value == 0) return false;
    for (const auto& v : verdicts) {
      if (!v.primitive || !v.irreducible) return false;
    }
    return true;
  }
};

/// Verdicts of each polynomial at the point m (one value per t-variable), computed afresh.
inline HilbertHit evaluate_hilbert_point(const std::vector<ZMultiPoly>& polys, const ZMultiPoly& guard,
                                         const std::vector<Integer>& m) {
  const VarSet& vars = polys.front().vars();
  const auto ts = vars.indices(VarRole::t);
  std::vector<std::pair<std::size_t, Integer>> at;
  for (std::size_t h = 0; h < ts.size(); ++h) at.emplace_back(ts[h], m.at(h));
  HilbertHit hit{m, {}, guard.eval_partial(at).constant_value()};
  for (const auto& p : polys) {
    const ZMultiPoly s = p.eval_partial(at);
    HilbertVerdict v;
    v.specialized = s.to_string();
    if (s.is_zero()) {
      v.content = 0;
      hit.verdicts.push_back(v);
      continue;
    }
    const auto cp = content_primitive(s);
    v.content = cp.content;
    v.primitive = detail::is_unit_value(s.ring(), cp.content);
    if (!s.is_constant()) {
      const auto fz = factor_zz(to_dense(s, single_variable<IntegerRing>({s})));
      v.irreducible = fz.factors.size() == 1 && fz.factors.front().second == 1;
      v.evidence = detail::join_strings(fz.evidence);
      v.certificate_hash = hex64(fnv1a64(v.specialized + "|" + v.evidence));
    }
    hit.verdicts.push_back(v);
  }
  return hit;
}

struct HilbertLevel {
  std::vector<Integer> prefix;
  std::string variable;
  std::vector<Integer> primes;
  Integer omega = 1;
  Integer alpha = 0;
  bool dead = false;
};

struct HilbertReport {
  std::vector<HilbertHit> hits;
  std::uint64_t members_checked = 0;
  std::string input_irreducibility;  // "verified" or "asserted"
  bool budget_exhausted = false;
  std::vector<HilbertLevel> levels;
  std::vector<std::string> trace;
};

namespace detail {

inline ZMultiPoly derivative_in(const ZMultiPoly& p, std::size_t v) {
  auto cs = p.coeffs_in(v);
  std::vector<ZMultiPoly> out;
  for (std::size_t d = 1; d < cs.size(); ++d) out.push_back(cs[d].scale(Integer(static_cast<unsigned long>(d))));
  return ZMultiPoly::from_coeffs_in(v, out, p.ring(), p.vars());
}

inline std::string tuple_string(const std::vector<Integer>& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + m[i].get_str();
  return s + ")";
}

/// Builds the progression for variable ts[i] once ts[0..i) are fixed to prefix.
inline HilbertLevel hilbert_level(const std::vector<ZMultiPoly>& polys, const std::vector<std::size_t>& ts,
                                  const std::vector<Integer>& prefix) {
  const IntegerRing Z;
  const std::size_t i = prefix.size();
  const VarSet& vars = polys.front().vars();
  std::vector<std::pair<std::size_t, Integer>> at;
  for (std::size_t h = 0; h < i; ++h) at.emplace_back(ts[h], prefix[h]);
  std::vector<ZMultiPoly> qs;
  for (const auto& p : polys) qs.push_back(p.eval_partial(at));
  const VarSet& qv = qs.front().vars();
  const std::size_t var = qv.index(vars.name(ts[i]));

  HilbertLevel level{prefix, vars.name(ts[i]), {}, 1, 0, false};
  std::vector<Integer> primes;
  for (const auto& q : qs) {
    std::vector<std::size_t> group;
    for (std::size_t j = 0; j < qv.size(); ++j) {
      if (j != var) group.push_back(j);
    }
    Family<IntegerRing> coeffs;
    for (const auto& [e, c] : q.coeffs_in(group)) coeffs.push_back(c);
    try {
      const auto d = delta_core(coeffs, var);
      for (const auto& p : Z.prime_divisors(d.delta)) primes.push_back(p);
    } catch (const NotCoprimeFamily&) {
    }
  }
  long bound = 0;
  for (std::size_t h = i; h < ts.size(); ++h) {
    long s = 0;
    for (const auto& q : qs) s += std::max(0, q.degree(qv.index(vars.name(ts[h]))));
    bound = std::max(bound, s);
  }
  for (const auto& p : sieve_primes(Integer(bound))) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  level.primes = primes;

  std::vector<std::size_t> rest;
  for (std::size_t h = i; h < ts.size(); ++h) rest.push_back(qv.index(vars.name(ts[h])));
  std::vector<RingCongruence<IntegerRing>> congruences;
  for (const auto& p : primes) {
    std::uint64_t budget = kResidueBudget;
    auto tuple = scan_tuples(Z.residues(p), rest.size(), budget, [&](const std::vector<Integer>& r) {
      std::vector<std::pair<std::size_t, Integer>> a;
      for (std::size_t h = 0; h < rest.size(); ++h) a.emplace_back(rest[h], r[h]);
      for (const auto& q : qs) {
        if (reduce_mod(q.eval_partial(a), p).is_zero()) return false;
      }
      return true;
    });
    if (!tuple) {
      level.dead = true;
      return level;
    }
    congruences.push_back({tuple->front(), p});
    level.omega *= p;
  }
  level.alpha = ring_crt(Z, congruences);
  return level;
}

/// Calls visit on every k-tuple of naturals with coordinate sum s, in lexicographic order.
template <class Visit>
bool tuples_with_sum(std::size_t k, std::uint64_t s, std::vector<std::uint64_t>& acc, Visit&& visit) {
  if (acc.size() + 1 == k) {
    acc.push_back(s);
    const bool stop = visit(acc);
    acc.pop_back();
    return stop;
  }
  for (std::uint64_t first = 0; first <= s; ++first) {
    acc.push_back(first);
    const bool stop = tuples_with_sum(k, s - first, acc, visit);
    acc.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

/// Validates the input and enumerates progression members until budget.hits
/// hits are found or budget.members points have been tested.
inline HilbertReport hilbert_search(const std::vector<ZMultiPoly>& polys, const std::optional<ZMultiPoly>& guard_in,
                                    const HilbertBudget& budget = {}) {
  if (polys.empty()) throw InvalidArgument("no polynomials given");
  const VarSet& vars = polys.front().vars();
  const IntegerRing Z;
  const auto ys = vars.indices(VarRole::y);
  if (ys.size() != 1) throw InvalidArgument("exactly one y variable is supported");
  const std::size_t y = ys.front();
  const auto ts = vars.indices(VarRole::t);

  HilbertReport report;
  report.input_irreducibility = "verified";
  for (const auto& p : polys) {
    if (!(p.vars() == vars)) throw InvalidArgument("polynomials over different variable sets");
    if (p.is_zero()) throw ZeroPolynomial("zero polynomial in the input");
    if (p.degree(y) < 1) throw DegreeZeroInY(p.to_string() + " has degree 0 in " + vars.name(y), p.to_string());
    const auto cp = content_primitive(p);
    if (!Z.is_unit(cp.content)) {
      throw NotPrimitiveInput(p.to_string() + " has content " + cp.content.get_str(), cp.content.get_str());
    }
    if (gcd_poly(p, detail::derivative_in(p, y)).degree(y) > 0) {
      throw InvalidArgument(p.to_string() + " is not squarefree in " + vars.name(y), p.to_string());
    }
    ZMultiPoly ycontent(Z, vars);
    for (const auto& c : p.coeffs_in(y)) ycontent = gcd_poly(ycontent, c);
    if (p.degree(y) != 1 || !detail::is_unit_poly(ycontent)) report.input_irreducibility = "asserted";
  }
  ZMultiPoly product = ZMultiPoly::constant(Z, vars, 1);
  for (const auto& p : polys) product *= p;
  require_no_fixed_divisor(product);

  const ZMultiPoly guard = guard_in ? *guard_in : ZMultiPoly::constant(Z, vars, 1);
  if (!(guard.vars() == vars)) throw InvalidArgument("guard over a different variable set");
  if (guard.is_zero()) throw GuardUnsatisfiable("the guard polynomial is zero");
  if (guard.degree(y) > 0) throw InvalidArgument("the guard must not involve " + vars.name(y));

  const std::size_t k = ts.size();
  std::map<std::vector<Integer>, HilbertLevel> cache;
  auto level_for = [&](const std::vector<Integer>& prefix) -> const HilbertLevel& {
    auto it = cache.find(prefix);
    if (it != cache.end()) return it->second;
    HilbertLevel level = detail::hilbert_level(polys, ts, prefix);
    std::ostringstream line;
    line << "level " << level.variable << " prefix " << detail::tuple_string(prefix) << " primes {";
    for (std::size_t i = 0; i < level.primes.size(); ++i) line << (i ? "," : "") << level.primes[i].get_str();
    line << "} omega " << level.omega.get_str() << " alpha " << level.alpha.get_str() << (level.dead ? " dead" : "");
    report.trace.push_back(line.str());
    report.levels.push_back(level);
    return cache.emplace(prefix, std::move(level)).first->second;
  };

  auto test = [&](const std::vector<Integer>& m) {
    ++report.members_checked;
    HilbertHit hit = evaluate_hilbert_point(polys, guard, m);
    if (hit.ok()) {
      report.trace.push_back("hit " + detail::tuple_string(m));
      report.hits.push_back(std::move(hit));
    } else if (budget.trace) {
      std::string why;
      if (hit.guard_value == 0) why = "guard vanishes";
      for (std::size_t j = 0; j < hit.verdicts.size() && why.empty(); ++j) {
        const auto& v = hit.verdicts[j];
        if (!v.primitive) why = v.specialized + " has content " + v.content.get_str();
        else if (!v.irreducible) why = v.specialized + " is reducible";
      }
      report.trace.push_back("reject " + detail::tuple_string(m) + ": " + why);
    }
    return report.hits.size() >= budget.hits;
  };

  if (k == 0) {
    test({});
  } else {
    for (std::uint64_t s = 0; report.members_checked < budget.members && report.hits.size() < budget.hits; ++s) {
      std::vector<std::uint64_t> acc;
      const bool stop = detail::tuples_with_sum(k, s, acc, [&](const std::vector<std::uint64_t>& ell) {
        if (report.members_checked >= budget.members) return true;
        std::vector<Integer> m;
        for (std::size_t h = 0; h < k; ++h) {
          const HilbertLevel& level = level_for(m);
          if (level.dead) {
            ++report.members_checked;
            return false;
          }
          m.push_back(level.alpha + level.omega * Integer(static_cast<unsigned long>(ell[h])));
        }
        return test(m);
      });
      if (stop) break;
    }
  }
  report.budget_exhausted = report.hits.size() < budget.hits;
  if (report.hits.empty()) {
    std::string tail;
    const std::size_t from = report.trace.size() > 8 ? report.trace.size() - 8 : 0;
    for (std::size_t i = from; i < report.trace.size(); ++i) tail += "\n  " + report.trace[i];
    throw BudgetExceeded("no hit within " + std::to_string(report.members_checked) +
                         " progression members; the budget is undersized" + tail);
  }
  return report;
}

}  // namespace hs
