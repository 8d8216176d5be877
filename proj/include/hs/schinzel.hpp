#pragma once

// Bezout parameters, fixed prime divisors, coprime specializations and
// arithmetic-progression certificates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hs/gcd.hpp"
#include "hs/upoly.hpp"

namespace hs {

inline constexpr std::uint64_t kResidueBudget = 1'000'000;
inline constexpr std::uint64_t kGuardSkipLimit = 10'000;

template <class R>
using Family = std::vector<MultiPoly<R>>;

template <GcdRing R>
struct DeltaCertificate {
  typename R::Elem delta;
  std::vector<MultiPoly<R>> witnesses;
};

namespace detail {

template <GcdRing R>
typename R::Elem lcm_elem(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
  return ring.normalize(ring.mul(ring.exact_quo(a, ring.gcd(a, b)), b));
}

template <GcdRing R>
std::string join(const R& ring, const std::vector<typename R::Elem>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + ring.to_string(x);
  return "(" + out + ")";
}

inline std::string join_strings(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

template <GcdRing R>
std::string family_string(const Family<R>& f) {
  std::vector<std::string> s;
  for (const auto& p : f) s.push_back(p.to_string());
  return join_strings(s);
}

/// Bezout certificate of a family in one variable; a single member must be a nonzero constant.
template <GcdRing R>
DeltaCertificate<R> delta_core(const Family<R>& family, std::size_t var) {
  const R& ring = family.front().ring();
  const VarSet& vars = family.front().vars();
  const FractionField<R> K{ring};
  const std::size_t n = family.size();
  std::vector<FieldPoly<R>> members;
  for (const auto& p : family) members.push_back(to_field(K, to_dense(p, var)));

  FieldPoly<R> g = members[0];
  std::vector<FieldPoly<R>> cof(n);
  cof[0].c = {K.one()};
  for (std::size_t j = 1; j < n; ++j) {
    auto x = ext_gcd_fieldpoly(K, g, members[j]);
    for (std::size_t i = 0; i < j; ++i) cof[i] = dense_mul(K, x.u, cof[i]);
    cof[j] = std::move(x.v);
    g = std::move(x.g);
  }
  if (g.deg() > 0) {
    throw NotCoprimeFamily("family " + family_string(family) + " has a common factor of positive degree",
                           family_string(family));
  }
  if (n == 1) {
    cof[0] = dense_scale(K, cof[0], K.inv(g.lc()));
  }
  auto l = ring.one();
  for (const auto& c : cof) {
    for (const auto& x : c.c) l = lcm_elem(ring, l, x.den);
  }
  DeltaCertificate<R> out{l, {}};
  for (const auto& c : cof) {
    DensePoly<R> w;
    for (const auto& x : c.c) w.c.push_back(ring.mul(x.num, ring.exact_quo(l, x.den)));
    trim(ring, w);
    out.witnesses.push_back(from_dense(w, ring, vars, var));
  }
  return out;
}

template <GcdRing R>
void check_family_shape(const std::vector<Family<R>>& families, std::size_t min_members) {
  if (families.empty()) throw FewerThanTwoPolys("no families given");
  const VarSet& vars = families.front().front().vars();
  for (const auto& f : families) {
    if (f.size() < min_members) {
      throw FewerThanTwoPolys("each family needs at least " + std::to_string(min_members) + " members");
    }
    for (const auto& p : f) {
      if (p.is_zero()) throw ZeroPolyInFamily("zero polynomial in family " + family_string(f));
      if (!(p.vars() == vars)) throw InvalidArgument("family members over different variable sets");
    }
  }
}

template <GcdRing R>
Family<R> drop_zeros(const Family<R>& f) {
  Family<R> out;
  for (const auto& p : f) {
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

/// Calls visit(tuple) for each tuple in residues^k, in odometer order with the
/// last coordinate fastest, until visit returns true. Returns the stopping tuple.
template <class Elem, class Visit>
std::optional<std::vector<Elem>> scan_tuples(const std::vector<Elem>& residues, std::size_t k, std::uint64_t& budget,
                                             Visit&& visit) {
  std::vector<std::size_t> idx(k, 0);
  std::vector<Elem> tuple(k, residues.front());
  for (;;) {
    if (budget == 0) throw BudgetExceeded("residue enumeration budget exhausted");
    --budget;
    for (std::size_t i = 0; i < k; ++i) tuple[i] = residues[idx[i]];
    if (visit(tuple)) return tuple;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < residues.size()) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

/// True iff every family has a member whose value at the point is nonzero mod p.
template <SearchRing R>
bool families_clear(const std::vector<Family<R>>& families, const std::vector<typename R::Elem>& point,
                    const typename R::Elem& p) {
  for (const auto& f : families) {
    const auto& ring = f.front().ring();
    const bool some = std::any_of(f.begin(), f.end(), [&](const MultiPoly<R>& m) {
      return !ring.is_zero(ring.rem(m.eval(point), p));
    });
    if (!some) return false;
  }
  return true;
}

template <GcdRing R>
bool is_unit_value(const R& ring, const typename R::Elem& x) {
  return !ring.is_zero(x) && ring.is_unit(x);
}

template <GcdRing R>
bool is_unit_poly(const MultiPoly<R>& p) {
  return p.is_constant() && is_unit_value(p.ring(), p.constant_value());
}

}  // namespace detail

/// Bezout parameter of a family of univariate polynomials: sum V_i P_i = delta.
template <GcdRing R>
DeltaCertificate<R> compute_delta(const Family<R>& family) {
  if (family.size() < 2) throw FewerThanTwoPolys("compute_delta needs at least two polynomials");
  detail::check_family_shape<R>({family}, 2);
  const auto& vars = family.front().vars();
  const auto ts = vars.indices(VarRole::t);
  return detail::delta_core(family, single_variable(family, ts.empty() ? 0 : ts.front()));
}

// ---------------------------------------------------------------------------
// Fixed prime divisors

template <SearchRing R>
struct FixedPrimeEvidence {
  typename R::Elem prime;
  Integer norm;
  std::vector<std::string> log;  // one line per residue tuple
};

template <SearchRing R>
struct ClearedPrime {
  typename R::Elem prime;
  std::vector<typename R::Elem> witness;  // residue tuple with a nonzero reduction
};

template <SearchRing R>
struct FixedDivisorReport {
  std::vector<std::string> t_names;
  typename R::Elem content;
  std::vector<typename R::Elem> content_prime_divisors;
  std::vector<FixedPrimeEvidence<R>> fixed_primes;
  std::vector<ClearedPrime<R>> cleared;
  Integer search_bound;

  bool has_fixed_divisor() const { return !content_prime_divisors.empty() || !fixed_primes.empty(); }
  std::vector<typename R::Elem> fixed_prime_list() const {
    std::vector<typename R::Elem> out;
    for (const auto& f : fixed_primes) out.push_back(f.prime);
    return out;
  }
};

/// Primes p such that P(r, y) = 0 mod p for every specialization r of the
/// t-variables. Content primes are reported separately; the remaining fixed
/// primes have norm at most the largest t-degree, so the scan is complete.
template <SearchRing R>
FixedDivisorReport<R> fixed_prime_divisors(const MultiPoly<R>& p, std::uint64_t budget = kResidueBudget) {
  if (p.is_zero()) throw ZeroPolynomial("fixed divisors of the zero polynomial");
  const R& ring = p.ring();
  const auto ts = p.vars().indices(VarRole::t);
  FixedDivisorReport<R> report;
  report.t_names = p.vars().names_of(VarRole::t);
  auto cp = content_primitive(p);
  report.content = cp.content;
  if (!ring.is_unit(cp.content)) report.content_prime_divisors = ring.prime_divisors(cp.content);
  int bound = 0;
  for (std::size_t i : ts) bound = std::max(bound, cp.primitive.degree(i));
  report.search_bound = bound;
  for (const auto& prime : ring.primes_up_to_norm(Integer(bound))) {
    const auto residues = ring.residues(prime);
    std::vector<std::string> log;
    auto witness = detail::scan_tuples(residues, ts.size(), budget, [&](const std::vector<typename R::Elem>& r) {
      std::vector<std::pair<std::size_t, typename R::Elem>> a;
      for (std::size_t i = 0; i < ts.size(); ++i) a.emplace_back(ts[i], r[i]);
      const auto value = reduce_mod(cp.primitive.eval_partial(a), prime);
      if (!value.is_zero()) return true;
      log.push_back(detail::join(ring, r) + " -> 0");
      return false;
    });
    if (witness) {
      report.cleared.push_back({prime, *witness});
    } else {
      report.fixed_primes.push_back({prime, ring.norm(prime), std::move(log)});
    }
  }
  return report;
}

/// P = prod_i sum_j P_ij * w_ij with fresh kept variables w_ij: a prime divides
/// every value of P iff it divides all members of some family at every point.
template <GcdRing R>
MultiPoly<R> family_product(const std::vector<Family<R>>& families) {
  const VarSet& base = families.front().front().vars();
  std::vector<std::pair<std::string, VarRole>> all;
  for (std::size_t i = 0; i < base.size(); ++i) all.emplace_back(base.name(i), base.role(i));
  std::string stem = "w";
  while (std::any_of(base.names().begin(), base.names().end(),
                     [&](const std::string& n) { return n.rfind(stem, 0) == 0; })) {
    stem += "w";
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (std::size_t j = 0; j < families[i].size(); ++j) {
      all.emplace_back(stem + std::to_string(i + 1) + "_" + std::to_string(j + 1), VarRole::y);
    }
  }
  const VarSet ext = VarSet::with_roles(all);
  const R& ring = families.front().front().ring();
  MultiPoly<R> product = MultiPoly<R>::constant(ring, ext, ring.one());
  for (std::size_t i = 0; i < families.size(); ++i) {
    MultiPoly<R> sum(ring, ext);
    for (std::size_t j = 0; j < families[i].size(); ++j) {
      sum += families[i][j].with_vars(ext) *
             MultiPoly<R>::variable(ring, ext, stem + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
    product *= sum;
  }
  return product;
}

template <SearchRing R>
void require_no_fixed_divisor(const MultiPoly<R>& p, std::uint64_t budget = kResidueBudget) {
  const auto report = fixed_prime_divisors(p, budget);
  const R& ring = p.ring();
  if (!report.content_prime_divisors.empty()) {
    const auto& q = report.content_prime_divisors.front();
    throw FixedDivisorPresent("prime " + ring.to_string(q) + " divides the content", ring.to_string(q));
  }
  if (!report.fixed_primes.empty()) {
    const auto& q = report.fixed_primes.front().prime;
    throw FixedDivisorPresent("prime " + ring.to_string(q) + " divides every specialization", ring.to_string(q));
  }
}

// ---------------------------------------------------------------------------
// Progression certificates

template <SearchRing R>
struct ProgressionCertificate {
  using Elem = typename R::Elem;
  R ring;
  VarSet vars;                // t-variables; the last one runs along the progression
  std::vector<Elem> prefix;   // values of all but the last variable
  Elem omega, alpha;
  MultiPoly<R> guard;         // members where this vanishes are skipped
  MultiPoly<R> bezout_guard;  // nonzero at the prefix; constant 1 for one variable
  std::string target = "coprime-values";
  std::vector<std::string> trace;

  Elem member(std::uint64_t n) const { return ring.add(alpha, ring.mul(omega, ring.enumerate(n))); }
  std::vector<Elem> point(const Elem& m) const {
    std::vector<Elem> pt = prefix;
    pt.push_back(m);
    return pt;
  }
};

namespace detail {

template <SearchRing R>
struct UnivarCore {
  typename R::Elem omega, alpha;
  std::vector<DeltaCertificate<R>> deltas;
  std::vector<std::pair<typename R::Elem, typename R::Elem>> residues;  // (prime, chosen residue)
};

/// CRT construction for families in the single variable `var` (other variables absent).
template <SearchRing R>
UnivarCore<R> univar_core(const std::vector<Family<R>>& families, std::size_t var, std::vector<std::string>& trace) {
  const R& ring = families.front().front().ring();
  const std::size_t nv = families.front().front().nvars();
  UnivarCore<R> out;
  std::vector<typename R::Elem> primes;
  for (const auto& f : families) {
    out.deltas.push_back(delta_core(f, var));
    const auto& d = out.deltas.back().delta;
    trace.push_back("delta of " + family_string(f) + " = " + ring.to_string(d));
    if (ring.is_unit(d)) continue;
    for (const auto& p : ring.prime_divisors(d)) {
      if (std::none_of(primes.begin(), primes.end(), [&](const auto& q) { return ring.equal(p, q); })) {
        primes.push_back(p);
      }
    }
  }
  std::sort(primes.begin(), primes.end(), [&](const auto& a, const auto& b) {
    const int c = cmp(ring.norm(a), ring.norm(b));
    return c != 0 ? c < 0 : ring.compare(a, b) < 0;
  });
  std::vector<RingCongruence<R>> congruences;
  auto omega = ring.one();
  for (const auto& p : primes) {
    const auto residues = ring.residues(p);
    std::optional<typename R::Elem> chosen;
    for (const auto& r : residues) {
      std::vector<typename R::Elem> pt(nv, ring.zero());
      pt[var] = r;
      if (families_clear(families, pt, p)) {
        chosen = r;
        break;
      }
    }
    if (!chosen) {
      for (std::size_t i = 0; i < families.size(); ++i) {
        const bool all_vanish = std::all_of(residues.begin(), residues.end(), [&](const auto& r) {
          std::vector<typename R::Elem> pt(nv, ring.zero());
          pt[var] = r;
          return !families_clear<R>({families[i]}, pt, p);
        });
        if (all_vanish) {
          throw AVViolation("prime " + ring.to_string(p) + " divides every value of family " +
                                std::to_string(i + 1) + " " + family_string(families[i]),
                            ring.to_string(p));
        }
      }
      throw AVViolation("prime " + ring.to_string(p) +
                            " is a fixed divisor of the product of the families: no residue clears every family",
                        ring.to_string(p));
    }
    trace.push_back("prime " + ring.to_string(p) + ": residue " + ring.to_string(*chosen));
    out.residues.emplace_back(p, *chosen);
    congruences.push_back({*chosen, p});
    omega = ring.mul(omega, p);
  }
  out.omega = ring.normalize(omega);
  out.alpha = ring_crt(ring, congruences);
  trace.push_back("omega = " + ring.to_string(out.omega) + ", alpha = " + ring.to_string(out.alpha));
  return out;
}

template <SearchRing R>
typename R::Elem family_gcd_at(const Family<R>& f, const std::vector<typename R::Elem>& point) {
  const R& ring = f.front().ring();
  auto g = ring.zero();
  for (const auto& m : f) g = ring.gcd(g, m.eval(point));
  return ring.normalize(g);
}

}  // namespace detail

template <SearchRing R>
struct CopschResult {
  typename R::Elem m;
  ProgressionCertificate<R> cert;
  std::vector<DeltaCertificate<R>> deltas;
};

/// Coprime specialization of families in one t-variable.
template <SearchRing R>
CopschResult<R> copsch_search_univar(const std::vector<Family<R>>& families,
                                     std::optional<MultiPoly<R>> guard = std::nullopt) {
  detail::check_family_shape(families, 2);
  const MultiPoly<R>& first = families.front().front();
  const R& ring = first.ring();
  const VarSet& vars = first.vars();
  if (vars.size() != 1) throw InvalidArgument("univariate search expects exactly one t-variable");
  const MultiPoly<R> g = guard.value_or(MultiPoly<R>::constant(ring, vars, ring.one()));
  if (g.is_zero()) throw GuardUnsatisfiable("guard polynomial is zero");
  if (!(g.vars() == vars)) throw InvalidArgument("guard over a different variable set");

  std::vector<std::string> trace;
  auto core = detail::univar_core(families, 0, trace);
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto d = detail::family_gcd_at(families[i], {core.alpha});
    if (!detail::is_unit_value(ring, d)) {
      throw InternalError("values of family " + std::to_string(i + 1) + " at " + ring.to_string(core.alpha) +
                          " share " + ring.to_string(d));
    }
  }
  CopschResult<R> out{core.alpha,
                      {ring, vars, {}, core.omega, core.alpha, g, MultiPoly<R>::constant(ring, vars, ring.one()),
                       "coprime-values", std::move(trace)},
                      std::move(core.deltas)};
  for (std::uint64_t n = 0;; ++n) {
    if (n > kGuardSkipLimit) throw GuardUnsatisfiable("guard vanishes on the first members of the progression");
    const auto m = out.cert.member(n);
    if (!ring.is_zero(g.eval({m}))) {
      out.m = m;
      break;
    }
  }
  return out;
}

namespace detail {

template <SearchRing R>
ProgressionCertificate<R> prispe(const std::vector<Family<R>>& families, const MultiPoly<R>& guard,
                                 std::vector<std::string>& trace, std::uint64_t& budget) {
  using Elem = typename R::Elem;
  const R& ring = guard.ring();
  const VarSet& vars = guard.vars();
  const std::size_t k = vars.size();
  const MultiPoly<R> one = MultiPoly<R>::constant(ring, vars, ring.one());
  std::vector<Family<R>> fams;
  for (const auto& f : families) fams.push_back(drop_zeros(f));

  if (k == 1) {
    auto core = univar_core(fams, 0, trace);
    return {ring, vars, {}, core.omega, core.alpha, guard, one, "coprime-values", {}};
  }
  const std::size_t last = k - 1;
  const std::string level = "[" + vars.name(last) + "] ";

  int bound = 0;
  for (std::size_t h = 0; h < k; ++h) {
    int d = 0;
    for (const auto& f : fams) {
      int m = 0;
      for (const auto& p : f) m = std::max(m, p.degree(h));
      d += m;
    }
    bound = std::max(bound, d);
  }
  const auto small = ring.primes_up_to_norm(Integer(bound));
  std::vector<Elem> shift(last, ring.zero());
  auto pi = ring.one();
  {
    std::vector<std::vector<RingCongruence<R>>> per_coord(last);
    for (const auto& p : small) {
      auto hit = scan_tuples(ring.residues(p), k, budget,
                             [&](const std::vector<Elem>& r) { return families_clear(fams, r, p); });
      if (!hit) throw FixedDivisorPresent("prime " + ring.to_string(p) + " divides every specialization",
                                          ring.to_string(p));
      trace.push_back(level + "prime " + ring.to_string(p) + ": residue tuple " + join(ring, *hit));
      for (std::size_t h = 0; h < last; ++h) per_coord[h].push_back({(*hit)[h], p});
      pi = ring.mul(pi, p);
    }
    for (std::size_t h = 0; h < last; ++h) shift[h] = ring_crt(ring, per_coord[h]);
  }
  trace.push_back(level + "degree bound " + std::to_string(bound) + ", pi = " + ring.to_string(pi) +
                  ", shift = " + join(ring, shift));

  MultiPoly<R> delta = one;
  for (const auto& f : fams) delta *= bezout_in_var(f, last).delta;
  trace.push_back(level + "Delta = " + delta.to_string());

  auto substitute = [&](MultiPoly<R> p) {
    for (std::size_t h = 0; h < last; ++h) {
      const auto lin = MultiPoly<R>::variable(ring, vars, h).scale(pi) + MultiPoly<R>::constant(ring, vars, shift[h]);
      p = p.substitute(h, lin);
    }
    return p;
  };
  const VarSet sub_vars = vars.without({last});
  const MultiPoly<R> sub_guard =
      (substitute(guard).leading_coeff_in(last) * substitute(delta)).with_vars(sub_vars);
  std::vector<Family<R>> sub_fams;
  for (const auto& f : fams) {
    Family<R> coeffs;
    for (const auto& p : f) {
      for (const auto& c : substitute(p).coeffs_in(last)) {
        if (c.is_zero()) continue;
        auto cv = c.with_vars(sub_vars);
        if (std::none_of(coeffs.begin(), coeffs.end(), [&](const auto& x) { return x == cv; })) {
          coeffs.push_back(std::move(cv));
        }
      }
    }
    trace.push_back(level + "coefficient family " + family_string(coeffs));
    sub_fams.push_back(std::move(coeffs));
  }
  trace.push_back(level + "recursive guard " + sub_guard.to_string());

  const ProgressionCertificate<R> sub = prispe(sub_fams, sub_guard, trace, budget);
  std::vector<Elem> v;
  for (std::uint64_t n = 0;; ++n) {
    if (n > kGuardSkipLimit) throw GuardUnsatisfiable("recursive guard vanishes along the progression");
    v = sub.point(sub.member(n));
    if (!ring.is_zero(sub_guard.eval(v))) {
      trace.push_back(level + "progression index " + ring.to_string(ring.enumerate(n)) + " gives " + join(ring, v));
      break;
    }
  }
  std::vector<Elem> prefix;
  std::vector<std::pair<std::size_t, Elem>> assign;
  for (std::size_t h = 0; h < last; ++h) {
    prefix.push_back(ring.add(ring.mul(pi, v[h]), shift[h]));
    assign.emplace_back(h, prefix.back());
  }
  trace.push_back(level + "prefix " + join(ring, prefix));

  std::vector<Family<R>> spec;
  for (const auto& f : fams) {
    Family<R> g;
    for (const auto& p : f) {
      auto q = p.eval_partial(assign);
      if (!q.is_zero()) g.push_back(std::move(q));
    }
    spec.push_back(std::move(g));
  }
  auto core = univar_core(spec, 0, trace);
  return {ring, vars, prefix, core.omega, core.alpha, guard * delta, delta, "coprime-values", {}};
}

}  // namespace detail

/// Coprime specialization of families in t_1..t_k: a prefix for t_1..t_{k-1}
/// and a progression in t_k. Follows the reduction t_h -> pi*v_h + u_h and
/// recurses on the t_k-coefficients.
template <SearchRing R>
ProgressionCertificate<R> copsch_search_multivar(const std::vector<Family<R>>& families,
                                                 std::optional<MultiPoly<R>> guard = std::nullopt,
                                                 std::uint64_t budget = kResidueBudget) {
  detail::check_family_shape(families, 2);
  const MultiPoly<R>& first = families.front().front();
  const R& ring = first.ring();
  const VarSet& vars = first.vars();
  if (vars.size() == 0) throw InvalidArgument("no t-variables");
  if (!vars.indices(VarRole::y).empty()) throw InvalidArgument("families must involve t-variables only");
  const MultiPoly<R> g = guard.value_or(MultiPoly<R>::constant(ring, vars, ring.one()));
  if (g.is_zero()) throw GuardUnsatisfiable("guard polynomial is zero");
  if (!(g.vars() == vars)) throw InvalidArgument("guard over a different variable set");

  for (const auto& f : families) {
    MultiPoly<R> common(ring, vars);
    for (const auto& p : f) common = gcd_poly(common, p);
    if (!common.is_constant()) {
      throw NotCoprimeFamily("family " + detail::family_string(f) + " has common factor " + common.to_string(),
                             common.to_string());
    }
  }
  require_no_fixed_divisor(family_product(families), budget);

  std::vector<std::string> trace;
  if (vars.size() == 1) {
    auto r = copsch_search_univar(families, std::optional<MultiPoly<R>>(g));
    return r.cert;
  }
  auto cert = detail::prispe(families, g, trace, budget);
  cert.trace = std::move(trace);
  return cert;
}

template <SearchRing R>
struct ProgressionFailure {
  std::string index;  // progression index l
  typename R::Elem member;
  std::size_t family = 0;
  std::string witness;  // common divisor of the values
};

template <SearchRing R>
struct ProgressionReport {
  bool passed = true;
  std::size_t checked = 0, skipped = 0;
  std::optional<ProgressionFailure<R>> failure;
  std::vector<std::string> log;

  void require_valid() const {
    if (!failure) return;
    throw CertificateInvalid("family " + std::to_string(failure->family + 1) + " fails at progression index " +
                                 failure->index + ": common divisor " + failure->witness,
                             failure->witness);
  }
};

/// Re-checks the certified property at members alpha + omega*l for
/// l = 0, 1, -1, 2, -2, ..., skipping zeros of the guard.
template <SearchRing R>
ProgressionReport<R> certify_progression(const ProgressionCertificate<R>& cert, const std::vector<Family<R>>& families,
                                         std::size_t samples) {
  const R& ring = cert.ring;
  if (cert.prefix.size() + 1 != cert.vars.size()) throw InvalidArgument("prefix length does not match variables");
  if (ring.is_zero(cert.omega)) throw InvalidArgument("omega must be nonzero");
  ProgressionReport<R> report;
  for (std::uint64_t n = 0; report.checked < samples; ++n) {
    if (report.skipped > kGuardSkipLimit) {
      report.passed = false;
      report.failure = ProgressionFailure<R>{ring.to_string(ring.enumerate(n)), cert.member(n), 0,
                                             "guard vanishes on every sampled member"};
      return report;
    }
    const auto m = cert.member(n);
    const auto pt = cert.point(m);
    const std::string idx = ring.to_string(ring.enumerate(n));
    if (ring.is_zero(cert.guard.eval(pt))) {
      ++report.skipped;
      report.log.push_back("l = " + idx + ": guard zero, skipped");
      continue;
    }
    ++report.checked;
    std::string line = "l = " + idx + ", m = " + ring.to_string(m) + ": gcds";
    for (std::size_t i = 0; i < families.size(); ++i) {
      const auto d = detail::family_gcd_at(families[i], pt);
      line += " " + ring.to_string(d);
      if (!detail::is_unit_value(ring, d)) {
        report.passed = false;
        report.failure = ProgressionFailure<R>{idx, m, i, ring.to_string(d)};
        report.log.push_back(line);
        return report;
      }
    }
    report.log.push_back(line);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Value gcd sets

template <GcdRing R>
struct ValueGcdReport {
  std::vector<std::string> window;
  std::vector<MultiPoly<R>> gcds;      // one per window point
  std::vector<MultiPoly<R>> distinct;  // canonical order
  bool stable = true;
  std::optional<std::pair<MultiPoly<R>, MultiPoly<R>>> violating_pair;
  std::optional<MultiPoly<R>> violating_gcd;
};

/// Total order used to list polynomials canonically: total degree, then terms.
template <CoefficientRing R>
bool poly_less(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return GrlexDesc{}(ib->first, ia->first);
    const int c = a.ring().compare(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

/// gcds of the family's values at each window point; window points are
/// polynomials in the variables other than `t`.
template <GcdRing R>
ValueGcdReport<R> value_gcd_set(const Family<R>& family, std::size_t t, const std::vector<MultiPoly<R>>& window) {
  if (family.empty()) throw FewerThanTwoPolys("empty family");
  if (window.empty()) throw InvalidArgument("empty window");
  detail::check_family_shape<R>({family}, 1);
  const VarSet& vars = family.front().vars();
  const VarSet value_vars = vars.without({t});
  {
    MultiPoly<R> common(family.front().ring(), vars);
    for (const auto& p : family) common = gcd_poly(common, p);
    if (common.degree(t) > 0) {
      throw NotCoprimeFamily("family has common factor " + common.to_string(), common.to_string());
    }
  }
  ValueGcdReport<R> report;
  for (const auto& w : window) {
    const MultiPoly<R> at = w.with_vars(vars);
    MultiPoly<R> g(family.front().ring(), value_vars);
    for (const auto& p : family) g = gcd_poly(g, p.substitute(t, at).with_vars(value_vars));
    report.window.push_back(w.to_string());
    report.gcds.push_back(g);
    if (std::none_of(report.distinct.begin(), report.distinct.end(), [&](const auto& x) { return x == g; })) {
      report.distinct.push_back(g);
    }
  }
  std::sort(report.distinct.begin(), report.distinct.end(), poly_less<R>);
  for (std::size_t i = 0; i < report.distinct.size() && report.stable; ++i) {
    for (std::size_t j = i + 1; j < report.distinct.size(); ++j) {
      const auto g = gcd_poly(report.distinct[i], report.distinct[j]);
      if (std::none_of(report.distinct.begin(), report.distinct.end(), [&](const auto& x) { return x == g; })) {
        report.stable = false;
        report.violating_pair = std::make_pair(report.distinct[i], report.distinct[j]);
        report.violating_gcd = g;
        break;
      }
    }
  }
  return report;
}

}  // namespace hs
