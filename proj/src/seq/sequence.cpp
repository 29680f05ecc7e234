#include "povswb/seq/sequence.hpp"

#include <algorithm>
#include <limits>

#include "algebraic.hpp"

namespace povswb::seq {


namespace {

// Largest crossover searched for: geometric ratios need exact powers s^k,
// pure power ratios stay cheap at any size.
constexpr Index kMaxGeometricCrossover = Index(1) << 20;
constexpr Index kMaxPowerCrossover = Index(1) << 62;
// Below this the least threshold is found by checking every index.
constexpr Index kVerifyWindow = 20'000;
// Up to here q^k is computed exactly when evaluating signs.
constexpr Index kExactGeometricIndex = Index(1) << 16;

// Asymptotic size of a term: k^(-decay) * base^k. Constants are (0, 1).
struct Growth {
  Rational decay;
  Rational base;
};

// a strictly outgrows b.
bool outgrows(const Growth& a, const Growth& b) {
  if (a.base != b.base) return a.base > b.base;
  return a.decay < b.decay;
}

struct Term {
  Rational coeff;
  Growth growth;
};

std::vector<Term> tail_terms(const SymbolicSequence& x) {
  std::vector<Term> out;
  if (sgn(x.constant_term()) != 0) out.push_back({x.constant_term(), {0, 1}});
  for (const auto& t : x.pow_terms()) out.push_back({t.coeff, {t.exponent, 1}});
  for (const auto& t : x.geo_terms()) out.push_back({t.coeff, {0, t.ratio}});
  return out;
}

std::string growth_string(const Growth& g) {
  if (g.base == 1 && sgn(g.decay) == 0) return "1";
  if (g.base == 1) return "k^(-" + exact::to_string(g.decay) + ")";
  return "(" + exact::to_string(g.base) + ")^k";
}

// k^num * s^(k*den) <= eps^den, i.e. k^(num/den) s^k <= eps.
bool ratio_below(Index k, long num, long den, const Rational& s, const Rational& eps) {
  const Rational kk(static_cast<unsigned long>(k));
  const Rational decay = s == 1 ? Rational(1) : detail::power(s, static_cast<long>(k) * den);
  return detail::power(kk, num) * decay <= detail::power(eps, den);
}

// Least k >= from satisfying a predicate that stays true once true.
template <class Pred>
Index first_true(Index from, Index cap, Pred pred) {
  if (pred(from)) return from;
  Index lo = from, hi = std::max<Index>(2 * from, from + 1);
  while (!pred(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > cap) throw crossover_too_large("crossover index exceeds " + std::to_string(cap));
  }
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Least K with k^a s^k <= eps for all k >= K, where the left side tends
// to zero (s < 1, or s = 1 and a < 0).
// Sign of base + geometric + roots at k. The small-number part is tried
// alone first; the exact sum is only formed when the geometric value is not
// below its certified magnitude.
int split_sign(const Rational& base, const Rational& geometric,
               const std::vector<std::pair<Rational, Rational>>& roots, Index k) {
  if (sgn(geometric) != 0) {
    const auto rest = detail::sign_with_roots(base, roots, k);
    if (rest.sign != 0 && abs(geometric) < rest.magnitude) return rest.sign;
  }
  return detail::sign_with_roots(base + geometric, roots, k).sign;
}

Index ratio_threshold(const Rational& a, const Rational& s, const Rational& eps) {
  const long num = mpz_get_si(a.get_num_mpz_t()), den = mpz_get_si(a.get_den_mpz_t());
  const Index cap = s == 1 ? kMaxPowerCrossover : kMaxGeometricCrossover;
  Index start = 1;
  if (num > 0) {
    // Decreasing once ((k+1)/k)^a s < 1.
    start = first_true(1, cap, [&](Index k) {
      const Rational step(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k));
      return detail::power(step, num) * detail::power(s, den) < 1;
    });
  }
  return first_true(start, cap, [&](Index k) { return ratio_below(k, num, den, s, eps); });
}

}  // namespace

SymbolicSequence SymbolicSequence::constant(const Rational& c) {
  SymbolicSequence s;
  s.const_ = c;
  s.canonicalize();
  return s;
}

SymbolicSequence SymbolicSequence::geometric(const Rational& c, const Rational& ratio) {
  if (sgn(ratio) <= 0 || ratio >= 1)
    throw std::invalid_argument("geometric ratio " + exact::to_string(ratio) + " is not in (0, 1)");
  SymbolicSequence s;
  s.geo_.push_back({c, ratio});
  s.canonicalize();
  return s;
}

SymbolicSequence SymbolicSequence::power(const Rational& c, const Rational& exponent) {
  if (sgn(exponent) <= 0) throw std::invalid_argument("decay exponent " + exact::to_string(exponent) + " is not positive");
  SymbolicSequence s;
  s.pow_.push_back({c, exponent});
  s.canonicalize();
  return s;
}

SymbolicSequence SymbolicSequence::delta(Index k, const Rational& c) {
  if (k == 0) throw std::invalid_argument("sequence indices start at 1");
  SymbolicSequence s;
  s.finite_[k] = c;
  s.canonicalize();
  return s;
}

void SymbolicSequence::canonicalize() {
  for (auto& [k, c] : finite_) c.canonicalize();
  for (auto& t : geo_) {
    t.coeff.canonicalize();
    t.ratio.canonicalize();
  }
  for (auto& t : pow_) {
    t.coeff.canonicalize();
    t.exponent.canonicalize();
  }
  const_.canonicalize();
  std::erase_if(finite_, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::sort(geo_.begin(), geo_.end(), [](const GeoTerm& a, const GeoTerm& b) { return a.ratio > b.ratio; });
  std::vector<GeoTerm> g;
  for (const auto& t : geo_) {
    if (!g.empty() && g.back().ratio == t.ratio) {
      g.back().coeff += t.coeff;
    } else {
      g.push_back(t);
    }
  }
  std::erase_if(g, [](const GeoTerm& t) { return sgn(t.coeff) == 0; });
  geo_ = std::move(g);
  std::sort(pow_.begin(), pow_.end(), [](const PowTerm& a, const PowTerm& b) { return a.exponent < b.exponent; });
  std::vector<PowTerm> p;
  for (const auto& t : pow_) {
    if (!p.empty() && p.back().exponent == t.exponent) {
      p.back().coeff += t.coeff;
    } else {
      p.push_back(t);
    }
  }
  std::erase_if(p, [](const PowTerm& t) { return sgn(t.coeff) == 0; });
  pow_ = std::move(p);
}

int SymbolicSequence::sign_at(Index k) const {
  if (k == 0) throw std::invalid_argument("sequence indices start at 1");
  Rational base = const_;
  if (auto it = finite_.find(k); it != finite_.end()) base += it->second;
  std::vector<std::pair<Rational, Rational>> roots;
  for (const auto& t : pow_) roots.emplace_back(t.coeff, t.exponent);
  if (geo_.empty() || k <= kExactGeometricIndex) {
    Rational geometric = 0;
    for (const auto& t : geo_) geometric += t.coeff * detail::power(t.ratio, static_cast<long>(k));
    return split_sign(base, geometric, roots, k);
  }

  // Far out, q^k <= 2^-floor(k/m) with m = ceil(1/(1-q)) since (1-1/m)^m < 1/2.
  // The geometric part is decided without computing q^k whenever that
  // bound sits below a certified lower bound for the rest.
  const auto rest = detail::sign_with_roots(base, roots, k);
  Rational total = 0;
  Index halvings = std::numeric_limits<Index>::max();
  for (const auto& t : geo_) {
    total += abs(t.coeff);
    const Rational gap = 1 / (1 - t.ratio);
    const exact::Integer m = (gap.get_num() + gap.get_den() - 1) / gap.get_den();
    halvings = std::min<Index>(halvings, k / mpz_get_ui(m.get_mpz_t()));
  }
  if (rest.sign != 0) {
    // total * 2^-halvings < magnitude once halvings exceeds log2(total / magnitude) + 1.
    const Rational ratio = total / rest.magnitude;
    const Index needed = mpz_sizeinbase(ratio.get_num_mpz_t(), 2) + 1;
    if (halvings > needed) return rest.sign;
  } else {
    // Only the geometric part is left; its largest ratio wins from a small index on.
    const GeoTerm& lead = geo_.front();
    bool lead_wins = true;
    for (std::size_t i = 1; i < geo_.size() && lead_wins; ++i) {
      const Rational share = abs(lead.coeff) / Rational(static_cast<long>(geo_.size()));
      lead_wins = k >= ratio_threshold(0, geo_[i].ratio / lead.ratio, share / abs(geo_[i].coeff));
    }
    if (lead_wins) return sgn(lead.coeff);
  }
  for (const auto& t : geo_) base += t.coeff * detail::power(t.ratio, static_cast<long>(k));
  return detail::sign_with_roots(base, roots, k).sign;
}

std::optional<Rational> SymbolicSequence::value_at(Index k) const {
  if (k == 0) throw std::invalid_argument("sequence indices start at 1");
  Rational v = const_;
  if (auto it = finite_.find(k); it != finite_.end()) v += it->second;
  for (const auto& t : geo_) v += t.coeff * detail::power(t.ratio, static_cast<long>(k));
  const exact::Integer kk(static_cast<unsigned long>(k));
  for (const auto& t : pow_) {
    const unsigned long den = mpz_get_ui(t.exponent.get_den_mpz_t());
    exact::Integer root;
    if (mpz_root(root.get_mpz_t(), kk.get_mpz_t(), den) == 0) return std::nullopt;
    v += t.coeff * detail::power(Rational(root), -mpz_get_si(t.exponent.get_num_mpz_t()));
  }
  return v;
}

std::string SymbolicSequence::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& t : geo_) parts.emplace_back(t.coeff, "(" + exact::to_string(t.ratio) + ")^k");
  for (const auto& t : pow_) parts.emplace_back(t.coeff, "k^(-" + exact::to_string(t.exponent) + ")");
  if (sgn(const_) != 0) parts.emplace_back(const_, "");
  for (const auto& [k, c] : finite_) parts.emplace_back(c, "delta(" + std::to_string(k) + ")");
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [c, body] = parts[i];
    const Rational mag = abs(c);
    if (i == 0) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (body.empty()) {
      out += exact::to_string(mag);
    } else {
      if (mag != 1) out += exact::to_string(mag) + "*";
      out += body;
    }
  }
  return out;
}

SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b) {
  SymbolicSequence s = a;
  for (const auto& [k, c] : b.finite_) s.finite_[k] += c;
  s.geo_.insert(s.geo_.end(), b.geo_.begin(), b.geo_.end());
  s.pow_.insert(s.pow_.end(), b.pow_.begin(), b.pow_.end());
  s.const_ += b.const_;
  s.canonicalize();
  return s;
}

SymbolicSequence operator*(const Rational& f, const SymbolicSequence& a) {
  SymbolicSequence s = a;
  for (auto& [k, c] : s.finite_) c *= f;
  for (auto& t : s.geo_) t.coeff *= f;
  for (auto& t : s.pow_) t.coeff *= f;
  s.const_ *= f;
  s.canonicalize();
  return s;
}

SymbolicSequence operator-(const SymbolicSequence& a) { return Rational(-1) * a; }

SymbolicSequence operator-(const SymbolicSequence& a, const SymbolicSequence& b) { return a + (-b); }

std::optional<Index> eventually_leq(const SymbolicSequence& x, const SymbolicSequence& y) {
  const SymbolicSequence d = y - x;
  const std::vector<Term> terms = tail_terms(d);
  Index crossover = d.support_end() + 1;
  if (!terms.empty()) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (outgrows(terms[i].growth, terms[lead].growth)) lead = i;
    const Term& l = terms[lead];
    if (sgn(l.coeff) < 0) return std::nullopt;
    // Each other term stays below coeff * lead / (m + 1) from its threshold on.
    const Rational share = l.coeff / Rational(static_cast<long>(terms.size()));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i == lead) continue;
      const Term& t = terms[i];
      const Rational a = l.growth.decay - t.growth.decay;
      const Rational s = t.growth.base / l.growth.base;
      crossover = std::max(crossover, ratio_threshold(a, s, share / abs(t.coeff)));
    }
  }
  if (crossover > kVerifyWindow) return crossover;
  if (crossover <= 1) return 0;
  // Walk down from the crossover, dividing the geometric powers as we go.
  std::vector<Rational> powers, inverse;
  for (const auto& t : d.geo_terms()) {
    powers.push_back(t.coeff * detail::power(t.ratio, static_cast<long>(crossover - 1)));
    inverse.push_back(1 / t.ratio);
  }
  std::vector<std::pair<Rational, Rational>> roots;
  for (const auto& t : d.pow_terms()) roots.emplace_back(t.coeff, t.exponent);
  for (Index k = crossover - 1; k >= 1; --k) {
    Rational base = d.constant_term(), geometric = 0;
    if (auto it = d.finite_part().find(k); it != d.finite_part().end()) base += it->second;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      geometric += powers[i];
      powers[i] *= inverse[i];
    }
    if (split_sign(base, geometric, roots, k) < 0) return k + 1;
  }
  return 0;
}

std::string to_string(SeqClass c) {
  switch (c) {
    case SeqClass::c00:
      return "c00";
    case SeqClass::c0:
      return "c0";
    case SeqClass::linf:
      return "linf";
  }
  return "?";
}

SeqClass classify(const SymbolicSequence& x) {
  if (x.is_finitely_supported()) return SeqClass::c00;
  if (sgn(x.constant_term()) == 0) return SeqClass::c0;
  return SeqClass::linf;
}

std::optional<InfinitesimalWitness> is_infinitesimal_mod_c00(const SymbolicSequence& x, SeqClass ambient) {
  if (ambient == SeqClass::c00) throw std::invalid_argument("the ambient space must be c0 or linf");
  if (classify(x) > ambient)
    throw std::invalid_argument(x.to_string() + " is not in " + to_string(ambient));

  auto thresholds_for = [&](const SymbolicSequence& y) {
    std::vector<std::pair<unsigned, Index>> out;
    for (unsigned n = 1; n <= 16; n *= 2) {
      const Rational nn(n);
      const auto up = eventually_leq(nn * x, y), down = eventually_leq(-(nn * x), y);
      if (!up || !down) return std::optional<std::vector<std::pair<unsigned, Index>>>{};
      out.emplace_back(n, std::max(*up, *down));
    }
    return std::optional{out};
  };

  if (x.is_finitely_supported()) {
    auto t = thresholds_for(SymbolicSequence());
    return InfinitesimalWitness{SymbolicSequence(), "x vanishes from index " + std::to_string(x.support_end() + 1), *t};
  }

  const std::vector<Term> terms = tail_terms(x);
  Growth lead = terms.front().growth;
  for (const auto& t : terms)
    if (outgrows(t.growth, lead)) lead = t.growth;

  std::vector<SymbolicSequence> candidates;
  for (const auto& t : x.geo_terms()) candidates.push_back(SymbolicSequence::geometric(1, (1 + t.ratio) / 2));
  for (const auto& t : x.pow_terms()) candidates.push_back(SymbolicSequence::power(1, t.exponent / 2));
  if (ambient == SeqClass::linf) candidates.push_back(SymbolicSequence::constant(1));

  for (const auto& y : candidates) {
    if (classify(y) > ambient) continue;
    const Growth yg = tail_terms(y).front().growth;
    if (!outgrows(yg, lead)) continue;
    auto t = thresholds_for(y);
    if (!t) throw std::logic_error("dominating regulator failed a threshold check");
    return InfinitesimalWitness{y, growth_string(lead) + " / " + growth_string(yg) + " -> 0", std::move(*t)};
  }
  return std::nullopt;
}

UnitBound order_unit_bound(const SymbolicSequence& x) {
  Rational bound = abs(x.constant_term());
  bound = Rational(bound.get_num() / bound.get_den() + 1);
  const SymbolicSequence unit = SymbolicSequence::constant(bound);
  const auto up = eventually_leq(x, unit), down = eventually_leq(-x, unit);
  if (!up || !down) throw std::logic_error("constant bound failed for " + x.to_string());
  return {bound, std::max(*up, *down)};
}

}  // namespace povswb::seq
