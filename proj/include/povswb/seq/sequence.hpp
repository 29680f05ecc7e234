#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "povswb/exactnum/rational.hpp"

namespace povswb::seq {

using exact::Rational;
using Index = std::uint64_t;

/// coeff * ratio^k with 0 < ratio < 1.
struct GeoTerm {
  Rational coeff;
  Rational ratio;
  bool operator==(const GeoTerm&) const = default;
};

/// coeff * k^(-exponent) with exponent > 0.
struct PowTerm {
  Rational coeff;
  Rational exponent;
  bool operator==(const PowTerm&) const = default;
};

/// x_k = finite(k) + sum of geometric and power terms + constant, k >= 1.
/// Canonical: equal ratios and exponents merged, zero coefficients dropped,
/// geometric terms by descending ratio, power terms by ascending exponent.
class SymbolicSequence {
 public:
  SymbolicSequence() = default;

  static SymbolicSequence constant(const Rational& c);
  static SymbolicSequence geometric(const Rational& c, const Rational& ratio);
  static SymbolicSequence power(const Rational& c, const Rational& exponent);
  static SymbolicSequence delta(Index k, const Rational& c = 1);

  const std::map<Index, Rational>& finite_part() const { return finite_; }
  const std::vector<GeoTerm>& geo_terms() const { return geo_; }
  const std::vector<PowTerm>& pow_terms() const { return pow_; }
  const Rational& constant_term() const { return const_; }

  /// Sign of x_k, exact even when k^(-p) is irrational.
  int sign_at(Index k) const;

  /// x_k when it is rational.
  std::optional<Rational> value_at(Index k) const;

  /// Zero outside a finite set of indices.
  bool is_finitely_supported() const { return geo_.empty() && pow_.empty() && sgn(const_) == 0; }
  Index support_end() const { return finite_.empty() ? 0 : finite_.rbegin()->first; }

  /// In the input syntax, e.g. "2*(1/2)^k - k^(-1/2) + 1 + 5*delta(3)".
  std::string to_string() const;

  friend SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b);
  friend SymbolicSequence operator-(const SymbolicSequence& a, const SymbolicSequence& b);
  friend SymbolicSequence operator-(const SymbolicSequence& a);
  friend SymbolicSequence operator*(const Rational& s, const SymbolicSequence& a);

  bool operator==(const SymbolicSequence&) const = default;

 private:
  void canonicalize();

  std::map<Index, Rational> finite_;
  std::vector<GeoTerm> geo_;
  std::vector<PowTerm> pow_;
  Rational const_ = 0;
};

/// Raised when a crossover index would be too large to verify pointwise.
class crossover_too_large : public std::runtime_error {
 public:
  explicit crossover_too_large(const std::string& what) : std::runtime_error(what) {}
};

/// K with x_k <= y_k for every k >= K, or nullopt when x_k > y_k infinitely
/// often. The leading term of y - x decides and bounds the crossover
/// symbolically. Crossovers up to 20000 are scanned index by index, making K
/// the least such index (0 when it holds everywhere); larger ones are
/// returned as they are.
std::optional<Index> eventually_leq(const SymbolicSequence& x, const SymbolicSequence& y);

enum class SeqClass { c00, c0, linf };

std::string to_string(SeqClass c);
SeqClass classify(const SymbolicSequence& x);

/// A regulator y with n|x| <= y eventually for every n, certified by
/// strict dominance of y's leading term over x's.
struct InfinitesimalWitness {
  SymbolicSequence regulator;
  /// Human-readable limit |x_k| / y_k -> 0.
  std::string dominance;
  /// (n, K): n|x_k| <= y_k for all k >= K.
  std::vector<std::pair<unsigned, Index>> thresholds;
};

/// Searches regulators built from x: each geometric ratio q becomes
/// (1+q)/2, each exponent p becomes p/2, and const 1 is tried last when the
/// ambient space is linf. Candidates outside the ambient are skipped.
/// Requires ambient c0 or linf containing x (std::invalid_argument).
std::optional<InfinitesimalWitness> is_infinitesimal_mod_c00(const SymbolicSequence& x, SeqClass ambient);

/// |x_k| <= multiple for all k >= from.
struct UnitBound {
  Rational multiple;
  Index from = 0;
};

/// Bound of x by a multiple of const 1; every grammar element has one.
UnitBound order_unit_bound(const SymbolicSequence& x);

}  // namespace povswb::seq
