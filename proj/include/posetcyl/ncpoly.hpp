#pragma once

#include "posetcyl/poset.hpp"

#include <boost/rational.hpp>

#include <map>
#include <string>

namespace posetcyl {

using Rational = boost::rational<long long>;

enum class Alphabet { AB, CD };

/// Degree of a word: plain length over {a,b}; over {c,d} the letter d
/// counts twice.
int word_degree(Alphabet alphabet, const std::string& word);

/// Graded noncommutative polynomial over {a,b} or {c,d} with exact rational
/// coefficients. Zero coefficients are never stored.
class NCPoly {
 public:
  explicit NCPoly(Alphabet alphabet) : alphabet_(alphabet) {}

  static NCPoly zero(Alphabet alphabet) { return NCPoly(alphabet); }
  static NCPoly one(Alphabet alphabet) { return monomial(alphabet, "", 1); }
  static NCPoly monomial(Alphabet alphabet, const std::string& word, const Rational& coeff);

  Alphabet alphabet() const { return alphabet_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const std::string& word) const;

  bool is_homogeneous() const;
  /// Largest term degree; -1 for the zero polynomial.
  int degree() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  void add_term(const std::string& word, const Rational& coeff);

  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  NCPoly operator*(const NCPoly& other) const;
  NCPoly operator*(const Rational& scalar) const;
  bool operator==(const NCPoly& other) const = default;

  /// Canonical text: terms sorted by degree then word, runs of equal letters
  /// printed as powers, e.g. "c^3 + 2*c*d + 2*d*c".
  std::string to_string() const;
  static NCPoly parse(const std::string& text, Alphabet alphabet);

 private:
  Alphabet alphabet_;
  std::map<std::string, Rational> terms_;
};

/// Substitutes c -> a+b, d -> ab+ba.
NCPoly expand_cd(const NCPoly& p);

/// Reverses every word.
NCPoly reverse_words(const NCPoly& p);

// Leibniz derivations on {c,d} polynomials.
NCPoly derivation_g(const NCPoly& p);        // c -> d, d -> cd
NCPoly derivation_gprime(const NCPoly& p);   // c -> d, d -> dc
NCPoly derivation_d(const NCPoly& p);        // sum of the two

/// All {c,d} words of the given degree, in canonical order.
std::vector<std::string> cd_words_of_degree(int degree);

/// The unique {c,d} polynomial expanding to the given {a,b} polynomial,
/// found by exact linear solving per degree. Throws when none exists.
NCPoly cd_from_ab(const NCPoly& psi);

}  // namespace posetcyl
