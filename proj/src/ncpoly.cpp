#include "posetcyl/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace posetcyl {

namespace {

bool letter_in_alphabet(Alphabet alphabet, char c) {
  return alphabet == Alphabet::AB ? (c == 'a' || c == 'b') : (c == 'c' || c == 'd');
}

}  // namespace

int word_degree(Alphabet alphabet, const std::string& word) {
  if (alphabet == Alphabet::AB) return static_cast<int>(word.size());
  int deg = 0;
  for (char c : word) deg += c == 'd' ? 2 : 1;
  return deg;
}

NCPoly NCPoly::monomial(Alphabet alphabet, const std::string& word, const Rational& coeff) {
  NCPoly p(alphabet);
  p.add_term(word, coeff);
  return p;
}

Rational NCPoly::coeff(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int deg = word_degree(alphabet_, terms_.begin()->first);
  for (const auto& [word, coeff] : terms_)
    if (word_degree(alphabet_, word) != deg) return false;
  return true;
}

int NCPoly::degree() const {
  int deg = -1;
  for (const auto& [word, coeff] : terms_)
    deg = std::max(deg, word_degree(alphabet_, word));
  return deg;
}

bool NCPoly::has_integer_coefficients() const {
  for (const auto& [word, coeff] : terms_)
    if (coeff.denominator() != 1) return false;
  return true;
}

bool NCPoly::has_nonnegative_coefficients() const {
  for (const auto& [word, coeff] : terms_)
    if (coeff < Rational(0)) return false;
  return true;
}

void NCPoly::add_term(const std::string& word, const Rational& coeff) {
  for (char c : word)
    if (!letter_in_alphabet(alphabet_, c))
      throw Error(std::string("ncpoly: letter '") + c + "' not in alphabet");
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    if (coeff != Rational(0)) terms_.emplace(word, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Rational(0)) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
  if (alphabet_ != other.alphabet_) throw Error("ncpoly: alphabet mismatch");
  NCPoly out = *this;
  for (const auto& [word, coeff] : other.terms_) out.add_term(word, coeff);
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& other) const {
  if (alphabet_ != other.alphabet_) throw Error("ncpoly: alphabet mismatch");
  NCPoly out = *this;
  for (const auto& [word, coeff] : other.terms_) out.add_term(word, -coeff);
  return out;
}

NCPoly NCPoly::operator*(const NCPoly& other) const {
  if (alphabet_ != other.alphabet_) throw Error("ncpoly: alphabet mismatch");
  NCPoly out(alphabet_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : other.terms_) out.add_term(w1 + w2, c1 * c2);
  return out;
}

NCPoly NCPoly::operator*(const Rational& scalar) const {
  NCPoly out(alphabet_);
  if (scalar == Rational(0)) return out;
  for (const auto& [word, coeff] : terms_) out.add_term(word, coeff * scalar);
  return out;
}

namespace {

std::string format_word(const std::string& word) {
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += word[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

}  // namespace

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::string, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [this](const auto& l, const auto& r) {
    int dl = word_degree(alphabet_, l.first), dr = word_degree(alphabet_, r.first);
    if (dl != dr) return dl < dr;
    return l.first < r.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : sorted) {
    Rational abs_coeff = coeff < Rational(0) ? -coeff : coeff;
    if (first) {
      if (coeff < Rational(0)) out += "-";
      first = false;
    } else {
      out += coeff < Rational(0) ? " - " : " + ";
    }
    if (word.empty()) {
      out += format_rational(abs_coeff);
    } else {
      if (abs_coeff != Rational(1)) out += format_rational(abs_coeff) + "*";
      out += format_word(word);
    }
  }
  return out;
}

NCPoly NCPoly::parse(const std::string& text, Alphabet alphabet) {
  NCPoly out(alphabet);
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("ncpoly parse: empty input");
  bool expect_term = true;
  long long sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (!expect_term) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw Error("ncpoly parse: expected '+' or '-'");
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {
      sign = -sign;
      ++i;
      skip_ws();
    }
    Rational coeff(sign);
    bool saw_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long long num = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num = num * 10 + (text[i++] - '0');
      long long den = 1;
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          den = den * 10 + (text[i++] - '0');
        if (den == 0) throw Error("ncpoly parse: bad denominator");
      }
      coeff = Rational(sign * num, den);
      saw_number = true;
    }
    std::string word;
    bool want_factor = !saw_number;
    while (true) {
      skip_ws();
      if (saw_number || !word.empty()) {
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
          want_factor = true;
        } else if (!want_factor) {
          break;
        }
      }
      if (i >= text.size()) {
        if (want_factor && !saw_number && word.empty())
          throw Error("ncpoly parse: dangling term");
        break;
      }
      char c = text[i];
      if (!letter_in_alphabet(alphabet, c)) {
        if (want_factor && word.empty() && !saw_number)
          throw Error(std::string("ncpoly parse: unexpected character '") + c + "'");
        break;
      }
      ++i;
      long long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw Error("ncpoly parse: bad exponent");
        power = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          power = power * 10 + (text[i++] - '0');
      }
      word.append(static_cast<size_t>(power), c);
      want_factor = false;
    }
    if (!saw_number && word.empty()) throw Error("ncpoly parse: empty term");
    out.add_term(word, coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw Error("ncpoly parse: trailing operator");
  return out;
}

NCPoly expand_cd(const NCPoly& p) {
  if (p.alphabet() != Alphabet::CD) throw Error("expand_cd: expected a {c,d} polynomial");
  NCPoly c_sub = NCPoly::monomial(Alphabet::AB, "a", 1) + NCPoly::monomial(Alphabet::AB, "b", 1);
  NCPoly d_sub = NCPoly::monomial(Alphabet::AB, "ab", 1) + NCPoly::monomial(Alphabet::AB, "ba", 1);
  NCPoly out(Alphabet::AB);
  for (const auto& [word, coeff] : p.terms()) {
    NCPoly factor = NCPoly::one(Alphabet::AB);
    for (char c : word) factor = factor * (c == 'c' ? c_sub : d_sub);
    out = out + factor * coeff;
  }
  return out;
}

NCPoly reverse_words(const NCPoly& p) {
  NCPoly out(p.alphabet());
  for (const auto& [word, coeff] : p.terms()) {
    std::string rev(word.rbegin(), word.rend());
    out.add_term(rev, coeff);
  }
  return out;
}

namespace {

NCPoly leibniz(const NCPoly& p, const NCPoly& on_c, const NCPoly& on_d) {
  if (p.alphabet() != Alphabet::CD) throw Error("derivation: expected a {c,d} polynomial");
  NCPoly out(Alphabet::CD);
  for (const auto& [word, coeff] : p.terms())
    for (size_t i = 0; i < word.size(); ++i) {
      NCPoly middle = word[i] == 'c' ? on_c : on_d;
      NCPoly term = NCPoly::monomial(Alphabet::CD, word.substr(0, i), coeff) * middle *
                    NCPoly::monomial(Alphabet::CD, word.substr(i + 1), 1);
      out = out + term;
    }
  return out;
}

}  // namespace

NCPoly derivation_g(const NCPoly& p) {
  return leibniz(p, NCPoly::monomial(Alphabet::CD, "d", 1), NCPoly::monomial(Alphabet::CD, "cd", 1));
}

NCPoly derivation_gprime(const NCPoly& p) {
  return leibniz(p, NCPoly::monomial(Alphabet::CD, "d", 1), NCPoly::monomial(Alphabet::CD, "dc", 1));
}

NCPoly derivation_d(const NCPoly& p) { return derivation_g(p) + derivation_gprime(p); }

std::vector<std::string> cd_words_of_degree(int degree) {
  if (degree < 0) throw Error("cd_words_of_degree: negative degree");
  if (degree == 0) return {""};
  if (degree == 1) return {"c"};
  std::vector<std::string> out;
  for (const auto& w : cd_words_of_degree(degree - 1)) out.push_back("c" + w);
  for (const auto& w : cd_words_of_degree(degree - 2)) out.push_back("d" + w);
  std::sort(out.begin(), out.end());
  return out;
}

NCPoly cd_from_ab(const NCPoly& psi) {
  if (psi.alphabet() != Alphabet::AB) throw Error("cd_from_ab: expected an {a,b} polynomial");
  // Solve degree by degree: unknown coefficients of the {c,d} words against
  // the expansion into {a,b} words.
  std::map<int, NCPoly> by_degree;
  for (const auto& [word, coeff] : psi.terms()) {
    int deg = static_cast<int>(word.size());
    auto it = by_degree.find(deg);
    if (it == by_degree.end()) it = by_degree.emplace(deg, NCPoly(Alphabet::AB)).first;
    it->second.add_term(word, coeff);
  }
  NCPoly result(Alphabet::CD);
  for (const auto& [deg, component] : by_degree) {
    std::vector<std::string> unknowns = cd_words_of_degree(deg);
    const int k = static_cast<int>(unknowns.size());
    // Row index per {a,b} word of this degree.
    std::map<std::string, int> row_of;
    std::vector<std::string> ab_words;
    {
      std::vector<std::string> frontier{""};
      for (int i = 0; i < deg; ++i) {
        std::vector<std::string> next;
        for (const auto& w : frontier) {
          next.push_back(w + "a");
          next.push_back(w + "b");
        }
        frontier = std::move(next);
      }
      ab_words = std::move(frontier);
      for (int i = 0; i < static_cast<int>(ab_words.size()); ++i)
        row_of[ab_words[static_cast<size_t>(i)]] = i;
    }
    const int rows = static_cast<int>(ab_words.size());
    std::vector<std::vector<Rational>> mat(
        static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(k + 1), Rational(0)));
    for (int col = 0; col < k; ++col) {
      NCPoly expanded = expand_cd(NCPoly::monomial(Alphabet::CD, unknowns[static_cast<size_t>(col)], 1));
      for (const auto& [word, coeff] : expanded.terms())
        mat[static_cast<size_t>(row_of.at(word))][static_cast<size_t>(col)] = coeff;
    }
    for (const auto& [word, coeff] : component.terms())
      mat[static_cast<size_t>(row_of.at(word))][static_cast<size_t>(k)] = coeff;
    // Gaussian elimination on the augmented matrix.
    int pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < k && pivot_row < rows; ++col) {
      int sel = -1;
      for (int r = pivot_row; r < rows; ++r)
        if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != Rational(0)) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(mat[static_cast<size_t>(sel)], mat[static_cast<size_t>(pivot_row)]);
      Rational inv = mat[static_cast<size_t>(pivot_row)][static_cast<size_t>(col)];
      for (int c2 = col; c2 <= k; ++c2)
        mat[static_cast<size_t>(pivot_row)][static_cast<size_t>(c2)] /= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        Rational factor = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (factor == Rational(0)) continue;
        for (int c2 = col; c2 <= k; ++c2)
          mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
              factor * mat[static_cast<size_t>(pivot_row)][static_cast<size_t>(c2)];
      }
      pivot_col_of_row.push_back(col);
      ++pivot_row;
    }
    for (int r = pivot_row; r < rows; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(k)] != Rational(0))
        throw Error("cd_from_ab: no {c,d} expression exists");
    std::vector<Rational> solution(static_cast<size_t>(k), Rational(0));
    for (int r = 0; r < pivot_row; ++r)
      solution[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] =
          mat[static_cast<size_t>(r)][static_cast<size_t>(k)];
    for (int col = 0; col < k; ++col)
      result.add_term(unknowns[static_cast<size_t>(col)], solution[static_cast<size_t>(col)]);
  }
  return result;
}

}  // namespace posetcyl
