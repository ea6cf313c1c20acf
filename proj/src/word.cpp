#include "arrpi/word.hpp"

#include <algorithm>
#include <cctype>

#include "arrpi/errors.hpp"

namespace arrpi {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

unsigned order_key(Letter l) { return 2 * static_cast<unsigned>(generator_of(l)) + (l < 0 ? 1 : 0); }

bool key_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return order_key(x) < order_key(y); });
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw WordError("letter 0 is not a generator");
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

Word Word::power(long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

std::vector<long> Word::exponent_sums(std::size_t generator_count) const {
  std::vector<long> sums(std::max(generator_count, generator_bound()), 0);
  for (Letter l : letters_) sums[generator_of(l)] += l > 0 ? 1 : -1;
  return sums;
}

std::size_t Word::generator_bound() const {
  std::size_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, generator_of(l) + 1);
  return bound;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word(out);
}

Word conjugate(const Word& x, const Word& y) { return y.inverse() * x * y; }

Word product(std::span<const Word> words) {
  std::vector<Letter> out;
  for (const auto& w : words)
    for (Letter l : w.letters()) push_reduced(out, l);
  return Word(out);
}

Word substitute(const Word& w, std::size_t g, const Word& replacement) {
  Word inv = replacement.inverse();
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (generator_of(l) != g) {
      push_reduced(out, l);
      continue;
    }
    for (Letter r : (l > 0 ? replacement : inv).letters()) push_reduced(out, r);
  }
  return Word(out);
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    std::size_t g = generator_of(l);
    if (g >= images.size()) throw WordError("no image for generator " + std::to_string(g + 1));
    const Word image = l > 0 ? images[g] : images[g].inverse();
    for (Letter r : image.letters()) push_reduced(out, r);
  }
  return Word(out);
}

Word cyclically_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(letters.subspan(lo, hi - lo));
}

Word canonical_cyclic(const Word& w) {
  Word reduced = cyclically_reduce(w);
  if (reduced.empty()) return reduced;
  std::vector<Letter> best;
  for (const Word& candidate : {reduced, reduced.inverse()}) {
    auto s = candidate.letters();
    std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
      unsigned a = order_key(s[(i + k) % n]), b = order_key(s[(j + k) % n]);
      if (a == b) {
        ++k;
        continue;
      }
      if (a > b)
        i += k + 1;
      else
        j += k + 1;
      if (i == j) ++j;
      k = 0;
    }
    std::size_t start = std::min(i, j);
    std::vector<Letter> rotated;
    rotated.reserve(n);
    for (std::size_t t = 0; t < n; ++t) rotated.push_back(s[(start + t) % n]);
    if (best.empty() || key_less(rotated, best)) best = std::move(rotated);
  }
  return Word(best);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto x = a.letters(), y = b.letters();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](Letter l, Letter r) { return order_key(l) < order_key(r); });
}

bool is_generator_conjugate(const Word& w) {
  std::size_t n = w.size();
  if (n % 2 == 0) return false;
  for (std::size_t i = 0; i < n / 2; ++i)
    if (w[i] != -w[n - 1 - i]) return false;
  return true;
}

std::vector<Relation> cyclic_relators(std::span<const Word> block, const std::string& origin) {
  std::size_t m = block.size();
  if (m < 2) throw WordError("cyclic relator block needs at least two entries");
  Word full = product(block);
  std::vector<Relation> out;
  for (std::size_t s = 1; s < m; ++s) {
    std::vector<Word> shifted;
    for (std::size_t i = 0; i < m; ++i) shifted.push_back(block[(s + i) % m]);
    out.push_back(Relation{full * product(shifted).inverse(), origin});
  }
  return out;
}

GeneratorNames GeneratorNames::standard(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return GeneratorNames(std::move(names));
}

std::size_t GeneratorNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

std::string to_string(const Word& w, const GeneratorNames* names) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t run = 1;
    while (i + run < letters.size() && letters[i + run] == letters[i]) ++run;
    std::size_t g = generator_of(letters[i]);
    if (!out.empty()) out += ' ';
    out += names && g < names->size() ? (*names)[g] : "x" + std::to_string(g + 1);
    long exponent = static_cast<long>(run) * (letters[i] > 0 ? 1 : -1);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i += run;
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const GeneratorNames* names) : text_(text), names_(names) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw WordError("word '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                    ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '1' || generator_length() > 0;
  }

  // Length of the generator name starting at pos_, 0 if none.
  std::size_t generator_length() const {
    if (names_) {
      std::size_t best = 0;
      for (const auto& name : names_->names())
        if (name.size() > best && text_.substr(pos_, name.size()) == name) best = name.size();
      return best;
    }
    if (pos_ >= text_.size() || text_[pos_] != 'x') return 0;
    std::size_t end = pos_ + 1;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    return end == pos_ + 1 ? 0 : end - pos_;
  }

  Word generator() {
    std::size_t len = generator_length();
    if (len == 0) fail("expected a generator");
    std::string_view name = text_.substr(pos_, len);
    pos_ += len;
    if (names_) return Word::generator(names_->find(name));
    unsigned long index = std::stoul(std::string(name.substr(1)));
    if (index == 0) fail("generator x0 does not exist");
    return Word::generator(index - 1);
  }

  Word sequence() {
    Word w;
    while (at_atom_start()) w = w * factor();
    return w;
  }

  Word atom() {
    skip_space();
    if (text_[pos_] == '(') {
      ++pos_;
      Word inner = sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (text_[pos_] == '1' && generator_length() == 0) {
      ++pos_;
      return Word();
    }
    return generator();
  }

  Word factor() {
    Word base = atom();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '^') return base;
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        bool negative = text_[pos_] == '-';
        if (negative) ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        base = base.power(negative ? -e : e);
      } else if (pos_ < text_.size() && text_[pos_] == '(') {
        base = conjugate(base, atom());
      } else {
        base = conjugate(base, generator());
      }
    }
  }

  std::string_view text_;
  const GeneratorNames* names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const GeneratorNames* names) {
  return WordParser(text, names).parse();
}

}  // namespace arrpi

std::size_t std::hash<arrpi::Word>::operator()(const arrpi::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (arrpi::Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
    h *= 1099511628211ull;
  }
  return h;
}
