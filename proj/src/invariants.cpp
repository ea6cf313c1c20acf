#include "arrpi/invariants.hpp"

#include <algorithm>
#include <cctype>

#include "arrpi/errors.hpp"

namespace arrpi {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvariantsError("ragged matrix rows");
    for (long x : row) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::parse(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  int depth = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      rows.back().emplace_back(token);
    } catch (const std::exception&) {
      throw InputError("malformed matrix entry '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') {
      if (++depth == 2) rows.emplace_back();
      if (depth > 2) throw InputError("matrix nested too deeply");
    } else if (c == ']') {
      if (depth == 2) flush();
      if (--depth < 0) throw InputError("unbalanced ']' in matrix");
    } else if (c == ',') {
      if (depth == 2) flush();
    } else if (depth == 2 && (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')) {
      if (c != '+') token += c;
    } else {
      throw InputError(std::string("unexpected '") + c + "' in matrix");
    }
  }
  if (depth != 0) throw InputError("unbalanced '[' in matrix");
  if (rows.empty()) throw InputError("empty matrix");
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntegerMatrix::is_identity() const { return square() && *this == identity(rows_); }

Integer IntegerMatrix::determinant() const {
  if (!square()) throw InvariantsError("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<Integer> a = data_;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
    previous = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::unimodular_inverse() const {
  Integer det = determinant();
  if (det != 1 && det != -1) throw InvariantsError("matrix is not unimodular (det = " + det.str() + ")");
  std::size_t n = rows_;
  std::vector<Rational> a(n * 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = Rational((*this)(r, c));
    a[r * 2 * n + n + r] = 1;
  }
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (at(pivot, k) == 0) ++pivot;
    for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(k, c), at(pivot, c));
    Rational p = at(k, k);
    for (std::size_t c = 0; c < 2 * n; ++c) at(k, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || at(r, k) == 0) continue;
      Rational f = at(r, k);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  IntegerMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = numerator(at(r, n + c));
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? "," : "") + (*this)(r, c).str();
    s += "]";
  }
  return s + "]";
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantsError("matrix dimensions do not match");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Reducer {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row i -= f * row j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= f * u(j, c);
  }
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= f * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= f * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Moves the nonzero entry of least absolute value in the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c)
        if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) best = {{r, c}};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void run() {
    std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t r = t + 1; r < a.rows(); ++r) {
          if (a(r, t) == 0) continue;
          add_row(r, t, a(r, t) / a(t, t));
          if (a(r, t) != 0) dirty = true;
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (a(t, c) == 0) continue;
          add_col(c, t, a(t, c) / a(t, t));
          if (a(t, c) != 0) dirty = true;
        }
        if (dirty) {
          place_pivot(t);
          continue;
        }
        // The pivot must divide the whole trailing block.
        std::optional<std::size_t> offender;
        for (std::size_t r = t + 1; r < a.rows() && !offender; ++r)
          for (std::size_t c = t + 1; c < a.cols(); ++c)
            if (a(r, c) % a(t, t) != 0) {
              offender = r;
              break;
            }
        if (!offender) break;
        add_row(t, *offender, Integer(-1));
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  Reducer red{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
  red.run();
  return SmithForm{std::move(red.u), std::move(red.a), std::move(red.v)};
}

std::optional<Integer> AbelianInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "1";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  std::size_t n = p.generator_count();
  IntegerMatrix m(p.relators.size(), n);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = p.relators[r].relator.exponent_sums(n);
    if (sums.size() > n) throw InvariantsError("relator uses an unknown generator");
    for (std::size_t g = 0; g < n; ++g) m(r, g) = sums[g];
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants out;
  std::size_t n = p.generator_count();
  auto diag = smith_normal_form(relation_matrix(p)).diagonal();
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = n - nonzero;
  return out;
}

IntegerMatrix evaluate(const Word& w, std::span<const IntegerMatrix> images) {
  if (images.empty()) throw InvariantsError("no generator images");
  std::vector<std::optional<IntegerMatrix>> inverses(images.size());
  IntegerMatrix out = IntegerMatrix::identity(images.front().rows());
  for (Letter l : w.letters()) {
    std::size_t g = generator_of(l);
    if (g >= images.size()) throw InvariantsError("word uses a generator without an image");
    if (l > 0) {
      out = out * images[g];
    } else {
      if (!inverses[g]) inverses[g] = images[g].unimodular_inverse();
      out = out * *inverses[g];
    }
  }
  return out;
}

HomomorphismCheck verify_homomorphism(const Presentation& p, std::span<const IntegerMatrix> images) {
  if (images.size() != p.generator_count())
    throw InvariantsError("expected " + std::to_string(p.generator_count()) + " images, got " +
                          std::to_string(images.size()));
  for (const auto& m : images) {
    if (!m.square() || m.rows() != images.front().rows())
      throw InvariantsError("images must be square matrices of a common dimension");
    Integer det = m.determinant();
    if (det != 1 && det != -1) throw InvariantsError("image with determinant " + det.str());
  }
  HomomorphismCheck out;
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (!evaluate(p.relators[r].relator, images).is_identity()) {
      out.failing_relator = r;
      return out;
    }
  out.pass = true;
  return out;
}

bool matrix_infinite_order(const IntegerMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InvariantsError("expected a 2x2 matrix");
  Integer det = m.determinant();
  if (det != 1 && det != -1) throw InvariantsError("matrix is not unimodular");
  IntegerMatrix p = IntegerMatrix::identity(2);
  for (int i = 0; i < 12; ++i) p = p * m;
  return !p.is_identity();
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t cap) : columns_(2 * generators), cap_(cap) {
    add_row();
  }

  static std::size_t column(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }
  static std::size_t inverse_column(std::size_t c) { return c ^ 1u; }

  std::size_t defined() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t alive_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c)) ++n;
    return n;
  }
  bool overflow() const { return overflow_; }
  std::size_t columns() const { return columns_; }
  long entry(std::size_t c, std::size_t x) const { return table_[c * columns_ + x]; }

  // Returns false when the cap is hit.
  bool define(std::size_t c, std::size_t x) {
    if (parent_.size() >= cap_) {
      overflow_ = true;
      return false;
    }
    std::size_t d = add_row();
    set(c, x, d);
    set(d, inverse_column(x), c);
    return true;
  }

  bool scan_and_fill(std::size_t alpha, std::span<const Letter> w) {
    std::size_t f = alpha, b = alpha;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    auto forward = [&](long k) { return column(w[static_cast<std::size_t>(k)]); };
    for (;;) {
      while (i <= j && entry(f, forward(i)) >= 0) f = static_cast<std::size_t>(entry(f, forward(i++)));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inverse_column(forward(j))) >= 0)
        b = static_cast<std::size_t>(entry(b, inverse_column(forward(j--))));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        set(f, forward(i), b);
        set(b, inverse_column(forward(i)), f);
        return true;
      }
      if (!define(f, forward(i))) return false;
    }
  }

 private:
  std::size_t add_row() {
    std::size_t id = parent_.size();
    parent_.push_back(id);
    table_.resize(table_.size() + columns_, -1);
    return id;
  }
  void set(std::size_t c, std::size_t x, std::size_t d) { table_[c * columns_ + x] = static_cast<long>(d); }
  void clear(std::size_t c, std::size_t x) { table_[c * columns_ + x] = -1; }

  std::size_t rep(std::size_t k) {
    std::size_t l = k;
    while (parent_[l] != l) l = parent_[l];
    while (parent_[k] != l) {
      std::size_t next = parent_[k];
      parent_[k] = l;
      k = next;
    }
    return l;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    std::size_t phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    std::size_t mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    std::vector<std::size_t> queue;
    merge(alpha, beta, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t gamma = queue[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        long e = entry(gamma, x);
        if (e < 0) continue;
        auto delta = static_cast<std::size_t>(e);
        clear(delta, inverse_column(x));
        std::size_t mu = rep(gamma), nu = rep(delta);
        if (entry(mu, x) >= 0) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
        } else if (entry(nu, inverse_column(x)) >= 0) {
          merge(mu, static_cast<std::size_t>(entry(nu, inverse_column(x))), queue);
        } else {
          set(mu, x, nu);
          set(nu, inverse_column(x), mu);
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t cap_;
  bool overflow_ = false;
  std::vector<std::size_t> parent_;
  std::vector<long> table_;
};

}  // namespace

CosetResult coset_enumeration(const Presentation& p, std::span<const Word> subgroup,
                              std::size_t max_cosets) {
  CosetResult out;
  std::size_t n = p.generator_count();
  if (max_cosets == 0) return out;
  std::vector<Word> relators;
  for (const auto& r : p.relators) {
    Word w = cyclically_reduce(r.relator);
    if (!w.empty()) relators.push_back(std::move(w));
  }
  CosetTable table(n, max_cosets);
  auto finish = [&](bool closed) {
    out.closed = closed;
    out.defined = table.defined();
    out.index = closed ? table.alive_count() : 0;
    return out;
  };
  for (const Word& h : subgroup)
    if (!table.scan_and_fill(0, h.letters())) return finish(false);
  for (std::size_t alpha = 0; alpha < table.defined(); ++alpha) {
    for (const Word& r : relators) {
      if (!table.alive(alpha)) break;
      if (!table.scan_and_fill(alpha, r.letters())) return finish(false);
    }
    for (std::size_t x = 0; x < table.columns(); ++x) {
      if (!table.alive(alpha)) break;
      if (table.entry(alpha, x) < 0 && !table.define(alpha, x)) return finish(false);
    }
  }
  return finish(true);
}

}  // namespace arrpi
