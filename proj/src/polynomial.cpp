#include "gnepdeg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gnepdeg/errors.hpp"

namespace gnepdeg {

IntPolynomial::IntPolynomial(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("IntPolynomial: negative block size");
}

IntPolynomial IntPolynomial::constant(std::vector<int> dims, const Int& c) {
  IntPolynomial p(std::move(dims));
  p.add_term(std::vector<int>(p.num_vars(), 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::vector<int> dims, BlockVar v) {
  IntPolynomial p(dims);
  std::vector<int> e(p.num_vars(), 0);
  e[flat_index(dims, v)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t IntPolynomial::num_vars() const {
  return static_cast<std::size_t>(std::accumulate(dims_.begin(), dims_.end(), 0));
}

void IntPolynomial::add_term(const std::vector<int>& expo, const Int& c) {
  if (expo.size() != num_vars())
    throw std::invalid_argument("IntPolynomial::add_term: exponent length mismatch");
  for (int e : expo)
    if (e < 0) throw std::invalid_argument("IntPolynomial::add_term: negative exponent");
  if (c == 0) return;
  Int& slot = terms_[expo];
  slot += c;
  if (slot == 0) terms_.erase(expo);
}

IntPolynomial IntPolynomial::operator-() const { return scaled(-1); }

IntPolynomial IntPolynomial::scaled(const Int& c) const {
  IntPolynomial out(dims_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

static void check_same_ring(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.dims() != b.dims())
    throw std::invalid_argument("IntPolynomial: mixing polynomials over different blocks");
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  check_same_ring(a, b);
  IntPolynomial out = a;
  for (const auto& [e, v] : b.terms_) out.add_term(e, v);
  return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  check_same_ring(a, b);
  IntPolynomial out = a;
  for (const auto& [e, v] : b.terms_) out.add_term(e, -v);
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  check_same_ring(a, b);
  IntPolynomial out(a.dims_);
  std::vector<int> e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Int IntPolynomial::eval(const std::vector<Int>& point) const {
  if (point.size() != num_vars())
    throw std::invalid_argument("IntPolynomial::eval: point length mismatch");
  Int sum = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (std::size_t k = 0; k < e.size(); ++k) term *= int_pow(point[k], e[k]);
    sum += term;
  }
  return sum;
}

int flat_index(const std::vector<int>& dims, BlockVar v) {
  if (v.player < 0 || v.player >= static_cast<int>(dims.size()))
    throw std::invalid_argument("flat_index: player out of range");
  if (v.coord < 0 || v.coord >= dims[v.player])
    throw std::invalid_argument("flat_index: coordinate out of range");
  int base = 0;
  for (int i = 0; i < v.player; ++i) base += dims[i];
  return base + v.coord;
}

std::vector<std::string> default_var_names(const std::vector<int>& dims) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (int k = 0; k < dims[i]; ++k)
      names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
  return names;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial text, position " + std::to_string(pos) + ": " + msg);
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  // Nonnegative integer literal.
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return Int(text.substr(start, pos - start));
  }
  int small_integer() {
    skip_ws();
    std::size_t at = pos;
    Int v = integer();
    if (v > 1000000) {
      pos = at;
      fail("exponent too large");
    }
    return static_cast<int>(v);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected a variable name");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

IntPolynomial parse_polynomial(const std::string& text, const std::vector<int>& dims,
                               const std::map<std::string, int>* names) {
  std::map<std::string, int> default_table;
  if (!names) {
    const auto list = default_var_names(dims);
    for (std::size_t k = 0; k < list.size(); ++k) default_table.emplace(list[k], static_cast<int>(k));
    names = &default_table;
  }

  IntPolynomial poly(dims);
  const std::size_t nvars = poly.num_vars();
  Lexer lex{text};

  if (lex.eof()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.eof()) {
    int sign = 1;
    if (lex.accept('+')) {
      sign = 1;
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }
    first = false;

    Int coeff = 1;
    bool saw_coeff = false;
    std::vector<int> expo(nvars, 0);
    bool saw_var = false;

    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coeff = lex.integer();
      saw_coeff = true;
      // Optional '*' (or plain juxtaposition) before the variables.
      if (lex.accept('*')) {
        if (!std::isalpha(static_cast<unsigned char>(lex.peek())))
          lex.fail("expected a variable after '*'");
      }
    }
    while (std::isalpha(static_cast<unsigned char>(lex.peek()))) {
      std::size_t name_at = lex.pos;
      std::string var = lex.name();
      auto it = names->find(var);
      if (it == names->end()) {
        lex.pos = name_at;
        lex.fail("unknown variable '" + var + "'");
      }
      int e = 1;
      if (lex.accept('^')) e = lex.small_integer();
      expo[static_cast<std::size_t>(it->second)] += e;
      saw_var = true;
      if (lex.accept('*')) {
        if (!std::isalpha(static_cast<unsigned char>(lex.peek())))
          lex.fail("expected a variable after '*'");
        continue;
      }
      break;
    }
    if (!saw_coeff && !saw_var) lex.fail("expected a term");
    poly.add_term(expo, sign * coeff);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

// Descending by total degree, then descending lexicographic.
bool term_before(const std::pair<std::vector<int>, Int>& a,
                 const std::pair<std::vector<int>, Int>& b) {
  int da = std::accumulate(a.first.begin(), a.first.end(), 0);
  int db = std::accumulate(b.first.begin(), b.first.end(), 0);
  if (da != db) return da > db;
  return a.first > b.first;
}

}  // namespace

std::string format_polynomial(const IntPolynomial& p, const std::vector<std::string>* names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> default_names;
  if (!names) {
    default_names = default_var_names(p.dims());
    names = &default_names;
  }
  if (names->size() != p.num_vars())
    throw std::invalid_argument("format_polynomial: name table length mismatch");

  std::vector<std::pair<std::vector<int>, Int>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), term_before);

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Int mag = negative ? Int(-c) : c;
    bool monic = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || monic) os << mag.str();
    bool any = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (any) os << '*';
      os << (*names)[k];
      if (e[k] >= 2) os << '^' << e[k];
      any = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Calculus and degree data

IntPolynomial partial_flat(const IntPolynomial& p, int var) {
  if (var < 0 || var >= static_cast<int>(p.num_vars()))
    throw std::invalid_argument("partial: variable out of range");
  IntPolynomial out(p.dims());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

IntPolynomial partial(const IntPolynomial& p, BlockVar v) {
  return partial_flat(p, flat_index(p.dims(), v));
}

MultiDegree multidegree(const IntPolynomial& p) {
  if (p.is_zero())
    throw PreconditionError("multidegree: the zero polynomial has no multi-degree");
  std::vector<int> best(p.dims().size(), 0);
  for (const auto& [e, c] : p.terms()) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < p.dims().size(); ++i) {
      int block = 0;
      for (int k = 0; k < p.dims()[i]; ++k) block += e[at + k];
      best[i] = std::max(best[i], block);
      at += p.dims()[i];
    }
  }
  return MultiDegree(std::move(best));
}

MultiDegree gradient_multidegree(const IntPolynomial& p, std::size_t player) {
  if (player >= p.dims().size())
    throw std::invalid_argument("gradient_multidegree: player out of range");
  MultiDegree acc = MultiDegree::zero(p.dims().size());
  for (int k = 0; k < p.dims()[player]; ++k) {
    IntPolynomial d = partial(p, BlockVar{static_cast<int>(player), k});
    if (d.is_zero()) continue;
    acc = componentwise_max(acc, multidegree(d));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Deterministic random polynomials

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

void box_rec(const std::vector<int>& dims, const MultiDegree& d, std::size_t block,
             std::vector<int>& cur, std::size_t at, std::vector<std::vector<int>>& out) {
  if (block == dims.size()) {
    out.push_back(cur);
    return;
  }
  // Enumerate this block's exponents with total <= d[block], lexicographically.
  const int nb = dims[block];
  std::vector<int> expo(static_cast<std::size_t>(std::max(nb, 0)), 0);
  auto rec = [&](auto&& self, int k, int budget) -> void {
    if (k == nb) {
      for (int q = 0; q < nb; ++q) cur[at + q] = expo[q];
      box_rec(dims, d, block + 1, cur, at + nb, out);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      expo[k] = e;
      self(self, k + 1, budget - e);
    }
    expo[k] = 0;
  };
  rec(rec, 0, d[block]);
}

// Uniform draw from [-bound, bound] with rejection, deterministic in
// (seed, index, attempt counter).
int draw_coeff(std::uint64_t seed, std::uint64_t index, int bound, std::uint64_t attempt = 0) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t cell = splitmix64(splitmix64(seed) ^ splitmix64(index + 1));
  const std::uint64_t reject_above = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  for (;; ++attempt) {
    std::uint64_t v = splitmix64(cell ^ (attempt * 0xD1B54A32D192ED03ULL + 7));
    if (range != 0 && (reject_above == UINT64_MAX || v <= reject_above))
      return static_cast<int>(v % range) - bound;
  }
}

}  // namespace

std::vector<std::vector<int>> box_degree_monomials(const std::vector<int>& dims,
                                                   const MultiDegree& d) {
  if (d.size() != dims.size())
    throw std::invalid_argument("box_degree_monomials: degree length mismatch");
  int total = 0;
  for (int x : dims) {
    if (x < 0) throw std::invalid_argument("box_degree_monomials: negative block size");
    total += x;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(total, 0);
  box_rec(dims, d, 0, cur, 0, out);
  return out;
}

IntPolynomial random_generic(const std::vector<int>& dims, const MultiDegree& d,
                             std::uint64_t seed, int coeff_bound) {
  if (coeff_bound < 1) throw std::invalid_argument("random_generic: coefficient bound must be >= 1");
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] < 1) throw std::invalid_argument("random_generic: empty block");

  IntPolynomial p(dims);
  // Corner monomial: all of each block's degree on the block's first variable.
  std::vector<int> corner(p.num_vars(), 0);
  {
    std::size_t at = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      corner[at] = d[i];
      at += dims[i];
    }
  }
  const auto monomials = box_degree_monomials(dims, d);
  for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
    int c = draw_coeff(seed, idx, coeff_bound);
    if (monomials[idx] == corner) {
      for (std::uint64_t attempt = 1; c == 0; ++attempt)
        c = draw_coeff(seed, idx, coeff_bound, attempt);
    }
    p.add_term(monomials[idx], c);
  }
  return p;
}

}  // namespace gnepdeg
