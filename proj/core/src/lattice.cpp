#include "nlat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace nlat {

namespace {

IntMat e8_gram() {
  IntMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  auto link = [&](std::size_t a, std::size_t b) { g(a, b) = 1; g(b, a) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return g;
}

IntMat d4_gram() {
  IntMat g(4, 4);
  for (std::size_t i = 0; i < 4; ++i) g(i, i) = -2;
  for (std::size_t i = 1; i < 4; ++i) { g(0, i) = 1; g(i, 0) = 1; }
  return g;
}

IntMat u_gram() { return IntMat{{0, 1}, {1, 0}}; }

IntMat base_gram(BaseForm b) {
  switch (b) {
    case BaseForm::E8: return e8_gram();
    case BaseForm::U: return u_gram();
    case BaseForm::D4: return d4_gram();
    case BaseForm::One: return IntMat{{1}};
    case BaseForm::MinusOne: return IntMat{{-1}};
  }
  throw std::logic_error("base_gram: unknown form");
}

std::string base_name(BaseForm b) {
  switch (b) {
    case BaseForm::E8: return "E8";
    case BaseForm::U: return "U";
    case BaseForm::D4: return "D4";
    case BaseForm::One: return "<1>";
    case BaseForm::MinusOne: return "<-1>";
  }
  throw std::logic_error("base_name: unknown form");
}

void require_form(const IntMat& g, const char* who) {
  if (!g.is_square()) throw std::invalid_argument(std::string(who) + ": gram matrix must be square");
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i))
        throw std::invalid_argument(std::string(who) + ": gram matrix must be symmetric");
}

long long parse_bounded_int(std::string_view digits, const char* what) {
  if (digits.empty() || digits.size() > 9)
    throw std::invalid_argument(std::string("parse_form: bad ") + what);
  long long v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("parse_form: bad ") + what);
    v = v * 10 + (c - '0');
  }
  return v;
}

FormSummand parse_term(std::string_view t) {
  FormSummand s;
  std::size_t pos = 0;
  if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
    std::size_t end = pos;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    if (end >= t.size() || t[end] != '*')
      throw std::invalid_argument("parse_form: expected '*' after multiplicity");
    s.multiplicity = parse_bounded_int(t.substr(pos, end - pos), "multiplicity");
    if (s.multiplicity == 0)
      throw std::invalid_argument("parse_form: multiplicity must be positive");
    pos = end + 1;
  }
  std::string_view rest = t.substr(pos);
  auto eat = [&](std::string_view name, BaseForm b) {
    if (rest.substr(0, name.size()) != name) return false;
    s.base = b;
    pos += name.size();
    return true;
  };
  if (!eat("E8", BaseForm::E8) && !eat("D4", BaseForm::D4) && !eat("U", BaseForm::U) &&
      !eat("H", BaseForm::U) && !eat("<-1>", BaseForm::MinusOne) && !eat("<1>", BaseForm::One))
    throw std::invalid_argument("parse_form: unknown base form in '" + std::string(t) + "'");
  if (pos < t.size()) {
    if (t[pos] != '(' || t.back() != ')' || pos + 2 > t.size() - 1)
      throw std::invalid_argument("parse_form: malformed rescaling in '" + std::string(t) + "'");
    std::string_view inner = t.substr(pos + 1, t.size() - pos - 2);
    long long sign = 1;
    if (!inner.empty() && (inner[0] == '-' || inner[0] == '+')) {
      if (inner[0] == '-') sign = -1;
      inner.remove_prefix(1);
    }
    s.scale = sign * parse_bounded_int(inner, "scale");
    if (s.scale == 0) throw std::invalid_argument("parse_form: scale must be nonzero");
  }
  return s;
}

Int floor_rat(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

bool is_integral(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace

Int Lattice::pair(const std::vector<Int>& x, const std::vector<Int>& y) const {
  if (x.size() != gram.rows() || y.size() != gram.rows())
    throw std::invalid_argument("Lattice::pair: dimension mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != 0) acc += x[i] * gram(i, j) * y[j];
  return acc;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(const LatticeInvariants& inv) {
  std::string s = "rank " + std::to_string(inv.rank) + ", signature (" +
                  std::to_string(inv.b_plus) + ", " + std::to_string(inv.b_minus) + "), " +
                  to_string(inv.parity) + ", det " + inv.det.str();
  if (inv.unimodular) s += ", unimodular";
  return s;
}

long long base_rank(BaseForm b) {
  switch (b) {
    case BaseForm::E8: return 8;
    case BaseForm::D4: return 4;
    case BaseForm::U: return 2;
    default: return 1;
  }
}

long long FormExpr::rank() const {
  long long r = 0;
  for (const auto& s : summands) r += s.multiplicity * base_rank(s.base);
  return r;
}

std::string FormExpr::str() const {
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " + ";
    if (s.multiplicity != 1) out += std::to_string(s.multiplicity) + "*";
    out += base_name(s.base);
    long long scale = flipped ? -s.scale : s.scale;
    if (scale != 1) out += "(" + std::to_string(scale) + ")";
  }
  return out;
}

FormExpr parse_form(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_form: empty expression");
  FormExpr expr;
  std::size_t start = 0;
  int angle = 0, paren = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '<') ++angle;
      else if (s[i] == '>') --angle;
      else if (s[i] == '(') ++paren;
      else if (s[i] == ')') --paren;
    }
    if (i == s.size() || (s[i] == '+' && angle == 0 && paren == 0)) {
      if (i == start) throw std::invalid_argument("parse_form: empty term");
      expr.summands.push_back(parse_term(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  }
  if (angle != 0 || paren != 0) throw std::invalid_argument("parse_form: unbalanced brackets");
  return expr;
}

Lattice standard_lattice(const FormExpr& expr) {
  Lattice out;
  out.label = expr.str();
  long long n = expr.rank();
  out.gram = IntMat(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t off = 0;
  for (const auto& s : expr.summands) {
    IntMat g = base_gram(s.base);
    Int scale = expr.flipped ? -s.scale : s.scale;
    for (long long rep = 0; rep < s.multiplicity; ++rep) {
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
          out.gram(off + i, off + j) = scale * g(i, j);
      off += g.rows();
    }
  }
  return out;
}

Lattice standard_lattice(std::string_view expr) { return standard_lattice(parse_form(expr)); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  require_form(a.gram, "direct_sum");
  require_form(b.gram, "direct_sum");
  std::size_t n = a.gram.rows(), m = b.gram.rows();
  Lattice out;
  out.gram = IntMat(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.gram(n + i, n + j) = b.gram(i, j);
  if (a.label.empty()) out.label = b.label;
  else if (b.label.empty()) out.label = a.label;
  else out.label = a.label + " + " + b.label;
  return out;
}

Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw std::invalid_argument("rescale: scale must be nonzero");
  Lattice out;
  out.gram = IntMat(l.gram.rows(), l.gram.cols());
  for (std::size_t i = 0; i < l.gram.rows(); ++i)
    for (std::size_t j = 0; j < l.gram.cols(); ++j) out.gram(i, j) = n * l.gram(i, j);
  out.label = l.label.empty() ? "" : "(" + l.label + ")(" + n.str() + ")";
  return out;
}

LatticeInvariants invariants(const Lattice& l) {
  require_form(l.gram, "invariants");
  LatticeInvariants inv;
  inv.rank = l.rank();
  Inertia in = inertia(to_rational(l.gram));
  inv.b_plus = static_cast<long long>(in.positive);
  inv.b_minus = static_cast<long long>(in.negative);
  inv.signature = inv.b_plus - inv.b_minus;
  inv.det = determinant(l.gram);
  inv.parity = Parity::Even;
  for (std::size_t i = 0; i < l.gram.rows(); ++i)
    if (l.gram(i, i) % 2 != 0) inv.parity = Parity::Odd;
  inv.unimodular = inv.det == 1 || inv.det == -1;
  return inv;
}

bool is_characteristic(const Lattice& l, const std::vector<Int>& c) {
  require_form(l.gram, "is_characteristic");
  if (c.size() != l.gram.rows())
    throw std::invalid_argument("is_characteristic: dimension mismatch");
  for (std::size_t i = 0; i < l.gram.rows(); ++i) {
    Int pairing = 0;
    for (std::size_t j = 0; j < l.gram.cols(); ++j) pairing += l.gram(i, j) * c[j];
    if ((pairing - l.gram(i, i)) % 2 != 0) return false;
  }
  return true;
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const Int& f : invariant_factors) o *= f;
  return o;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  require_form(l.gram, "discriminant_group");
  if (determinant(l.gram) == 0)
    throw std::invalid_argument("discriminant_group: degenerate lattice");
  SmithResult snf = smith_normal_form(l.gram);
  DiscriminantGroup g;
  for (std::size_t i = 0; i < snf.d.rows(); ++i)
    if (snf.d(i, i) > 1) g.invariant_factors.push_back(snf.d(i, i));
  return g;
}

Overlattice overlattice_of(const Lattice& base, const std::vector<std::vector<Rat>>& glue) {
  require_form(base.gram, "overlattice");
  const std::size_t n = base.gram.rows();
  RatMat gq = to_rational(base.gram);
  for (const auto& x : glue) {
    if (x.size() != n) throw std::invalid_argument("overlattice: glue vector of wrong rank");
    std::vector<Rat> gx = gq.apply(x);
    for (const Rat& e : gx)
      if (!is_integral(e))
        throw std::invalid_argument("overlattice: glue vector outside the dual lattice");
  }
  Int d = 1;
  for (const auto& x : glue)
    for (const Rat& e : x) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(e));

  IntMat stack(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) stack(i, i) = d;
  for (std::size_t k = 0; k < glue.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = glue[k][j] * Rat(d);
      stack(n + k, j) = boost::multiprecision::numerator(scaled);
    }
  HermiteResult hnf = hermite_normal_form(stack);

  RatMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(hnf.h(i, j), d);

  RatMat gp = basis * gq * basis.transposed();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integral(gp(i, j)))
        throw std::invalid_argument("overlattice: glue vectors do not pair integrally");

  Overlattice out;
  out.lattice.gram = to_integer(gp);
  out.lattice.label = base.label.empty() ? "overlattice" : "overlattice of " + base.label;
  out.basis = basis;

  Int scaled_det = 1;
  for (std::size_t i = 0; i < n; ++i) scaled_det *= hnf.h(i, i);
  Int dn = 1;
  for (std::size_t i = 0; i < n; ++i) dn *= d;
  if (scaled_det == 0 || dn % scaled_det != 0)
    throw std::logic_error("overlattice: basis does not span a finite-index extension");
  out.index = dn / scaled_det;

  Int det_base = determinant(base.gram);
  if (det_base != determinant(out.lattice.gram) * out.index * out.index)
    throw std::logic_error("overlattice: determinant law violated");
  return out;
}

Overlattice overlattice(const GlueSpec& spec) {
  return overlattice_of(standard_lattice(spec.base), spec.glue_vectors);
}

std::vector<GlueSet> glue_search(const Lattice& base, const LatticeInvariants& target,
                                 long long bound) {
  require_form(base.gram, "glue_search");
  if (bound < 1) throw std::invalid_argument("glue_search: bound must be positive");
  const std::size_t n = base.gram.rows();
  std::vector<GlueSet> out;
  if (static_cast<long long>(n) != target.rank) return out;

  Int det_base = determinant(base.gram);
  if (det_base == 0) throw std::invalid_argument("glue_search: degenerate base lattice");
  if (target.det == 0 || det_base % target.det != 0) return out;
  Int ratio = det_base / target.det;
  if (ratio <= 0) return out;
  Int index = boost::multiprecision::sqrt(ratio);
  if (index * index != ratio) return out;

  if (index == 1) {
    if (invariants(base) == target) out.push_back({});
    return out;
  }

  // Coset representatives of the discriminant group killed by lcm(1..bound),
  // obtained from the Smith form u g v = d as x = v (t_1/d_1, ..., t_n/d_n).
  SmithResult snf = smith_normal_form(base.gram);
  Int killer = 1;
  for (long long k = 2; k <= bound; ++k) killer = boost::multiprecision::lcm(killer, Int(k));

  std::vector<long long> counts(n);
  std::vector<Int> steps(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int di = snf.d(i, i);
    Int ci = boost::multiprecision::gcd(di, killer);
    counts[i] = ci.convert_to<long long>();
    steps[i] = di / ci;
  }

  RatMat gq = to_rational(base.gram);
  struct Candidate {
    std::vector<Rat> x;
    std::vector<Rat> gx;
    Rat q;
  };
  std::vector<Candidate> cands;

  std::vector<long long> digit(n, 0);
  while (true) {
    bool trivial = std::all_of(digit.begin(), digit.end(), [](long long v) { return v == 0; });
    if (!trivial) {
      std::vector<Rat> x(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) {
        if (digit[k] == 0) continue;
        Rat w(digit[k] * steps[k], snf.d(k, k));
        for (std::size_t j = 0; j < n; ++j) x[j] += Rat(snf.v(j, k)) * w;
      }
      bool ok = true;
      Int order = 1;
      for (Rat& e : x) {
        e -= Rat(floor_rat(e));
        Int den = boost::multiprecision::denominator(e);
        if (den > bound) { ok = false; break; }
        order = boost::multiprecision::lcm(order, den);
      }
      if (ok && order > 1 && index % order == 0) {
        Candidate c;
        c.gx = gq.apply(x);
        Rat q(0);
        for (std::size_t j = 0; j < n; ++j) q += x[j] * c.gx[j];
        bool q_ok = is_integral(q) &&
                    (target.parity == Parity::Odd ||
                     boost::multiprecision::numerator(q) % 2 == 0);
        if (q_ok) {
          c.x = std::move(x);
          c.q = q;
          cands.push_back(std::move(c));
        }
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++digit[pos] == counts[pos]) digit[pos++] = 0;
    if (pos == n) break;
  }

  long long gmax = static_cast<long long>(boost::multiprecision::msb(index));
  std::set<std::string> seen;
  std::vector<std::size_t> chosen;

  auto compatible = [&](std::size_t i, std::size_t j) {
    Rat p(0);
    for (std::size_t k = 0; k < n; ++k) p += cands[i].x[k] * cands[j].gx[k];
    return is_integral(p);
  };

  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (!chosen.empty()) {
      GlueSet glue;
      for (std::size_t i : chosen) glue.push_back(cands[i].x);
      Overlattice over = overlattice_of(base, glue);
      if (over.index == index && invariants(over.lattice) == target &&
          seen.insert(over.basis.str()).second)
        out.push_back(std::move(glue));
    }
    if (static_cast<long long>(chosen.size()) >= gmax) return;
    for (std::size_t j = start; j < cands.size(); ++j) {
      bool ok = true;
      for (std::size_t i : chosen)
        if (!compatible(i, j)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(j);
      search(j + 1);
      chosen.pop_back();
    }
  };
  search(0);
  return out;
}

}  // namespace nlat
