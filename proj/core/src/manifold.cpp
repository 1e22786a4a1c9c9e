#include "nlat/manifold.hpp"

#include <cctype>
#include <stdexcept>

namespace nlat {

namespace {

void check_record(const Manifold& m) {
  if (m.b2() < 0) throw std::logic_error("manifold: negative b2");
  long long abs_sigma = m.sigma < 0 ? -m.sigma : m.sigma;
  if (abs_sigma > m.b2()) throw std::logic_error("manifold: |sigma| exceeds b2");
  if (m.spin && m.parity != Parity::Even)
    throw std::logic_error("manifold: spin manifold with odd intersection form");
  if (m.lattice) {
    LatticeInvariants inv = invariants(*m.lattice);
    if (inv.rank != m.b2() || inv.signature != m.sigma || inv.parity != m.parity)
      throw std::logic_error("manifold: lattice does not match the invariant record");
  }
}

Manifold finish(Manifold m) {
  check_record(m);
  return m;
}

}  // namespace

long long SurfaceConfig::sphere_count(long long euler) const {
  long long n = 0;
  for (const auto& c : components)
    if (c.kind == SurfaceComponent::Kind::Sphere && c.euler == euler) n += c.count;
  return n;
}

long long SurfaceConfig::plane_count() const {
  long long n = 0;
  for (const auto& c : components)
    if (c.kind == SurfaceComponent::Kind::ProjectivePlane) n += c.count;
  return n;
}

Manifold block_s2xs2() {
  Manifold m;
  m.name = "S2xS2";
  m.chi = 4;
  m.sigma = 0;
  m.parity = Parity::Even;
  m.spin = true;
  m.cover_spin = true;
  m.lattice = standard_lattice("U");
  m.capacities.sphere_minus2 = 1;
  m.capacities.sphere_plus2 = 1;
  return finish(m);
}

Manifold block_cp2() {
  Manifold m;
  m.name = "CP2";
  m.chi = 3;
  m.sigma = 1;
  m.parity = Parity::Odd;
  m.lattice = standard_lattice("<1>");
  m.capacities.sphere_plus1 = 1;
  return finish(m);
}

Manifold block_cp2bar() {
  Manifold m;
  m.name = "CP2bar";
  m.chi = 3;
  m.sigma = -1;
  m.parity = Parity::Odd;
  m.lattice = standard_lattice("<-1>");
  m.capacities.sphere_minus1 = 1;
  return finish(m);
}

Manifold block_k3() {
  Manifold m;
  m.name = "K3";
  m.chi = 24;
  m.sigma = -16;
  m.parity = Parity::Even;
  m.spin = true;
  m.cover_spin = true;
  m.lattice = standard_lattice("2*E8 + 3*U");
  return finish(m);
}

Manifold block_enriques() {
  Manifold m;
  m.name = "Enriques";
  m.chi = 12;
  m.sigma = -8;
  m.parity = Parity::Even;
  m.pi1 = {Pi1::Kind::Finite, 2, "Z2"};
  m.spin = false;
  m.cover_spin = true;
  m.lattice = standard_lattice("E8 + U");
  m.capacities.sphere_minus2 = 8;
  m.capacities.plane_minus1 = 1;
  return finish(m);
}

Manifold block_teichner(long long b2T) {
  if (b2T <= 0) throw std::invalid_argument("Teichner: b2 must be positive");
  Manifold m;
  m.name = "Teichner(b2=" + std::to_string(b2T) + ")";
  m.chi = b2T + 2;
  m.sigma = -1;
  m.parity = Parity::Odd;
  m.pi1 = {Pi1::Kind::Finite, 128, "Z16⋊Z8"};
  m.cover_spin = true;
  return finish(m);
}

Manifold block_hitchin() {
  Manifold m;
  m.name = "Hitchin";
  m.chi = 6;
  m.sigma = -4;
  m.parity = Parity::Odd;
  m.pi1 = {Pi1::Kind::Finite, 4, "Z2⊕Z2"};
  m.cover_spin = true;
  m.lattice = standard_lattice("4*<-1>");
  m.capacities.plane_minus1 = 1;
  return finish(m);
}

Manifold block_elliptic(long long n, long long p, long long t) {
  if (n <= 0) throw std::invalid_argument("Elliptic: n must be positive");
  if (p <= 1) throw std::invalid_argument("Elliptic: p must be at least 2");
  if (t < 0) throw std::invalid_argument("Elliptic: t must be nonnegative");
  Manifold m;
  m.name = "Elliptic(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
           ",t=" + std::to_string(t) + ")";
  m.chi = 12 * n;
  m.sigma = -8 * n;
  m.chi_h = n;
  m.parity = (n % 2 == 0 && p % 2 == 1) ? Parity::Even : Parity::Odd;
  m.pi1 = {Pi1::Kind::Finite, p, "Z" + std::to_string(p)};
  m.spin = m.parity == Parity::Even;  // no 2-torsion in H1 when p is odd
  m.cover_spin = (p * n) % 2 == 0;
  m.capacities.sphere_minus2 = t;
  return finish(m);
}

namespace {

Capacities add_caps(const Capacities& a, const Capacities& b) {
  return {a.sphere_minus2 + b.sphere_minus2, a.sphere_plus2 + b.sphere_plus2,
          a.sphere_minus1 + b.sphere_minus1, a.sphere_plus1 + b.sphere_plus1,
          a.plane_minus1 + b.plane_minus1,   a.plane_plus1 + b.plane_plus1};
}

}  // namespace

Manifold connected_sum(const Manifold& x, const Manifold& y) {
  Manifold m;
  m.name = x.name + " # " + y.name;
  m.chi = x.chi + y.chi - 2;
  m.sigma = x.sigma + y.sigma;
  m.b1 = x.b1 + y.b1;
  m.parity = (x.parity == Parity::Even && y.parity == Parity::Even) ? Parity::Even
                                                                    : Parity::Odd;
  m.spin = x.spin && y.spin;
  if (x.pi1.kind == Pi1::Kind::Trivial)
    m.pi1 = y.pi1;
  else if (y.pi1.kind == Pi1::Kind::Trivial)
    m.pi1 = x.pi1;
  else
    m.pi1 = {Pi1::Kind::Unknown, 0, ""};
  m.cover_spin = x.cover_spin && y.cover_spin;
  if (x.lattice && y.lattice) m.lattice = direct_sum(*x.lattice, *y.lattice);
  m.capacities = add_caps(x.capacities, y.capacities);
  return finish(m);
}

Manifold sum_along_wedge(const Manifold& x, const Manifold& y, long long g) {
  if (g < 1) throw std::invalid_argument("sum_along_wedge: g must be at least 1");
  if (x.b1 != 0 || y.b1 != 0)
    throw std::invalid_argument("sum_along_wedge: both summands need b1 = 0");
  if (x.pi1.kind == Pi1::Kind::Unknown || x.pi1 != y.pi1)
    throw std::invalid_argument("sum_along_wedge: fundamental group records must agree");
  Manifold m;
  m.name = "sumW(g=" + std::to_string(g) + ", " + x.name + ", " + y.name + ")";
  m.chi = x.chi + y.chi + 2 * (g - 1);
  m.sigma = x.sigma + y.sigma;
  m.parity = (x.parity == Parity::Odd || y.parity == Parity::Odd) ? Parity::Odd
                                                                  : Parity::Even;
  m.pi1 = x.pi1;
  m.spin = x.spin && y.spin;
  m.cover_spin = x.cover_spin && y.cover_spin;
  m.capacities = add_caps(x.capacities, y.capacities);
  return finish(m);
}

Manifold reverse_orientation(const Manifold& x) {
  Manifold m = x;
  m.name = "rev(" + x.name + ")";
  m.sigma = -x.sigma;
  if (x.lattice) m.lattice = rescale(*x.lattice, -1);
  m.capacities = {x.capacities.sphere_plus2,  x.capacities.sphere_minus2,
                  x.capacities.sphere_plus1,  x.capacities.sphere_minus1,
                  x.capacities.plane_plus1,   x.capacities.plane_minus1};
  m.chi_h.reset();
  return finish(m);
}

Manifold universal_cover(const Manifold& x) {
  if (x.pi1.kind == Pi1::Kind::Unknown)
    throw std::invalid_argument("universal_cover: fundamental group is not known finite");
  if (x.b1 != 0) throw std::invalid_argument("universal_cover: b1 must vanish");
  if (x.pi1.kind == Pi1::Kind::Trivial) return x;
  long long m_deg = x.pi1.order;
  Manifold m;
  m.name = "cover(" + x.name + ")";
  m.chi = m_deg * x.chi;
  m.sigma = m_deg * x.sigma;
  m.pi1 = {};
  m.spin = x.cover_spin;
  m.cover_spin = x.cover_spin;
  m.parity = m.spin ? Parity::Even : Parity::Odd;
  m.capacities = x.capacities;
  m.capacities.sphere_minus2 *= m_deg;
  m.capacities.sphere_plus2 *= m_deg;
  m.capacities.sphere_minus1 *= m_deg;
  m.capacities.sphere_plus1 *= m_deg;
  m.capacities.plane_minus1 = 0;
  m.capacities.plane_plus1 = 0;
  if (x.chi_h) m.chi_h = m_deg * *x.chi_h;
  return finish(m);
}

SurfaceConfig lift_surface_config(const SurfaceConfig& c, long long m) {
  if (m < 1) throw std::invalid_argument("lift_surface_config: degree must be at least 1");
  SurfaceConfig out = c;
  for (auto& comp : out.components) {
    if (comp.kind == SurfaceComponent::Kind::ProjectivePlane)
      throw std::invalid_argument("lift_surface_config: projective planes do not lift");
    comp.count *= m;
  }
  return out;
}

std::vector<std::string> validate_config(const Manifold& x, const SurfaceConfig& c) {
  std::vector<std::string> violations;
  auto count_planes = [&](long long euler, bool essential) {
    long long n = 0;
    for (const auto& comp : c.components)
      if (comp.kind == SurfaceComponent::Kind::ProjectivePlane && comp.euler == euler &&
          comp.essential == essential)
        n += comp.count;
    return n;
  };
  for (const auto& comp : c.components) {
    if (comp.count < 1) violations.push_back("component with nonpositive count");
    if (comp.kind == SurfaceComponent::Kind::Sphere) {
      if (comp.euler != -2 && comp.euler != 2 && comp.euler != -1 && comp.euler != 1)
        violations.push_back("sphere with unsupported Euler number " +
                             std::to_string(comp.euler));
    } else if (comp.euler != -1 && comp.euler != 1) {
      violations.push_back("projective plane with unsupported Euler number " +
                           std::to_string(comp.euler));
    }
  }
  if (!violations.empty()) return violations;

  auto need = [&](long long have, long long want, const std::string& what) {
    if (want > have)
      violations.push_back("needs " + std::to_string(want) + " " + what + ", capacity " +
                           std::to_string(have));
  };
  need(x.capacities.sphere_minus2, c.sphere_count(-2), "(-2)-spheres");
  need(x.capacities.sphere_plus2, c.sphere_count(2), "(+2)-spheres");
  need(x.capacities.sphere_minus1, c.sphere_count(-1), "(-1)-spheres");
  need(x.capacities.sphere_plus1, c.sphere_count(1), "(+1)-spheres");
  need(x.capacities.plane_minus1, count_planes(-1, true), "essential (-1)-planes");
  need(x.capacities.plane_plus1, count_planes(1, true), "essential (+1)-planes");
  if (count_planes(-1, false) > 0 || count_planes(1, false) > 0)
    violations.push_back("inessential projective planes are not available");

  if (c.classes) {
    if (!x.lattice) {
      violations.push_back("explicit classes given but the intersection lattice is unknown");
      return violations;
    }
    long long spheres = c.sphere_count(-2) + c.sphere_count(2) + c.sphere_count(-1) +
                        c.sphere_count(1);
    if (c.plane_count() > 0) {
      violations.push_back("explicit classes are only supported for sphere components");
      return violations;
    }
    if (static_cast<long long>(c.classes->size()) != spheres) {
      violations.push_back("class count does not match the number of spheres");
      return violations;
    }
    std::vector<long long> eulers;
    for (const auto& comp : c.components)
      for (long long i = 0; i < comp.count; ++i) eulers.push_back(comp.euler);
    const Lattice& lat = *x.lattice;
    for (std::size_t i = 0; i < c.classes->size(); ++i) {
      if (static_cast<long long>((*c.classes)[i].size()) != lat.rank()) {
        violations.push_back("class " + std::to_string(i) + " has the wrong rank");
        continue;
      }
      if (lat.pair((*c.classes)[i], (*c.classes)[i]) != eulers[i])
        violations.push_back("class " + std::to_string(i) +
                             " does not have self-intersection " + std::to_string(eulers[i]));
      for (std::size_t j = i + 1; j < c.classes->size(); ++j)
        if ((*c.classes)[j].size() == static_cast<std::size_t>(lat.rank()) &&
            lat.pair((*c.classes)[i], (*c.classes)[j]) != 0)
          violations.push_back("classes " + std::to_string(i) + " and " + std::to_string(j) +
                               " are not orthogonal");
    }
  }
  return violations;
}

namespace {

// Recursive-descent parser for the build grammar.
struct BuildParser {
  std::string s;
  std::size_t pos = 0;

  explicit BuildParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_build: " + why);
  }

  bool eat(char ch) {
    if (pos < s.size() && s[pos] == ch) { ++pos; return true; }
    return false;
  }

  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string ident() {
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos]))))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  long long integer() {
    std::size_t start = pos;
    if (eat('-')) {}
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
    if (pos - start > 9) fail("integer out of range");
    return std::stoll(s.substr(start, pos - start));
  }

  long long named_int(const std::string& key) {
    std::string k = ident();
    if (k != key) fail("expected parameter '" + key + "'");
    expect('=');
    return integer();
  }

  Manifold expr() {
    Manifold m = atom();
    while (eat('#')) {
      long long reps = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) reps = integer();
      if (reps < 1) fail("repetition count must be positive");
      Manifold rhs = atom();
      for (long long i = 0; i < reps; ++i) m = connected_sum(m, rhs);
    }
    return m;
  }

  Manifold atom() {
    if (eat('(')) {
      Manifold m = expr();
      expect(')');
      return m;
    }
    std::string name = ident();
    if (name == "S2xS2") return block_s2xs2();
    if (name == "CP2") return block_cp2();
    if (name == "CP2bar") return block_cp2bar();
    if (name == "K3") return block_k3();
    if (name == "Enriques") return block_enriques();
    if (name == "Hitchin") return block_hitchin();
    if (name == "Teichner") {
      expect('(');
      long long b2 = named_int("b2");
      expect(')');
      return block_teichner(b2);
    }
    if (name == "Elliptic") {
      expect('(');
      long long n = named_int("n");
      expect(',');
      long long p = named_int("p");
      long long t = 0;
      if (eat(',')) t = named_int("t");
      expect(')');
      return block_elliptic(n, p, t);
    }
    if (name == "rev") {
      expect('(');
      Manifold m = expr();
      expect(')');
      return reverse_orientation(m);
    }
    if (name == "cover") {
      expect('(');
      Manifold m = expr();
      expect(')');
      return universal_cover(m);
    }
    if (name == "csum") {
      expect('(');
      Manifold m = expr();
      int args = 1;
      while (eat(',')) { m = connected_sum(m, expr()); ++args; }
      expect(')');
      if (args < 2) fail("csum needs at least two summands");
      return m;
    }
    if (name == "sumW") {
      expect('(');
      long long g = named_int("g");
      expect(',');
      Manifold m = expr();
      int args = 1;
      while (eat(',')) { m = sum_along_wedge(m, expr(), g); ++args; }
      expect(')');
      if (args < 2) fail("sumW needs at least two summands");
      return m;
    }
    fail("unknown block or builder '" + name + "'");
  }
};

}  // namespace

Manifold parse_build(std::string_view text) {
  BuildParser p(text);
  Manifold m = p.expr();
  if (p.pos != p.s.size()) p.fail("trailing input");
  return m;
}

}  // namespace nlat
