#include "invstab/chambers.hpp"

#include <stdexcept>

namespace invstab {

namespace {

const Rational kHalf(1, 2);

ExactComplex half_i() { return ExactComplex(0, kHalf); }

}  // namespace

CentralCharge NormalizedCharge::charge() const { return CentralCharge{x, half_i() - x}; }

NormalizedCharge NormalizedCharge::from_charge(const CentralCharge& Z) { return NormalizedCharge{normalize(Z).charge.z0}; }

bool is_puncture(const ExactComplex& x) {
  if (sgn(x.re) != 0) return false;
  const Rational twice = 2 * x.im;
  return twice.get_den() == 1;
}

std::string Wall::str() const { return std::string("W") + (sign > 0 ? "+" : "-") + std::to_string(index); }

Wall Wall::parse(const std::string& text) {
  if (text.size() == 3 && text[0] == 'W' && (text[1] == '+' || text[1] == '-') && (text[2] == '0' || text[2] == '1')) {
    return Wall{text[2] - '0', text[1] == '+' ? 1 : -1};
  }
  throw std::invalid_argument("wall must be one of W+0, W-0, W+1, W-1; got '" + text + "'");
}

std::string Region::str() const {
  switch (kind) {
    case Kind::u_plus:
      return "U+";
    case Kind::u_minus:
      return "U-";
    case Kind::ray:
      return "ray";
    case Kind::wall:
      return wall.str();
    case Kind::outside:
      return "outside";
  }
  return "";
}

Region classify(const ExactComplex& x) {
  const ExactComplex z0 = x;
  const ExactComplex z1 = half_i() - x;
  const int s0 = sgn(z0.im);
  const int s1 = sgn(z1.im);
  Region r;
  if (s0 > 0 && s1 > 0) {
    const auto cmp = phase_cmp(z0, z1);
    r.kind = cmp == std::strong_ordering::less    ? Region::Kind::u_plus
             : cmp == std::strong_ordering::greater ? Region::Kind::u_minus
                                                    : Region::Kind::ray;
    return r;
  }
  if (s0 == 0 && s1 > 0 && sgn(z0.re) != 0) {
    r.kind = Region::Kind::wall;
    r.wall = Wall{0, sgn(z0.re)};
    return r;
  }
  if (s1 == 0 && s0 > 0 && sgn(z1.re) != 0) {
    r.kind = Region::Kind::wall;
    r.wall = Wall{1, sgn(z1.re)};
    return r;
  }
  return r;
}

Integer locate_strip(const ExactComplex& x) {
  const Rational twice = 2 * x.im;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  return -k;
}

ExactComplex to_base_frame(const ExactComplex& x, long n) { return x + ExactComplex(0, make_rational(n, 2)); }

Region ChamberPoint::region() const { return classify(to_base_frame(x, word.quotient_exponent())); }

void ChamberPoint::validate() const {
  if (!region().in_chamber()) {
    throw std::domain_error("x = " + x.str() + " is not in the open chamber of the sheet " + word.str());
  }
}

namespace {

StableCatalogEntry entry(const KClass& v, int n, bool family) {
  const auto label = kron_type_label(v);
  if (!label) throw std::logic_error("class " + v.str() + " has no Kronecker-type name");
  return StableCatalogEntry{v, project(v), *label, family, n, family ? "P1-family, up to shift" : "unique, up to shift"};
}

std::vector<StableCatalogEntry> u_plus_catalog(int n_max) {
  std::vector<StableCatalogEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(entry(n * gamma(0) + (n + 1) * gamma(1), n, false));
    out.push_back(entry((n + 1) * gamma(0) + n * gamma(1), n, false));
    out.push_back(entry(n * gamma(2) + (n + 1) * gamma(3), n, false));
    out.push_back(entry((n + 1) * gamma(2) + n * gamma(3), n, false));
  }
  out.push_back(entry(gamma(0) + gamma(1), -1, true));
  out.push_back(entry(gamma(2) + gamma(3), -1, true));
  return out;
}

}  // namespace

std::vector<StableCatalogEntry> stable_catalog(const ChamberPoint& p, int n_max) {
  p.validate();
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<StableCatalogEntry> base;
  switch (p.region().kind) {
    case Region::Kind::u_plus:
      base = u_plus_catalog(n_max);
      break;
    case Region::Kind::u_minus: {
      const LatticeAuto s = psi();
      for (StableCatalogEntry e : u_plus_catalog(n_max)) {
        e.kclass = apply(s, e.kclass);
        e.quot = project(e.kclass);
        e.label = e.label.with_psi(1);
        base.push_back(e);
      }
      break;
    }
    case Region::Kind::ray: {
      const Heart h = standard_heart();
      for (int i = 0; i < 4; ++i) {
        base.push_back(StableCatalogEntry{gamma(i), project(gamma(i)), h.simples[i].label, false, 0, "unique, up to shift"});
      }
      break;
    }
    default:
      break;
  }
  if (p.word.empty()) return base;
  const LatticeAuto m = p.word.matrix();
  for (StableCatalogEntry& e : base) {
    e.kclass = apply(m, e.kclass);
    e.quot = project(e.kclass);
    for (auto it = p.word.letters.rbegin(); it != p.word.letters.rend(); ++it) e.label = apply_generator(*it, e.label);
  }
  return base;
}

DeltaWitness semistable_delta_witness(const ChamberPoint& p) {
  p.validate();
  const CentralCharge Z = NormalizedCharge{p.x}.charge();
  const ExactComplex a = evaluate(Z, gamma(0) + gamma(1));
  const ExactComplex b = evaluate(Z, gamma(2) + gamma(3));
  if (!(a == b) || phase_cmp(a, evaluate(Z, delta())) != std::strong_ordering::equal) {
    throw std::logic_error("the two halves of delta have different phases");
  }
  return DeltaWitness{delta(), evaluate(Z, delta()), a};
}

Generator wall_generator(const Wall& w) {
  if (w.index == 0) return w.sign > 0 ? Generator::T : Generator::T_psi_inv;
  return w.sign > 0 ? Generator::T_psi : Generator::T_inv;
}

TiltWord wall_cross_rule(const TiltWord& word, const Wall& w) {
  if ((w.index != 0 && w.index != 1) || (w.sign != 1 && w.sign != -1)) throw std::invalid_argument("malformed wall");
  return word.append(wall_generator(w));
}

LiftResult lift_path(const ChamberPoint& start, const std::vector<ExactComplex>& path) {
  start.validate();
  std::vector<ExactComplex> pts = path;
  if (pts.empty() || !(pts.front() == start.x)) pts.insert(pts.begin(), start.x);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] == pts[k + 1]) throw std::invalid_argument("consecutive waypoints must differ");
  }

  LiftResult result{start, {}};
  TiltWord word = start.word;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const ExactComplex& P = pts[k];
    const ExactComplex D = pts[k + 1] - P;
    Rational s_cur = 0;
    for (;;) {
      const long n = word.quotient_exponent();
      const Rational lower(-n, 2);
      const Rational upper = lower + kHalf;
      if (sgn(D.im) == 0) {
        if (P.im == lower || P.im == upper) throw std::domain_error("path runs along a wall");
        break;
      }
      const bool up = sgn(D.im) > 0;
      const Rational bound = up ? upper : lower;
      const Rational s = (bound - P.im) / D.im;
      if (s > 1) break;
      if (s <= s_cur) throw std::logic_error("path lifting lost track of the sheet");
      const ExactComplex c = P + s * D;
      if (sgn(c.re) == 0) throw std::domain_error("path passes through the puncture " + c.str());
      const Wall wall = up ? Wall{1, -sgn(c.re)} : Wall{0, sgn(c.re)};
      if (s == 1) {
        if (k + 2 >= pts.size()) throw std::domain_error("path ends on the wall " + wall.str());
        const ExactComplex next = pts[k + 2] - pts[k + 1];
        if (sgn(next.im) == 0) throw std::domain_error("path runs along a wall");
        if (sgn(next.im) != sgn(D.im)) throw std::domain_error("path touches the wall " + wall.str() + " without crossing");
      }
      word = wall_cross_rule(word, wall);
      result.crossings.push_back(Crossing{k, s, c, wall, word});
      s_cur = s;
    }
  }
  result.end = ChamberPoint{word, pts.back()};
  result.end.validate();
  return result;
}

std::vector<std::pair<int, int>> arrangement_lines(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= n_max; ++n) {
    out.emplace_back(n, n + 1);
    out.emplace_back(n + 1, n);
  }
  out.emplace_back(1, 1);
  return out;
}

}  // namespace invstab
