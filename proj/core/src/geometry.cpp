#include "latpoly/geometry.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace latpoly {

namespace {

using i128 = __int128;

[[noreturn]] void overflow() { throw domain_error("64-bit overflow in exact arithmetic"); }

constexpr i64 I64MAX = INT64_MAX, I64MIN = INT64_MIN;

i64 narrow(i128 v) {
  if (v > (i128)I64MAX || v < (i128)I64MIN) overflow();
  return (i64)v;
}

}  // namespace

i64 add_ck(i64 a, i64 b) { return narrow((i128)a + b); }
i64 sub_ck(i64 a, i64 b) { return narrow((i128)a - b); }
i64 mul_ck(i64 a, i64 b) { return narrow((i128)a * b); }

i64 gcd_nonneg(i64 a, i64 b) {
  return std::gcd(a < 0 ? -(unsigned long long)a : (unsigned long long)a,
                  b < 0 ? -(unsigned long long)b : (unsigned long long)b);
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = sub_ck(x1, mul_ck(a / b, y1));
  return g;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

Dir make_dir(i64 a, i64 b) {
  i64 g = gcd_nonneg(a, b);
  if (g == 0) throw domain_error("zero vector is not a direction");
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return Dir{a, b};
}

Rat::Rat(i64 n, i64 d) {
  if (d == 0) throw domain_error("zero denominator");
  if (d < 0) {
    n = sub_ck(0, n);
    d = sub_ck(0, d);
  }
  i64 g = gcd_nonneg(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat operator+(Rat a, Rat b) {
  return Rat(add_ck(mul_ck(a.num, b.den), mul_ck(b.num, a.den)), mul_ck(a.den, b.den));
}
Rat operator-(Rat a, Rat b) {
  return Rat(sub_ck(mul_ck(a.num, b.den), mul_ck(b.num, a.den)), mul_ck(a.den, b.den));
}
Rat operator*(Rat a, Rat b) { return Rat(mul_ck(a.num, b.num), mul_ck(a.den, b.den)); }
Rat operator/(Rat a, Rat b) {
  if (b.num == 0) throw domain_error("division by zero");
  return Rat(mul_ck(a.num, b.den), mul_ck(a.den, b.num));
}
std::strong_ordering Rat::operator<=>(const Rat& o) const {
  i128 l = (i128)num * o.den, r = (i128)o.num * den;
  return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

Polygon hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon out;
  if (pts.empty()) {
    out.dim = Dim::EMPTY;
    return out;
  }
  if (pts.size() == 1) {
    out.verts = pts;
    out.dim = Dim::POINT;
    return out;
  }
  bool collinear = true;
  for (size_t i = 2; i < pts.size() && collinear; ++i)
    if (cross(pts[i] - pts[0], pts[1] - pts[0]) != 0) collinear = false;
  if (collinear) {
    out.verts = {pts.front(), pts.back()};
    out.dim = Dim::SEGMENT;
    return out;
  }
  // Andrew monotone chain, strict turns only
  std::vector<Pt> h(2 * pts.size());
  size_t k = 0;
  for (const Pt& p : pts) {  // lower
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {  // upper
    const Pt& p = pts[i];
    while (k >= lower && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  out.verts = std::move(h);  // starts at lex-least point, CCW
  out.dim = Dim::TWO_D;
  return out;
}

i64 volume2(const Polygon& p) {
  if (p.dim != Dim::TWO_D) return 0;
  i128 s = 0;
  size_t n = p.verts.size();
  for (size_t i = 0; i < n; ++i) s += (i128)cross(p.verts[i], p.verts[(i + 1) % n]);
  return narrow(s);
}

Counts counts(const Polygon& p) {
  switch (p.dim) {
    case Dim::EMPTY:
      return {0, 0, 0};
    case Dim::POINT:
      return {1, 1, 0};
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0];
      i64 n = gcd_nonneg(d.x, d.y) + 1;
      return {n, n, 0};
    }
    case Dim::TWO_D: {
      i64 b = 0;
      size_t n = p.verts.size();
      for (size_t i = 0; i < n; ++i) {
        Pt d = p.verts[(i + 1) % n] - p.verts[i];
        b = add_ck(b, gcd_nonneg(d.x, d.y));
      }
      i64 in = (volume2(p) - b + 2) / 2;  // Pick
      return {add_ck(b, in), b, in};
    }
  }
  return {0, 0, 0};
}

namespace {

// integer x-range of row y under the polygon's edge constraints;
// strict = demand strict interior
bool row_range(const Polygon& p, i64 y, bool strict, i64& lo, i64& hi) {
  lo = I64MIN;
  hi = I64MAX;
  size_t n = p.verts.size();
  i64 t = strict ? 1 : 0;
  for (size_t i = 0; i < n; ++i) {
    Pt a = p.verts[i], e = p.verts[(i + 1) % n] - p.verts[i];
    // cross(e, (x,y)-a) >= t  <=>  (-e.y)*x >= t - e.x*(y-a.y) - e.y*a.x
    i64 c = sub_ck(0, e.y);
    i64 r = sub_ck(sub_ck(t, mul_ck(e.x, sub_ck(y, a.y))), mul_ck(e.y, a.x));
    if (c > 0)
      lo = std::max(lo, ceil_div(r, c));
    else if (c < 0)
      hi = std::min(hi, floor_div(r, c));
    else if (r > 0)
      return false;
  }
  return lo <= hi;
}

}  // namespace

std::vector<Pt> lattice_points(const Polygon& p) {
  std::vector<Pt> out;
  switch (p.dim) {
    case Dim::EMPTY:
      break;
    case Dim::POINT:
      out = p.verts;
      break;
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0];
      i64 g = gcd_nonneg(d.x, d.y);
      Pt step{d.x / g, d.y / g};
      Pt q = p.verts[0];
      for (i64 i = 0; i <= g; ++i, q = q + step) out.push_back(q);
      break;
    }
    case Dim::TWO_D: {
      i64 ymin = I64MAX, ymax = I64MIN;
      for (const Pt& v : p.verts) {
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
      }
      for (i64 y = ymin; y <= ymax; ++y) {
        i64 lo, hi;
        if (row_range(p, y, false, lo, hi))
          for (i64 x = lo; x <= hi; ++x) out.push_back({x, y});
      }
      break;
    }
  }
  return out;
}

std::vector<Pt> interior_lattice_points(const Polygon& p) {
  std::vector<Pt> out;
  if (p.dim != Dim::TWO_D) return out;
  i64 ymin = I64MAX, ymax = I64MIN;
  for (const Pt& v : p.verts) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (i64 y = ymin + 1; y < ymax; ++y) {
    i64 lo, hi;
    if (row_range(p, y, true, lo, hi))
      for (i64 x = lo; x <= hi; ++x) out.push_back({x, y});
  }
  return out;
}

bool contains(const Polygon& p, Pt q) {
  switch (p.dim) {
    case Dim::EMPTY:
      return false;
    case Dim::POINT:
      return q == p.verts[0];
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0], e = q - p.verts[0];
      if (cross(d, e) != 0) return false;
      i64 t = dot(d, e);
      return t >= 0 && t <= dot(d, d);
    }
    case Dim::TWO_D: {
      size_t n = p.verts.size();
      for (size_t i = 0; i < n; ++i)
        if (cross(p.verts[(i + 1) % n] - p.verts[i], q - p.verts[i]) < 0) return false;
      return true;
    }
  }
  return false;
}

bool contains_strictly(const Polygon& p, Pt q) {
  if (p.dim != Dim::TWO_D) return false;
  size_t n = p.verts.size();
  for (size_t i = 0; i < n; ++i)
    if (cross(p.verts[(i + 1) % n] - p.verts[i], q - p.verts[i]) <= 0) return false;
  return true;
}

Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
  if (p.dim == Dim::EMPTY || q.dim == Dim::EMPTY)
    throw domain_error("Minkowski sum of empty polygon");
  std::vector<Pt> sums;
  sums.reserve(p.verts.size() * q.verts.size());
  for (const Pt& a : p.verts)
    for (const Pt& b : q.verts) sums.push_back(a + b);
  return hull(std::move(sums));
}

i64 mixed_volume(const Polygon& p, const Polygon& q) {
  i64 v = sub_ck(sub_ck(volume2(minkowski_sum(p, q)), volume2(p)), volume2(q));
  // Vol(P+Q)-Vol(P)-Vol(Q) is an integer for lattice polygons
  if (v % 2 != 0) throw domain_error("internal: odd doubled mixed volume");
  return v / 2;
}

Polygon apply(const UnimodularMap& u, const Polygon& p) {
  i64 d = u.det();
  if (d != 1 && d != -1) throw domain_error("map is not unimodular");
  std::vector<Pt> img;
  img.reserve(p.verts.size());
  for (const Pt& v : p.verts) img.push_back(u(v));
  return hull(std::move(img));
}

namespace {

// normalized placement of a CCW vertex ring whose edge (i, i+1) has been mapped
// to the bottom edge (direction (1,0), polygon in the upper half plane)
std::vector<Pt> placement(const std::vector<Pt>& ring, size_t i) {
  size_t n = ring.size();
  Pt a = ring[i], b = ring[(i + 1) % n];
  Pt e = b - a;
  i64 g = gcd_nonneg(e.x, e.y);
  i64 px = e.x / g, py = e.y / g;
  i64 s, t;
  ext_gcd(px, py, s, t);  // s*px + t*py = 1
  // rows (s, t) / (-py, px): determinant +1, maps (px,py) to (1,0)
  std::vector<Pt> v(n);
  for (size_t j = 0; j < n; ++j) {
    const Pt& q = ring[j];
    v[j] = {add_ck(mul_ck(s, q.x), mul_ck(t, q.y)),
            add_ck(mul_ck(-py, q.x), mul_ck(px, q.y))};
  }
  i64 ymin = I64MAX, ymax = I64MIN;
  for (const Pt& q : v) {
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  i64 h = sub_ck(ymax, ymin);
  i64 xb = I64MAX, xt = I64MAX;
  for (const Pt& q : v) {
    if (q.y == ymin) xb = std::min(xb, q.x);
    if (q.y == ymax) xt = std::min(xt, q.x);
  }
  i64 m = ceil_div(sub_ck(xb, xt), h);  // unique shear with 0 <= xt+m*h-xb < h
  for (Pt& q : v) {
    q.y = sub_ck(q.y, ymin);
    q.x = sub_ck(add_ck(q.x, mul_ck(m, q.y)), xb);
  }
  size_t best = 0;
  for (size_t j = 1; j < n; ++j)
    if (v[j] < v[best]) best = j;
  std::rotate(v.begin(), v.begin() + best, v.end());
  return v;
}

}  // namespace

Polygon canonical_form(const Polygon& p) {
  switch (p.dim) {
    case Dim::EMPTY:
      return p;
    case Dim::POINT:
      return Polygon{{{0, 0}}, Dim::POINT};
    case Dim::SEGMENT: {
      Pt d = p.verts[1] - p.verts[0];
      return Polygon{{{0, 0}, {gcd_nonneg(d.x, d.y), 0}}, Dim::SEGMENT};
    }
    case Dim::TWO_D:
      break;
  }
  std::vector<Pt> mirrored;
  mirrored.reserve(p.verts.size());
  for (const Pt& v : p.verts) mirrored.push_back({v.x, sub_ck(0, v.y)});
  Polygon mp = hull(std::move(mirrored));
  std::vector<Pt> best;
  for (const Polygon* poly : {&p, (const Polygon*)&mp}) {
    for (size_t i = 0; i < poly->verts.size(); ++i) {
      std::vector<Pt> cand = placement(poly->verts, i);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return Polygon{std::move(best), Dim::TWO_D};
}

bool are_equivalent(const Polygon& p, const Polygon& q) {
  return canonical_form(p) == canonical_form(q);
}

Polygon interior_hull(const Polygon& p) { return hull(interior_lattice_points(p)); }

namespace {

struct HalfPlane {
  Pt n;   // inward normal
  i64 c;  // dot(n, p) >= c
};

std::vector<RatPt> clip(std::vector<RatPt> poly, const HalfPlane& h) {
  std::vector<RatPt> out;
  size_t n = poly.size();
  auto val = [&](const RatPt& q) { return q.x * Rat(h.n.x) + q.y * Rat(h.n.y) - Rat(h.c); };
  for (size_t i = 0; i < n; ++i) {
    const RatPt &cur = poly[i], &nxt = poly[(i + 1) % n];
    Rat vc = val(cur), vn = val(nxt);
    bool ic = vc >= Rat(0), in = vn >= Rat(0);
    if (ic) out.push_back(cur);
    if (ic != in) {
      Rat t = vc / (vc - vn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

std::vector<RatPt> tidy(std::vector<RatPt> v) {
  std::vector<RatPt> out;
  for (const RatPt& q : v)
    if (out.empty() || !(q == out.back())) out.push_back(q);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (out.size() < 3) return out;
  std::vector<RatPt> res;
  size_t n = out.size();
  for (size_t i = 0; i < n; ++i) {
    const RatPt &a = out[(i + n - 1) % n], &b = out[i], &c = out[(i + 1) % n];
    Rat cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (!(cr == Rat(0))) res.push_back(b);
  }
  if (res.empty() && !out.empty()) res.push_back(out.front());  // fully degenerate
  return res;
}

std::vector<RatPt> intersect_halfplanes(const std::vector<HalfPlane>& hps, i64 box) {
  std::vector<RatPt> poly = {{Rat(-box), Rat(-box)},
                             {Rat(box), Rat(-box)},
                             {Rat(box), Rat(box)},
                             {Rat(-box), Rat(box)}};
  for (const HalfPlane& h : hps) {
    poly = clip(std::move(poly), h);
    if (poly.empty()) break;
  }
  poly = tidy(std::move(poly));
  // rotate to start at the lexicographically least vertex
  if (poly.size() > 1) {
    size_t best = 0;
    for (size_t i = 1; i < poly.size(); ++i) {
      if (poly[i].x < poly[best].x ||
          (poly[i].x == poly[best].x && poly[i].y < poly[best].y))
        best = i;
    }
    std::rotate(poly.begin(), poly.begin() + best, poly.end());
  }
  return poly;
}

}  // namespace

RationalPolygon outward_polygon(const Polygon& g) {
  if (g.dim != Dim::TWO_D)
    throw unsupported_case("outward polygon requires a two-dimensional polygon");
  std::vector<HalfPlane> hps;
  i64 m = 1, nn = 1;
  for (const Pt& v : g.verts) {
    m = std::max({m, std::abs(v.x), std::abs(v.y)});
  }
  size_t n = g.verts.size();
  for (size_t i = 0; i < n; ++i) {
    Pt a = g.verts[i], e = g.verts[(i + 1) % n] - g.verts[i];
    i64 gg = gcd_nonneg(e.x, e.y);
    Pt nrm{-e.y / gg, e.x / gg};
    nn = std::max({nn, std::abs(nrm.x), std::abs(nrm.y)});
    hps.push_back({nrm, sub_ck(dot(nrm, a), 1)});
  }
  i64 box = mul_ck(mul_ck(add_ck(m, 2), add_ck(nn, 2)), 8);
  RationalPolygon out;
  out.verts = intersect_halfplanes(hps, box);
  out.is_lattice = !out.verts.empty();
  for (const RatPt& q : out.verts)
    if (!q.x.is_integer() || !q.y.is_integer()) out.is_lattice = false;
  return out;
}

Polygon max_polygon(const Polygon& p) {
  Polygon ih = interior_hull(p);
  if (ih.dim != Dim::TWO_D)
    throw unsupported_case("maximal polygon requires a two-dimensional interior hull");
  RationalPolygon op = outward_polygon(ih);
  if (!op.is_lattice)
    throw domain_error("internal: outward polygon of an interior hull must be lattice");
  std::vector<Pt> verts;
  for (const RatPt& q : op.verts) verts.push_back({q.x.num, q.y.num});
  return hull(std::move(verts));
}

DivisorPolygon divisor_polygon(const TorusDivisor& d) {
  if (d.rays.size() != d.coeffs.size()) throw domain_error("rays/coeffs length mismatch");
  if (d.rays.size() < 3) throw domain_error("need at least three rays");
  for (size_t i = 0; i < d.rays.size(); ++i) {
    if (gcd_nonneg(d.rays[i].x, d.rays[i].y) != 1)
      throw domain_error("rays must be primitive vectors");
    for (size_t j = i + 1; j < d.rays.size(); ++j)
      if (d.rays[i] == d.rays[j]) throw domain_error("rays must be pairwise distinct");
  }

  // sort by angle; positively spanning iff every cyclic gap is < pi
  std::vector<size_t> order(d.rays.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto half = [](Pt v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  auto vec = [&](size_t i) { return d.rays[i]; };
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    Pt a = vec(i), b = vec(j);
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });
  for (size_t i = 0; i < order.size(); ++i) {
    Pt a = vec(order[i]), b = vec(order[(i + 1) % order.size()]);
    if (cross(a, b) <= 0)
      throw domain_error("rays do not positively span the plane (unbounded divisor polygon)");
  }

  i64 m = 1, amax = 1;
  std::vector<HalfPlane> hps;
  for (size_t i = 0; i < d.rays.size(); ++i) {
    Pt v = vec(i);
    m = std::max({m, std::abs(v.x), std::abs(v.y)});
    amax = std::max(amax, std::abs(d.coeffs[i]));
    hps.push_back({v, sub_ck(0, d.coeffs[i])});
  }
  DivisorPolygon out;
  out.polygon.verts = intersect_halfplanes(hps, mul_ck(add_ck(amax, 2), mul_ck(add_ck(m, 2), 8)));
  out.polygon.is_lattice = !out.polygon.verts.empty();
  for (const RatPt& q : out.polygon.verts)
    if (!q.x.is_integer() || !q.y.is_integer()) out.polygon.is_lattice = false;

  auto is_vertex = [&](const RatPt& q) {
    for (const RatPt& v : out.polygon.verts)
      if (v == q) return true;
    return false;
  };
  std::vector<RatPt> apexes;
  bool cartier = true, convex = true;
  for (size_t i = 0; i < order.size(); ++i) {
    size_t a = order[i], b = order[(i + 1) % order.size()];
    Pt va = vec(a), vb = vec(b);
    Rat det((i64)cross(va, vb));
    // solve dot(p, va) = -coeff[a], dot(p, vb) = -coeff[b]
    Rat x = (Rat(-d.coeffs[a]) * Rat(vb.y) - Rat(-d.coeffs[b]) * Rat(va.y)) / det;
    Rat y = (Rat(va.x) * Rat(-d.coeffs[b]) - Rat(vb.x) * Rat(-d.coeffs[a])) / det;
    RatPt apex{x, y};
    if (!x.is_integer() || !y.is_integer()) cartier = false;
    if (!is_vertex(apex)) convex = false;
    apexes.push_back(apex);
  }
  out.is_cartier = cartier;
  out.is_convex = convex && !out.polygon.verts.empty();
  bool distinct = true;
  for (size_t i = 0; i < apexes.size() && distinct; ++i)
    for (size_t j = i + 1; j < apexes.size(); ++j)
      if (apexes[i] == apexes[j]) {
        distinct = false;
        break;
      }
  out.is_strictly_convex =
      out.is_convex && distinct && apexes.size() == out.polygon.verts.size();
  return out;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

i64 parse_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  size_t digits = i;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
  if (i == digits) throw domain_error("malformed polygon: expected integer");
  return std::stoll(s.substr(start, i - start));
}

void expect(const std::string& s, size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw domain_error(std::string("malformed polygon: expected '") + c + "'");
  ++i;
}

}  // namespace

Polygon parse_polygon(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  std::vector<Pt> pts;
  if (i < text.size() && text[i] == '[') {  // JSON [[x,y],...]
    expect(text, i, '[');
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        expect(text, i, '[');
        i64 x = parse_int(text, i);
        expect(text, i, ',');
        i64 y = parse_int(text, i);
        expect(text, i, ']');
        pts.push_back({x, y});
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        expect(text, i, ']');
        break;
      }
    }
  } else if (i < text.size()) {  // (x,y),(x,y),...
    while (true) {
      expect(text, i, '(');
      i64 x = parse_int(text, i);
      expect(text, i, ',');
      i64 y = parse_int(text, i);
      expect(text, i, ')');
      pts.push_back({x, y});
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw domain_error("malformed polygon: trailing input");
  if (pts.empty() && text.find('[') == std::string::npos)
    throw domain_error("malformed polygon: no points");
  return hull(std::move(pts));
}

std::string format_polygon(const Polygon& p) {
  std::string s;
  for (size_t i = 0; i < p.verts.size(); ++i) {
    if (i) s += ',';
    s += '(' + std::to_string(p.verts[i].x) + ',' + std::to_string(p.verts[i].y) + ')';
  }
  return s;
}

namespace {

// extent of x - k*y over the vertex set (convex in k)
i64 sheared_extent(const std::vector<Pt>& v, i64 k) {
  i64 lo = I64MAX, hi = I64MIN;
  for (const Pt& q : v) {
    i64 t = sub_ck(q.x, mul_ck(k, q.y));
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return sub_ck(hi, lo);
}

}  // namespace

Polygon box_reduce(const Polygon& p) {
  if (p.dim != Dim::TWO_D) return canonical_form(p);
  std::vector<Pt> v = p.verts;
  auto extent = [&](bool xaxis) {
    i64 lo = I64MAX, hi = I64MIN;
    for (const Pt& q : v) {
      i64 t = xaxis ? q.x : q.y;
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    return sub_ck(hi, lo);
  };
  int idle = 0;
  for (int round = 0; round < 64 && idle < 2; ++round) {
    i64 ex = extent(true), ey = extent(false);
    // ternary-search the shear x -> x - k*y minimizing the x-extent
    i64 lo = -(ex + ey + 2), hi = ex + ey + 2;
    while (hi - lo > 2) {
      i64 m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (sheared_extent(v, m1) < sheared_extent(v, m2))
        hi = m2;
      else
        lo = m1;
    }
    i64 bestk = lo;
    for (i64 k = lo; k <= hi; ++k)
      if (sheared_extent(v, k) < sheared_extent(v, bestk)) bestk = k;
    if (bestk != 0 && sheared_extent(v, bestk) < ex) {
      for (Pt& q : v) q.x = sub_ck(q.x, mul_ck(bestk, q.y));
      idle = 0;
    } else {
      ++idle;
    }
    for (Pt& q : v) std::swap(q.x, q.y);  // alternate axes
  }
  i64 xmin = I64MAX, ymin = I64MAX;
  for (const Pt& q : v) {
    xmin = std::min(xmin, q.x);
    ymin = std::min(ymin, q.y);
  }
  for (Pt& q : v) {
    q.x = sub_ck(q.x, xmin);
    q.y = sub_ck(q.y, ymin);
  }
  return hull(std::move(v));
}

}  // namespace latpoly
