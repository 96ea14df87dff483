#include "latpoly/enumerate.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <thread>

#include "latpoly/curve.h"

namespace latpoly {

namespace {

std::string key_of(const Polygon& canonical) { return format_polygon(canonical); }

Polygon maximal_of(const Polygon& gamma) {
  RationalPolygon op = outward_polygon(gamma);
  if (!op.is_lattice)
    throw domain_error("internal: expansion requires a lattice outward polygon");
  std::vector<Pt> v;
  for (const RatPt& q : op.verts) v.push_back({q.x.num, q.y.num});
  return hull(std::move(v));
}

// ---- interior-hull expansion -------------------------------------------------
//
// All classes P with interior_hull(P) = gamma, found by clipping vertices off
// the maximal polygon. Any P between gamma and the maximal polygon keeps the
// same interior points, and from any strictly larger polygon some vertex
// outside P can be clipped, so a breadth-first search through valid states
// reaches every class; interiors only shrink under clipping, which makes
// pruning invalid states safe. States are deduplicated by canonical form
// (equivalent states generate equivalent subtrees).
void expand_hull(const Polygon& gamma, i64 point_cap,
                 const std::function<void(const Polygon&)>& emit_canonical) {
  i64 g = counts(gamma).lattice;
  Polygon top = maximal_of(gamma);
  if (counts(top).interior != g)
    throw domain_error("internal: maximal polygon has wrong interior count");
  std::set<std::string> visited;
  std::deque<Polygon> queue;
  auto visit = [&](const Polygon& p) {
    Polygon canon = canonical_form(p);
    if (!visited.insert(key_of(canon)).second) return;
    if (point_cap < 0 || counts(p).lattice <= point_cap) emit_canonical(canon);
    queue.push_back(p);
  };
  visit(top);
  while (!queue.empty()) {
    Polygon p = std::move(queue.front());
    queue.pop_front();
    std::vector<Pt> pts = lattice_points(p);
    for (const Pt& v : p.verts) {
      std::vector<Pt> rest;
      rest.reserve(pts.size() - 1);
      for (const Pt& q : pts)
        if (!(q == v)) rest.push_back(q);
      Polygon child = hull(std::move(rest));
      if (child.dim == Dim::TWO_D && counts(child).interior == g) visit(child);
    }
  }
}

// ---- classes with no interior point -----------------------------------------
// the double standard triangle, or a height-1 trapezoid
std::vector<Polygon> genus0_with_points(i64 k) {
  std::vector<Polygon> out;
  std::set<std::string> seen;
  auto add = [&](const Polygon& p) {
    Polygon c = canonical_form(p);
    if (seen.insert(key_of(c)).second) out.push_back(std::move(c));
  };
  if (k == 6) add(hull({{0, 0}, {2, 0}, {0, 2}}));
  for (i64 b = 0; 2 * b <= k - 2; ++b) {
    i64 a = k - 2 - b;
    if (a < 1 || a < b) continue;
    add(hull({{0, 0}, {a, 0}, {b, 1}, {0, 1}}));
  }
  std::sort(out.begin(), out.end(),
            [](const Polygon& x, const Polygon& y) { return key_of(x) < key_of(y); });
  return out;
}

// ---- collinear-interior classes ---------------------------------------------
//
// Height-2 strip normal form: bottom row [0, A], top row [c, c+B] with the
// shear residue c in {0,1}, plus at most one extra vertex on each side of the
// middle row. The only collinear-interior class not of lattice width 2 is the
// triple standard triangle (genus 1). Parameter ranges follow from the
// interior row holding exactly g points.
const std::vector<Polygon>& hyperelliptic_classes(i64 g) {
  static std::map<i64, std::vector<Polygon>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;

  std::vector<Polygon> out;
  std::set<std::string> seen;
  auto add = [&](const Polygon& p) {
    Polygon c = canonical_form(p);
    if (seen.insert(key_of(c)).second) out.push_back(std::move(c));
  };
  if (g == 1) add(hull({{0, 0}, {3, 0}, {0, 3}}));

  i64 lim = 2 * g + 2;
  for (i64 A = 0; A <= lim; ++A) {
    for (i64 c = 0; c <= 1; ++c) {
      for (i64 B = 0; A + B <= lim; ++B) {
        for (i64 ml = -g - 2; ml <= 1; ++ml) {      // ml == 1 encodes "absent"
          for (i64 mr = -g - 2; mr <= g + 2; ++mr) {  // mr == -g-2 encodes "absent"
            bool has_ml = ml != 1, has_mr = mr != -g - 2;
            // doubled row-1 extent, then the exact strict-interior count
            i64 xl2 = c, xr2 = A + c + B;
            if (has_ml) xl2 = std::min(xl2, 2 * ml);
            if (has_mr) xr2 = std::max(xr2, 2 * mr);
            i64 cnt = floor_div(xr2 - 1, 2) - floor_div(xl2, 2);
            if (cnt != g) continue;
            std::vector<Pt> pts = {{0, 0}, {A, 0}, {c, 2}, {c + B, 2}};
            if (has_ml) pts.push_back({ml, 1});
            if (has_mr) pts.push_back({mr, 1});
            Polygon p = hull(std::move(pts));
            if (p.dim != Dim::TWO_D) continue;
            if (counts(p).interior != g) continue;
            add(p);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Polygon& x, const Polygon& y) { return key_of(x) < key_of(y); });
  return cache.emplace(g, std::move(out)).first->second;
}

// ---- point-count recursion ---------------------------------------------------
struct Memo {
  i64 cap = -1;
  std::vector<std::vector<Polygon>> bucket;  // [k] -> 2D classes with exactly k points
  std::mutex mu;
};

Memo& memo() {
  static Memo m;
  return m;
}

bool outward_is_lattice(const Polygon& gamma) {
  return outward_polygon(gamma).is_lattice;
}

// requires memo().mu held
void ensure_locked(i64 K) {
  Memo& m = memo();
  if (K <= m.cap) return;
  m.bucket.assign((size_t)K + 1, {});
  for (i64 k = 3; k <= K; ++k) m.bucket[(size_t)k] = genus0_with_points(k);
  for (i64 j = 1; j <= K - 3; ++j) {
    std::vector<Polygon> fam;
    for (const Polygon& p : hyperelliptic_classes(j))
      if (counts(p).lattice <= K) fam.push_back(p);
    if (j >= 3)
      for (const Polygon& gamma : m.bucket[(size_t)j])
        if (outward_is_lattice(gamma))
          expand_hull(gamma, K, [&](const Polygon& c) { fam.push_back(c); });
    for (Polygon& p : fam) {
      i64 k = counts(p).lattice;
      m.bucket[(size_t)k].push_back(std::move(p));
    }
  }
  for (auto& b : m.bucket)
    std::sort(b.begin(), b.end(),
              [](const Polygon& x, const Polygon& y) { return key_of(x) < key_of(y); });
  m.cap = K;
}

std::vector<Polygon> classes_with_points(i64 k) {
  Memo& m = memo();
  std::lock_guard lock(m.mu);
  ensure_locked(k);
  return m.bucket[(size_t)k];
}

std::vector<Polygon> interior_hull_classes(i64 g) {
  std::vector<Polygon> out;
  for (const Polygon& p : classes_with_points(g))
    if (outward_is_lattice(p)) out.push_back(p);
  return out;
}

}  // namespace

EnumerationRecord make_record(const Polygon& canonical) {
  EnumerationRecord r;
  r.canonical = canonical;
  Counts c = counts(canonical);
  r.genus = c.interior;
  r.lattice_points = c.lattice;
  r.lw = lattice_width(canonical);
  r.volume2 = volume2(canonical);
  Polygon ih = interior_hull(canonical);
  r.is_interior_hull_2d = ih.dim == Dim::TWO_D;
  r.is_maximal = r.is_interior_hull_2d && canonical_form(max_polygon(canonical)) == canonical;
  return r;
}

std::vector<EnumerationRecord> enumerate_with_point_count(i64 k) {
  if (k < 3) throw domain_error("point count must be at least 3");
  std::vector<EnumerationRecord> out;
  for (const Polygon& p : classes_with_points(k)) out.push_back(make_record(p));
  return out;
}

std::vector<EnumerationRecord> enumerate_interior_hulls(i64 g) {
  if (g < 3) throw domain_error("two-dimensional interior hulls require genus >= 3");
  std::vector<EnumerationRecord> out;
  for (const Polygon& p : interior_hull_classes(g)) out.push_back(make_record(p));
  return out;
}

std::vector<EnumerationRecord> enumerate_maximal(i64 g) {
  if (g < 3) throw domain_error("maximal polygons require genus >= 3");
  std::vector<EnumerationRecord> out;
  for (const Polygon& gamma : interior_hull_classes(g))
    out.push_back(make_record(canonical_form(maximal_of(gamma))));
  std::sort(out.begin(), out.end(), [](const EnumerationRecord& a, const EnumerationRecord& b) {
    return key_of(a.canonical) < key_of(b.canonical);
  });
  return out;
}

i64 stream_by_genus(i64 g, const std::function<void(const EnumerationRecord&)>& emit,
                    const StreamOptions& opt) {
  if (g < 1) throw domain_error("genus must be at least 1 (genus 0 is an infinite family)");
  auto skipped = [&](const std::string& unit) {
    return opt.skip_units && opt.skip_units->count(unit) > 0;
  };
  i64 emitted = 0;

  if (!skipped("strip")) {
    for (const Polygon& p : hyperelliptic_classes(g)) {
      emit(make_record(p));
      ++emitted;
    }
    if (opt.unit_done) opt.unit_done("strip");
  }

  std::vector<Polygon> hulls = g >= 3 ? interior_hull_classes(g) : std::vector<Polygon>{};
  std::vector<std::pair<std::string, const Polygon*>> units;
  for (const Polygon& h : hulls) {
    std::string k = key_of(h);
    if (!skipped(k)) units.emplace_back(std::move(k), &h);
  }

  auto run_unit = [&](const Polygon& gamma, std::vector<EnumerationRecord>& sink) {
    std::vector<Polygon> classes;
    expand_hull(gamma, -1, [&](const Polygon& c) { classes.push_back(c); });
    std::sort(classes.begin(), classes.end(),
              [](const Polygon& x, const Polygon& y) { return key_of(x) < key_of(y); });
    for (const Polygon& c : classes) sink.push_back(make_record(c));
  };

  if (opt.threads <= 1) {
    for (auto& [k, gamma] : units) {
      std::vector<EnumerationRecord> recs;
      run_unit(*gamma, recs);
      for (const EnumerationRecord& r : recs) emit(r);
      emitted += (i64)recs.size();
      if (opt.unit_done) opt.unit_done(k);
    }
  } else {
    std::vector<std::vector<EnumerationRecord>> results(units.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1))
        run_unit(*units[i].second, results[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < units.size(); ++i) {
      for (const EnumerationRecord& r : results[i]) emit(r);
      emitted += (i64)results[i].size();
      if (opt.unit_done) opt.unit_done(units[i].first);
    }
  }
  return emitted;
}

std::vector<EnumerationRecord> enumerate_by_genus(i64 g) {
  std::vector<EnumerationRecord> out;
  stream_by_genus(g, [&](const EnumerationRecord& r) { out.push_back(r); });
  std::sort(out.begin(), out.end(), [](const EnumerationRecord& a, const EnumerationRecord& b) {
    return key_of(a.canonical) < key_of(b.canonical);
  });
  return out;
}

// ---- bound tables ------------------------------------------------------------

namespace {

bool excluded_hull(const Polygon& gamma, BoundTable table) {
  if (table == BoundTable::GONAL) {
    // hulls with a non-combinatorial (or undecided) gonality pencil
    if (is_sigma_multiple(gamma)) return true;
    i64 d;
    if (is_multiple_of(gamma, Family::UPSILON_MULTIPLE, &d) && (d == 1 || d == 2)) return true;
    return equivalent_to_family(gamma, Family::GAMMA51_MULTIPLE, 1) ||
           equivalent_to_family(gamma, Family::GAMMA52) ||
           equivalent_to_family(gamma, Family::GAMMA53);
  }
  // near-gonal hypotheses: the hull admits no small plane model, and is not
  // one of the four sporadic hulls (a strict extension of the gonal list)
  if (lattice_size(gamma) < lattice_width(gamma) + 2) return true;
  i64 d;
  if (is_multiple_of(gamma, Family::UPSILON_MULTIPLE, &d) && (d == 2 || d == 3)) return true;
  return equivalent_to_family(gamma, Family::GAMMA7) ||
         equivalent_to_family(gamma, Family::GAMMA8);
}

BoundReport verify_table(BoundTable table, i64 max_lw, i64 slack, bool exclude) {
  const std::map<i64, i64> gonal = {{3, 18}, {4, 20}, {5, 25}, {6, 28}};
  const std::map<i64, i64> neargonal = {{3, 24}, {4, 24}, {5, 30}, {6, 34}, {7, 46}, {8, 55}};
  const auto& expected = table == BoundTable::GONAL ? gonal : neargonal;
  i64 lo = 3, hi = table == BoundTable::GONAL ? 6 : 8;
  if (max_lw < lo || max_lw > hi) throw domain_error("lattice width out of table range");

  BoundReport rep;
  rep.table = table;
  std::map<i64, BoundRow> rows;
  i64 cutoff_max = 0;
  for (i64 L = lo; L <= max_lw; ++L) {
    rows[L] = BoundRow{L, 0, {}};
    cutoff_max = std::max(cutoff_max, expected.at(L) + slack);
  }
  i64 gmax = (cutoff_max - 1) / 2;  // Pick: vol2 = 2g + b - 2 with b >= 3

  for (i64 g = 3; g <= gmax; ++g) {
    for (const Polygon& gamma : interior_hull_classes(g)) {
      if (exclude && excluded_hull(gamma, table)) continue;
      Polygon m = maximal_of(gamma);
      i64 L = lattice_width(m);
      if (L < 3 || L > max_lw) continue;
      i64 v2 = volume2(m);
      if (v2 > expected.at(L) + slack) continue;
      if (table == BoundTable::NEARGONAL) {
        bool exceptional = false;
        for (auto [f, elw, ev2] : {std::tuple{Family::DELTA1, (i64)5, (i64)26},
                                   std::tuple{Family::DELTA2, (i64)6, (i64)32},
                                   std::tuple{Family::DELTA3, (i64)6, (i64)33}}) {
          if (equivalent_to_family(m, f)) {
            if (L != elw || v2 != ev2)
              throw domain_error("internal consistency: exceptional maximal polygon data");
            rep.exceptions_found.push_back(NamedFamily{f, 1});
            exceptional = true;
            break;
          }
        }
        if (exceptional) continue;
      }
      if (v2 < expected.at(L)) rep.sub_bound_outliers.push_back(canonical_form(m));
      BoundRow& row = rows[L];
      if (row.min_volume2 == 0 || v2 < row.min_volume2) {
        row.min_volume2 = v2;
        row.witness = canonical_form(m);
      }
    }
  }
  rep.pass = true;
  for (auto& [L, row] : rows) {
    rep.rows.push_back(row);
    if (row.min_volume2 != expected.at(L)) rep.pass = false;
  }
  return rep;
}

}  // namespace

BoundReport verify_gonality_bounds(i64 max_lw, i64 cutoff_slack, bool exclude) {
  return verify_table(BoundTable::GONAL, max_lw, cutoff_slack, exclude);
}

BoundReport verify_neargonal_bounds(i64 max_lw, i64 cutoff_slack, bool exclude) {
  return verify_table(BoundTable::NEARGONAL, max_lw, cutoff_slack, exclude);
}

// ---- brute-force oracle ------------------------------------------------------
//
// Convex polygons as angularly ordered edge-vector loops: start at the
// bottom-most/leftmost vertex, pick pairwise distinct primitive directions in
// strictly increasing angle with a multiplicity each, stay inside the box,
// and close the loop. Every convex lattice polygon in the box arises exactly
// once; classes are collected by canonical form.
std::set<std::string> oracle_by_genus(i64 g, i64 box_w, i64 box_h) {
  std::vector<Pt> dirs;
  for (i64 dx = -box_w; dx <= box_w; ++dx)
    for (i64 dy = -box_h; dy <= box_h; ++dy)
      if ((dx || dy) && gcd_nonneg(dx, dy) == 1) dirs.push_back({dx, dy});
  auto half = [](Pt v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  std::sort(dirs.begin(), dirs.end(), [&](Pt a, Pt b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });

  std::set<std::string> found;
  std::vector<Pt> path;
  const int max_edges = 2 * (int)g + 7;  // at most one edge per boundary point
  const i64 vol_cap = 4 * g + 5;         // 2g + b - 2 with b <= 2g + 7

  std::function<void(Pt, Pt, size_t, int, i64)> dfs = [&](Pt start, Pt pos, size_t from,
                                                          int edges, i64 fan) {
    for (size_t i = from; i < dirs.size(); ++i) {
      if (edges == 0 && half(dirs[i]) != 0) break;  // first edge leaves upward/rightward
      Pt step = dirs[i];
      Pt q = pos;
      for (i64 m = 1;; ++m) {
        q = q + step;
        if (q.x < 0 || q.x > box_w || q.y < 0 || q.y > box_h) break;
        // start is the bottom-most, leftmost vertex
        if (q.y < start.y || (q.y == start.y && q.x < start.x)) break;
        // the fan triangulation from the start vertex grows monotonically,
        // so a genus-g area bound cuts the chain early
        i64 fan2 = fan + cross(pos - start, q - start);
        if (fan2 > vol_cap) break;
        if (q == start) {
          if (edges >= 2) {
            path.push_back(start);
            Polygon p = hull(path);
            path.pop_back();
            if (p.dim == Dim::TWO_D && counts(p).interior == g)
              found.insert(key_of(canonical_form(p)));
          }
          break;  // passing through start would revisit it
        }
        if (edges + 1 < max_edges) {
          path.push_back(q);
          dfs(start, q, i + 1, edges + 1, fan2);
          path.pop_back();
        }
      }
    }
  };

  for (i64 sy = 0; sy <= box_h; ++sy) {
    for (i64 sx = 0; sx <= box_w; ++sx) {
      Pt start{sx, sy};
      path.clear();
      path.push_back(start);
      dfs(start, start, 0, 0, 0);
    }
  }
  return found;
}

}  // namespace latpoly
