/*
 * latpoly command-line front end.
 *
 * One subcommand per library operation, JSON on stdout (compact by default,
 * --pretty appends an aligned table). Exit codes: 0 success, 1 domain error
 * (bad input / parameter out of range), 2 unsupported degenerate case.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "latpoly/curve.h"
#include "latpoly/enumerate.h"

using json = nlohmann::ordered_json;
using namespace latpoly;

namespace {

json poly_json(const Polygon& p) {
  json out = json::array();
  for (const Pt& v : p.verts) out.push_back({v.x, v.y});
  return out;
}

json dir_json(Dir v) { return json::array({v.a, v.b}); }

json dirs_json(const std::vector<Dir>& ds) {
  json out = json::array();
  for (Dir v : ds) out.push_back(dir_json(v));
  return out;
}

const char* dim_name(Dim d) {
  switch (d) {
    case Dim::EMPTY: return "empty";
    case Dim::POINT: return "point";
    case Dim::SEGMENT: return "segment";
    case Dim::TWO_D: return "two_d";
  }
  return "?";
}

std::string rat_str(Rat r) {
  if (r.is_integer()) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Dir parse_direction(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw domain_error("direction must be given as a,b");
  try {
    size_t pa = 0, pb = 0;
    i64 a = std::stoll(text.substr(0, comma), &pa);
    i64 b = std::stoll(text.substr(comma + 1), &pb);
    if (pa != comma || pb != text.size() - comma - 1)
      throw domain_error("direction must be given as a,b");
    return make_dir(a, b);
  } catch (const std::invalid_argument&) {
    throw domain_error("direction must be given as a,b");
  } catch (const std::out_of_range&) {
    throw domain_error("direction component out of range");
  }
}

// "(x1,y1),(x2,y2),..." kept verbatim: rays are signed, ordered data, so the
// hulling polygon parser does not apply
std::vector<Pt> parse_point_list(const std::string& text) {
  std::vector<Pt> out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw domain_error(std::string("malformed point list: expected '") + c + "'");
    ++i;
  };
  auto number = [&] {
    skip_ws();
    size_t used = 0;
    i64 v;
    try {
      v = std::stoll(text.substr(i), &used);
    } catch (const std::exception&) {
      throw domain_error("malformed point list: expected an integer");
    }
    i += used;
    return v;
  };
  while (true) {
    expect('(');
    i64 x = number();
    expect(',');
    i64 y = number();
    expect(')');
    out.push_back({x, y});
    skip_ws();
    if (i == text.size()) break;
    expect(',');
  }
  return out;
}

std::vector<i64> parse_int_list(const std::string& text) {
  std::vector<i64> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      size_t used = 0;
      std::string tok = text.substr(pos, comma - pos);
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw domain_error("expected a comma-separated integer list");
    }
    pos = comma + 1;
  }
  return out;
}

json pencil_count_json(const PencilCount& pc) {
  json out;
  switch (pc.kind) {
    case PencilCountKind::EXACTLY: out["kind"] = "exactly"; break;
    case PencilCountKind::AT_MOST: out["kind"] = "at_most"; break;
    case PencilCountKind::INFINITE: out["kind"] = "infinite"; break;
  }
  if (pc.kind != PencilCountKind::INFINITE) out["n"] = pc.n;
  if (!pc.directions.empty()) out["directions"] = dirs_json(pc.directions);
  return out;
}

json pencil_data_json(const PencilData& pd) {
  json out;
  out["direction"] = dir_json(pd.direction);
  out["degree"] = pd.degree;
  out["scrollar"] = pd.scrollar;
  out["complete"] = pd.complete;
  out["rank"] = pd.rank;
  out["scroll_dim"] = pd.scroll_dim;
  return out;
}

json record_json(const EnumerationRecord& r) {
  json out;
  out["polygon"] = poly_json(r.canonical);
  out["genus"] = r.genus;
  out["lattice_points"] = r.lattice_points;
  out["lw"] = r.lw;
  out["volume2"] = r.volume2;
  out["is_maximal"] = r.is_maximal;
  out["is_interior_hull_2d"] = r.is_interior_hull_2d;
  return out;
}

json bound_report_json(const BoundReport& rep) {
  json out;
  out["table"] = rep.table == BoundTable::GONAL ? "gonal" : "neargonal";
  out["rows"] = json::array();
  for (const BoundRow& row : rep.rows) {
    json r;
    r["lw"] = row.lw;
    r["min_volume2"] = row.min_volume2;
    r["witness"] = poly_json(row.witness);
    out["rows"].push_back(std::move(r));
  }
  out["exceptions_found"] = json::array();
  for (const NamedFamily& f : rep.exceptions_found)
    out["exceptions_found"].push_back(family_name(f.family));
  out["sub_bound_outliers"] = json::array();
  for (const Polygon& p : rep.sub_bound_outliers)
    out["sub_bound_outliers"].push_back(poly_json(p));
  out["pass"] = rep.pass;
  return out;
}

void print_result(const json& out, bool pretty) {
  std::cout << out.dump() << "\n";
  if (!pretty) return;
  for (auto& [key, value] : out.items())
    std::cout << "  " << key << ": " << value.dump() << "\n";
}

void print_bound_table(const BoundReport& rep) {
  std::cout << "  lw  min_volume2  witness\n";
  for (const BoundRow& row : rep.rows)
    std::cout << "  " << row.lw << "   " << row.min_volume2 << "           "
              << format_polygon(row.witness) << "\n";
  std::cout << "  result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

// tier gates for the long-running commands
i64 tier_genus_cap(const std::string& tier) {
  if (tier == "fast") return 10;
  if (tier == "full") return 16;
  if (tier == "extreme") return 30;
  throw domain_error("unknown tier (expected fast, full or extreme)");
}

int run(int argc, char** argv) {
  CLI::App app{"lattice polygon curve invariants"};
  app.require_subcommand(1);
  bool pretty = false;
  bool json_flag = true;
  app.add_flag("--pretty", pretty, "append a human-readable table");
  app.add_flag("--json", json_flag, "JSON output (default)");

  std::string poly_arg, poly2_arg, dir_arg, coeff_arg;
  std::string table_arg = "gonal", tier_arg = "fast", out_arg, resume_arg;
  i64 genus_arg = 0, max_lw_arg = 6, a_arg = 0, b_arg = 0, n_arg = 0, d_arg = 0;
  int threads_arg = (int)std::thread::hardware_concurrency();
  if (threads_arg < 1) threads_arg = 1;

  auto* c_profile = app.add_subcommand("profile", "full curve-invariant profile");
  c_profile->add_option("polygon", poly_arg)->required();
  auto* c_hull = app.add_subcommand("hull", "interior hull");
  c_hull->add_option("polygon", poly_arg)->required();
  auto* c_max = app.add_subcommand("max", "maximal polygon with the same interior hull");
  c_max->add_option("polygon", poly_arg)->required();
  auto* c_equiv = app.add_subcommand("equiv", "unimodular equivalence test");
  c_equiv->add_option("polygon", poly_arg)->required();
  c_equiv->add_option("other", poly2_arg)->required();
  auto* c_recognize = app.add_subcommand("recognize", "named-family recognition");
  c_recognize->add_option("polygon", poly_arg)->required();
  auto* c_width = app.add_subcommand("width", "width and strip offset in one direction");
  c_width->add_option("polygon", poly_arg)->required();
  c_width->add_option("--direction", dir_arg)->required();
  auto* c_lw = app.add_subcommand("lw", "lattice width and its directions");
  c_lw->add_option("polygon", poly_arg)->required();
  auto* c_size = app.add_subcommand("size", "lattice size");
  c_size->add_option("polygon", poly_arg)->required();
  auto* c_scrollar = app.add_subcommand("scrollar", "scrollar invariants of one pencil");
  c_scrollar->add_option("polygon", poly_arg)->required();
  c_scrollar->add_option("--direction", dir_arg)->required();
  auto* c_pencils = app.add_subcommand("pencils", "gonality pencil count");
  c_pencils->add_option("polygon", poly_arg)->required();
  auto* c_clifford = app.add_subcommand("clifford", "Clifford index and dimension");
  c_clifford->add_option("polygon", poly_arg)->required();
  auto* c_neargonal = app.add_subcommand("neargonal", "near-gonal pencil classification");
  c_neargonal->add_option("polygon", poly_arg)->required();
  auto* c_divisor = app.add_subcommand("divisor", "polygon of a torus-invariant divisor");
  c_divisor->add_option("rays", poly_arg)->required();
  c_divisor->add_option("coeffs", coeff_arg)->required();
  auto* c_cab = app.add_subcommand("cab", "semigroup triangle invariants");
  c_cab->add_option("a", a_arg)->required();
  c_cab->add_option("b", b_arg)->required();
  auto* c_hirzebruch = app.add_subcommand("hirzebruch", "Hirzebruch trapezoid invariants");
  c_hirzebruch->add_option("n", n_arg)->required();
  c_hirzebruch->add_option("a", a_arg)->required();
  c_hirzebruch->add_option("d", d_arg)->required();
  auto* c_enumerate = app.add_subcommand("enumerate", "all classes of one genus (NDJSON)");
  c_enumerate->add_option("--genus", genus_arg)->required();
  c_enumerate->add_option("--tier", tier_arg);
  c_enumerate->add_option("--threads", threads_arg);
  c_enumerate->add_option("--out", out_arg);
  c_enumerate->add_option("--resume", resume_arg);
  auto* c_bounds = app.add_subcommand("verify-bounds", "reproduce a volume bound table");
  c_bounds->add_option("--table", table_arg);
  c_bounds->add_option("--max-lw", max_lw_arg);
  c_bounds->add_option("--tier", tier_arg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (c_profile->parsed()) {
    Polygon p = parse_polygon(poly_arg);
    CurveProfile cp = curve_profile(p);
    json out;
    out["genus"] = cp.genus;
    out["gonality"] = cp.gonality;
    out["lw"] = cp.lw;
    out["ls_interior"] = cp.ls_interior;
    out["pencils"] = pencil_count_json(cp.gonality_pencils);
    out["clifford"] =
        cp.clifford ? json{{"index", cp.clifford->index}, {"dimension", cp.clifford->dimension}}
                    : json(nullptr);
    out["smooth_plane"] = cp.smooth_plane;
    out["near_gonal"] = near_gonal_name(cp.near_gonal);
    out["pencil_data"] = json::array();
    for (const PencilData& pd : cp.pencil_blocks) out["pencil_data"].push_back(pencil_data_json(pd));
    print_result(out, pretty);
  } else if (c_hull->parsed()) {
    Polygon ih = interior_hull(parse_polygon(poly_arg));
    print_result({{"hull", poly_json(ih)}, {"dim", dim_name(ih.dim)}}, pretty);
  } else if (c_max->parsed()) {
    print_result({{"max", poly_json(max_polygon(parse_polygon(poly_arg)))}}, pretty);
  } else if (c_equiv->parsed()) {
    print_result({{"equivalent", are_equivalent(parse_polygon(poly_arg), parse_polygon(poly2_arg))}},
                 pretty);
  } else if (c_recognize->parsed()) {
    auto f = recognize(parse_polygon(poly_arg));
    json out;
    out["family"] = f ? json(family_name(f->family)) : json(nullptr);
    if (f) out["d"] = f->d;
    print_result(out, pretty);
  } else if (c_width->parsed()) {
    Dir v = parse_direction(dir_arg);
    Polygon p = parse_polygon(poly_arg);
    StripData s = width(p, v);
    json inv = json::array();
    if (s.width >= 2)
      for (i64 e : width_invariants(p, v).invariants) inv.push_back(e);
    print_result(
        {{"direction", dir_json(v)}, {"width", s.width}, {"offset", s.offset}, {"invariants", inv}},
        pretty);
  } else if (c_lw->parsed()) {
    Polygon p = parse_polygon(poly_arg);
    json out;
    out["lw"] = lattice_width(p);
    if (p.dim == Dim::SEGMENT || p.dim == Dim::TWO_D)
      out["directions"] = dirs_json(lattice_width_directions(p));
    print_result(out, pretty);
  } else if (c_size->parsed()) {
    print_result({{"ls", lattice_size(parse_polygon(poly_arg))}}, pretty);
  } else if (c_scrollar->parsed()) {
    PencilData pd = pencil_data(parse_polygon(poly_arg), parse_direction(dir_arg));
    print_result({{"scrollar", pd.scrollar}, {"complete", pd.complete}, {"rank", pd.rank}}, pretty);
  } else if (c_pencils->parsed()) {
    print_result(pencil_count_json(gonality_pencils(parse_polygon(poly_arg))), pretty);
  } else if (c_clifford->parsed()) {
    CliffordData cd = clifford(parse_polygon(poly_arg));
    print_result({{"index", cd.index}, {"dimension", cd.dimension}}, pretty);
  } else if (c_neargonal->parsed()) {
    print_result({{"class", near_gonal_name(near_gonal(parse_polygon(poly_arg)))}}, pretty);
  } else if (c_divisor->parsed()) {
    TorusDivisor d;
    d.rays = parse_point_list(poly_arg);
    d.coeffs = parse_int_list(coeff_arg);
    if (d.coeffs.size() != d.rays.size())
      throw domain_error("need exactly one coefficient per ray");
    DivisorPolygon dp = divisor_polygon(d);
    json verts = json::array();
    for (const RatPt& q : dp.polygon.verts) verts.push_back({rat_str(q.x), rat_str(q.y)});
    print_result({{"vertices", verts},
                  {"is_lattice", dp.polygon.is_lattice},
                  {"is_cartier", dp.is_cartier},
                  {"is_convex", dp.is_convex},
                  {"is_strictly_convex", dp.is_strictly_convex}},
                 pretty);
  } else if (c_cab->parsed()) {
    CabProfile cp = cab_profile(a_arg, b_arg);
    print_result(
        {{"polygon", poly_json(cp.polygon)}, {"genus", cp.genus}, {"gonality", cp.gonality}},
        pretty);
  } else if (c_hirzebruch->parsed()) {
    HirzebruchProfile hp = hirzebruch_profile(n_arg, a_arg, d_arg);
    print_result({{"polygon", poly_json(hp.polygon)},
                  {"genus", hp.genus},
                  {"gonality", hp.gonality},
                  {"scrollar", hp.scrollar},
                  {"recovered_n", hp.recovered_n}},
                 pretty);
  } else if (c_enumerate->parsed()) {
    if (genus_arg > tier_genus_cap(tier_arg))
      throw domain_error("genus exceeds the selected tier (raise --tier)");
    std::set<std::string> done;
    if (!resume_arg.empty()) {
      std::ifstream in(resume_arg);
      if (!in) throw domain_error("cannot read resume file");
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.contains("unit_done"))
          done.insert(j["unit_done"].get<std::string>());
      }
    }
    std::ofstream out_file;
    if (!out_arg.empty()) {
      out_file.open(out_arg, std::ios::app);
      if (!out_file) throw domain_error("cannot open output file");
    }
    StreamOptions opt;
    opt.threads = threads_arg;
    if (!done.empty()) opt.skip_units = &done;
    if (out_file.is_open())
      opt.unit_done = [&](const std::string& unit) {
        out_file << json{{"unit_done", unit}}.dump() << "\n" << std::flush;
      };
    i64 n = stream_by_genus(
        genus_arg,
        [&](const EnumerationRecord& r) {
          std::string line = record_json(r).dump();
          std::cout << line << "\n";
          if (out_file.is_open()) out_file << line << "\n";
        },
        opt);
    std::cerr << "enumerated " << n << " classes of genus " << genus_arg << "\n";
  } else if (c_bounds->parsed()) {
    BoundReport rep;
    if (table_arg == "gonal") {
      rep = verify_gonality_bounds(max_lw_arg);
    } else if (table_arg == "neargonal") {
      if (max_lw_arg > 6 && tier_genus_cap(tier_arg) <= 10)
        throw domain_error("lattice widths 7 and 8 require --tier full");
      rep = verify_neargonal_bounds(max_lw_arg);
    } else {
      throw domain_error("unknown table (expected gonal or neargonal)");
    }
    json out = bound_report_json(rep);
    std::cout << out.dump() << "\n";
    if (pretty) print_bound_table(rep);
    return rep.pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const unsupported_case& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
