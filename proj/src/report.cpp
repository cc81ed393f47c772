#include "polylevel/report.hpp"

#include "polylevel/error.hpp"
#include "polylevel/rook.hpp"

namespace polylevel {

namespace {

Json cell_list(const Polyomino& p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(Json::array({p[i].x, p[i].y}));
  return out;
}

Json interval_json(const Polyomino& p, const CellInterval& iv) {
  Json j;
  j["orientation"] = iv.orientation == Orientation::horizontal ? "horizontal" : "vertical";
  j["length"] = iv.length();
  j["cells"] = cell_list(p, iv.cells);
  return j;
}

}  // namespace

Json polyomino_json(const Polyomino& p) {
  Json j;
  j["rank"] = p.rank();
  Json cells = Json::array();
  for (const Cell& c : p.cells()) cells.push_back(Json::array({c.x, c.y}));
  j["cells"] = std::move(cells);
  j["ascii"] = p.to_ascii();
  return j;
}

Json stair_json(const Stair& s) {
  Json j;
  j["range"] = Json::array({s.first + 1, s.last + 1});
  j["length"] = s.length();
  j["kind"] = to_string(s.kind);
  return j;
}

Json algebraic_json(const ClassificationRecord& r) {
  Json j;
  j["gorenstein"] = r.gorenstein;
  j["level"] = r.level;
  j["pseudo_gorenstein"] = r.pseudo_gorenstein;
  j["rook_number"] = r.rook_number;
  j["regularity"] = r.regularity;
  j["hilbert_function"] = r.hilbert;
  j["socle_dimensions"] = r.socle;
  j["method"] = r.method;
  j["lsop"] = r.seed ? "random" : "path";
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return j;
}

Json shape_record_json(const ShapeRecord& r) {
  Json j;
  j["shape"] = polyomino_json(r.shape);
  j["path"] = r.path;
  j["category"] = to_string(r.category);
  j["gorenstein"] = r.gorenstein;
  j["level"] = r.level;
  j["pseudo_gorenstein"] = r.pseudo_gorenstein;
  j["initial_level"] = r.initial_level ? Json(*r.initial_level) : Json(nullptr);
  j["rook_number"] = r.rook_number;
  j["rook_poly"] = r.rook_poly;
  j["s_property"] = r.s_property;
  j["single_cell_in_every_interval"] = r.single_cell_in_every_interval;
  j["level_source"] = r.level_source;
  if (r.path) {
    Json st = Json::array();
    for (const auto& s : r.stairs) st.push_back(stair_json(s));
    j["stairs"] = std::move(st);
  }
  j["algebraic"] = r.algebraic ? algebraic_json(*r.algebraic) : Json(nullptr);
  j["seed"] = r.seed;
  return j;
}

Json scan_report_json(const ScanReport& r, const std::string& kind) {
  Json j;
  j["scan"] = kind;
  j["ranks"] = Json::array({r.min_rank, r.max_rank});
  j["examined"] = r.examined;
  j["matched"] = r.matched;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["claim"] = x.claim;
    e["detail"] = x.detail;
    e["shape"] = polyomino_json(x.shape);
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

std::string census_csv_header() { return "rank,gorenstein,level,pseudo_gorenstein,none,total"; }

std::string census_csv_line(const CensusRow& row) {
  return std::to_string(row.rank) + "," + std::to_string(row.gorenstein) + "," + std::to_string(row.level_not_g) + "," +
         std::to_string(row.pg_not_g) + "," + std::to_string(row.none) + "," + std::to_string(row.total);
}

AnalyzeResult analyze_polyomino(const Polyomino& p, Mode mode, const AlgebraOptions& options) {
  AnalyzeResult res;
  Json& j = res.report;
  j["shape"] = polyomino_json(p);
  j["thin"] = is_thin(p);
  j["simple"] = is_simple(p);
  Json ivs = Json::array();
  for (const auto& iv : maximal_intervals(p)) ivs.push_back(interval_json(p, iv));
  j["intervals"] = std::move(ivs);
  j["vertex_count"] = p.vertices().size();
  if (!j["thin"].get<bool>()) {
    j["error"] = NotThin().what();
    res.exit_code = 2;
    return res;
  }
  if (!j["simple"].get<bool>()) {
    j["error"] = NotSimple().what();
    res.exit_code = 2;
    return res;
  }
  j["s_property"] = has_s_property(p);
  j["single_cell_in_every_interval"] = every_interval_has_single_cell(p);

  RookComplexSummary summary;
  try {
    summary = rook_complex(p, options.max_rank);
  } catch (const RankTooLarge& e) {
    j["error"] = e.what();
    res.exit_code = 2;
    return res;
  }
  Json rook;
  rook["rook_number"] = summary.rook_number;
  rook["rook_poly"] = summary.rook_poly;
  rook["pure"] = summary.pure;
  Json facets = Json::array();
  for (const auto& f : summary.facets) facets.push_back(cell_list(p, f));
  rook["facets"] = std::move(facets);
  rook["unique_max"] = summary.unique_max ? cell_list(p, *summary.unique_max) : Json(nullptr);
  j["rook"] = std::move(rook);

  if (p.rank() >= 2 && as_path(p)) {
    const auto ps = path_structure(p);
    Json path;
    path["cells"] = cell_list(p, ps.cells);
    path["interval_lengths"] = ps.interval_lengths;
    Json st = Json::array();
    for (const auto& s : stairs(ps)) st.push_back(stair_json(s));
    path["stairs"] = std::move(st);
    j["path"] = std::move(path);
  } else {
    j["path"] = nullptr;
  }

  CensusOptions copts;
  copts.mode = mode;
  copts.algebra = options;
  try {
    const ShapeRecord r = classify_shape(p, copts);
    Json c;
    c["gorenstein"] = r.gorenstein;
    c["level"] = r.level;
    c["pseudo_gorenstein"] = r.pseudo_gorenstein;
    c["initial_level"] = r.initial_level ? Json(*r.initial_level) : Json(nullptr);
    c["category"] = to_string(r.category);
    c["rook_number"] = r.rook_number;
    c["level_source"] = r.level_source;
    c["mode"] = to_string(mode);
    j["classification"] = std::move(c);
    j["algebraic"] = r.algebraic ? algebraic_json(*r.algebraic) : Json(nullptr);
  } catch (const ModeInsufficient& e) {
    Json c;
    c["gorenstein"] = has_s_property(p);
    c["level"] = nullptr;
    c["pseudo_gorenstein"] = summary.unique_max.has_value();
    c["mode"] = to_string(mode);
    c["note"] = e.what();
    j["classification"] = std::move(c);
  } catch (const Error& e) {
    j["error"] = e.what();
    res.exit_code = 3;
  }
  return res;
}

}  // namespace polylevel
