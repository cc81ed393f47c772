#pragma once

// JSON / CSV renderings of shapes, classification records and scan reports.

#include <string>

#include "json.hpp"
#include "polylevel/enumerate.hpp"

namespace polylevel {

using Json = nlohmann::ordered_json;

Json polyomino_json(const Polyomino& p);
Json stair_json(const Stair& s);
Json algebraic_json(const ClassificationRecord& r);
Json shape_record_json(const ShapeRecord& r);
/// Elapsed time is left out so that reports are reproducible.
Json scan_report_json(const ScanReport& r, const std::string& kind);

std::string census_csv_header();
std::string census_csv_line(const CensusRow& row);

struct AnalyzeResult {
  Json report;
  int exit_code = 0;
};

/// Full analysis of one shape: intervals, rook data, path structure and
/// classification. Non-thin or non-simple shapes get an error entry and
/// exit code 2; LsopFailure and oracle disagreements give exit code 3.
AnalyzeResult analyze_polyomino(const Polyomino& p, Mode mode, const AlgebraOptions& options);

}  // namespace polylevel
