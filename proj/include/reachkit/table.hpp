#pragma once

// Plot-ready numeric tables and their CSV / JSON encodings. Numbers are
// printed with 10 significant digits in both encodings.
//
// CSV: header row, comma separated, LF line endings.
// JSON: {"columns": [..], "rows": [[..], ..], "meta": {"name": [..], ..}}

#include <string>
#include <utility>
#include <vector>

#include "reachkit/oracle.hpp"
#include "reachkit/reach.hpp"
#include "reachkit/volume.hpp"

namespace reachkit {

enum class TableFormat { kCsv, kJson };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::vector<double>>> meta;
};

std::string format_number(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

// Writes through a temporary file renamed into place, so a failed write never
// leaves a partial file at `path`. Throws InvalidArgument on I/O errors.
void write_table(const Table& table, const std::string& path, TableFormat format);

// theta,width for d = 2; eta_1..eta_d,width otherwise. Meta carries the
// analytic maximisers and the grid argmax.
Table width_profile_table(const WidthProfile& profile);
// tau,x_1..x_d,eta_1..eta_d.
Table boundary_table(const std::vector<BoundaryPoint>& points, double tau);
// Same columns as boundary_table; the first row is the tau = 0 initial point
// with a zero normal.
Table tube_table(const Tube& tube);
// n,delta,eta_1..eta_d.
Table hausdorff_table(const std::vector<HausdorffRow>& rows);
// n,vol_n,gap.
Table convergence_table(const std::vector<ConvergenceRow>& rows);
// x_1..x_d,switch_count.
Table cloud_table(const EndpointCloud& cloud);

}  // namespace reachkit
