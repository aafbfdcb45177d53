#include "reachkit/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "reachkit/error.hpp"

namespace reachkit {
namespace {

std::vector<std::string> indexed(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void append_point_row(Table& table, double tau, const Vector<double>& point, const Vector<double>& direction) {
  std::vector<double> row{tau};
  row.insert(row.end(), point.begin(), point.end());
  row.insert(row.end(), direction.begin(), direction.end());
  table.rows.push_back(std::move(row));
}

Table point_table(std::size_t d) {
  Table table;
  table.columns = {"tau"};
  append(table.columns, indexed("x_", d));
  append(table.columns, indexed("eta_", d));
  return table;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  std::string out = "{\"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ", ";
    out += quoted(table.columns[i]);
  }
  out += "], \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n  [" : "\n  [";
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) out += ", ";
      out += format_number(table.rows[r][i]);
    }
    out += ']';
  }
  out += "], \"meta\": {";
  for (std::size_t m = 0; m < table.meta.size(); ++m) {
    if (m) out += ", ";
    out += quoted(table.meta[m].first) + ": [";
    for (std::size_t i = 0; i < table.meta[m].second.size(); ++i) {
      if (i) out += ", ";
      out += format_number(table.meta[m].second[i]);
    }
    out += ']';
  }
  out += "}}\n";
  return out;
}

void write_table(const Table& table, const std::string& path, TableFormat format) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".partial";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + temp.string() + "' for writing");
    out << (format == TableFormat::kCsv ? to_csv(table) : to_json(table));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw Error(ErrorCode::kInvalidArgument, "write to '" + temp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw Error(ErrorCode::kInvalidArgument, "cannot move output into '" + path + "': " + ec.message());
  }
}

Table width_profile_table(const WidthProfile& profile) {
  Table table;
  const bool planar = !profile.thetas.empty();
  const std::size_t d = profile.directions.empty() ? 0 : profile.directions.front().size();
  if (planar) {
    table.columns = {"theta", "width"};
    for (std::size_t k = 0; k < profile.widths.size(); ++k) table.rows.push_back({profile.thetas[k], profile.widths[k]});
  } else {
    append(table.columns, indexed("eta_", d));
    table.columns.push_back("width");
    for (std::size_t k = 0; k < profile.widths.size(); ++k) {
      std::vector<double> row = profile.directions[k];
      row.push_back(profile.widths[k]);
      table.rows.push_back(std::move(row));
    }
  }
  if (planar) table.meta.push_back({"maximizer_thetas", profile.maximizer_thetas});
  std::vector<double> flat;
  for (const auto& m : profile.maximizers) flat.insert(flat.end(), m.begin(), m.end());
  table.meta.push_back({"maximizer_directions", flat});
  table.meta.push_back({"argmax_row", {static_cast<double>(profile.argmax)}});
  table.meta.push_back({"max_width", {profile.widths.empty() ? 0.0 : profile.widths[profile.argmax]}});
  if (planar) table.meta.push_back({"argmax_near_maximizer", {profile.argmax_near_maximizer ? 1.0 : 0.0}});
  return table;
}

Table boundary_table(const std::vector<BoundaryPoint>& points, double tau) {
  Table table = point_table(points.empty() ? 0 : points.front().point.size());
  for (const auto& p : points) append_point_row(table, tau, p.point, p.direction);
  return table;
}

Table tube_table(const Tube& tube) {
  Table table = point_table(tube.origin.size());
  append_point_row(table, 0.0, tube.origin, Vector<double>(tube.origin.size(), 0.0));
  for (const auto& slice : tube.slices) {
    for (const auto& p : slice.points) append_point_row(table, slice.tau, p.point, p.direction);
  }
  table.meta.push_back({"slices", {static_cast<double>(tube.slices.size())}});
  return table;
}

Table hausdorff_table(const std::vector<HausdorffRow>& rows) {
  Table table;
  table.columns = {"n", "delta"};
  append(table.columns, indexed("eta_", rows.empty() ? 0 : rows.front().direction.size()));
  for (const auto& r : rows) {
    std::vector<double> row{static_cast<double>(r.n), r.distance};
    row.insert(row.end(), r.direction.begin(), r.direction.end());
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table convergence_table(const std::vector<ConvergenceRow>& rows) {
  Table table;
  table.columns = {"n", "vol_n", "gap"};
  for (const auto& r : rows) table.rows.push_back({static_cast<double>(r.n), r.volume, r.gap});
  return table;
}

Table cloud_table(const EndpointCloud& cloud) {
  Table table;
  append(table.columns, indexed("x_", cloud.points.empty() ? 0 : cloud.points.front().size()));
  table.columns.push_back("switch_count");
  for (std::size_t k = 0; k < cloud.points.size(); ++k) {
    std::vector<double> row = cloud.points[k];
    row.push_back(static_cast<double>(cloud.controls[k].switch_times.size()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace reachkit
