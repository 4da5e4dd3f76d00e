#include "areaflow/export.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "areaflow/errors.hpp"
#include "areaflow/geometry.hpp"

namespace areaflow {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void json_array(std::ostringstream& out, std::span<const double> values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << num(values[i]);
  }
  out << ']';
}

std::string json_escape(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string format_timeseries(std::span<const DiagnosticsRecord> records) {
  std::string out = kTimeseriesHeader;
  out += '\n';
  for (const auto& r : records) {
    const auto& s = r.summary;
    const double row[] = {r.t,         s.length,  s.area,    s.lambda,     s.deficit,           s.ratio,
                          s.kappa_min, s.kappa_max, s.kappa_star, s.r_in,     s.r_out,            s.sobolev,
                          r.residuals.gage, r.residuals.pan_yang, r.residuals.bonnesen, r.consistency_gap,
                          r.closing_residual};
    for (std::size_t i = 0; i < std::size(row); ++i) {
      if (i) out += ',';
      out += num(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path) {
  if (records.empty()) throw IoError("nothing to write");
  write_text(path, format_timeseries(records));
}

std::vector<DiagnosticsRecord> parse_timeseries(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty time series");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTimeseriesHeader) throw IoError("unexpected time series header: " + line);

  std::vector<DiagnosticsRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> v;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto comma = line.find(',', pos);
      const auto cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw IoError("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
      v.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (v.size() != 17) throw IoError("line " + std::to_string(line_no) + ": expected 17 columns");
    DiagnosticsRecord r;
    r.t = v[0];
    auto& s = r.summary;
    s.length = v[1];
    s.area = v[2];
    s.lambda = v[3];
    s.deficit = v[4];
    s.ratio = v[5];
    s.kappa_min = v[6];
    s.kappa_max = v[7];
    s.kappa_star = v[8];
    s.r_in = v[9];
    s.r_out = v[10];
    s.sobolev = v[11];
    r.residuals.gage = v[12];
    r.residuals.pan_yang = v[13];
    r.residuals.isoperimetric = s.deficit;
    r.residuals.bonnesen = v[14];
    r.consistency_gap = v[15];
    r.closing_residual = v[16];
    records.push_back(r);
  }
  if (records.empty()) throw IoError("time series has no rows");
  const Reference ref = reference_of(records.front());
  for (auto& r : records) apply_reference(r, ref);
  return records;
}

std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path) {
  try {
    return parse_timeseries(read_text(path));
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::string format_snapshot(const FlowState& state, const Polyline& poly) {
  std::vector<double> x, y;
  x.reserve(poly.points.size());
  y.reserve(poly.points.size());
  for (const auto& p : poly.points) {
    x.push_back(p.x);
    y.push_back(p.y);
  }
  std::ostringstream out;
  out << "{\"t\":" << num(state.t) << ",\"kappa\":";
  json_array(out, state.kappa.values());
  out << ",\"x\":";
  json_array(out, x);
  out << ",\"y\":";
  json_array(out, y);
  out << ",\"anchor\":[" << num(state.anchor.c1) << ',' << num(state.anchor.c2) << "]}\n";
  return out.str();
}

void write_snapshot(const FlowState& state, const Polyline& poly, const std::filesystem::path& path) {
  write_text(path, format_snapshot(state, poly));
}

SnapshotData read_snapshot(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(path));
    SnapshotData s;
    s.t = doc.at("t").get<double>();
    s.kappa = doc.at("kappa").get<std::vector<double>>();
    s.x = doc.at("x").get<std::vector<double>>();
    s.y = doc.at("y").get<std::vector<double>>();
    s.anchor = doc.at("anchor").get<std::array<double, 2>>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": malformed snapshot: " + e.what());
  }
}

std::string format_svg(std::span<const SvgCurve> curves) {
  if (curves.empty()) throw IoError("no snapshots to render");
  constexpr double kSize = 1000.0;
  constexpr double kMargin = 50.0;

  const double area0 = enclosed_area(curves.front().poly);
  const double radius = std::sqrt(std::max(area0, 0.0) / std::numbers::pi);
  Point centroid{};
  for (const auto& p : curves.back().poly.points) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  const double count = static_cast<double>(std::max<std::size_t>(curves.back().poly.points.size(), 1));
  centroid.x /= count;
  centroid.y /= count;

  double xmin = centroid.x - radius, xmax = centroid.x + radius;
  double ymin = centroid.y - radius, ymax = centroid.y + radius;
  for (const auto& c : curves) {
    for (const auto& p : c.poly.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-300});
  const double scale = (kSize - 2.0 * kMargin) / span;
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  auto sx = [&](double x) { return kSize / 2.0 + (x - cx) * scale; };
  auto sy = [&](double y) { return kSize / 2.0 - (y - cy) * scale; };  // SVG y grows downward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  char buf[64];
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& pts = curves[i].poly.points;
    const double shade = curves.size() > 1 ? static_cast<double>(i) / static_cast<double>(curves.size() - 1) : 1.0;
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", static_cast<int>(200 * (1.0 - shade)), 60,
                  static_cast<int>(80 + 150 * shade));
    out << "<path data-t=\"" << num(curves[i].t) << "\" fill=\"none\" stroke=\"" << buf << "\" stroke-width=\"2\" d=\"";
    for (std::size_t j = 0; j < pts.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%c%.3f %.3f ", j == 0 ? 'M' : 'L', sx(pts[j].x), sy(pts[j].y));
      out << buf;
    }
    out << "Z\"/>\n";
  }
  std::snprintf(buf, sizeof buf, "%.3f", sx(centroid.x));
  out << "<circle class=\"limit\" cx=\"" << buf;
  std::snprintf(buf, sizeof buf, "%.3f", sy(centroid.y));
  out << "\" cy=\"" << buf;
  std::snprintf(buf, sizeof buf, "%.3f", radius * scale);
  out << "\" r=\"" << buf << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"8 6\" stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
  return out.str();
}

void render_svg(std::span<const SvgCurve> curves, const std::filesystem::path& path) {
  write_text(path, format_svg(curves));
}

std::string format_report_json(const VerdictReport& report) {
  std::ostringstream out;
  out << "{\"all_pass\":" << (report.all_pass() ? "true" : "false") << ",\"claims\":[";
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& v = report.verdicts[i];
    if (i) out << ',';
    out << "\n{\"id\":" << json_escape(v.id) << ",\"statement\":" << json_escape(v.statement)
        << ",\"pass\":" << (v.pass ? "true" : "false") << ",\"worst_margin\":"
        << (std::isfinite(v.worst_margin) ? num(v.worst_margin) : std::string("null"))
        << ",\"worst_time\":" << num(v.worst_time) << ",\"tolerance\":" << num(v.tolerance)
        << ",\"note\":" << json_escape(v.note) << '}';
  }
  out << "\n]}\n";
  return out.str();
}

void write_report(const VerdictReport& report, const std::filesystem::path& path) {
  write_text(path, format_report_json(report));
}

std::string format_report_text(const VerdictReport& report) {
  std::ostringstream out;
  char buf[256];
  for (const auto& v : report.verdicts) {
    std::snprintf(buf, sizeof buf, "%-4s %-26s margin %+.3e at t=%-10.4g tol %.1e", v.pass ? "PASS" : "FAIL",
                  v.id.c_str(), v.worst_margin, v.worst_time, v.tolerance);
    out << buf;
    if (!v.note.empty()) out << "  (" << v.note << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace areaflow
