#include "areaflow/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "areaflow/errors.hpp"

namespace areaflow {
namespace {

int line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : -1;
}

std::string with_line(const std::string& message, int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " + message : message;
}

[[noreturn]] void fail(const std::string& message, const std::string& field, const YAML::Node& node) {
  const int line = line_of(node);
  throw ConfigError(with_line(message, line), field, line);
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (allowed.count(key) == 0) {
      fail("unknown key '" + prefix + key + "'", prefix + key, kv.first);
    }
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) fail("'" + field + "' must be a scalar", field, node);
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    fail("'" + field + "' has an invalid value '" + node.Scalar() + "'", field, node);
  }
}

double parse_number(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ConfigError("'" + field + "' is not a number: '" + text + "'", field);
  return value;
}

// One-line form: "circle R=1", "ellipse a=2 b=1", "fourier r0=1 h2=0.1,0".
ShapeSpec parse_inline_shape(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::string kind;
  in >> kind;
  std::map<std::string, double> params;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ConfigError("shape parameter '" + token + "' is not key=value", "shape");
    const std::string key = token.substr(0, eq);
    params[key] = parse_number(token.substr(eq + 1), "shape." + key);
  }
  auto take = [&](const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw ConfigError("shape '" + kind + "' needs parameter '" + key + "'", "shape." + key);
    const double v = it->second;
    params.erase(it);
    return v;
  };
  ShapeSpec spec;
  if (kind == "circle") {
    spec = CircleShape{take("R")};
  } else if (kind == "ellipse") {
    const double a = take("a");
    spec = EllipseShape{a, take("b")};
  } else if (kind == "fourier") {
    spec = FourierShape{FourierSeries{take("r0"), {}}};
  } else {
    throw ConfigError("unknown shape kind '" + kind + "' in one-line form", "shape.kind");
  }
  if (!params.empty()) {
    throw ConfigError("unknown shape parameter '" + params.begin()->first + "'", "shape." + params.begin()->first);
  }
  return spec;
}

ShapeSpec parse_shape(const YAML::Node& node) {
  if (node.IsScalar()) {
    try {
      return parse_inline_shape(node.Scalar());
    } catch (const ConfigError& e) {
      throw ConfigError(with_line(e.what(), line_of(node)), e.field(), line_of(node));
    }
  }
  if (!node.IsMap()) fail("'shape' must be a mapping or a one-line description", "shape", node);
  if (!node["kind"]) fail("'shape.kind' is required", "shape.kind", node);
  const auto kind = scalar<std::string>(node["kind"], "shape.kind");
  auto need = [&](const char* key) {
    const std::string field = std::string("shape.") + key;
    if (!node[key]) fail("'" + field + "' is required", field, node);
    return scalar<double>(node[key], field);
  };
  if (kind == "circle") {
    reject_unknown(node, {"kind", "R"}, "shape.");
    return CircleShape{need("R")};
  }
  if (kind == "ellipse") {
    reject_unknown(node, {"kind", "a", "b"}, "shape.");
    return EllipseShape{need("a"), need("b")};
  }
  if (kind == "fourier") {
    reject_unknown(node, {"kind", "r0", "harmonics"}, "shape.");
    FourierSeries series{need("r0"), {}};
    if (const auto list = node["harmonics"]) {
      if (!list.IsSequence()) fail("'shape.harmonics' must be a list of [k, a, b]", "shape.harmonics", list);
      for (const auto& item : list) {
        if (!item.IsSequence() || item.size() != 3) {
          fail("each harmonic must be [k, a, b]", "shape.harmonics", item);
        }
        series.harmonics.push_back({scalar<int>(item[0], "shape.harmonics"), scalar<double>(item[1], "shape.harmonics"),
                                    scalar<double>(item[2], "shape.harmonics")});
      }
    }
    return FourierShape{std::move(series)};
  }
  if (kind == "raw") {
    reject_unknown(node, {"kind", "kappa"}, "shape.");
    const auto list = node["kappa"];
    if (!list || !list.IsSequence()) fail("'shape.kappa' must be a list of samples", "shape.kappa", node);
    RawShape raw;
    for (const auto& item : list) raw.kappa.push_back(scalar<double>(item, "shape.kappa"));
    return raw;
  }
  fail("unknown shape kind '" + kind + "'", "shape.kind", node["kind"]);
}

void parse_stepper(const YAML::Node& node, StepperConfig& cfg) {
  if (!node.IsMap()) fail("'stepper' must be a mapping", "stepper", node);
  reject_unknown(node,
                 {"cfl", "stencil_order", "projection_period", "t_max", "stop_uniformity", "stop_deficit"},
                 "stepper.");
  if (node["cfl"]) cfg.cfl = scalar<double>(node["cfl"], "stepper.cfl");
  if (node["stencil_order"]) {
    const int order = scalar<int>(node["stencil_order"], "stepper.stencil_order");
    if (order != 2 && order != 4) fail("'stepper.stencil_order' must be 2 or 4", "stepper.stencil_order", node["stencil_order"]);
    cfg.stencil = order == 2 ? StencilOrder::second : StencilOrder::fourth;
  }
  if (node["projection_period"]) {
    cfg.projection_period = scalar<int>(node["projection_period"], "stepper.projection_period");
  }
  if (node["t_max"]) cfg.t_max = scalar<double>(node["t_max"], "stepper.t_max");
  if (node["stop_uniformity"]) cfg.stop_uniformity = scalar<double>(node["stop_uniformity"], "stepper.stop_uniformity");
  if (node["stop_deficit"]) cfg.stop_deficit = scalar<double>(node["stop_deficit"], "stepper.stop_deficit");
}

void parse_tolerances(const YAML::Node& node, ToleranceTable& table) {
  if (!node.IsMap()) fail("'tolerances' must be a mapping", "tolerances", node);
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    const double value = scalar<double>(kv.second, "tolerances." + key);
    try {
      table.set(key, value);
    } catch (const ConfigError& e) {
      const int line = line_of(kv.first);
      throw ConfigError(with_line(e.what(), line), e.field(), line);
    }
  }
}

YAML::Node parse_document(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    const int line = e.mark.line >= 0 ? e.mark.line + 1 : -1;
    throw ConfigError(with_line("parse error: " + e.msg, line), "", line);
  }
}

}  // namespace

RunConfig load_config(std::string_view text) {
  const YAML::Node root = parse_document(text);
  RunConfig cfg;
  if (!root || root.IsNull()) return cfg;
  if (!root.IsMap()) fail("config must be a mapping", "", root);
  reject_unknown(root,
                 {"n", "seed", "sample_interval", "output_dir", "snapshot_count", "shape", "stepper", "tolerances"}, "");

  if (root["n"]) {
    const long n = scalar<long>(root["n"], "n");
    if (n < 8 || n % 2 != 0) fail("grid size must be even and >= 8", "n", root["n"]);
    cfg.n = static_cast<std::size_t>(n);
  }
  if (root["seed"]) cfg.seed = scalar<std::uint64_t>(root["seed"], "seed");
  if (root["sample_interval"]) {
    cfg.sample_interval = scalar<double>(root["sample_interval"], "sample_interval");
    if (!(cfg.sample_interval > 0.0)) fail("'sample_interval' must be positive", "sample_interval", root["sample_interval"]);
  }
  if (root["output_dir"]) cfg.output_dir = scalar<std::string>(root["output_dir"], "output_dir");
  if (root["snapshot_count"]) {
    const long count = scalar<long>(root["snapshot_count"], "snapshot_count");
    if (count < 1) fail("'snapshot_count' must be >= 1", "snapshot_count", root["snapshot_count"]);
    cfg.snapshot_count = static_cast<std::size_t>(count);
  }
  if (root["shape"]) cfg.shape = parse_shape(root["shape"]);
  if (root["stepper"]) parse_stepper(root["stepper"], cfg.stepper);
  if (root["tolerances"]) parse_tolerances(root["tolerances"], cfg.tolerances);

  try {
    validate_shape(cfg.shape);
    validate(cfg.stepper);
  } catch (const ConfigError& e) {
    int line = -1;
    const auto dot = e.field().find('.');
    const std::string section = e.field().substr(0, dot);
    if (root[section]) {
      const auto sub = dot != std::string::npos && root[section].IsMap() ? root[section][e.field().substr(dot + 1)]
                                                                         : root[section];
      line = sub ? line_of(sub) : line_of(root[section]);
    }
    throw ConfigError(with_line(e.what(), line), e.field(), line);
  }
  return cfg;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

ToleranceTable load_tolerances(std::string_view text) {
  const YAML::Node root = parse_document(text);
  ToleranceTable table;
  if (!root || root.IsNull()) return table;
  if (root.IsMap() && root["tolerances"]) {
    reject_unknown(root, {"tolerances"}, "");
    parse_tolerances(root["tolerances"], table);
  } else {
    parse_tolerances(root, table);
  }
  return table;
}

}  // namespace areaflow
