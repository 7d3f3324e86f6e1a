#include "hk/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hk/errors.hpp"

namespace hk {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_real(const std::string& tok) {
  std::string s = tok;
  const auto p = s.find("pi");
  if (p != std::string::npos) {
    const std::string head = trim(s.substr(0, p));
    std::string tail = trim(s.substr(p + 2));
    double num = 1.0, den = 1.0;
    if (!head.empty() && head != "-") {
      std::string h = head;
      if (h.back() == '*') h.pop_back();
      num = parse_real(h);
    } else if (head == "-") {
      num = -1.0;
    }
    if (!tail.empty()) {
      if (tail[0] != '/') throw ConfigError("bad number '" + tok + "'");
      den = parse_real(tail.substr(1));
    }
    return num * M_PI / den;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad number '" + tok + "'");
  }
  if (used != s.size()) throw ConfigError("bad number '" + tok + "'");
  return v;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s)) out.push_back(parse_real(tok));
  return out;
}

std::vector<Method> parse_method_list(const std::string& s) {
  std::vector<Method> out;
  for (const auto& tok : split(s)) out.push_back(parse_method(tok));
  return out;
}

void RunConfig::validate() const {
  quadrature.validate();
  mc.validate();
  for (double t : ts)
    if (!(t > 0.0)) throw ConfigError("t values must be positive");
  for (double r : rs)
    if (!(r >= 0.0)) throw ConfigError("r values must be nonnegative");
  if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
  if (grid != "small" && grid != "full") throw ConfigError("grid must be small or full");
}

std::string RunConfig::canonical() const {
  std::ostringstream o;
  o << "rel_tol=" << fmt17(quadrature.rel_tol) << ";abs_tol=" << fmt17(quadrature.abs_tol)
    << ";max_panels=" << quadrature.max_panels << ";gl_order=" << quadrature.gl_order
    << ";trunc_sigma=" << fmt17(quadrature.trunc_sigma) << ";group=" << group_name(group) << ";methods=";
  for (Method m : methods) o << method_name(m) << ',';
  o << ";t=";
  for (double x : ts) o << fmt17(x) << ',';
  o << ";r=";
  for (double x : rs) o << fmt17(x) << ',';
  o << ";theta_sum=";
  for (double x : angle_sums) o << fmt17(x) << ',';
  o << ";weight=" << (weight == Sl2cWeight::HarishChandra ? "hc" : "sinh2") << ";seed=" << seed
    << ";n_paths=" << mc.n_paths << ";n_steps=" << mc.n_steps << ";step_scale=" << fmt17(mc.step_scale)
    << ";vertical_scale=" << fmt17(mc.vertical_scale) << ";grid=" << grid;
  return o.str();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  static const std::set<std::string> known = {
      "quadrature.rel_tol", "quadrature.abs_tol", "quadrature.max_panels", "quadrature.gl_order",
      "quadrature.trunc_sigma", "grid.group", "grid.methods", "grid.t", "grid.r", "grid.theta_sum", "grid.weight",
      "grid.size", "mc.n_paths", "mc.n_steps", "mc.step_scale", "mc.vertical_scale", "output.path",
      "output.format", "output.seed", "output.strict"};
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config: key '" + section + "' outside a section");
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      if (!known.count(full)) throw ConfigError("config: unknown key '" + full + "'");
    }
  }
  auto get = [&](const char* key) { return tree.get_optional<std::string>(pt::ptree::path_type(key, '.')); };
  try {
    if (auto v = get("quadrature.rel_tol")) cfg.quadrature.rel_tol = parse_real(*v);
    if (auto v = get("quadrature.abs_tol")) cfg.quadrature.abs_tol = parse_real(*v);
    if (auto v = get("quadrature.max_panels")) cfg.quadrature.max_panels = std::stoi(*v);
    if (auto v = get("quadrature.gl_order")) cfg.quadrature.gl_order = std::stoi(*v);
    if (auto v = get("quadrature.trunc_sigma")) cfg.quadrature.trunc_sigma = parse_real(*v);
    if (auto v = get("grid.group")) cfg.group = parse_group(trim(*v));
    if (auto v = get("grid.methods")) cfg.methods = parse_method_list(*v);
    if (auto v = get("grid.t")) cfg.ts = parse_real_list(*v);
    if (auto v = get("grid.r")) cfg.rs = parse_real_list(*v);
    if (auto v = get("grid.theta_sum")) cfg.angle_sums = parse_real_list(*v);
    if (auto v = get("grid.size")) cfg.grid = trim(*v);
    if (auto v = get("grid.weight")) {
      const std::string w = trim(*v);
      if (w == "hc") cfg.weight = Sl2cWeight::HarishChandra;
      else if (w == "sinh2") cfg.weight = Sl2cWeight::SinhSquared;
      else throw ConfigError("config: weight must be hc or sinh2");
    }
    if (auto v = get("mc.n_paths")) cfg.mc.n_paths = std::stol(*v);
    if (auto v = get("mc.n_steps")) cfg.mc.n_steps = std::stoi(*v);
    if (auto v = get("mc.step_scale")) cfg.mc.step_scale = parse_real(*v);
    if (auto v = get("mc.vertical_scale")) cfg.mc.vertical_scale = parse_real(*v);
    if (auto v = get("output.path")) cfg.output_path = trim(*v);
    if (auto v = get("output.format")) cfg.format = trim(*v);
    if (auto v = get("output.seed")) cfg.seed = std::stoull(*v);
    if (auto v = get("output.strict")) cfg.strict = trim(*v) == "true" || trim(*v) == "1";
  } catch (const std::invalid_argument&) {
    throw ConfigError("config: malformed value in " + path);
  } catch (const std::out_of_range&) {
    throw ConfigError("config: value out of range in " + path);
  }
}

}  // namespace hk
