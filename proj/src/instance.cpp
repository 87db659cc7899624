#include "gbdp/instance.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gbdp/errors.hpp"

namespace gbdp {

void DPInstance::validate(bool strict_lambda) const {
  if (n < 1) throw ConfigError("n must be >= 1");
  if (int(x_max.size()) != n) throw ConfigError("x_max must have n entries");
  for (int v : x_max)
    if (v < 1) throw ConfigError("x_max entries must be >= 1");
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  const double lo_lambda = strict_lambda ? 0.0 : -1.0;
  if (!(lambda > lo_lambda || lambda == 0.0) || lambda < 0.0 || lambda >= 1.0) {
    if (strict_lambda || lambda < 0.0 || lambda >= 1.0)
      throw ConfigError("lambda must lie in (0,1)");
  }
  if (strict_lambda && lambda <= 0.0)
    throw ConfigError("lambda must lie in (0,1)");
  if (!(beta_d < 0.0)) throw ConfigError("beta_d must be negative");
  if (int(beta_s.size()) != n) throw ConfigError("beta_s must have n entries");
  if (!(price_lo <= price_hi)) throw ConfigError("price_lo must be <= price_hi");
  if (!(price_grid_step > 0.0)) throw ConfigError("price_grid_step must be positive");
  if (!(big_m > (price_hi + revenue) * total_capacity()))
    throw ConfigError("big_m must exceed (price_hi + revenue) * <1, x_max>");
  if (!std::isfinite(lambda) || !std::isfinite(beta_c) || !std::isfinite(beta_d) ||
      !std::isfinite(price_lo) || !std::isfinite(price_hi) ||
      !std::isfinite(revenue) || !std::isfinite(cost_per_order) ||
      !std::isfinite(big_m))
    throw ConfigError("instance parameters must be finite");
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(s);
  while (is >> tok) {
    // strip separators so "1, 2, 3" and "[1 2 3]" both parse
    std::string clean;
    for (char c : tok)
      if (c != ',' && c != '[' && c != ']') clean += c;
    if (!clean.empty()) out.push_back(clean);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& tok) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("field '" + key + "': cannot parse number '" + tok + "'");
  }
}

int parse_int(const std::string& key, const std::string& tok) {
  const double v = parse_double(key, tok);
  const int i = int(std::lround(v));
  if (double(i) != v)
    throw ConfigError("field '" + key + "': expected an integer, got '" + tok + "'");
  return i;
}

}  // namespace

DPInstance parse_instance(const std::string& text) {
  static const std::set<std::string> known = {
      "n",       "x_max",       "horizon",        "lambda",
      "beta_c",  "beta_d",      "beta_s",         "price_lo",
      "price_hi","revenue",     "cost_per_order", "big_m",
      "price_grid_step"};

  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!known.count(key))
      throw ConfigError("unknown key '" + key + "' (line " +
                        std::to_string(lineno) + ")");
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    if (val.empty()) throw ConfigError("field '" + key + "': empty value");
    kv[key] = val;
  }

  for (const char* req : {"n", "x_max", "horizon", "lambda", "beta_c", "beta_d",
                          "beta_s", "price_lo", "price_hi", "revenue",
                          "cost_per_order"})
    if (!kv.count(req)) throw ConfigError(std::string("missing field '") + req + "'");

  DPInstance inst;
  inst.n = parse_int("n", kv["n"]);
  if (inst.n < 1) throw ConfigError("field 'n': must be >= 1");
  inst.horizon = parse_int("horizon", kv["horizon"]);
  inst.lambda = parse_double("lambda", kv["lambda"]);
  inst.beta_c = parse_double("beta_c", kv["beta_c"]);
  inst.beta_d = parse_double("beta_d", kv["beta_d"]);
  inst.price_lo = parse_double("price_lo", kv["price_lo"]);
  inst.price_hi = parse_double("price_hi", kv["price_hi"]);
  inst.revenue = parse_double("revenue", kv["revenue"]);
  inst.cost_per_order = parse_double("cost_per_order", kv["cost_per_order"]);

  auto vec_int = [&](const std::string& key) {
    const auto toks = tokenize(kv[key]);
    std::vector<int> v;
    for (const auto& t : toks) v.push_back(parse_int(key, t));
    if (int(v.size()) == 1) v.assign(inst.n, v[0]);
    if (int(v.size()) != inst.n)
      throw ConfigError("field '" + key + "': expected 1 or n values");
    return v;
  };
  auto vec_dbl = [&](const std::string& key) {
    const auto toks = tokenize(kv[key]);
    std::vector<double> v;
    for (const auto& t : toks) v.push_back(parse_double(key, t));
    if (int(v.size()) == 1) v.assign(inst.n, v[0]);
    if (int(v.size()) != inst.n)
      throw ConfigError("field '" + key + "': expected 1 or n values");
    return v;
  };
  inst.x_max = vec_int("x_max");
  inst.beta_s = vec_dbl("beta_s");

  inst.price_grid_step = kv.count("price_grid_step")
                             ? parse_double("price_grid_step", kv["price_grid_step"])
                             : 0.25;
  inst.big_m = kv.count("big_m") ? parse_double("big_m", kv["big_m"])
                                 : inst.default_big_m();

  inst.validate(/*strict_lambda=*/true);
  return inst;
}

DPInstance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open instance config '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

}  // namespace gbdp
