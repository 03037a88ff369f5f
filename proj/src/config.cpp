#include "bhdimer/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string_view>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                           ": invalid number '" +
                                           std::string(text) + "'");
  }
  return value;
}

}  // namespace

ConfigFile parse_config(std::istream& in) {
  ConfigFile cfg;
  std::map<std::string, double*, std::less<>> slots{
      {"eps0", &cfg.params.eps0},   {"eps1", &cfg.params.eps1},
      {"eps01", &cfg.params.eps01}, {"U", &cfg.params.U},
      {"J", &cfg.params.J},         {"K", &cfg.params.K},
      {"theta1", &cfg.theta[0]},    {"theta2", &cfg.theta[1]},
      {"theta3", &cfg.theta[2]},
  };
  std::array<double, 3> r{};
  bool has_r = false;
  slots.emplace("r1", &r[0]);
  slots.emplace("r2", &r[1]);
  slots.emplace("r3", &r[2]);

  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;

    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    const auto slot = slots.find(key);
    if (slot == slots.end()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                             ": unknown key '" +
                                             std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                             ": duplicate key '" +
                                             std::string(key) + "'");
    }
    *slot->second = parse_number(value, line_no);
    if (key.size() == 2 && key[0] == 'r') has_r = true;
  }
  if (has_r) cfg.r = r;
  return cfg;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace bhdimer
