#include "uas/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace uas {

namespace {

std::mutex settings_mutex;
Settings current;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& v, int line, const std::string& key) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": bad value for " + key);
  }
  return out;
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config line " + std::to_string(line) + ": expected a boolean");
}

}  // namespace

const Settings& settings() { return current; }

void set_settings(const Settings& s) {
  validate(s);
  std::lock_guard lock(settings_mutex);
  current = s;
}

ScopedSettings::ScopedSettings(const Settings& s) : saved_(settings()) { set_settings(s); }
ScopedSettings::~ScopedSettings() { set_settings(saved_); }

int window_bound() { return current.window; }

void require_window(int n, std::string_view what) {
  if (n > current.window) {
    throw WindowExceeded(std::string(what) + ": arity " + std::to_string(n) + " exceeds window " +
                         std::to_string(current.window));
  }
}

void validate(const Settings& s) {
  if (s.window < 1) throw std::invalid_argument("window must be positive");
  if (s.window > 7) throw std::invalid_argument("window above 7 is not supported");
  if (s.window == 7 && !s.arity7) throw std::invalid_argument("window 7 needs arity7 = true");
  if (s.threads < 1) throw std::invalid_argument("threads must be positive");
}

Settings parse_settings(std::string_view text, Settings base) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string l = trim(raw);
    if (l.empty()) continue;
    auto eq = l.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(std::string_view(l).substr(0, eq));
    std::string value = trim(std::string_view(l).substr(eq + 1));
    if (key == "window") {
      base.window = parse_number<int>(value, line, key);
    } else if (key == "cap") {
      base.cap = parse_number<std::uint64_t>(value, line, key);
    } else if (key == "seed") {
      base.seed = parse_number<std::uint64_t>(value, line, key);
    } else if (key == "threads") {
      base.threads = parse_number<int>(value, line, key);
    } else if (key == "arity7") {
      base.arity7 = parse_bool(value, line);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  validate(base);
  return base;
}

Settings load_settings(const std::filesystem::path& file, Settings base) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open config file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_settings(ss.str(), base);
}

std::string format_settings(const Settings& s) {
  std::ostringstream out;
  out << "window = " << s.window << "\n"
      << "cap = " << s.cap << "\n"
      << "seed = " << s.seed << "\n"
      << "threads = " << s.threads << "\n"
      << "arity7 = " << (s.arity7 ? "true" : "false") << "\n";
  return out.str();
}

std::optional<std::filesystem::path> cache_directory() {
  if (const char* dir = std::getenv("UASWB_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  return std::nullopt;
}

}  // namespace uas
