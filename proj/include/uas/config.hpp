#ifndef UAS_CONFIG_HPP
#define UAS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uas {

struct Settings {
  int window = 6;                 // largest arity any computation may touch
  std::uint64_t cap = 1'000'000;  // deterministic work budget (evaluations, term products)
  std::uint64_t seed = 20240611;
  int threads = 1;
  bool arity7 = false;            // unlocks window 7
};

struct WindowExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Process-wide settings; set before starting work.
const Settings& settings();
void set_settings(const Settings& s);
// Temporarily swaps the settings (tests and the CLI).
class ScopedSettings {
 public:
  explicit ScopedSettings(const Settings& s);
  ~ScopedSettings();
  ScopedSettings(const ScopedSettings&) = delete;
  ScopedSettings& operator=(const ScopedSettings&) = delete;

 private:
  Settings saved_;
};

int window_bound();
// Throws WindowExceeded when n is above the window.
void require_window(int n, std::string_view what);

// "key = value" lines; '#' starts a comment. Unknown keys are errors.
Settings parse_settings(std::string_view text, Settings base = {});
Settings load_settings(const std::filesystem::path& file, Settings base = {});
std::string format_settings(const Settings& s);
void validate(const Settings& s);

// UASWB_CACHE_DIR when set.
std::optional<std::filesystem::path> cache_directory();

}  // namespace uas

#endif
