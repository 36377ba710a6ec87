#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace aglab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// INI-style configuration with sections [data], [augmentation], [graph],
// [study], [output]. Keys are globally unique, every key has a documented
// default, unknown keys are rejected. Values keep their literal text; typed
// getters parse on access.
class Config {
 public:
  struct Entry {
    std::string section;
    std::string key;
    std::string value;
    std::string doc;
  };

  static Config defaults();
  static Config from_file(const std::filesystem::path& path);
  static const std::vector<Entry>& schema();

  // --set key=value (key without section; keys are unique).
  void set(const std::string& key, const std::string& value);

  const std::string& raw(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::uint64_t seed(const std::string& key) const;
  double number(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::vector<double> number_list(const std::string& key) const;
  std::vector<std::int64_t> integer_list(const std::string& key) const;

  // Canonical "section.key=value" lines in schema order; the config hash is
  // FNV-1a 64 over this text.
  std::string canonical() const;
  std::uint64_t hash() const;
  std::string hash_hex() const;

  nlohmann::ordered_json echo() const;

 private:
  void parse_ini(const std::string& text);
  std::map<std::string, std::string> values_;  // key -> value
};

}  // namespace aglab
