#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nilcomm::cli {

enum class Format { text, json, dot };

struct Config {
  int bound = 30;
  std::uint64_t seed = 0;
  Format format = Format::text;
};

// Reads a JSON object {"bound", "seed", "format"}; missing keys keep their defaults.
Config load_config(const std::string& path, Config base = {});

// Exit codes: 0 ok, 1 claim or certification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilcomm::cli
