#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "efg/wire.hpp"

namespace efg::cli {

enum class Format { text, json };

/// A command result before serialization. `json` is authoritative; `text`
/// is the human rendering of the same data.
struct Report {
  Json json = Json::object();
  std::string text;
  bool failed = false;  // a check battery failed; maps to exit code 1
};

/// JSON: keys sorted, rationals as "num/den" strings, two-space indent and
/// a trailing newline, so identical inputs give identical bytes.
std::string emit_report(const Report& report, Format format);

/// Entry point behind the `efg` executable; `args` excludes the program
/// name. Returns 0 on success, 1 when a check fails, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace efg::cli
