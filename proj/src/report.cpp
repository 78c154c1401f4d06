#include "swh/report.hpp"

#include <cstdio>

namespace swh {

std::string Report::summary() const {
  std::string out;
  if (!label.empty()) {
    out += label;
    out += pass() ? ": pass\n" : ": FAIL\n";
  }
  char line[160];
  for (const auto& c : conditions) {
    std::snprintf(line, sizeof line, "  %-22s %s  value=% .12e  floor=% .3e\n",
                  c.name.c_str(), c.ok ? "ok  " : "FAIL", c.value, c.threshold);
    out += line;
  }
  return out;
}

}  // namespace swh
