#include "swh/pointfile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swh/errors.hpp"

namespace swh {

namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& what) {
  if (!v.is_number())
    throw ParseError("point file: " + what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d))
    throw ParseError("point file: " + what + " is not finite");
  return d;
}

void read_pair(const json& j, const char* key, double& a, double& b) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2)
    throw ParseError(std::string("point file: ") + key +
                     " must be an array of 2 numbers");
  a = finite_number(v[0], std::string(key) + "[0]");
  b = finite_number(v[1], std::string(key) + "[1]");
}

}  // namespace

ParsedPoint parse_point(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("point file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("point file: top level must be an object");

  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "x" && k != "X" && k != "y" && k != "Y12" && k != "alpha" &&
        k != "beta")
      throw ParseError("point file: unknown key '" + k + "'");
  }
  for (const char* k : {"x", "X", "y", "Y12"})
    if (!j.contains(k))
      throw ParseError(std::string("point file: missing key '") + k + "'");

  ParsedPoint out;
  LiftedPoint& z = out.z;
  read_pair(j, "x", z.p.x1, z.p.x2);
  read_pair(j, "y", z.p.y1, z.p.y2);

  const json& X = j.at("X");
  if (!X.is_array() || X.size() != 3)
    throw ParseError("point file: X must be an array of 3 numbers (X11, X12, X22)");
  z.p.X11 = finite_number(X[0], "X[0]");
  z.p.X12 = finite_number(X[1], "X[1]");
  z.p.X22 = finite_number(X[2], "X[2]");

  z.p.Y12 = finite_number(j.at("Y12"), "Y12");

  if (j.contains("alpha")) {
    read_pair(j, "alpha", z.alpha1, z.alpha2);
    out.has_alpha = true;
  }
  if (j.contains("beta")) {
    read_pair(j, "beta", z.beta1, z.beta2);
    z.has_beta = true;
  }
  return out;
}

ParsedPoint load_point(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("point file: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point(buf.str());
}

std::string format_point(const LiftedPoint& z, bool with_alpha) {
  char line[256];
  std::string s = "{\n";
  auto add = [&](const char* key, std::initializer_list<double> vals,
                 bool last = false) {
    s += "  \"";
    s += key;
    s += "\": ";
    if (vals.size() > 1) s += "[";
    bool first = true;
    for (double v : vals) {
      std::snprintf(line, sizeof line, "%s%.17g", first ? "" : ", ", v);
      s += line;
      first = false;
    }
    if (vals.size() > 1) s += "]";
    if (!last) s += ",";
    s += "\n";
  };
  add("x", {z.p.x1, z.p.x2});
  add("X", {z.p.X11, z.p.X12, z.p.X22});
  add("y", {z.p.y1, z.p.y2});
  const bool more = with_alpha || z.has_beta;
  add("Y12", {z.p.Y12}, !more);
  if (with_alpha) add("alpha", {z.alpha1, z.alpha2}, !z.has_beta);
  if (z.has_beta) add("beta", {z.beta1, z.beta2}, true);
  s += "}\n";
  return s;
}

}  // namespace swh
