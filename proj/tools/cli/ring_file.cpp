#include "cli/ring_file.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace lring::cli {

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size() && v >= INT32_MIN && v <= INT32_MAX) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}

}  // namespace

RingDescription parse_ring_description(const std::string& text) {
  RingDescription d;
  std::istringstream in(text);
  std::string line;
  int no = 0, seen = 0;
  while (std::getline(in, line)) {
    ++no;
    auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    auto fail = [&](const std::string& msg) { throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": " + msg); };
    const auto& key = w[0];
    if (seen == 0 && key != "field") fail("the first line must be 'field Q' or 'field Fp <prime>'");
    if (seen == 1 && key != "vars") fail("the second line must be 'vars <names>'");
    ++seen;
    if (key == "field") {
      if (seen != 1) fail("repeated field line");
      if (w.size() == 2 && w[1] == "Q") {
        d.field = "Q";
      } else if (w.size() == 3 && w[1] == "Fp") {
        int p = to_int(w[2], no);
        if (p < 2) fail("bad prime " + w[2]);
        d.field = "Fp";
        d.prime = static_cast<std::uint32_t>(p);
        PrimeField check(d.prime);  // throws on composites and oversized p
      } else {
        fail("expected 'field Q' or 'field Fp <prime>'");
      }
    } else if (key == "vars") {
      if (seen != 2) fail("repeated vars line");
      if (w.size() < 2) fail("no variables");
      d.vars.assign(w.begin() + 1, w.end());
    } else if (key == "gen") {
      auto pos = line.find("gen");
      auto expr = line.substr(pos + 3);
      if (words(expr).empty()) fail("empty generator");
      d.gens.push_back(expr);
    } else if (key == "order") {
      if (w.size() != 2 || (w[1] != "degrevlex" && w[1] != "lex")) fail("order must be degrevlex or lex");
      d.order = w[1];
    } else if (key == "weights") {
      d.weights.clear();
      for (std::size_t i = 1; i < w.size(); ++i) d.weights.push_back(to_int(w[i], no));
    } else {
      fail("unknown keyword '" + key + "'");
    }
  }
  if (seen < 2) throw Error(ErrorKind::ParseError, "ring file needs a field line and a vars line");
  if (!d.weights.empty() && d.weights.size() != d.vars.size()) {
    throw Error(ErrorKind::ParseError, "one weight per variable");
  }
  return d;
}

RingDescription read_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ring_description(ss.str());
}

std::optional<std::string> embedded_ring(const std::string& name) {
  if (name == "main") {
    return "field Q\n"
           "vars x y z\n"
           "gen x^2 - y^5\n"
           "gen x*y^2 + y*z^3 - z^5\n";
  }
  if (name == "ex1") {
    return "field Q\n"
           "vars x y z\n"
           "gen x^2 - y^5\n"
           "gen x*y^2 + y*z^3\n"
           "weights 15 6 7\n";
  }
  return std::nullopt;
}

}  // namespace lring::cli
