#include "cyclic_chroma/cycle_model.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include <json.hpp>

namespace cyclic_chroma {

ParityClass ParityClass::of(int value) {
  if (value != 0 && value != 1) {
    throw DomainError("parity class must be 0 or 1, got " + std::to_string(value));
  }
  return ParityClass(value);
}

int epsilon(std::int64_t k) {
  if (k < 1) {
    throw DomainError("epsilon: k must be positive, got " + std::to_string(k));
  }
  // 1 + floor(k/2) - ceil(k/2)
  return static_cast<int>(1 + k / 2 - (k + 1) / 2);
}

int sgn_nat(std::int64_t k) { return k == 0 ? 0 : 1; }

std::vector<int> parity_filter(int lo, int hi, ParityClass p) {
  std::vector<int> out;
  if (lo > hi) return out;
  // (lo mod 2) normalized for negative lo
  int first = (((lo % 2) + 2) % 2 == p.value()) ? lo : lo + 1;
  for (std::int64_t x = first; x <= hi; x += 2) out.push_back(static_cast<int>(x));
  return out;
}

CycleColoring::CycleColoring(int n, int t, std::vector<int> colors)
    : n_(n), t_(t), colors_(std::move(colors)) {
  validate();
}

CycleColoring::CycleColoring(int t, std::vector<int> colors)
    : n_(static_cast<int>(colors.size())), t_(t), colors_(std::move(colors)) {
  validate();
}

void CycleColoring::validate() const {
  if (n_ < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n_));
  if (t_ < 1) throw DomainError("color count t must be >= 1, got " + std::to_string(t_));
  if (colors_.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("expected " + std::to_string(n_) + " edge colors, got " +
                      std::to_string(colors_.size()));
  }
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1 || colors_[i] > t_) {
      throw DomainError("color of e" + std::to_string(i + 1) + " is " +
                        std::to_string(colors_[i]) + ", outside [1," + std::to_string(t_) + "]");
    }
  }
}

int CycleColoring::edge_color(int i) const {
  if (i < 1 || i > n_) {
    throw DomainError("edge index " + std::to_string(i) + " outside [1," + std::to_string(n_) + "]");
  }
  return colors_[static_cast<std::size_t>(i - 1)];
}

CycleColoring rotate_edges(const CycleColoring& c, int offset) {
  if (offset < 0 || offset >= c.n()) {
    throw DomainError("rotation offset " + std::to_string(offset) + " outside [0," +
                      std::to_string(c.n() - 1) + "]");
  }
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  std::rotate(colors.begin(), colors.begin() + offset, colors.end());
  return CycleColoring(c.n(), c.t(), std::move(colors));
}

CycleColoring shift_colors(const CycleColoring& c, int delta) {
  const std::int64_t t = c.t();
  const std::int64_t d = ((delta % t) + t) % t;
  std::vector<int> colors;
  colors.reserve(c.colors().size());
  for (int x : c.colors()) colors.push_back(static_cast<int>((x - 1 + d) % t + 1));
  return CycleColoring(c.n(), c.t(), std::move(colors));
}

CycleColoring reverse_edges(const CycleColoring& c) {
  std::vector<int> colors(c.colors().rbegin(), c.colors().rend());
  return CycleColoring(c.n(), c.t(), std::move(colors));
}

CycleColoring reflect_colors(const CycleColoring& c) {
  std::vector<int> colors;
  colors.reserve(c.colors().size());
  for (int x : c.colors()) colors.push_back(c.t() + 1 - x);
  return CycleColoring(c.n(), c.t(), std::move(colors));
}

std::string to_record(const CycleColoring& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n();
  j["t"] = c.t();
  j["colors"] = std::vector<int>(c.colors().begin(), c.colors().end());
  return j.dump();
}

namespace {

int as_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw ParseError(what + " is out of range");
    }
    return static_cast<int>(u);
  }
  auto s = v.get<std::int64_t>();
  if (s < std::numeric_limits<int>::min() || s > std::numeric_limits<int>::max()) {
    throw ParseError(what + " is out of range");
  }
  return static_cast<int>(s);
}

}  // namespace

CycleColoring parse_record(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("coloring record must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "t" && key != "colors") throw ParseError("unknown field \"" + key + "\"");
  }
  for (const char* key : {"n", "t", "colors"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const int n = as_int(j["n"], "n");
  const int t = as_int(j["t"], "t");
  if (!j["colors"].is_array()) throw ParseError("colors must be an array");
  std::vector<int> colors;
  colors.reserve(j["colors"].size());
  for (std::size_t i = 0; i < j["colors"].size(); ++i) {
    colors.push_back(as_int(j["colors"][i], "colors[" + std::to_string(i) + "]"));
  }
  try {
    return CycleColoring(n, t, std::move(colors));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cyclic_chroma
