#include "affinelab/gamma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace affinelab {

std::size_t GammaTripleHash::operator()(const GammaTriple& g) const noexcept {
  std::size_t seed = 0x9e3779b97f4a7c15ULL;
  auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  for (const auto* block : {&g.gp, &g.g0, &g.gm}) {
    mix(block->size());
    for (int m : *block) mix(std::hash<int>{}(m));
  }
  return seed;
}

int length(const GammaTriple& g) { return static_cast<int>(g.gp.size() + g.g0.size() + g.gm.size()); }

long height(const GammaTriple& g) {
  long s = 0;
  for (const auto* block : {&g.gp, &g.g0, &g.gm}) s = std::accumulate(block->begin(), block->end(), s);
  return s;
}

namespace {
GammaTuple merged(const GammaTuple& a, const GammaTuple& b) {
  GammaTuple out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
}  // namespace

GammaTriple juxtapose(const GammaTriple& a, const GammaTriple& b) {
  return {merged(a.gp, b.gp), merged(a.g0, b.g0), merged(a.gm, b.gm)};
}

std::string to_string(const GammaTuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

std::string to_string(const GammaTriple& g) {
  return "[" + to_string(g.gp) + "," + to_string(g.g0) + "," + to_string(g.gm) + "]";
}

std::string to_string(const ModuleVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_display_string(c) + "*X" + to_string(g);
  }
  return s;
}

}  // namespace affinelab
