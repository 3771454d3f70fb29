#include "flowtri/hvector.hpp"

namespace flowtri {

HStarVector trim_zeros(HStarVector h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

ShapeFlags check_symmetry_unimodality(const HStarVector& h) {
  HStarVector t = trim_zeros(h);
  ShapeFlags f;
  f.symmetric = true;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != t[t.size() - 1 - i]) f.symmetric = false;
  std::size_t i = 0;
  while (i + 1 < t.size() && t[i] <= t[i + 1]) ++i;
  while (i + 1 < t.size() && t[i] >= t[i + 1]) ++i;
  f.unimodal = i + 1 >= t.size();
  f.gorenstein = f.symmetric;
  return f;
}

std::string polynomial_string(const HStarVector& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = h[i] == 1 && i > 0 ? "" : h[i].str();
    if (i == 0) out += c;
    else if (i == 1) out += c + "x";
    else out += c + "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace flowtri
