#include "scatter/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scatter/ordinal.hpp"

namespace scatter {
namespace {

constexpr int kSpan = 1000;
constexpr int kMargin = 20;
constexpr int kTickUnit = 12;

const char* kPalette[] = {"#1b6ca8", "#d1495b", "#2e933c", "#e07a1f",
                          "#6b4e9b", "#3aa6a6", "#8a5a44", "#444444"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Exact nearest integer to x * kSpan (ties go up); no floating point.
long long pixel(const Rat& x) {
  Int num = numerator(x) * kSpan * 2 + denominator(x);
  Int den = denominator(x) * 2;
  Int q = num / den;
  if (num < 0 && q * den != num) --q;  // floor for negatives
  return q.convert_to<long long>();
}

std::map<Ordinal, std::size_t> rank_indices(const std::vector<RankedPoint>& points) {
  std::map<Ordinal, std::size_t> idx;
  for (const RankedPoint& p : points) idx.emplace(p.rank, 0);
  std::size_t i = 0;
  for (auto& entry : idx) entry.second = i++;
  return idx;
}

}  // namespace

std::string render_svg(const std::vector<RankedPoint>& points) {
  auto idx = rank_indices(points);
  std::size_t levels = std::max<std::size_t>(idx.size(), 1);
  long long top = kTickUnit * static_cast<long long>(levels + 1);
  long long width = kSpan + 2 * kMargin;
  long long base_y = top + kMargin;
  long long height = base_y + kMargin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
     << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "  <line x1=\"" << kMargin << "\" y1=\"" << base_y << "\" x2=\"" << kMargin + kSpan
     << "\" y2=\"" << base_y << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  for (const RankedPoint& p : points) {
    std::size_t level = idx.at(p.rank);
    long long x = kMargin + pixel(p.x);
    long long h = kTickUnit * static_cast<long long>(level + 1);
    os << "  <line x1=\"" << x << "\" y1=\"" << base_y << "\" x2=\"" << x << "\" y2=\""
       << base_y - h << "\" stroke=\"" << kPalette[level % kPaletteSize]
       << "\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const std::vector<RankedPoint>& points) {
  std::ostringstream os;
  os << "num,den,rank\n";
  for (const RankedPoint& p : points)
    os << numerator(p.x).str() << ',' << denominator(p.x).str() << ',' << print_ordinal(p.rank)
       << '\n';
  return os.str();
}

}  // namespace scatter
