#include "slopes/newton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace slopes {

const char* to_string(SlopeSource s) {
  switch (s) {
    case SlopeSource::classical: return "classical";
    case SlopeSource::conjectural: return "conjectural";
    case SlopeSource::spectral: return "spectral";
    case SlopeSource::diagonal: return "diagonal";
  }
  return "?";
}

namespace {

// > 0 when abc turns left (b strictly below the chord ac).
long long cross(const NewtonPolygon::Vertex& a, const NewtonPolygon::Vertex& b,
                const NewtonPolygon::Vertex& c) {
  return static_cast<long long>(b.index - a.index) * (c.height - a.height) -
         static_cast<long long>(b.height - a.height) * (c.index - a.index);
}

}  // namespace

NewtonPolygon NewtonPolygon::from_points(const std::vector<PolygonPoint>& points) {
  std::vector<Vertex> finite;
  std::set<long> seen;
  bool have_origin = false;
  for (const auto& pt : points) {
    if (pt.index < 0) throw std::invalid_argument("polygon point with negative index");
    if (!seen.insert(pt.index).second)
      throw std::invalid_argument("duplicate index in polygon points");
    if (!pt.val.is_finite()) continue;  // infinite valuation: skip the point
    if (pt.index == 0) {
      if (pt.val.value() != 0)
        throw std::invalid_argument("polygon requires valuation 0 at index 0");
      have_origin = true;
    }
    finite.push_back(Vertex{pt.index, pt.val.value()});
  }
  if (!have_origin) throw std::invalid_argument("polygon requires a point at index 0");

  std::sort(finite.begin(), finite.end(),
            [](const Vertex& a, const Vertex& b) { return a.index < b.index; });

  // Monotone chain, lower hull only. Popping on cross <= 0 drops collinear
  // interior points, so consecutive hull slopes are strictly increasing.
  NewtonPolygon np;
  auto& hull = np.vertices_;
  for (const auto& v : finite) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), v) <= 0)
      hull.pop_back();
    hull.push_back(v);
  }
  return np;
}

NewtonPolygon NewtonPolygon::of_polynomial(const std::vector<Rat>& coeffs, unsigned long p) {
  if (coeffs.empty() || coeffs[0] != 1)
    throw std::invalid_argument("polygon of polynomial requires constant term 1");
  std::vector<PolygonPoint> pts;
  pts.reserve(coeffs.size());
  for (long n = 0; n < static_cast<long>(coeffs.size()); ++n)
    pts.push_back(PolygonPoint{n, vp(coeffs[n], p)});
  return from_points(pts);
}

SlopeSequence slopes_of(const NewtonPolygon& np, long count, SlopeSource source) {
  if (count < 0) throw std::invalid_argument("slope count must be nonnegative");
  if (count > np.extent())
    throw std::invalid_argument("slope count exceeds polygon extent");
  SlopeSequence seq;
  seq.source = source;
  seq.slopes.reserve(count);
  const auto& vs = np.vertices();
  for (std::size_t i = 0; i + 1 < vs.size() && static_cast<long>(seq.slopes.size()) < count; ++i) {
    long run = vs[i + 1].index - vs[i].index;
    Rat s(vs[i + 1].height - vs[i].height, run);
    s.canonicalize();
    for (long r = 0; r < run && static_cast<long>(seq.slopes.size()) < count; ++r)
      seq.slopes.push_back(s);
  }
  return seq;
}

namespace {

// Hull restricted to [0, upto] as breakpoints; the right endpoint may be a
// rational interpolate when upto falls inside a segment.
std::vector<std::pair<long, Rat>> clipped(const NewtonPolygon& np, long upto) {
  std::vector<std::pair<long, Rat>> out;
  const auto& vs = np.vertices();
  for (std::size_t i = 0; i < vs.size() && vs[i].index <= upto; ++i)
    out.emplace_back(vs[i].index, Rat(vs[i].height));
  if (out.back().first < upto) {
    std::size_t i = out.size() - 1;  // segment [vs[i], vs[i+1]] contains upto
    Rat t(upto - vs[i].index, vs[i + 1].index - vs[i].index);
    t.canonicalize();
    Rat y = Rat(vs[i].height) + t * Rat(vs[i + 1].height - vs[i].height);
    out.emplace_back(upto, y);
  }
  return out;
}

}  // namespace

bool polygons_equal(const NewtonPolygon& a, const NewtonPolygon& b, long upto) {
  if (upto < 0) throw std::invalid_argument("polygons_equal requires upto >= 0");
  if (a.extent() < upto || b.extent() < upto)
    throw std::invalid_argument("polygon extent insufficient for comparison");
  return clipped(a, upto) == clipped(b, upto);
}

}  // namespace slopes
