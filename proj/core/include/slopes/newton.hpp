#pragma once

#include "slopes/numbers.hpp"
#include "slopes/valuation.hpp"

#include <vector>

namespace slopes {

struct PolygonPoint {
  long index;
  Valuation val;
};

enum class SlopeSource { classical, conjectural, spectral, diagonal };

const char* to_string(SlopeSource s);

// Ordered slope multiset with a provenance label.
struct SlopeSequence {
  std::vector<Rat> slopes;  // nondecreasing
  SlopeSource source = SlopeSource::spectral;

  friend bool operator==(const SlopeSequence& a, const SlopeSequence& b) {
    return a.slopes == b.slopes;
  }
};

// Lower convex hull of (index, valuation) points. The origin (0,0) is always
// a vertex and consecutive hull slopes increase strictly. Points of infinite
// valuation are skipped, so a trailing run of them shortens the extent.
class NewtonPolygon {
 public:
  struct Vertex {
    long index;
    long height;
    friend bool operator==(const Vertex& a, const Vertex& b) {
      return a.index == b.index && a.height == b.height;
    }
  };

  // Requires a point at index 0 with valuation 0 and distinct indices.
  static NewtonPolygon from_points(const std::vector<PolygonPoint>& points);

  // Hull of (n, v_p(coeffs[n])); coeffs[0] must equal 1.
  static NewtonPolygon of_polynomial(const std::vector<Rat>& coeffs, unsigned long p);

  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Horizontal reach of the hull (largest finite-valuation index seen).
  long extent() const { return vertices_.back().index; }

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

// Slope of each unit step along the hull, with multiplicity; throws when
// count exceeds the extent.
SlopeSequence slopes_of(const NewtonPolygon& np, long count,
                        SlopeSource source = SlopeSource::spectral);

// Whether the hulls agree as piecewise-linear functions on [0, upto]; both
// polygons must reach that far.
bool polygons_equal(const NewtonPolygon& a, const NewtonPolygon& b, long upto);

}  // namespace slopes
