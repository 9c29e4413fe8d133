#include "slopes/classical.hpp"

#include "slopes/series.hpp"
#include "slopes/valuation.hpp"

#include <stdexcept>
#include <string>

namespace slopes {

RationalMatrix t2_matrix(long k) {
  long dim = dim_cusp_forms(k);
  RationalMatrix m(dim);
  if (dim == 0) return m;

  long prec = 2 * dim + 1;
  std::vector<QSeries> basis = miller_basis(k, prec);
  if (static_cast<long>(basis.size()) != dim)
    throw std::logic_error("basis size disagrees with the dimension formula");

  Int weight_factor = pow2(k - 1);
  for (long j = 1; j <= dim; ++j) {
    const QSeries& h = basis[static_cast<std::size_t>(j - 1)];
    // The image T_2 h lies in S_k again, and against an echelon basis its
    // basis coordinates are just its first dim coefficients.
    for (long n = 1; n <= dim; ++n) {
      Rat entry = h.coeff(2 * n);
      if (n % 2 == 0) entry += Rat(weight_factor) * h.coeff(n / 2);
      if (entry.get_den() != 1)
        throw std::logic_error("non-integral T_2 matrix entry");
      m.at(n - 1, j - 1) = entry;
    }
  }
  return m;
}

NewtonPolygon conjectural_polygon_classical(long k) {
  long m = dim_cusp_forms(k);
  std::vector<PolygonPoint> points;
  points.push_back({0, Valuation::of(0)});
  Rat c(1);
  for (long j = 1; j <= m; ++j) {
    if (k - 12 * j - 2 == 0 || k - 8 * j - 3 < 0 || k - 12 * j < 0)
      throw std::logic_error("product term degenerates inside the dimension range");
    Rat term = Rat(pow2(2 * j) * factorial(k - 8 * j) * factorial(k - 8 * j - 3) *
                   (k - 12 * j - 2)) /
               Rat(factorial(k - 12 * j) * factorial(k - 6 * j - 1));
    c *= term;
    points.push_back({j, vp(c, 2)});
  }
  return NewtonPolygon::from_points(points);
}

std::vector<std::pair<long, long>> conjectural_series_overconvergent(long k, long nmax) {
  if (k > 0) throw std::invalid_argument("series form only applies to weights k <= 0");
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  std::vector<std::pair<long, long>> out;
  out.reserve(static_cast<std::size_t>(nmax));
  Rat c(1);
  for (long j = 1; j <= nmax; ++j) {
    long denom_linear = -k - 12 * j;
    if (denom_linear == 0)
      throw std::domain_error("pole at j = " + std::to_string(j) +
                              " (weight k = -12j); term undefined");
    Rat term = Rat(pow2(2 * j) * factorial(-k + 2 + 12 * j) * factorial(-k + 6 * j)) /
               Rat(factorial(-k + 2 + 8 * j) * factorial(-k - 2 + 8 * j) * denom_linear);
    c *= term;
    out.emplace_back(j, vp(c, 2).value());
  }
  return out;
}

VerificationReport verify_classical_polygon(long k) {
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "classical-t2-polygon";
  rep.add_param("k", k);

  if (k < 12 || k % 2 != 0) {
    rep.outcome = Outcome::error;
    rep.details["error"] = "weight must be an even integer >= 12";
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
  }

  long dim = dim_cusp_forms(k);
  rep.add_param("dim", dim);

  RationalMatrix m = t2_matrix(k);
  std::vector<Rat> charpoly = reversed_charpoly(m);
  NewtonPolygon computed = NewtonPolygon::of_polynomial(charpoly, 2);
  NewtonPolygon predicted = conjectural_polygon_classical(k);

  auto vertices_json = [](const NewtonPolygon& np) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : np.vertices()) v.push_back({x.index, x.height});
    return v;
  };
  rep.details["computed_vertices"] = vertices_json(computed);
  rep.details["predicted_vertices"] = vertices_json(predicted);

  bool equal = computed.extent() == predicted.extent() &&
               polygons_equal(computed, predicted, predicted.extent());
  if (!equal)
    rep.add_mismatch({{"what", "newton polygons differ"}, {"k", k}});

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace slopes
