#include "ballcells/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>

#include "ballcells/errors.hpp"
#include "ballcells/metrics.hpp"

namespace ballcells {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<HalfSpace> tangent_halfspaces(const TangentPolytopeParams& params) {
  if (params.normals.size() < 4)
    throw PreconditionViolatedError("tangent polytope needs at least 4 normals");
  std::vector<HalfSpace> hs;
  hs.reserve(params.normals.size());
  for (const auto& n : params.normals) {
    const double len = norm(n);
    if (!(len > 1e-12))
      throw DegenerateInputError("tangent polytope normal is zero");
    hs.emplace_back(n / len, 1.0);  // offset stays 1: the plane touches the ball
  }
  return hs;
}

// Spherical chart (theta, phi) per normal; 2N flat parameters in total.
std::vector<double> to_params(const std::vector<Vec3>& normals) {
  std::vector<double> x;
  x.reserve(2 * normals.size());
  for (const auto& n : normals) {
    const Vec3 u = normalized(n);
    x.push_back(std::acos(std::clamp(u.z, -1.0, 1.0)));
    x.push_back(std::atan2(u.y, u.x));
  }
  return x;
}

std::vector<Vec3> from_params(const std::vector<double>& x) {
  std::vector<Vec3> normals(x.size() / 2);
  for (std::size_t j = 0; j < normals.size(); ++j) {
    const double th = x[2 * j], ph = x[2 * j + 1];
    normals[j] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                  std::cos(th)};
  }
  return normals;
}

struct RestartOutcome {
  double area{kInf};
  std::vector<double> params;
  std::vector<std::pair<int, double>> history;
};

double objective_at(const std::vector<double>& x) {
  return area_objective(TangentPolytopeParams{from_params(x)});
}

// Standard Nelder-Mead with reflection 1, expansion 2, contraction 1/2,
// shrink 1/2. Infinite objective values participate in the ordering, which
// is what drives infeasible vertices out of the simplex.
RestartOutcome nelder_mead(const std::vector<double>& x0, double step,
                           int max_iters, double diameter_tol) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> f(dim + 1);
  for (std::size_t i = 1; i <= dim; ++i) pts[i][i - 1] += step;
  for (std::size_t i = 0; i <= dim; ++i) f[i] = objective_at(pts[i]);

  std::vector<std::size_t> idx(dim + 1);
  RestartOutcome out;
  const auto record_best = [&](int iter) {
    if (f[idx[0]] < out.area) {
      out.area = f[idx[0]];
      out.params = pts[idx[0]];
      out.history.emplace_back(iter, out.area);
    }
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    record_best(iter);

    double diam = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = pts[i][k] - pts[idx[0]][k];
        d2 += d * d;
      }
      diam = std::fmax(diam, std::sqrt(d2));
    }
    if (diam < diameter_tol) break;

    const std::size_t worst = idx[dim], second = idx[dim - 1], best = idx[0];
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double t) {
      std::vector<double> y(dim);
      for (std::size_t k = 0; k < dim; ++k)
        y[k] = centroid[k] + t * (centroid[k] - pts[worst][k]);
      return y;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = objective_at(xr);
    if (fr < f[best]) {
      std::vector<double> xe = blend(2.0);
      const double fe = objective_at(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        f[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second]) {
      pts[worst] = std::move(xr);
      f[worst] = fr;
      continue;
    }
    std::vector<double> xc = blend(fr < f[worst] ? 0.5 : -0.5);
    const double fc = objective_at(xc);
    if (fc < std::fmin(fr, f[worst])) {
      pts[worst] = std::move(xc);
      f[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < dim; ++k)
        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      f[i] = objective_at(pts[i]);
    }
  }

  for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  record_best(max_iters);
  return out;
}

std::vector<Vec3> random_normals(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec3> normals(N);
  for (auto& n : normals) {
    do {
      n = {gauss(rng), gauss(rng), gauss(rng)};
    } while (norm(n) < 1e-6);
    n = normalized(n);
  }
  return normals;
}

}  // namespace

double area_objective(const TangentPolytopeParams& params) {
  const std::vector<HalfSpace> hs = tangent_halfspaces(params);
  ConvexPolyhedron p;
  try {
    p = intersect_halfspaces(hs, 1e3);
  } catch (const GeometryError&) {
    return kInf;  // near-degenerate configurations count as infeasible
  }
  if (!p.intrinsically_bounded()) return kInf;
  return surface_area(p);
}

ConvexPolyhedron tangent_polytope(const TangentPolytopeParams& params) {
  ConvexPolyhedron p = intersect_halfspaces(tangent_halfspaces(params), 1e3);
  if (!p.intrinsically_bounded())
    throw NoBoundedCandidateError("normals do not bound a polytope");
  return p;
}

std::vector<std::vector<Vec3>> symmetric_seed_sets(int N) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::vector<Vec3>> sets;
  const auto add = [&](std::vector<Vec3> raw) {
    for (auto& v : raw) v = normalized(v);
    sets.push_back(std::move(raw));
  };
  switch (N) {
    case 4:
      add({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
      break;
    case 6:
      add({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
      break;
    case 8: {
      std::vector<Vec3> corners;
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1})
            corners.push_back({static_cast<double>(sx), static_cast<double>(sy),
                               static_cast<double>(sz)});
      add(std::move(corners));
      break;
    }
    case 12: {
      // Dodecahedral faces: normals along icosahedron vertices.
      std::vector<Vec3> ico;
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          ico.push_back({0, s1 * 1.0, s2 * phi});
          ico.push_back({s1 * 1.0, s2 * phi, 0});
          ico.push_back({s2 * phi, 0, s1 * 1.0});
        }
      add(std::move(ico));
      // Rhombic-dodecahedral faces: normals along the 12 nearest FCC centers.
      std::vector<Vec3> fcc;
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          fcc.push_back({s1 * 1.0, s2 * 1.0, 0});
          fcc.push_back({s1 * 1.0, 0, s2 * 1.0});
          fcc.push_back({0, s1 * 1.0, s2 * 1.0});
        }
      add(std::move(fcc));
      break;
    }
    case 20: {
      // Icosahedral faces: normals along dodecahedron vertices.
      std::vector<Vec3> dod;
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1})
            dod.push_back({static_cast<double>(sx), static_cast<double>(sy),
                           static_cast<double>(sz)});
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          dod.push_back({0, s1 / phi, s2 * phi});
          dod.push_back({s1 / phi, s2 * phi, 0});
          dod.push_back({s2 * phi, 0, s1 / phi});
        }
      add(std::move(dod));
      break;
    }
    default:
      break;
  }
  return sets;
}

OptimizationResult minimize_area(int N, int restarts, std::uint64_t seed) {
  if (N < 4) throw PreconditionViolatedError("need at least 4 faces");
  if (restarts < 1) throw PreconditionViolatedError("need at least 1 restart");

  const std::vector<std::vector<Vec3>> seeds = symmetric_seed_sets(N);
  const auto run_restart = [&, seeds](int r) -> RestartOutcome {
    std::vector<Vec3> start;
    double step;
    if (r < static_cast<int>(seeds.size())) {
      start = seeds[r];
      step = 0.05;
    } else {
      start = random_normals(
          N, seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1)));
      step = 0.15;
    }
    return nelder_mead(to_params(start), step, 10000, 1e-8);
  };

  std::vector<std::future<RestartOutcome>> futures;
  futures.reserve(restarts);
  for (int r = 0; r < restarts; ++r)
    futures.push_back(std::async(std::launch::async, run_restart, r));

  OptimizationResult result;
  result.best_area = kInf;
  result.restarts_used = restarts;
  for (int r = 0; r < restarts; ++r) {
    RestartOutcome o = futures[r].get();
    if (o.area < result.best_area) {
      result.best_area = o.area;
      result.best_params.normals = from_params(o.params);
      result.history = std::move(o.history);
    }
  }
  if (!(result.best_area < kInf))
    throw NoBoundedCandidateError("all restarts remained unbounded");
  return result;
}

}  // namespace ballcells
