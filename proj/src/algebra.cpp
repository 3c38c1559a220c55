#include "hardyspec/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "hardyspec/errors.hpp"
#include "hardyspec/winding.hpp"

namespace hardyspec {

namespace {

void append_gaps(const std::vector<Complex>& arc, double& max_gap) {
  for (std::size_t j = 1; j < arc.size(); ++j)
    max_gap = std::max(max_gap, std::abs(arc[j] - arc[j - 1]));
}

double segment_distance(Complex p, Complex a, Complex b) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// distance to the polyline through consecutive arc samples; tighter than the
// raw sample-set distance for points that fall between samples
double polyline_distance(const std::vector<Complex>& arc, Complex p) {
  double best = std::numeric_limits<double>::infinity();
  if (arc.size() == 1) return std::abs(p - arc.front());
  for (std::size_t j = 1; j < arc.size(); ++j)
    best = std::min(best, segment_distance(p, arc[j - 1], arc[j]));
  return best;
}

double arc_distance(const SpectrumReport& rep, Complex p) {
  return std::min(polyline_distance(rep.whisker_samples, p),
                  polyline_distance(rep.circle_samples, p));
}

}  // namespace

EssentialSymbol essential_symbol(const OperatorSum& el) {
  MultiplierSymbol wh = MultiplierSymbol::constant(el.scalar);
  for (const auto& term : el.tm_terms)
    wh = wh + term.toeplitz.infinity_value() * term.multiplier;
  for (const auto& term : el.mt_terms)
    wh = wh + term.toeplitz.infinity_value() * term.multiplier;

  LineSymbol ci = circle_line_symbol(el);

  double defect = std::abs(wh.limit_at_infinity() - ci.infinity_value());
  if (!(defect <= 1e-9))
    throw consistency_error(
        "essential_symbol: arcs fail to meet at infinity, defect " +
        std::to_string(defect));
  return EssentialSymbol{wh, ci, el.tail_bound};
}

LineSymbol circle_line_symbol(const OperatorSum& el) {
  LineSymbol ci = LineSymbol::constant(el.scalar);
  for (const auto& term : el.tm_terms)
    ci = ci + term.multiplier.limit_at_infinity() * term.toeplitz;
  for (const auto& term : el.mt_terms)
    ci = ci + term.multiplier.limit_at_infinity() * term.toeplitz;
  return ci;
}

CircleSymbol limit_toeplitz_symbol(const OperatorSum& el) {
  return pullback_line_symbol(circle_line_symbol(el));
}

SpectrumReport essential_spectrum(const OperatorSum& el, int grid_size) {
  if (grid_size < 8)
    throw config_error("essential_spectrum: grid_size too small");
  EssentialSymbol sym = essential_symbol(el);

  SpectrumReport rep;
  rep.tail_bound = sym.tail_bound;

  std::vector<double> ts =
      tail_sample_grid(sym.whisker.tail_onset(), grid_size);
  const auto& feats = sym.whisker.feature_points();
  ts.insert(ts.end(), feats.begin(), feats.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  rep.whisker_samples.reserve(ts.size() + 1);
  for (double t : ts) rep.whisker_samples.push_back(sym.whisker(t));
  rep.whisker_samples.push_back(sym.whisker.limit_at_infinity());

  rep.circle_samples.reserve(static_cast<std::size_t>(grid_size) + 2);
  rep.circle_samples.push_back(sym.circle.infinity_value());
  for (int j = 0; j < grid_size; ++j) {
    double theta = 2.0 * kPi * (j + 0.5) / grid_size;
    rep.circle_samples.push_back(sym.circle(line_point(theta)));
  }
  rep.circle_samples.push_back(sym.circle.infinity_value());

  rep.max_gap = 0.0;
  append_gaps(rep.whisker_samples, rep.max_gap);
  append_gaps(rep.circle_samples, rep.max_gap);
  return rep;
}

double essential_distance(const SpectrumReport& rep, Complex lambda) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : rep.whisker_samples) d = std::min(d, std::abs(lambda - p));
  for (const auto& p : rep.circle_samples) d = std::min(d, std::abs(lambda - p));
  return d;
}

double fredholm_margin(const SpectrumReport& rep) {
  return rep.tail_bound + rep.max_gap + 1e-6;
}

int fredholm_index(const OperatorSum& el, const SpectrumReport& ess,
                   Complex lambda, int grid_size) {
  double dist = essential_distance(ess, lambda);
  double margin = fredholm_margin(ess);
  if (!(dist > margin))
    throw resolution_error(
        "fredholm_index: lambda within " + std::to_string(dist) +
        " of the essential spectrum (margin " + std::to_string(margin) + ")");
  CircleSymbol b = limit_toeplitz_symbol(el);
  auto curve = [&b, lambda](double s) { return b(2.0 * kPi * s) - lambda; };
  int base = std::max(256, grid_size / 4);
  return -winding_number(curve, 1e-8, base);
}

int fredholm_index(const OperatorSum& el, Complex lambda, int grid_size) {
  return fredholm_index(el, essential_spectrum(el, grid_size), lambda,
                        grid_size);
}

InvertibilityVerdict is_invertible(const OperatorSum& el, Complex lambda,
                                   int grid_size) {
  SpectrumReport ess = essential_spectrum(el, grid_size);
  InvertibilityVerdict v;
  v.essential_distance = essential_distance(ess, lambda);
  v.margin = fredholm_margin(ess);
  if (!(v.essential_distance > v.margin)) return v;  // not certifiable
  v.fredholm = true;
  v.index = fredholm_index(el, ess, lambda, grid_size);
  v.invertible = (v.index == 0);
  return v;
}

EquivalenceReport check_limit_equivalence(const OperatorSum& el, Complex lambda,
                                          int grid_size) {
  EquivalenceReport rep;
  rep.element = is_invertible(el, lambda, grid_size);

  OperatorSum lim;
  lim.tm_terms.push_back(
      {circle_line_symbol(el), MultiplierSymbol::constant(1.0)});
  rep.limit = is_invertible(lim, lambda, grid_size);

  rep.agree = rep.element.invertible == rep.limit.invertible &&
              rep.element.fredholm == rep.limit.fredholm &&
              (!rep.element.fredholm || rep.element.index == rep.limit.index);
  return rep;
}

OperatorSum homotopy(const OperatorSum& el, double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw std::domain_error("homotopy: w must lie in [0, 1]");
  OperatorSum out = el;
  auto deform = [w](ProductTerm& term) {
    if (w == 0.0)
      term.multiplier =
          MultiplierSymbol::constant(term.multiplier.limit_at_infinity());
    else if (w < 1.0)
      term.multiplier = shift_multiplier(term.multiplier, -std::log(w));
  };
  for (auto& t : out.tm_terms) deform(t);
  for (auto& t : out.mt_terms) deform(t);
  return out;
}

HomotopyTrace homotopy_trace(const OperatorSum& el, Complex lambda,
                             const std::vector<double>& w_grid, int grid_size,
                             double containment_tol) {
  SpectrumReport base = essential_spectrum(el, grid_size);
  HomotopyTrace trace;
  trace.index_constant = true;
  trace.containment_ok = true;
  for (double w : w_grid) {
    OperatorSum h = homotopy(el, w);
    SpectrumReport ess = essential_spectrum(h, grid_size);
    HomotopyRow row;
    row.w = w;
    row.essential_distance = essential_distance(ess, lambda);
    row.index = fredholm_index(h, ess, lambda, grid_size);
    row.contained = true;
    for (const auto& p : ess.whisker_samples)
      if (arc_distance(base, p) > containment_tol) {
        row.contained = false;
        break;
      }
    if (row.contained)
      for (const auto& p : ess.circle_samples)
        if (arc_distance(base, p) > containment_tol) {
          row.contained = false;
          break;
        }
    if (!trace.rows.empty() && row.index != trace.rows.front().index)
      trace.index_constant = false;
    if (!row.contained) trace.containment_ok = false;
    trace.rows.push_back(row);
  }
  return trace;
}

SpectrumReport spectrum(const OperatorSum& el, int resolution, int grid_size) {
  if (resolution < 16)
    throw config_error("spectrum: resolution too small");
  SpectrumReport rep = essential_spectrum(el, grid_size);

  std::vector<Complex> samples = rep.whisker_samples;
  samples.insert(samples.end(), rep.circle_samples.begin(),
                 rep.circle_samples.end());

  double lo_re = samples[0].real(), hi_re = lo_re;
  double lo_im = samples[0].imag(), hi_im = lo_im;
  for (const auto& p : samples) {
    lo_re = std::min(lo_re, p.real());
    hi_re = std::max(hi_re, p.real());
    lo_im = std::min(lo_im, p.imag());
    hi_im = std::max(hi_im, p.imag());
  }
  double diam = std::max(hi_re - lo_re, hi_im - lo_im);
  double pad =
      rep.tail_bound + 2.0 * rep.max_gap + 0.05 * std::max(diam, 1e-3) + 1e-3;
  lo_re -= pad;
  lo_im -= pad;
  hi_re += pad;
  hi_im += pad;

  const int res = resolution;
  const double dx = (hi_re - lo_re) / res;
  const double dy = (hi_im - lo_im) / res;
  const double cell_diag = std::hypot(dx, dy);
  const double barrier =
      rep.max_gap + rep.tail_bound + cell_diag + 1e-6;

  rep.cell = std::max(dx, dy);
  rep.box_lo = Complex(lo_re, lo_im);
  rep.box_hi = Complex(hi_re, hi_im);

  // rasterize a disk of the barrier radius around every sample
  std::vector<char> blocked(static_cast<std::size_t>(res) * res, 0);
  auto center = [&](int ix, int iy) {
    return Complex(lo_re + (ix + 0.5) * dx, lo_im + (iy + 0.5) * dy);
  };
  for (const auto& p : samples) {
    int ix0 = static_cast<int>(std::floor((p.real() - barrier - lo_re) / dx));
    int ix1 = static_cast<int>(std::ceil((p.real() + barrier - lo_re) / dx));
    int iy0 = static_cast<int>(std::floor((p.imag() - barrier - lo_im) / dy));
    int iy1 = static_cast<int>(std::ceil((p.imag() + barrier - lo_im) / dy));
    for (int iy = std::max(0, iy0); iy <= std::min(res - 1, iy1); ++iy)
      for (int ix = std::max(0, ix0); ix <= std::min(res - 1, ix1); ++ix)
        if (std::abs(center(ix, iy) - p) <= barrier)
          blocked[static_cast<std::size_t>(iy) * res + ix] = 1;
  }

  // integer distance-to-barrier transform (multi-source BFS)
  std::vector<int> dist(static_cast<std::size_t>(res) * res, -1);
  std::deque<std::pair<int, int>> queue;
  for (int iy = 0; iy < res; ++iy)
    for (int ix = 0; ix < res; ++ix)
      if (blocked[static_cast<std::size_t>(iy) * res + ix]) {
        dist[static_cast<std::size_t>(iy) * res + ix] = 0;
        queue.emplace_back(ix, iy);
      }
  if (queue.empty())
    throw consistency_error("spectrum: no essential samples to fence");
  const int step_x[4] = {1, -1, 0, 0};
  const int step_y[4] = {0, 0, 1, -1};
  while (!queue.empty()) {
    auto [ix, iy] = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(iy) * res + ix];
    for (int s = 0; s < 4; ++s) {
      int jx = ix + step_x[s], jy = iy + step_y[s];
      if (jx < 0 || jx >= res || jy < 0 || jy >= res) continue;
      auto& dj = dist[static_cast<std::size_t>(jy) * res + jx];
      if (dj < 0) {
        dj = d + 1;
        queue.emplace_back(jx, jy);
      }
    }
  }

  // flood fill of free cells into components
  std::vector<int> comp(static_cast<std::size_t>(res) * res, -1);
  int ncomp = 0;
  for (int iy = 0; iy < res; ++iy)
    for (int ix = 0; ix < res; ++ix) {
      std::size_t at = static_cast<std::size_t>(iy) * res + ix;
      if (blocked[at] || comp[at] >= 0) continue;
      SpectralComponent c;
      c.cell_count = 0;
      int best_d = -1;
      int best_ix = ix, best_iy = iy;
      std::deque<std::pair<int, int>> fill;
      fill.emplace_back(ix, iy);
      comp[at] = ncomp;
      while (!fill.empty()) {
        auto [cx, cy] = fill.front();
        fill.pop_front();
        ++c.cell_count;
        if (cx == 0 || cy == 0 || cx == res - 1 || cy == res - 1)
          c.touches_boundary = true;
        int d = dist[static_cast<std::size_t>(cy) * res + cx];
        if (d > best_d) {
          best_d = d;
          best_ix = cx;
          best_iy = cy;
        }
        for (int s = 0; s < 4; ++s) {
          int jx = cx + step_x[s], jy = cy + step_y[s];
          if (jx < 0 || jx >= res || jy < 0 || jy >= res) continue;
          std::size_t aj = static_cast<std::size_t>(jy) * res + jx;
          if (!blocked[aj] && comp[aj] < 0) {
            comp[aj] = ncomp;
            fill.emplace_back(jx, jy);
          }
        }
      }
      c.representative = center(best_ix, best_iy);
      double d = std::numeric_limits<double>::infinity();
      for (const auto& p : samples)
        d = std::min(d, std::abs(c.representative - p));
      c.margin = d;
      rep.components.push_back(c);
      ++ncomp;
    }

  for (auto& c : rep.components) {
    c.index = fredholm_index(el, rep, c.representative, grid_size);
    if (c.touches_boundary && c.index != 0)
      throw consistency_error(
          "spectrum: unbounded complement component with nonzero index");
  }
  return rep;
}

OperatorMatrix operator_sum_matrix(const OperatorSum& el,
                                   const TruncationConfig& cfg) {
  const int n = cfg.n;
  effective_q(cfg);
  OperatorMatrix acc = el.scalar * OperatorMatrix::Identity(n, n);
  for (const auto& term : el.tm_terms)
    acc += toeplitz_matrix(pullback_line_symbol(term.toeplitz), cfg) *
           multiplier_matrix(term.multiplier, cfg);
  for (const auto& term : el.mt_terms)
    acc += multiplier_matrix(term.multiplier, cfg) *
           toeplitz_matrix(pullback_line_symbol(term.toeplitz), cfg);
  return acc;
}

double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hausdorff_distance: empty set");
  auto one_sided = [](const std::vector<Complex>& from,
                      const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace hardyspec
