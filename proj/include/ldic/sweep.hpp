#pragma once

// Rate/locality trade-off sweeps: achieved points from validated codes,
// lower envelopes by time sharing, closed-form reference curves, CSV/SVG.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/indexcode.hpp"
#include "ldic/oracles.hpp"
#include "ldic/rational.hpp"
#include "ldic/sigraph.hpp"

namespace ldic {

struct LabeledCode {
  std::string source;
  IndexCode code;
};

struct SweepResult {
  std::vector<TradeoffPoint> achieved;   ///< one per grid value with some scheme at locality <= r
  std::vector<TradeoffPoint> reference;  ///< closed-form curve on the grid, when one applies
  std::vector<TradeoffPoint> schemes;    ///< the raw points of the input codes
  std::string graph_id;
  std::uint32_t q = 2;
};

/// Formula name used for reference rows: three-cycle / n-cycle for directed
/// cycles, frac-coloring-at-1 otherwise (r = 1 only).
inline std::string reference_formula_for(const SideInfoGraph& g) {
  if (g.n() >= 3 && g == SideInfoGraph::directed_cycle(g.n())) return g.n() == 3 ? "three-cycle" : "n-cycle";
  return "frac-coloring-at-1";
}

namespace detail {

inline TradeoffPoint point_of(const IndexCode& c, const std::string& source) {
  auto p = locality_profile(c);
  return {p.r, p.beta, source, p.r_avg, c.M};
}

// time_share multiplicities (in units of the lcm of the message lengths)
// giving the first code a fraction w of the message symbols.
inline std::vector<int> share_multiplicities(Rational w) {
  return {static_cast<int>(w.numerator()), static_cast<int>(w.denominator() - w.numerator())};
}

}  // namespace detail

/// For every r in `grid`, the least beta over the input codes with locality
/// <= r and over two-code time shares whose blended locality equals r. The
/// chosen code is rebuilt and validated before its point is recorded (at the
/// grid value r). Every input code must validate.
inline SweepResult sweep(const SideInfoGraph& g, const std::vector<LabeledCode>& codes,
                         const std::vector<Rational>& grid, std::string graph_id = {}) {
  SweepResult out;
  out.graph_id = std::move(graph_id);
  for (const auto& lc : codes) {
    if (!validate(g, lc.code).valid) throw Error(Errc::InvalidInput, "sweep input '" + lc.source + "' does not validate");
    out.schemes.push_back(detail::point_of(lc.code, lc.source));
  }
  if (!codes.empty()) out.q = codes.front().code.field.q();

  for (const Rational& r : grid) {
    if (r < 1) throw Error(Errc::InvalidInput, "grid values must be at least 1");
    std::optional<Rational> best;
    std::size_t bi = 0, bj = 0;
    Rational bw(1);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const auto& pi = out.schemes[i];
      if (pi.r <= r && (!best || pi.beta < *best)) {
        best = pi.beta;
        bi = bj = i;
        bw = 1;
      }
    }
    for (std::size_t i = 0; i < codes.size(); ++i)
      for (std::size_t j = 0; j < codes.size(); ++j) {
        const auto& pi = out.schemes[i];
        const auto& pj = out.schemes[j];
        if (!(pi.r < r && r < pj.r)) continue;
        const Rational w = (pj.r - r) / (pj.r - pi.r);
        const Rational beta = w * pi.beta + (1 - w) * pj.beta;
        if (!best || beta < *best) {
          best = beta;
          bi = i;
          bj = j;
          bw = w;
        }
      }
    if (!best) continue;
    if (bi == bj) {
      auto p = out.schemes[bi];
      p.r = r;
      out.achieved.push_back(p);
      continue;
    }
    const auto mult = detail::share_multiplicities(bw);
    auto shared = time_share({codes[bi].code, codes[bj].code}, mult);
    if (!validate(g, shared).valid) throw Error(Errc::InvalidInput, "time-shared code does not validate");
    auto p = detail::point_of(shared, codes[bi].source + "+" + codes[bj].source);
    p.r = r;
    out.achieved.push_back(p);
  }

  const auto formula = reference_formula_for(g);
  TradeoffParams params;
  params.n = g.n();
  params.graph = g;
  for (const Rational& r : grid) {
    if (formula == "frac-coloring-at-1" && r != 1) continue;
    if (formula == "frac-coloring-at-1" && g.n() > 16) continue;
    out.reference.push_back(reference_tradeoff(formula, params, r));
  }
  return out;
}

/// Header "r,beta,source"; per grid value the achieved row, then the
/// reference row. Rationals are written as p or p/q.
inline std::string to_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "r,beta,source\n";
  std::vector<std::pair<Rational, int>> keys;
  for (const auto& p : s.achieved) keys.emplace_back(p.r, 0);
  for (const auto& p : s.reference) keys.emplace_back(p.r, 1);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keys.erase(std::unique(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  for (const auto& [r, unused] : keys) {
    for (const auto& p : s.achieved)
      if (p.r == r) os << to_string(p.r) << ',' << to_string(p.beta) << ',' << p.provenance << '\n';
    for (const auto& p : s.reference)
      if (p.r == r) os << to_string(p.r) << ',' << to_string(p.beta) << ',' << p.provenance << '\n';
  }
  return os.str();
}

/// Self-contained SVG: achieved points as circles, the reference curve as a
/// polyline, axes r (horizontal) and beta (vertical).
inline std::string to_svg(const SweepResult& s) {
  constexpr double W = 480, H = 360, pad = 48;
  double rmin = 1, rmax = 1, bmin = 0, bmax = 1;
  bool first = true;
  auto extend = [&](const TradeoffPoint& p) {
    const double r = to_double(p.r), b = to_double(p.beta);
    if (first) {
      rmin = rmax = r;
      bmin = bmax = b;
      first = false;
    }
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    bmin = std::min(bmin, b);
    bmax = std::max(bmax, b);
  };
  for (const auto& p : s.achieved) extend(p);
  for (const auto& p : s.reference) extend(p);
  if (rmax - rmin < 1e-9) rmax = rmin + 1;
  bmin = std::min(bmin, 0.0);
  if (bmax - bmin < 1e-9) bmax = bmin + 1;
  auto x = [&](double r) { return pad + (r - rmin) / (rmax - rmin) * (W - 2 * pad); };
  auto y = [&](double b) { return H - pad - (b - bmin) / (bmax - bmin) * (H - 2 * pad); };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">r</text>\n";
  os << "<text x=\"14\" y=\"" << H / 2 << "\" text-anchor=\"middle\">beta</text>\n";
  os << "<text x=\"" << pad << "\" y=\"" << H - pad + 16 << "\" text-anchor=\"middle\">" << rmin << "</text>\n";
  os << "<text x=\"" << W - pad << "\" y=\"" << H - pad + 16 << "\" text-anchor=\"middle\">" << rmax << "</text>\n";
  os << "<text x=\"" << pad - 6 << "\" y=\"" << y(bmax) + 4 << "\" text-anchor=\"end\">" << bmax << "</text>\n";
  os << "<text x=\"" << pad - 6 << "\" y=\"" << y(bmin) + 4 << "\" text-anchor=\"end\">" << bmin << "</text>\n";
  if (!s.reference.empty()) {
    os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t k = 0; k < s.reference.size(); ++k)
      os << (k ? " " : "") << x(to_double(s.reference[k].r)) << ',' << y(to_double(s.reference[k].beta));
    os << "\"/>\n";
  }
  for (const auto& p : s.achieved)
    os << "<circle cx=\"" << x(to_double(p.r)) << "\" cy=\"" << y(to_double(p.beta))
       << "\" r=\"4\" fill=\"crimson\"><title>" << p.provenance << "</title></circle>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace ldic
