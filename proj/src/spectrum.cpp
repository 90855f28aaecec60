#include "decaylab/spectrum.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace decaylab {

void validate(const SpectrumModel& m) {
  if (m.points.empty()) throw std::invalid_argument("SpectrumModel: no points");
  for (const auto& z : m.points) {
    if (!(z.re() > 0.0)) throw std::invalid_argument("SpectrumModel: every point needs Re > 0");
  }
  if (m.exp_margin) {
    if (!(*m.exp_margin > 0.0)) throw std::invalid_argument("SpectrumModel: exp_margin must be > 0");
    for (const auto& z : m.points) {
      if (z.re() < *m.exp_margin) throw std::invalid_argument("SpectrumModel: point to the left of exp_margin");
    }
  }
  if (m.beta) {
    if (!(*m.beta > 0.0)) throw std::invalid_argument("SpectrumModel: beta must be > 0");
    if (m.delta && m.C) {
      for (const auto& z : m.points) {
        if (z.re() > *m.delta) continue;
        const double need = *m.C * std::pow(z.re(), -1.0 / *m.beta);
        if (std::abs(z.im()) < need * (1.0 - 1e-12)) {
          throw std::invalid_argument("SpectrumModel: point violates |Im| >= C (Re)^(-1/beta)");
        }
      }
    }
  }
}

SpectrumModel make_poly_stable_spectrum(double beta, std::size_t K, double c_im) {
  if (!(beta > 0.0)) throw std::invalid_argument("make_poly_stable_spectrum: beta must be > 0");
  if (!(c_im > 0.0)) throw std::invalid_argument("make_poly_stable_spectrum: c_im must be > 0");
  if (K < 2) throw std::invalid_argument("make_poly_stable_spectrum: K must be >= 2");
  SpectrumModel m;
  m.label = "poly_stable";
  m.beta = beta;
  m.delta = 1.0;
  m.C = c_im;
  m.points.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    m.points.emplace_back(std::pow(kk, -beta), c_im * kk);
  }
  return m;
}

SpectrumModel make_sqrt_spectrum(double c, std::size_t K) {
  if (!(c > 0.0)) throw std::invalid_argument("make_sqrt_spectrum: c must be > 0");
  if (K < 2) throw std::invalid_argument("make_sqrt_spectrum: K must be >= 2");
  SpectrumModel m;
  m.label = "sqrt";
  m.exp_margin = c;
  m.points.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) m.points.emplace_back(c, std::sqrt(static_cast<double>(k)));
  return m;
}

void write_spectrum(std::ostream& os, const SpectrumModel& m) {
  os << "# " << (m.label.empty() ? "spectrum" : m.label);
  os << std::setprecision(17);
  if (m.beta) os << " beta=" << *m.beta;
  if (m.exp_margin) os << " c=" << *m.exp_margin;
  if (m.delta) os << " delta=" << *m.delta;
  if (m.C) os << " C=" << *m.C;
  os << '\n';
  for (const auto& z : m.points) os << z.re() << ' ' << z.im() << '\n';
}

SpectrumModel read_spectrum(std::istream& is) {
  SpectrumModel m;
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header) continue;
      header = true;
      std::istringstream hs(line.substr(1));
      std::string tok;
      bool first = true;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
          if (first) m.label = tok;
          first = false;
          continue;
        }
        first = false;
        const std::string key = tok.substr(0, eq);
        const double val = std::stod(tok.substr(eq + 1));
        if (key == "beta") m.beta = val;
        else if (key == "c") m.exp_margin = val;
        else if (key == "delta") m.delta = val;
        else if (key == "C") m.C = val;
        else throw std::invalid_argument("read_spectrum: unknown header field '" + key + "'");
      }
      continue;
    }
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> re >> im)) {
      throw std::invalid_argument("read_spectrum: malformed point on line " + std::to_string(lineno));
    }
    m.points.emplace_back(re, im);
  }
  validate(m);
  return m;
}

}  // namespace decaylab
