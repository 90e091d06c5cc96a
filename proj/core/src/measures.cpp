#include "freefam/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "freefam/error.hpp"
#include "freefam/format.hpp"

namespace freefam {

Measure::Measure(std::optional<ContinuousPart> continuous, std::vector<Atom> atoms,
                 std::string description, std::vector<std::string> notes,
                 ArcsineQuadrature quadrature)
    : continuous_(std::move(continuous)),
      atoms_(std::move(atoms)),
      description_(std::move(description)),
      notes_(std::move(notes)),
      quadrature_(quadrature) {
  if (continuous_) {
    if (!(continuous_->hi > continuous_->lo) || !continuous_->density) {
      throw ValidationError("continuous part needs lo < hi and a density");
    }
  }
  for (const Atom& atom : atoms_) {
    if (!(atom.mass >= 0.0) || !std::isfinite(atom.location)) {
      throw ValidationError("atoms need a finite location and nonnegative mass");
    }
  }
  if (!continuous_ && atoms_.empty()) {
    throw ValidationError("measure has neither a density nor atoms");
  }
}

double Measure::density(double x) const {
  if (!continuous_ || !(x > continuous_->lo && x < continuous_->hi)) {
    return 0.0;
  }
  return continuous_->density(x);
}

double Measure::integrate(const std::function<double(double)>& f) const {
  double total = 0.0;
  if (continuous_) {
    const auto& part = *continuous_;
    total = quadrature_.integrate(part.lo, part.hi,
                                  [&](double x) { return f(x) * part.density(x); });
  }
  for (const Atom& atom : atoms_) {
    total += atom.mass * f(atom.location);
  }
  return total;
}

double Measure::hull_lo() const {
  double lo = continuous_ ? continuous_->lo : atoms_.front().location;
  for (const Atom& atom : atoms_) {
    lo = std::min(lo, atom.location);
  }
  return lo;
}

double Measure::hull_hi() const {
  double hi = continuous_ ? continuous_->hi : atoms_.front().location;
  for (const Atom& atom : atoms_) {
    hi = std::max(hi, atom.location);
  }
  return hi;
}

double Measure::support_radius() const { return std::max(std::abs(hull_lo()), std::abs(hull_hi())); }

bool Measure::in_continuous_support(double z) const {
  return continuous_ && z >= continuous_->lo && z <= continuous_->hi;
}

double measure_moment(const Measure& nu, std::size_t k) {
  if (k > kMaxMomentOrder) {
    throw ValidationError("moment order above " + std::to_string(kMaxMomentOrder));
  }
  const int power = static_cast<int>(k);
  return nu.integrate([power](double x) { return std::pow(x, power); });
}

double total_mass(const Measure& nu) {
  return nu.integrate([](double) { return 1.0; });
}

double mean(const Measure& nu) {
  return nu.integrate([](double x) { return x; });
}

double variance(const Measure& nu) {
  const double mu = mean(nu);
  return nu.integrate([mu](double x) { return (x - mu) * (x - mu); });
}

MeixnerType meixner_type(MeixnerParams p) {
  if (p.b < 0.0) {
    return MeixnerType::FreeBinomial;
  }
  if (p.b == 0.0) {
    return p.a == 0.0 ? MeixnerType::Semicircle : MeixnerType::FreePoisson;
  }
  const double disc = p.a * p.a - 4.0 * p.b;
  if (disc > 0.0) {
    return MeixnerType::FreePascal;
  }
  return disc == 0.0 ? MeixnerType::FreeGamma : MeixnerType::FreeHyperbolic;
}

const char* to_string(MeixnerType type) {
  switch (type) {
    case MeixnerType::Semicircle:
      return "semicircle";
    case MeixnerType::FreePoisson:
      return "free Poisson";
    case MeixnerType::FreePascal:
      return "free Pascal";
    case MeixnerType::FreeGamma:
      return "free gamma";
    case MeixnerType::FreeHyperbolic:
      return "free hyperbolic";
    case MeixnerType::FreeBinomial:
      return "free binomial";
  }
  return "unknown";
}

namespace {

void check_meixner(MeixnerParams p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b)) {
    throw ValidationError("Meixner parameters must be finite");
  }
  if (p.b < -1.0) {
    throw ValidationError("outside Meixner admissibility");
  }
}

}  // namespace

Measure meixner_measure(MeixnerParams p, ArcsineQuadrature quadrature) {
  check_meixner(p);
  const double a = p.a;
  const double b = p.b;

  std::vector<std::pair<double, double>> candidates;
  if (b == 0.0) {
    if (a * a > 1.0) {
      candidates.emplace_back(-1.0 / a, 1.0 - 1.0 / (a * a));
    }
  } else if (b > 0.0) {
    const double disc = a * a - 4.0 * b;
    if (disc > 0.0) {
      const double s = std::sqrt(disc);
      const double magnitude = (std::abs(a) - s) / (2.0 * b);
      const double location = a > 0.0 ? -magnitude : magnitude;
      candidates.emplace_back(location, 1.0 - (std::abs(a) - s) / (2.0 * b * s));
    }
  } else {
    const double s = std::sqrt(a * a - 4.0 * b);
    candidates.emplace_back((-a + s) / (2.0 * b), 1.0 + (s - a) / (2.0 * b * s));
    candidates.emplace_back((-a - s) / (2.0 * b), 1.0 + (s + a) / (2.0 * b * s));
  }

  std::vector<Atom> atoms;
  std::vector<std::string> notes;
  for (const auto& [location, mass] : candidates) {
    if (mass < 0.0) {
      notes.push_back("atom at " + format_number(location) + " clamped from mass " +
                      format_number(mass) + " to 0");
    } else if (mass > 0.0) {
      atoms.push_back({location, mass});
    }
  }

  std::optional<ContinuousPart> continuous;
  const double width2 = 4.0 * (1.0 + b);
  if (width2 > 0.0) {
    const double half = std::sqrt(width2);
    continuous = ContinuousPart{a - half, a + half, [a, b, width2](double x) {
                                  const double gap = width2 - (x - a) * (x - a);
                                  if (gap <= 0.0) {
                                    return 0.0;
                                  }
                                  return std::sqrt(gap) /
                                         (2.0 * std::numbers::pi * (b * x * x + a * x + 1.0));
                                }};
  }

  std::string description = std::string("free Meixner (") + to_string(meixner_type(p)) +
                            ") a=" + format_number(a) + " b=" + format_number(b);
  return Measure(std::move(continuous), std::move(atoms), std::move(description), std::move(notes),
                 quadrature);
}

double meixner_g_closed(MeixnerParams p, double z) {
  check_meixner(p);
  const double a = p.a;
  const double b = p.b;
  const double half = std::sqrt(4.0 * (1.0 + b));
  if (!std::isfinite(z) || (z >= a - half && z <= a + half)) {
    throw ValidationError("evaluation inside support");
  }
  // With z = m + V(m)/m and G = m / V(m): solve for the root m with
  // m ~ 1/z at infinity, written without cancellation as 2 / ((z - a) + s).
  const double shifted = z - a;
  const double s = std::copysign(std::sqrt(shifted * shifted - half * half), shifted);
  const double m = 2.0 / (shifted + s);
  const double v = 1.0 + a * m + b * m * m;
  if (v == 0.0) {
    throw ValidationError("evaluation at an atom");
  }
  return m / v;
}

Measure semicircle_measure(double mean_value, double sd, ArcsineQuadrature quadrature) {
  if (!(sd > 0.0) || !std::isfinite(sd) || !std::isfinite(mean_value)) {
    throw ValidationError("semicircle needs a finite mean and sd > 0");
  }
  const double var = sd * sd;
  ContinuousPart part{mean_value - 2.0 * sd, mean_value + 2.0 * sd, [mean_value, var](double x) {
                        const double gap = 4.0 * var - (x - mean_value) * (x - mean_value);
                        return gap > 0.0 ? std::sqrt(gap) / (2.0 * std::numbers::pi * var) : 0.0;
                      }};
  return Measure(std::move(part), {},
                 "semicircle mean=" + format_number(mean_value) + " sd=" + format_number(sd), {},
                 quadrature);
}

Measure mp_member(double m, double lambda, ArcsineQuadrature quadrature) {
  if (!(lambda > 0.0) || !std::isfinite(lambda) || !std::isfinite(m)) {
    throw ValidationError("family member needs lambda > 0 and a finite mean");
  }
  if (m * m * lambda > 1.0) {
    throw ValidationError("mean outside family domain");
  }
  const double edge = 2.0 / std::sqrt(lambda);
  ContinuousPart part{-edge, edge, [m, lambda](double x) {
                        const double gap = 4.0 - lambda * x * x;
                        if (gap <= 0.0) {
                          return 0.0;
                        }
                        return std::sqrt(lambda) * std::sqrt(gap) /
                               (2.0 * std::numbers::pi * (1.0 + lambda * m * (m - x)));
                      }};
  return Measure(std::move(part), {},
                 "constant-variance family member m=" + format_number(m) +
                     " lambda=" + format_number(lambda),
                 {}, quadrature);
}

namespace {

void check_kernel(const Measure& nu, double theta) {
  if (!std::isfinite(theta)) {
    throw ValidationError("theta outside admissible window");
  }
  bool ok = theta * nu.hull_lo() < 1.0 && theta * nu.hull_hi() < 1.0;
  for (const Atom& atom : nu.atoms()) {
    ok = ok && theta * atom.location < 1.0;
  }
  if (!ok) {
    throw ValidationError("theta outside admissible window");
  }
}

// nu reweighted by x -> weight(x) / normalizer.
Measure reweighted(const Measure& nu, std::function<double(double)> weight, double normalizer,
                   std::string description) {
  std::optional<ContinuousPart> continuous;
  if (nu.continuous()) {
    const ContinuousPart& base = *nu.continuous();
    continuous = ContinuousPart{base.lo, base.hi,
                                [density = base.density, weight, normalizer](double x) {
                                  return density(x) * weight(x) / normalizer;
                                }};
  }
  std::vector<Atom> atoms;
  for (const Atom& atom : nu.atoms()) {
    atoms.push_back({atom.location, atom.mass * weight(atom.location) / normalizer});
  }
  std::vector<std::string> notes(nu.notes().begin(), nu.notes().end());
  return Measure(std::move(continuous), std::move(atoms), std::move(description), std::move(notes),
                 nu.quadrature());
}

}  // namespace

double cauchy_kernel_normalizer(const Measure& nu, double theta) {
  check_kernel(nu, theta);
  return nu.integrate([theta](double x) { return 1.0 / (1.0 - theta * x); });
}

Measure kernel_reweight(const Measure& nu, double theta) {
  const double normalizer = cauchy_kernel_normalizer(nu, theta);
  return reweighted(
      nu, [theta](double x) { return 1.0 / (1.0 - theta * x); }, normalizer,
      nu.description() + " reweighted by theta=" + format_number(theta));
}

Measure family_member(const Measure& nu, const RationalVarianceFunction& v, double m) {
  if (!std::isfinite(m) || v.has_pole_at(m) || !(v(m) > 0.0)) {
    throw ValidationError("mean outside family domain");
  }
  const double vm = v(m);
  const double shift = m - v.anchor_mean();
  auto denominator = [vm, shift, m](double x) { return vm + shift * (m - x); };
  bool ok = denominator(nu.hull_lo()) > 0.0 && denominator(nu.hull_hi()) > 0.0;
  for (const Atom& atom : nu.atoms()) {
    ok = ok && denominator(atom.location) > 0.0;
  }
  if (!ok) {
    throw ValidationError("mean outside family domain");
  }
  Measure q = reweighted(
      nu, [vm, denominator](double x) { return vm / denominator(x); }, 1.0,
      nu.description() + " family member m=" + format_number(m));
  // A positive weight is not enough: past the edge of the mean domain the
  // same formula gives a positive measure of the wrong total mass.
  if (std::abs(total_mass(q) - 1.0) > kFamilyMassTolerance) {
    throw ValidationError("mean outside family domain");
  }
  return q;
}

}  // namespace freefam
