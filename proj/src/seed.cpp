#include "seedmra/seed.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "seedmra/errors.hpp"

namespace seedmra {

namespace {

const double kInvRoot2Pi = 1.0 / std::sqrt(2.0 * kPi);
const double kGaussAmp = std::pow(kPi, -0.25);

complexd gaussian_value(const GaussianData& g, double x) {
  const double u = x - g.center;
  if (std::fabs(u) > 40.0) return {0.0, 0.0};
  double poly = 1.0;
  if (g.hermite == 1) poly = std::sqrt(2.0) * u;
  const complexd phase = g.mu == 0.0
                             ? complexd{1.0, 0.0}
                             : complexd{std::cos(g.mu * x), std::sin(g.mu * x)};
  return g.scale * (kGaussAmp * poly * std::exp(-0.5 * u * u)) * phase;
}

// i^k for k mod 4, exact.
complexd unit_power_i(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

void LatticeParams::validate() const {
  if (!(L >= 1)) throw std::invalid_argument("lattice truncation L must be >= 1");
  if (std::fabs(a * a - 4.0 * kPi) > 1e-12)
    throw std::invalid_argument("cell width must satisfy a^2 = 4*pi");
}

complexd cell_exp_integral(const Rational& r0, const Rational& r1, const Rational& T, double d) {
  if (!(r0 < r1)) return {0.0, 0.0};
  const Rational two(2);
  const Rational mid = (r0 + r1) / two;
  const Rational half = (r1 - r0) / two;
  const SplitAngle mid_angle{T * mid, d * mid.to_double()};
  const SplitAngle half_angle{T * half, d * half.to_double()};
  const double width = kCellWidth * (r1 - r0).to_double();
  return cis(mid_angle) * (width * sinc_angle(half_angle));
}

complexd lattice_pairing(const std::vector<Segment>& segs, std::int64_t m, std::int64_t k) {
  complexd sum{0.0, 0.0};
  const Rational shift(m);
  for (const Segment& si : segs) {
    for (const Segment& sj : segs) {
      const Rational lo = Rational::max(si.start, sj.start - shift);
      const Rational hi = Rational::min(si.end, sj.end - shift);
      if (!(lo < hi)) continue;
      const Rational T = si.mu_cells - sj.mu_cells - Rational(2 * k);
      const double d = (si.mu_rad - sj.mu_rad) * kCellWidth;
      const SplitAngle pre{-(sj.mu_cells * shift), -sj.mu_rad * kCellWidth * m};
      sum += si.amp * std::conj(sj.amp) * cis(pre) * cell_exp_integral(lo, hi, T, d);
    }
  }
  return sum;
}

complexd SeedFunction::eval(double x) const {
  switch (kind) {
    case SeedKind::PiecewiseConstant:
    case SeedKind::PiecewiseModulated: {
      complexd sum{0.0, 0.0};
      for (const Segment& s : segments) {
        const double lo = s.start.to_double() * kCellWidth;
        const double hi = s.end.to_double() * kCellWidth;
        if (x < lo || x >= hi) continue;
        const double mu = s.mu();
        sum += mu == 0.0 ? s.amp : s.amp * complexd{std::cos(mu * x), std::sin(mu * x)};
      }
      return sum;
    }
    case SeedKind::Gaussian:
      return gaussian_value(gauss, x);
    case SeedKind::Sampled: {
      const auto n = samples.values.size();
      if (n == 0) return {0.0, 0.0};
      const double t = (x - samples.x0) / samples.dx;
      if (t < 0.0 || t > static_cast<double>(n - 1)) return {0.0, 0.0};
      const auto i = static_cast<std::size_t>(t);
      if (i + 1 >= n) return samples.values[n - 1];
      const double f = t - static_cast<double>(i);
      return samples.values[i] * (1.0 - f) + samples.values[i + 1] * f;
    }
    case SeedKind::AnalyticClosure: {
      complexd sum{0.0, 0.0};
      for (const Segment& s : segments) {
        const double d = (s.mu_rad + closure_sign * x) * kCellWidth;
        sum += s.amp * cell_exp_integral(s.start, s.end, s.mu_cells, d);
      }
      return sum * kInvRoot2Pi;
    }
  }
  return {0.0, 0.0};
}

complexd SeedFunction::eval_at_rational(const Rational& r) const {
  if (!is_piecewise()) return eval(r.to_double() * kCellWidth);
  complexd sum{0.0, 0.0};
  for (const Segment& s : segments) {
    if (r < s.start || !(r < s.end)) continue;
    const SplitAngle phase{s.mu_cells * r, s.mu_rad * kCellWidth * r.to_double()};
    sum += s.amp * cis(phase);
  }
  return sum;
}

double SeedFunction::l2_norm_sq() const {
  switch (kind) {
    case SeedKind::PiecewiseConstant:
    case SeedKind::PiecewiseModulated:
    case SeedKind::AnalyticClosure:
      // Closures inherit the norm of their segment data (the transform is
      // unitary).
      return lattice_pairing(segments, 0, 0).real();
    case SeedKind::Gaussian:
      return std::norm(gauss.scale);
    case SeedKind::Sampled: {
      const auto n = samples.values.size();
      if (n < 2) return 0.0;
      double sum = 0.5 * (std::norm(samples.values[0]) + std::norm(samples.values[n - 1]));
      for (std::size_t i = 1; i + 1 < n; ++i) sum += std::norm(samples.values[i]);
      return sum * samples.dx;
    }
  }
  return 0.0;
}

SeedFunction SeedFunction::fourier() const {
  const Domain other = domain == Domain::Position ? Domain::Frequency : Domain::Position;
  switch (kind) {
    case SeedKind::PiecewiseConstant:
    case SeedKind::PiecewiseModulated: {
      SeedFunction out;
      out.domain = other;
      out.kind = SeedKind::AnalyticClosure;
      out.segments = segments;
      // Position data transforms forward, frequency data transforms back,
      // so switching representations is an involution.
      out.closure_sign = domain == Domain::Position ? -1 : +1;
      return out;
    }
    case SeedKind::Gaussian: {
      const GaussianData& g = gauss;
      GaussianData t;
      t.hermite = g.hermite;
      const complexd rot = unit_power_i(domain == Domain::Position ? -g.hermite : g.hermite);
      const complexd centre_phase{std::cos(g.mu * g.center), std::sin(g.mu * g.center)};
      if (domain == Domain::Position) {
        t.center = g.mu;
        t.mu = -g.center;
      } else {
        t.center = -g.mu;
        t.mu = g.center;
      }
      t.scale = g.scale * centre_phase * rot;
      SeedFunction out;
      out.domain = other;
      out.kind = SeedKind::Gaussian;
      out.gauss = t;
      return out;
    }
    case SeedKind::AnalyticClosure: {
      SeedFunction out;
      out.domain = other;
      bool modulated = false;
      for (const Segment& s : segments)
        if (s.mu_cells.num != 0 || s.mu_rad != 0.0) modulated = true;
      out.kind = modulated ? SeedKind::PiecewiseModulated : SeedKind::PiecewiseConstant;
      out.segments = segments;
      return out;
    }
    case SeedKind::Sampled:
      throw UnsupportedOperation("fourier: sampled seeds have no closed-form transform");
  }
  throw UnsupportedOperation("fourier: unknown seed kind");
}

void SeedFunction::support_hint(double& lo, double& hi) const {
  switch (kind) {
    case SeedKind::PiecewiseConstant:
    case SeedKind::PiecewiseModulated: {
      if (segments.empty()) {
        lo = hi = 0.0;
        return;
      }
      lo = segments.front().start.to_double();
      hi = segments.front().end.to_double();
      for (const Segment& s : segments) {
        lo = std::min(lo, s.start.to_double());
        hi = std::max(hi, s.end.to_double());
      }
      lo *= kCellWidth;
      hi *= kCellWidth;
      return;
    }
    case SeedKind::Gaussian:
      lo = gauss.center - 10.0;
      hi = gauss.center + 10.0;
      return;
    case SeedKind::Sampled:
      lo = samples.x0;
      hi = samples.x0 + samples.dx * (samples.values.empty() ? 0 : samples.values.size() - 1);
      return;
    case SeedKind::AnalyticClosure:
      lo = -std::numeric_limits<double>::infinity();
      hi = std::numeric_limits<double>::infinity();
      return;
  }
}

SeedFunction SeedFunction::scaled(const complexd& c) const {
  SeedFunction out = *this;
  for (Segment& s : out.segments) s.amp *= c;
  out.gauss.scale *= c;
  for (complexd& v : out.samples.values) v *= c;
  return out;
}

SeedFunction SeedFunction::piecewise(Domain domain, std::vector<Segment> segs) {
  SeedFunction out;
  out.domain = domain;
  bool modulated = false;
  for (const Segment& s : segs) {
    if (!(s.start < s.end)) throw std::invalid_argument("segment must have start < end");
    if (s.mu_cells.num != 0 || s.mu_rad != 0.0) modulated = true;
  }
  out.kind = modulated ? SeedKind::PiecewiseModulated : SeedKind::PiecewiseConstant;
  out.segments = std::move(segs);
  return out;
}

SeedFunction SeedFunction::gaussian(double center, double mu, complexd scale, int hermite) {
  if (hermite != 0 && hermite != 1)
    throw std::invalid_argument("gaussian hermite order must be 0 or 1");
  SeedFunction out;
  out.domain = Domain::Position;
  out.kind = SeedKind::Gaussian;
  out.gauss = GaussianData{center, mu, scale, hermite};
  return out;
}

SeedFunction SeedFunction::sampled(double x0, double dx, std::vector<complexd> values,
                                   Domain domain) {
  if (!(dx > 0.0)) throw std::invalid_argument("sampled seed needs dx > 0");
  if (values.size() < 2) throw std::invalid_argument("sampled seed needs at least two samples");
  SeedFunction out;
  out.domain = domain;
  out.kind = SeedKind::Sampled;
  out.samples = SampledData{x0, dx, std::move(values)};
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

Domain parse_domain(const json& j) {
  const std::string d = j.value("domain", "position");
  if (d == "position") return Domain::Position;
  if (d == "frequency") return Domain::Frequency;
  throw std::invalid_argument("seed domain must be 'position' or 'frequency'");
}

std::vector<Segment> parse_segments(const json& j, bool allow_modulation) {
  if (!j.contains("segments") || !j["segments"].is_array() || j["segments"].empty())
    throw std::invalid_argument("piecewise seed needs a non-empty 'segments' array");
  std::vector<Segment> segs;
  for (const json& sj : j["segments"]) {
    Segment s;
    s.start = Rational::parse(sj.at("start_a").get<std::string>());
    s.end = Rational::parse(sj.at("end_a").get<std::string>());
    if (!(s.start < s.end)) throw std::invalid_argument("segment must have start_a < end_a");
    s.amp = {sj.value("re", 0.0), sj.value("im", 0.0)};
    s.mu_rad = sj.value("mu", 0.0);
    if (sj.contains("mu_cells")) s.mu_cells = Rational::parse(sj["mu_cells"].get<std::string>());
    if (!allow_modulation && (s.mu_rad != 0.0 || s.mu_cells.num != 0))
      throw std::invalid_argument("piecewise_constant segments cannot carry a modulation");
    segs.push_back(s);
  }
  // Segments add up where they overlap, so no disjointness requirement.
  return segs;
}

}  // namespace

SeedFunction seed_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed seed JSON: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  const Domain domain = parse_domain(j);
  if (kind == "piecewise_constant" || kind == "piecewise_modulated") {
    SeedFunction out =
        SeedFunction::piecewise(domain, parse_segments(j, kind == "piecewise_modulated"));
    out.domain = domain;
    return out;
  }
  if (kind == "gaussian") {
    SeedFunction out = SeedFunction::gaussian(
        j.value("center", 0.0), j.value("mu", 0.0),
        complexd{j.value("scale_re", 1.0), j.value("scale_im", 0.0)}, j.value("hermite", 0));
    out.domain = domain;
    return out;
  }
  if (kind == "sampled") {
    if (!j.contains("re") || !j["re"].is_array())
      throw std::invalid_argument("sampled seed needs 're' array");
    std::vector<double> re = j["re"].get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) {
      im = j["im"].get<std::vector<double>>();
      if (im.size() != re.size())
        throw std::invalid_argument("sampled seed 're' and 'im' lengths differ");
    }
    std::vector<complexd> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = {re[i], im[i]};
    return SeedFunction::sampled(j.value("x0", 0.0), j.value("dx", 1.0), std::move(values),
                                 domain);
  }
  throw std::invalid_argument("unknown seed kind '" + kind + "'");
}

std::string seed_to_json(const SeedFunction& seed) {
  nlohmann::ordered_json j;
  j["domain"] = seed.domain == Domain::Position ? "position" : "frequency";
  switch (seed.kind) {
    case SeedKind::PiecewiseConstant:
    case SeedKind::PiecewiseModulated: {
      j["kind"] = seed.kind == SeedKind::PiecewiseConstant ? "piecewise_constant"
                                                           : "piecewise_modulated";
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const Segment& s : seed.segments) {
        nlohmann::ordered_json sj;
        sj["start_a"] = s.start.str();
        sj["end_a"] = s.end.str();
        sj["re"] = s.amp.real();
        sj["im"] = s.amp.imag();
        if (s.mu_rad != 0.0) sj["mu"] = s.mu_rad;
        if (s.mu_cells.num != 0) sj["mu_cells"] = s.mu_cells.str();
        arr.push_back(sj);
      }
      j["segments"] = arr;
      break;
    }
    case SeedKind::Gaussian:
      j["kind"] = "gaussian";
      j["center"] = seed.gauss.center;
      j["mu"] = seed.gauss.mu;
      j["scale_re"] = seed.gauss.scale.real();
      j["scale_im"] = seed.gauss.scale.imag();
      j["hermite"] = seed.gauss.hermite;
      break;
    case SeedKind::Sampled: {
      j["kind"] = "sampled";
      j["x0"] = seed.samples.x0;
      j["dx"] = seed.samples.dx;
      std::vector<double> re(seed.samples.values.size()), im(seed.samples.values.size());
      for (std::size_t i = 0; i < seed.samples.values.size(); ++i) {
        re[i] = seed.samples.values[i].real();
        im[i] = seed.samples.values[i].imag();
      }
      j["re"] = re;
      j["im"] = im;
      break;
    }
    case SeedKind::AnalyticClosure:
      throw UnsupportedOperation("analytic closures are not serializable");
  }
  return j.dump(2);
}

SeedFunction load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open seed file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return seed_from_json(buf.str());
}

}  // namespace seedmra
