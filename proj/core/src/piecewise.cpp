#include <nonsin/piecewise.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>

namespace nonsin {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Expr parse_token_expr(std::string_view text, std::size_t global_offset) {
  try {
    return parse_expr(text);
  } catch (const ParseError& err) {
    throw ParseError("in piecewise segment", global_offset + err.offset(), err.expected());
  }
}

double parse_constant(std::string_view text, std::size_t global_offset, const char* role) {
  Expr e = parse_token_expr(text, global_offset);
  if (!e.is_constant()) {
    throw ParseError(std::string(role) + " must be a constant expression", global_offset,
                     "an expression without 'x'");
  }
  return e.eval(0.0);
}

}  // namespace

PiecewiseSpec parse_piecewise(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != 'P') {
    throw ParseError("piecewise spec must start with 'P['", pos, "'P'");
  }
  ++pos;
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') {
    throw ParseError("piecewise spec must start with 'P['", pos, "'['");
  }
  ++pos;

  // Split the bracket body on '|'; neither token kind can contain '|' or ']'.
  std::vector<std::pair<std::size_t, std::string_view>> tokens;
  std::size_t token_start = pos;
  bool closed = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '|' || c == ']') {
      tokens.emplace_back(token_start, text.substr(token_start, pos - token_start));
      token_start = pos + 1;
      if (c == ']') {
        closed = true;
        ++pos;
        break;
      }
    }
  }
  if (!closed) throw ParseError("unterminated piecewise spec", pos, "']'");
  if (tokens.size() < 3 || tokens.size() % 2 == 0) {
    throw ParseError("piecewise spec needs boundaries and segments alternating", token_start,
                     "x1 | e1 | x2 | ... | xm+1");
  }

  PiecewiseSpec spec;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [off, raw] = tokens[i];
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view body = trim(raw);
    std::size_t body_off = off + lead;
    if (body.empty()) {
      throw ParseError("empty token in piecewise spec", off, "an expression");
    }
    if (i % 2 == 0) {
      spec.boundaries.push_back(parse_constant(body, body_off, "boundary"));
    } else {
      spec.segments.push_back(parse_token_expr(body, body_off));
    }
  }

  for (std::size_t i = 1; i < spec.boundaries.size(); ++i) {
    if (!(spec.boundaries[i] > spec.boundaries[i - 1])) {
      throw ParseError("boundaries must be strictly increasing", 0,
                       "x" + std::to_string(i + 1) + " > x" + std::to_string(i));
    }
  }

  // Optional endpoint-value suffixes: @x<i>=<const>
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '@') {
      throw ParseError("unexpected trailing input after piecewise spec", pos, "'@xi=value'");
    }
    ++pos;
    if (pos >= text.size() || text[pos] != 'x') {
      throw ParseError("malformed endpoint suffix", pos, "'x<i>'");
    }
    ++pos;
    std::size_t idx_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == idx_start) throw ParseError("malformed endpoint suffix", pos, "a boundary index");
    std::size_t index = std::stoul(std::string(text.substr(idx_start, pos - idx_start)));
    if (index < 1 || index > spec.boundaries.size()) {
      throw ParseError("endpoint index out of range", idx_start,
                       "1.." + std::to_string(spec.boundaries.size()));
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != '=') {
      throw ParseError("malformed endpoint suffix", pos, "'='");
    }
    ++pos;
    std::size_t value_start = pos;
    while (pos < text.size() && text[pos] != '@') ++pos;
    std::string_view value = trim(text.substr(value_start, pos - value_start));
    if (value.empty()) throw ParseError("missing endpoint value", value_start, "a constant");
    spec.endpoint_values[index - 1] = parse_constant(value, value_start, "endpoint value");
    skip_ws();
  }
  return spec;
}

PiecewiseFunction PiecewiseFunction::from_spec(const PiecewiseSpec& spec) {
  if (spec.boundaries.size() < 2 || spec.segments.size() + 1 != spec.boundaries.size()) {
    throw PreconditionError("piecewise spec needs m segments and m+1 boundaries");
  }
  for (std::size_t i = 1; i < spec.boundaries.size(); ++i) {
    if (!(spec.boundaries[i] > spec.boundaries[i - 1])) {
      throw PreconditionError("piecewise boundaries must be strictly increasing");
    }
  }

  PiecewiseFunction f;
  double lo = spec.boundaries.front();
  double hi = spec.boundaries.back();
  double mid = 0.5 * (lo + hi);
  f.half_period_ = 0.5 * (hi - lo);
  f.boundaries_.reserve(spec.boundaries.size());
  for (double b : spec.boundaries) f.boundaries_.push_back(b - mid);
  // Keep the recentered end boundaries exact.
  f.boundaries_.front() = -f.half_period_;
  f.boundaries_.back() = f.half_period_;
  f.segments_.reserve(spec.segments.size());
  for (const Expr& e : spec.segments) {
    f.segments_.push_back(mid == 0.0 ? e : e.substitute_affine(1.0, mid));
  }
  f.endpoint_values_ = spec.endpoint_values;
  return f;
}

PiecewiseFunction PiecewiseFunction::from_text(std::string_view text) {
  return from_spec(parse_piecewise(text));
}

PiecewiseFunction PiecewiseFunction::from_expr(const Expr& e, double lo, double hi) {
  PiecewiseSpec spec;
  spec.boundaries = {lo, hi};
  spec.segments = {e};
  return from_spec(spec);
}

double PiecewiseFunction::segment_value(std::size_t idx, double x) const {
  return segments_[idx].eval(x);
}

double PiecewiseFunction::boundary_value(std::size_t idx) const {
  auto pinned = endpoint_values_.find(idx);
  if (pinned != endpoint_values_.end()) return pinned->second;
  if (idx == 0 || idx == boundaries_.size() - 1) {
    // The periodic extension identifies the two end boundaries; honor a
    // value pinned on either one.
    auto other = endpoint_values_.find(idx == 0 ? boundaries_.size() - 1 : 0);
    if (other != endpoint_values_.end()) return other->second;
    double left = segments_.back().eval(boundaries_.back());
    double right = segments_.front().eval(boundaries_.front());
    return 0.5 * (left + right);
  }
  double left = segments_[idx - 1].eval(boundaries_[idx]);
  double right = segments_[idx].eval(boundaries_[idx]);
  return 0.5 * (left + right);
}

double PiecewiseFunction::eval_periodic(double x) const {
  const double L = half_period_;
  const double period = 2.0 * L;
  double r = x - period * std::floor((x + L) / period);
  if (r >= L) r -= period;  // guards the x = L - ulp rounding case
  if (r < -L) r = -L;

  auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), r);
  if (it != boundaries_.end() && *it == r) {
    return boundary_value(static_cast<std::size_t>(it - boundaries_.begin()));
  }
  auto seg = std::upper_bound(boundaries_.begin(), boundaries_.end(), r);
  std::size_t idx = static_cast<std::size_t>(seg - boundaries_.begin());
  if (idx == 0) idx = 1;  // r slightly below -L cannot occur; be safe
  return segments_[idx - 1].eval(r);
}

PiecewiseFunction PiecewiseFunction::harmonic(int n) const {
  if (n < 1) throw PreconditionError("harmonic order must be >= 1");
  if (n == 1) return *this;

  const double L = half_period_;
  const std::size_t m = segments_.size();
  PiecewiseFunction out;
  out.half_period_ = L;

  // On [(2j-1)L/n, (2j+1)L/n] the dilation satisfies g(nx) = g(nx - 2Lj)
  // with the argument inside the generator domain; copies at the edges of
  // [-L, L] enter clipped.
  int jmax = n / 2;
  int jmin = -jmax;
  if (n % 2 == 1) {
    jmax = (n - 1) / 2;
    jmin = -jmax;
  }
  for (int j = jmin; j <= jmax; ++j) {
    double clip_lo = std::max(-L, (2.0 * j - 1.0) * L / n);
    double clip_hi = std::min(L, (2.0 * j + 1.0) * L / n);
    if (!(clip_hi > clip_lo)) continue;
    double shift = 2.0 * L * j;
    for (std::size_t i = 0; i < m; ++i) {
      double lo = std::max(clip_lo, (boundaries_[i] + shift) / n);
      double hi = std::min(clip_hi, (boundaries_[i + 1] + shift) / n);
      if (!(hi > lo)) continue;
      out.boundaries_.push_back(lo);
      out.segments_.push_back(segments_[i].substitute_affine(static_cast<double>(n), -shift));
      // Pinned endpoint values ride along when their image is the new
      // segment's left edge.
      auto pinned = endpoint_values_.find(i);
      if (pinned != endpoint_values_.end() && lo == (boundaries_[i] + shift) / n) {
        out.endpoint_values_.emplace(out.boundaries_.size() - 1, pinned->second);
      }
    }
  }
  out.boundaries_.push_back(L);
  out.boundaries_.front() = -L;
  return out;
}

PiecewiseFunction PiecewiseFunction::reflect() const {
  PiecewiseFunction out;
  out.half_period_ = half_period_;
  const std::size_t count = boundaries_.size();
  out.boundaries_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.boundaries_.push_back(-boundaries_[count - 1 - i]);
  out.segments_.reserve(segments_.size());
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    out.segments_.push_back(segments_[segments_.size() - 1 - j].substitute_affine(-1.0, 0.0));
  }
  for (const auto& [idx, v] : endpoint_values_) {
    out.endpoint_values_.emplace(count - 1 - idx, v);
  }
  return out;
}

double PiecewiseFunction::integrate_against(const std::function<double(double)>& weight,
                                            const QuadratureOptions& opts) const {
  double total = 0.0;
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    const Expr& e = segments_[j];
    total += integrate([&](double x) { return e.eval(x) * weight(x); }, boundaries_[j],
                       boundaries_[j + 1], opts);
  }
  return total;
}

double PiecewiseFunction::integrate_product_over(const std::function<double(double)>& weight,
                                                 double lo, double hi,
                                                 const QuadratureOptions& opts) const {
  if (!(hi > lo)) return 0.0;
  const double period = 2.0 * half_period_;
  // Collect every periodic image of a segment boundary inside [lo, hi] so
  // each quadrature piece is smooth.
  std::vector<double> cuts{lo, hi};
  double k0 = std::floor((lo + half_period_) / period) - 1.0;
  double k1 = std::floor((hi + half_period_) / period) + 1.0;
  for (double k = k0; k <= k1; k += 1.0) {
    for (double b : boundaries_) {
      double image = b + k * period;
      if (image > lo && image < hi) cuts.push_back(image);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * (hi - lo);
  std::vector<double> merged;
  merged.reserve(cuts.size());
  for (double c : cuts) {
    if (merged.empty() || c - merged.back() > tol) merged.push_back(c);
  }
  merged.back() = hi;

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    total += integrate([&](double x) { return eval_periodic(x) * weight(x); }, merged[i],
                       merged[i + 1], opts);
  }
  return total;
}

double PiecewiseFunction::mean(const QuadratureOptions& opts) const {
  return integrate_against([](double) { return 1.0; }, opts) / (2.0 * half_period_);
}

ParitySplit PiecewiseFunction::parity_split(const QuadratureOptions& opts) const {
  double m0 = mean(opts);

  std::vector<double> merged;
  merged.reserve(boundaries_.size() * 2);
  for (double b : boundaries_) {
    merged.push_back(b);
    merged.push_back(-b);
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto segment_at = [&](double x) -> const Expr& {
    auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - boundaries_.begin());
    if (idx == 0) idx = 1;
    if (idx > segments_.size()) idx = segments_.size();
    return segments_[idx - 1];
  };

  PiecewiseFunction even;
  PiecewiseFunction odd;
  even.half_period_ = odd.half_period_ = half_period_;
  even.boundaries_ = odd.boundaries_ = merged;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    double t = 0.5 * (merged[i] + merged[i + 1]);
    Expr direct = segment_at(t);
    Expr mirrored = segment_at(-t).substitute_affine(-1.0, 0.0);
    even.segments_.push_back(
        Expr::shifted(Expr::scaled(0.5, Expr::sum(direct, mirrored)), -m0));
    odd.segments_.push_back(Expr::scaled(0.5, Expr::difference(direct, mirrored)));
  }
  return ParitySplit{m0, even, odd};
}

PiecewiseFunction PiecewiseFunction::translate(double delta) const {
  if (delta == 0.0) return *this;
  const double L = half_period_;
  const double period = 2.0 * L;

  struct Piece {
    double lo, hi;
    Expr e;
  };
  std::vector<Piece> pieces;
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    double lo = boundaries_[j] - delta;
    double hi = boundaries_[j + 1] - delta;
    // Wrap points are the images of -L + 2Lk inside (lo, hi).
    std::vector<double> cuts{lo, hi};
    double k = std::ceil((lo + L) / period);
    for (; -L + k * period < hi; k += 1.0) {
      double w = -L + k * period;
      if (w > lo) cuts.push_back(w);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      double shift = period * std::floor((mid + L) / period);
      // Relocated piece value at y equals f(y + shift + delta).
      pieces.push_back({cuts[i] - shift, cuts[i + 1] - shift,
                        segments_[j].substitute_affine(1.0, delta + shift)});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

  PiecewiseFunction out;
  out.half_period_ = L;
  for (const Piece& p : pieces) {
    out.boundaries_.push_back(p.lo);
    out.segments_.push_back(p.e);
  }
  out.boundaries_.push_back(pieces.back().hi);
  out.boundaries_.front() = -L;
  out.boundaries_.back() = L;
  return out;
}

PiecewiseFunction PiecewiseFunction::rescale_half_period(double new_half_period) const {
  if (new_half_period <= 0.0) throw PreconditionError("half-period must be positive");
  double k = half_period_ / new_half_period;
  PiecewiseFunction out;
  out.half_period_ = new_half_period;
  out.boundaries_.reserve(boundaries_.size());
  for (double b : boundaries_) out.boundaries_.push_back(b / k);
  out.boundaries_.front() = -new_half_period;
  out.boundaries_.back() = new_half_period;
  out.segments_.reserve(segments_.size());
  for (const Expr& e : segments_) out.segments_.push_back(e.substitute_affine(k, 0.0));
  out.endpoint_values_ = endpoint_values_;
  return out;
}

PiecewiseFunction PiecewiseFunction::linear_combine(double alpha, const PiecewiseFunction& f,
                                                    double beta, const PiecewiseFunction& g) {
  if (f.half_period_ != g.half_period_) {
    throw PreconditionError("linear_combine needs matching half-periods");
  }
  std::vector<double> merged;
  merged.reserve(f.boundaries_.size() + g.boundaries_.size());
  merged.insert(merged.end(), f.boundaries_.begin(), f.boundaries_.end());
  merged.insert(merged.end(), g.boundaries_.begin(), g.boundaries_.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto segment_at = [](const PiecewiseFunction& h, double x) -> const Expr& {
    auto it = std::upper_bound(h.boundaries_.begin(), h.boundaries_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - h.boundaries_.begin());
    if (idx == 0) idx = 1;
    if (idx > h.segments_.size()) idx = h.segments_.size();
    return h.segments_[idx - 1];
  };

  PiecewiseFunction out;
  out.half_period_ = f.half_period_;
  out.boundaries_ = merged;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    double t = 0.5 * (merged[i] + merged[i + 1]);
    out.segments_.push_back(Expr::sum(Expr::scaled(alpha, segment_at(f, t)),
                                      Expr::scaled(beta, segment_at(g, t))));
  }
  return out;
}

PiecewiseFunction PiecewiseFunction::add_constant(double c) const {
  if (c == 0.0) return *this;
  PiecewiseFunction out;
  out.half_period_ = half_period_;
  out.boundaries_ = boundaries_;
  out.segments_.reserve(segments_.size());
  for (const Expr& e : segments_) out.segments_.push_back(Expr::shifted(e, c));
  for (const auto& [idx, v] : endpoint_values_) out.endpoint_values_.emplace(idx, v + c);
  return out;
}

std::string PiecewiseFunction::to_spec_text() const {
  std::string out = "P[";
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    out += format_double(boundaries_[j]);
    out += " | ";
    out += segments_[j].str();
    out += " | ";
  }
  out += format_double(boundaries_.back());
  out += ']';
  for (const auto& [idx, v] : endpoint_values_) {
    out += " @x" + std::to_string(idx + 1) + "=" + format_double(v);
  }
  return out;
}

}  // namespace nonsin
