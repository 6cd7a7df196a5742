#include "core/spectral.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "core/closure.hpp"
#include "core/convexity.hpp"
#include "core/error.hpp"

namespace tropica {

namespace {

void require_spectral_semiring(const Matrix& a) {
  if (a.semiring().tag() != SemiringTag::MaxPlus && a.semiring().tag() != SemiringTag::MaxTimes)
    fail(Errc::UnsupportedSemiring,
         "cycle means are defined over max-plus and max-times, got " +
             std::string(a.semiring().name()));
  if (!a.square()) fail(Errc::InvalidArgument, "cycle mean needs a square matrix");
}

std::optional<Value> try_pow(const Value& v, std::size_t e) {
  try {
    Value r = Value::integer(1);
    for (std::size_t i = 0; i < e; ++i) r = Value::product(r, v);
    return r;
  } catch (const Error& err) {
    if (err.code() == Errc::Overflow) return std::nullopt;
    throw;
  }
}

// cycle mean candidate: ratio^(1/len) in ⊗ terms
struct MeanCand {
  Value ratio;
  std::size_t len;
};

int compare_mean(const MeanCand& a, const MeanCand& b, SemiringTag tag) {
  if (tag == SemiringTag::MaxPlus) {
    Value lhs = Value::product(a.ratio, Value::integer(static_cast<std::int64_t>(b.len)));
    Value rhs = Value::product(b.ratio, Value::integer(static_cast<std::int64_t>(a.len)));
    return Value::compare(lhs, rhs);
  }
  if (!a.ratio.is_real() && !b.ratio.is_real()) {
    auto lhs = try_pow(a.ratio, b.len);
    auto rhs = try_pow(b.ratio, a.len);
    if (lhs && rhs) return Value::compare(*lhs, *rhs);
  }
  long double la = std::log(static_cast<long double>(a.ratio.to_double())) / a.len;
  long double lb = std::log(static_cast<long double>(b.ratio.to_double())) / b.len;
  return la < lb ? -1 : (la > lb ? 1 : 0);
}

std::optional<std::int64_t> integer_root(std::int64_t v, std::size_t k) {
  if (v < 0) return std::nullopt;
  std::int64_t guess = static_cast<std::int64_t>(std::llround(std::pow(double(v), 1.0 / k)));
  for (std::int64_t c = guess > 2 ? guess - 2 : 0; c <= guess + 2; ++c) {
    auto p = try_pow(Value::integer(c), k);
    if (p && *p == Value::integer(v)) return c;
  }
  return std::nullopt;
}

Value mean_value(const MeanCand& m, SemiringTag tag) {
  if (tag == SemiringTag::MaxPlus)
    return Value::quotient(m.ratio, Value::integer(static_cast<std::int64_t>(m.len)));
  if (!m.ratio.is_real()) {
    auto num = integer_root(m.ratio.num(), m.len);
    auto den = integer_root(m.ratio.den(), m.len);
    if (num && den) return Value::ratio(*num, *den);
  }
  return Value::real(std::pow(m.ratio.to_double(), 1.0 / double(m.len)));
}

}  // namespace

Value max_cycle_mean(const Matrix& a) {
  require_spectral_semiring(a);
  const Semiring& sr = a.semiring();
  const Value z = sr.zero();
  const std::size_t n = a.rows();

  // D[k][v]: best ⊗-weight of a k-edge walk ending at v, any start node
  std::vector<std::vector<Value>> d(n + 1, std::vector<Value>(n, z));
  for (std::size_t v = 0; v < n; ++v) d[0][v] = sr.one();
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t v = 0; v < n; ++v) {
      Value best = z;
      for (std::size_t u = 0; u < n; ++u)
        best = sr.add(best, sr.mul(d[k - 1][u], a.at(u, v)));
      d[k][v] = best;
    }

  std::optional<MeanCand> lambda;
  for (std::size_t v = 0; v < n; ++v) {
    if (d[n][v] == z) continue;
    std::optional<MeanCand> vmin;
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k][v] == z) continue;
      MeanCand cand{sr.divide(d[n][v], d[k][v]), n - k};
      if (!vmin || compare_mean(cand, *vmin, sr.tag()) < 0) vmin = cand;
    }
    if (vmin && (!lambda || compare_mean(*vmin, *lambda, sr.tag()) > 0)) lambda = vmin;
  }
  if (!lambda) fail(Errc::NoFiniteCycle, "every cycle has weight 0̄");
  return mean_value(*lambda, sr.tag());
}

SpectralResult eig_space(const Matrix& a) {
  Value lambda = max_cycle_mean(a);
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rows();

  Matrix norm(sr, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      norm.at(i, j) = a.at(i, j) == sr.zero() ? sr.zero() : sr.divide(a.at(i, j), lambda);

  Matrix star = closure_gauss(norm);
  Matrix plus = mat_mul(norm, star);

  SpectralResult out{lambda, {}, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (plus.at(i, i) == sr.one()) out.critical.push_back(i);

  std::vector<Vector> seen;
  for (std::size_t i : out.critical) {
    Vector col = star.column(i);
    Vector unit = normalize_point(col);
    bool dup = false;
    for (const Vector& u : seen)
      if (u == unit) {
        dup = true;
        break;
      }
    if (!dup) {
      seen.push_back(unit);
      out.basis.push_back(col);
    }
  }
  return out;
}

}  // namespace tropica
