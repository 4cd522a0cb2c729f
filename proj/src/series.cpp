#include "efg/series.hpp"

#include <algorithm>

#include "efg/errors.hpp"

namespace efg {

namespace {

// Below this order thread start-up costs more than the product itself.
constexpr std::size_t kParallelMulOrder = 48;

Rational cauchy_term(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
  Rational acc;
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k].is_zero() || b[n - k].is_zero()) continue;
    acc += a[k] * b[n - k];
  }
  return acc;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<Rational> coeffs)
    : TruncatedSeries(order, std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
  return monomial(order, 0, c);
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) { return monomial(order, 1); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t degree, const Rational& c) {
  TruncatedSeries s(order);
  if (degree < order) s.coeffs_[degree] = c;
  return s;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (!coeffs_[n].is_zero()) return n;
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.order(); ++n) r[n] = a[n] + b[n];
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.order(); ++n) r[n] = a[n] - b[n];
  return r;
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t n = 0; n < r.order(); ++n) r[n] = -a[n];
  return r;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries r(a.order());
  for (std::size_t n = 0; n < r.order(); ++n) r[n] = a[n] * c;
  return r;
}

TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.order(); ++n) r[n] = cauchy_term(a, b, n);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  if (order < kParallelMulOrder) return series_mul_serial(a, b);
  TruncatedSeries r(order);
  const auto n_max = static_cast<long>(order);
#pragma omp parallel for schedule(dynamic, 4)
  for (long n = 0; n < n_max; ++n) r[n] = cauchy_term(a, b, static_cast<std::size_t>(n));
  return r;
}

TruncatedSeries series_recip(const TruncatedSeries& a) {
  if (a.order() == 0) return a;
  if (a[0].is_zero()) throw ZeroConstantTerm("series_recip needs a nonzero constant term");
  TruncatedSeries b(a.order());
  const Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (std::size_t n = 1; n < a.order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!a[k].is_zero()) acc += a[k] * b[n - k];
    b[n] = -acc * inv0;
  }
  return b;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, series_recip(b));
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g.order() > 0 && !g[0].is_zero())
    throw NonzeroInnerConstant("series_compose needs g(0) = 0");
  const std::size_t order = std::min(f.order(), g.order());
  const TruncatedSeries inner = g.truncated(order);
  TruncatedSeries acc(order);
  for (std::size_t k = order; k-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += f[k];
  }
  return acc;
}

TruncatedSeries series_revert(const TruncatedSeries& f) {
  if (f.order() < 2 || !f[0].is_zero() || f[1].is_zero())
    throw NotReversible("series_revert needs f(0) = 0 and f'(0) != 0");
  const std::size_t order = f.order();
  const Rational inv1 = Rational(1) / f[1];
  // powers[k][n] = [T^n] g^k; entry n of g^k (k >= 2) only involves g_1 .. g_{n-1}.
  std::vector<std::vector<Rational>> powers(order, std::vector<Rational>(order));
  TruncatedSeries g(order);
  for (std::size_t n = 1; n < order; ++n) {
    Rational rhs = n == 1 ? Rational(1) : Rational(0);
    for (std::size_t k = 2; k <= n; ++k) {
      Rational p;
      for (std::size_t j = 1; j + k - 1 <= n; ++j)
        if (!g[j].is_zero() && !powers[k - 1][n - j].is_zero()) p += g[j] * powers[k - 1][n - j];
      powers[k][n] = p;
      if (!f[k].is_zero()) rhs -= f[k] * p;
    }
    g[n] = rhs * inv1;
    powers[1][n] = g[n];
  }
  return g;
}

TruncatedSeries series_diff(const TruncatedSeries& f) {
  if (f.order() == 0) return f;
  TruncatedSeries r(f.order() - 1);
  for (std::size_t n = 1; n < f.order(); ++n) r[n - 1] = f[n] * Rational(static_cast<long>(n));
  return r;
}

TruncatedSeries series_int(const TruncatedSeries& f) {
  TruncatedSeries r(f.order() + 1);
  for (std::size_t n = 0; n < f.order(); ++n) r[n + 1] = f[n] / Rational(static_cast<long>(n + 1));
  return r;
}

TruncatedSeries series_exp(const TruncatedSeries& h) {
  if (h.order() == 0) return h;
  if (!h[0].is_zero()) throw NonzeroInnerConstant("series_exp needs h(0) = 0");
  // e' = h' e  =>  n e_n = sum_{k=1}^n k h_k e_{n-k}
  TruncatedSeries e(h.order());
  e[0] = 1;
  for (std::size_t n = 1; n < h.order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!h[k].is_zero()) acc += Rational(static_cast<long>(k)) * h[k] * e[n - k];
    e[n] = acc / Rational(static_cast<long>(n));
  }
  return e;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a.order() == 0) return a;
  if (a[0] != Rational(1)) throw ZeroConstantTerm("series_log needs a(0) = 1");
  return series_int(series_div(series_diff(a), a.truncated(a.order() - 1)));
}

TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k) {
  TruncatedSeries r(a.order());
  for (std::size_t n = k; n < a.order(); ++n) r[n] = a[n - k];
  return r;
}

}  // namespace efg
