#include "efg/bivariate.hpp"

#include <algorithm>

#include "efg/errors.hpp"

namespace efg {

BivariateSeries BivariateSeries::constant(std::size_t order, const Rational& c) {
  BivariateSeries s(order);
  s.set(0, 0, c);
  return s;
}

BivariateSeries BivariateSeries::x(std::size_t order) {
  BivariateSeries s(order);
  s.set(1, 0, 1);
  return s;
}

BivariateSeries BivariateSeries::y(std::size_t order) {
  BivariateSeries s(order);
  s.set(0, 1, 1);
  return s;
}

BivariateSeries BivariateSeries::from_x(const TruncatedSeries& f, std::size_t order) {
  BivariateSeries s(std::min(order, f.order()));
  for (std::size_t n = 0; n < s.order(); ++n) s.set(n, 0, f[n]);
  return s;
}

BivariateSeries BivariateSeries::from_y(const TruncatedSeries& f, std::size_t order) {
  BivariateSeries s(std::min(order, f.order()));
  for (std::size_t n = 0; n < s.order(); ++n) s.set(0, n, f[n]);
  return s;
}

Rational BivariateSeries::coeff(std::size_t i, std::size_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational() : it->second;
}

void BivariateSeries::set(std::size_t i, std::size_t j, const Rational& c) {
  if (i + j >= order_) return;
  if (c.is_zero())
    terms_.erase({i, j});
  else
    terms_[{i, j}] = c;
}

void BivariateSeries::add_to(std::size_t i, std::size_t j, const Rational& c) {
  if (i + j >= order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivariateSeries BivariateSeries::truncated(std::size_t order) const {
  BivariateSeries r(order);
  for (const auto& [k, c] : terms_) r.set(k.first, k.second, c);
  return r;
}

BivariateSeries bivar_add(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a.truncated(std::min(a.order(), b.order()));
  for (const auto& [k, c] : b.terms()) r.add_to(k.first, k.second, c);
  return r;
}

BivariateSeries bivar_sub(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r = a.truncated(std::min(a.order(), b.order()));
  for (const auto& [k, c] : b.terms()) r.add_to(k.first, k.second, -c);
  return r;
}

BivariateSeries bivar_scale(const BivariateSeries& a, const Rational& c) {
  BivariateSeries r(a.order());
  for (const auto& [k, v] : a.terms()) r.set(k.first, k.second, v * c);
  return r;
}

BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(std::min(a.order(), b.order()));
  for (const auto& [ka, ca] : a.terms()) {
    const std::size_t da = ka.first + ka.second;
    if (da >= r.order()) continue;
    for (const auto& [kb, cb] : b.terms()) {
      if (da + kb.first + kb.second >= r.order()) continue;
      r.add_to(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

BivariateSeries bivar_compose_outer(const TruncatedSeries& f, const BivariateSeries& g) {
  if (!g.coeff(0, 0).is_zero())
    throw NonzeroInnerConstant("bivar_compose_outer needs g(0, 0) = 0");
  const std::size_t order = std::min(f.order(), g.order());
  const BivariateSeries inner = g.truncated(order);
  BivariateSeries acc(order);
  for (std::size_t k = order; k-- > 0;) {
    acc = bivar_mul(acc, inner);
    acc.add_to(0, 0, f[k]);
  }
  return acc;
}

BivariateSeries bivar_recip(const BivariateSeries& a) {
  const Rational c = a.coeff(0, 0);
  if (c.is_zero()) throw ZeroConstantTerm("bivar_recip needs a nonzero constant term");
  // 1/(c + h) = r(h) with r(T) = 1/(c + T)
  BivariateSeries h = a;
  h.set(0, 0, 0);
  auto r = series_recip(TruncatedSeries(a.order(), {c, Rational(1)}));
  return bivar_compose_outer(r, h);
}

BivariateSeries bivar_swap(const BivariateSeries& a) {
  BivariateSeries r(a.order());
  for (const auto& [k, c] : a.terms()) r.set(k.second, k.first, c);
  return r;
}

TruncatedSeries bivar_substitute(const BivariateSeries& f, const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  if ((a.order() > 0 && !a[0].is_zero()) || (b.order() > 0 && !b[0].is_zero()))
    throw NonzeroInnerConstant("bivar_substitute needs a(0) = b(0) = 0");
  const std::size_t order = std::min({f.order(), a.order(), b.order()});
  std::vector<TruncatedSeries> pa{TruncatedSeries::constant(order, 1)};
  std::vector<TruncatedSeries> pb{TruncatedSeries::constant(order, 1)};
  for (std::size_t k = 1; k < order; ++k) {
    pa.push_back(series_mul(pa.back(), a.truncated(order)));
    pb.push_back(series_mul(pb.back(), b.truncated(order)));
  }
  TruncatedSeries r(order);
  for (const auto& [k, c] : f.terms()) {
    if (k.first + k.second >= order) continue;
    r = series_add(r, series_scale(series_mul(pa[k.first], pb[k.second]), c));
  }
  return r;
}

std::optional<Bidegree> first_difference(const BivariateSeries& a, const BivariateSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const BivariateSeries diff = bivar_sub(a.truncated(order), b.truncated(order));
  if (diff.is_zero()) return std::nullopt;
  // lowest total degree first, then by power of X
  auto graded = [](const auto& l, const auto& r) {
    const auto& [li, lj] = l.first;
    const auto& [ri, rj] = r.first;
    return std::pair(li + lj, li) < std::pair(ri + rj, ri);
  };
  return std::min_element(diff.terms().begin(), diff.terms().end(), graded)->first;
}

}  // namespace efg
