#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efg/bivariate.hpp"
#include "efg/formal_group.hpp"
#include "efg/point_count.hpp"
#include "efg/weierstrass.hpp"
#include "efg/wire.hpp"

namespace efg {

/// b_n = n [T^n] f_log. Throws NonIntegralModel if it is not an integer.
Integer formal_log_coefficient(const TruncatedSeries& f_log, std::size_t n);

struct CongruenceRecord {
  std::int64_t p = 0;
  Integer b_p;
  std::int64_t a_p = 0;
  Integer residue;     // (b_p - a_p) mod p, in [0, p)
  Integer difference;  // b_p - a_p, the literal coefficient gap
  bool pass = false;
};

struct SkippedPrime {
  std::int64_t p = 0;
  std::string reason;
};

struct CongruenceReport {
  std::string curve_id;
  std::vector<CongruenceRecord> records;
  std::vector<SkippedPrime> skipped;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool all_pass() const { return failed == 0; }
};

/// b_p = p [T^p] f_log against a_p for every good prime 3 < p <= p_max.
/// Throws TruncationTooSmall unless order > p_max.
CongruenceReport honda_check(const WeierstrassModel& model, std::int64_t p_max, std::size_t order);
/// Same check against a caller-supplied f_log and a_p table.
CongruenceReport honda_check(const WeierstrassModel& model, const TruncatedSeries& f_log,
                             const ApTable& table, std::int64_t p_max);

struct AsdRecord {
  std::size_t n = 0;
  Integer modulus;  // p^{1 + ord_p(n)}
  Integer residue;  // (b_{np} - a_p b_n + p b_{n/p}) mod modulus
  bool pass = false;
};

struct AsdReport {
  std::string curve_id;
  std::int64_t p = 0;
  std::int64_t a_p = 0;
  std::vector<AsdRecord> records;

  bool all_pass() const;
};

/// b_{np} - a_p b_n + p b_{n/p} = 0 mod p^{1 + ord_p(n)} for all n with
/// np < order (b_{n/p} = 0 when p does not divide n).
AsdReport asd_check(const WeierstrassModel& model, std::int64_t p, std::size_t order);

struct ComparisonRecord {
  std::size_t k = 0;
  Rational genfun;
  std::optional<Rational> eisenstein;
  std::optional<Rational> ratio;  // genfun / eisenstein, both nonzero
};

struct ComparisonReport {
  Rational g2;
  Rational g3;
  std::vector<ComparisonRecord> records;
  std::vector<std::string> notes;

  const ComparisonRecord* find(std::size_t k) const;
};

/// Tabulates both Hurwitz-Bernoulli definitions side by side. Odd entries
/// must vanish for both sources, and both must scale with weight k; a
/// failure of either is reported in `notes` and `structure_ok`.
ComparisonReport bh_comparison(const CurveInvariants& inv, std::size_t max_index);
bool structure_ok(const ComparisonReport& report);

struct Eq10Result {
  bool pass = false;
  std::size_t order = 0;
  std::optional<Bidegree> first_difference;
  Rational geometric;
  Rational exp_log;
};

/// Chord-construction group law against f_exp(f_log(X) + f_log(Y)).
Eq10Result eq10_check(const WeierstrassModel& model, std::size_t order);
Eq10Result eq10_compare(const BivariateSeries& geometric, const BivariateSeries& exp_log);

Json to_json(const CongruenceReport& r);
Json to_json(const AsdReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const Eq10Result& r);

}  // namespace efg
