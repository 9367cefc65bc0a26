// metrics.hpp -- TP/FP/FN classification of a debloated inventory against a
// ground truth, and the soundness / precision arithmetic behind the report
// tables. All percentages round half-up to whole points.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deblometer/construct.hpp"
#include "deblometer/ground_truth.hpp"
#include "deblometer/inventory.hpp"

namespace deblometer {

class LevelAbsentError : public std::runtime_error {
public:
  explicit LevelAbsentError(Level level)
      : std::runtime_error(std::string("level ") + level_name(level) +
                           " is marked absent in the ground truth") {}
};

struct Counts {
  u8 tp = 0;               // required constructs retained
  u8 fp = 0;               // bloated constructs retained
  u8 fn = 0;               // required constructs missing
  u8 bloated_removed = 0;  // bloated constructs removed
  u8 unknown_retained = 0; // retained refs outside the ground-truth universe

  bool operator==(const Counts&) const = default;

  u8 required_total() const { return tp + fn; }
  u8 bloated_total() const { return fp + bloated_removed; }

  Counts& operator+=(const Counts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    bloated_removed += other.bloated_removed;
    unknown_retained += other.unknown_retained;
    return *this;
  }
};

/// Exact score component: numerator/denominator in [0,1].
struct Rational {
  u8 num = 0;
  u8 den = 1;
  bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Whole-point percentage, rounded half-up, in exact integer arithmetic.
inline unsigned percent_half_up(const Rational& r) {
  return static_cast<unsigned>((200 * r.num + r.den) / (2 * r.den));
}

/// Soundness TP/(TP+FN); N/A when there are no required constructs.
inline std::optional<Rational> soundness(const Counts& c) {
  if (c.tp + c.fn == 0) return std::nullopt;
  return Rational{c.tp, c.tp + c.fn};
}

/// Precision TP/(TP+FP); with nothing retained it is N/A when nothing was
/// required either, and 0 when required constructs existed but none were
/// kept.
inline std::optional<Rational> precision(const Counts& c) {
  if (c.tp + c.fp == 0) {
    if (c.fn == 0) return std::nullopt;
    return Rational{0, 1};
  }
  return Rational{c.tp, c.tp + c.fp};
}

struct Score {
  std::optional<Rational> soundness;
  std::optional<Rational> precision;
  bool operator==(const Score&) const = default;
};

inline Score score_of(const Counts& c) {
  return Score{soundness(c), precision(c)};
}

/// Set-theoretic classification of one level: kept = the debloated JAR's
/// inventory refs at that level.
inline Counts classify(const GroundTruth& gt, const Inventory& debloated,
                       Level level) {
  const LevelTruth& truth = gt.at(level);
  if (truth.absent) throw LevelAbsentError(level);
  const std::set<ConstructRef>& kept = debloated.at(level);
  Counts c;
  for (const auto& ref : truth.required)
    kept.count(ref) ? ++c.tp : ++c.fn;
  for (const auto& ref : truth.bloated)
    kept.count(ref) ? ++c.fp : ++c.bloated_removed;
  for (const auto& ref : kept)
    if (!truth.required.count(ref) && !truth.bloated.count(ref))
      ++c.unknown_retained;
  return c;
}

/// Component-wise sum over the test cases of one (feature, level) group.
inline Counts aggregate_counts(const std::vector<Counts>& per_case) {
  Counts total;
  for (const auto& c : per_case) total += c;
  return total;
}

/// One Table-row cell group: R "tp/|required|", S, B "removed/|bloated|", P.
struct ReportRow {
  std::string feature;
  Level level = Level::Class;
  Counts counts;

  bool operator==(const ReportRow&) const = default;

  Rational required_pair() const {
    return Rational{counts.tp, counts.required_total()};
  }
  Rational bloated_pair() const {
    return Rational{counts.bloated_removed, counts.bloated_total()};
  }
};

inline ReportRow build_report_row(std::string feature, Level level,
                                  const Counts& counts) {
  return ReportRow{std::move(feature), level, counts};
}

}  // namespace deblometer
