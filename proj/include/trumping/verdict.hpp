#ifndef TRUMPING_VERDICT_HPP
#define TRUMPING_VERDICT_HPP

#include <optional>
#include <string>

namespace trumping {

enum class Outcome { Holds, Fails, Inconclusive };

/// Three-valued decision shared by all relation checks.
struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;                   // human-readable explanation
  std::optional<double> witness_r;      // parameter where the relation fails
  std::optional<double> min_gap;        // smallest (normalized) margin seen
  std::optional<double> argmin_r;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  bool inconclusive() const { return outcome == Outcome::Inconclusive; }
};

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    default: return "inconclusive";
  }
}

}  // namespace trumping

#endif
