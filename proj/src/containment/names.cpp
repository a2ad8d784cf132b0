#include "idealis/containment/verdict.hpp"

namespace idealis {

FatPointStrategy parse_strategy(std::string_view text) {
  if (text == "intersection") return FatPointStrategy::Intersection;
  if (text == "interpolation") return FatPointStrategy::Interpolation;
  throw ParseError("unknown strategy '" + std::string(text) + "' (expected intersection or interpolation)");
}

std::string strategy_name(FatPointStrategy s) {
  return s == FatPointStrategy::Intersection ? "intersection" : "interpolation";
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Undecided: return "undecided";
  }
  return "undecided";
}

}  // namespace idealis
