#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riesz/charge.hpp"

namespace riesz {

// Parsed model description. Rationals stay exact; floats never appear in
// input files. Charges are kept as raw atom tables so a description can
// carry deliberately broken examples next to good ones.
struct SpaceSpec {
  Index omega = 0;
  Vec weights;
  Partition partition;
  bool degenerate = false;  // allows zero weights
  std::vector<std::pair<std::string, Mat>> charges;  // name -> atom columns
};

// Line-oriented format, '#' starts a comment:
//   omega 3
//   weights 1 1 2
//   partition {1 2} {3}
//   charge name
//     atom 1 : 1/2 1/2 0
//     ...one line per atom...
//   end
// An optional bare `degenerate` line before `weights` permits zeros.
SpaceSpec parse_spec_text(const std::string& text);
SpaceSpec parse_spec(const std::string& path);

CondExp cond_exp_from_spec(const SpaceSpec& spec);
DegenerateModel degenerate_from_spec(const SpaceSpec& spec);
bool has_charge(const SpaceSpec& spec, const std::string& name);
Charge charge_from_spec(const SpaceSpec& spec, const std::string& name);

// The instance used by the demos and as the fixed case of every suite:
// three points, weights 1, 1, 2, blocks {1 2} and {3}, one absolutely
// continuous charge (tmu, the operator's own charge) and one that is not.
std::string reference_spec_text();
SpaceSpec reference_spec();

}  // namespace riesz
