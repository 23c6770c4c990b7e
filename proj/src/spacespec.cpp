#include "riesz/spacespec.hpp"

#include <fstream>
#include <sstream>

namespace riesz {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string spaced;
  spaced.reserve(line.size());
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == '{' || ch == '}' || ch == ':') {
      spaced.push_back(' ');
      spaced.push_back(ch);
      spaced.push_back(' ');
    } else {
      spaced.push_back(ch);
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Index parse_index(const std::string& t) {
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a point index, got '" + t + "'");
  }
  return static_cast<Index>(std::stoll(t));
}

}  // namespace

SpaceSpec parse_spec_text(const std::string& text) {
  std::istringstream in(text);
  SpaceSpec spec;
  bool have_omega = false;
  bool have_weights = false;
  bool have_partition = false;

  bool in_charge = false;
  std::string charge_name;
  Mat charge_table;
  std::vector<bool> atom_seen;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::vector<std::string> tok = tokens(raw);
    if (tok.empty()) continue;
    try {
      if (in_charge) {
        if (tok[0] == "end") {
          if (tok.size() != 1) throw ParseError("trailing tokens after 'end'");
          for (Index w = 0; w < spec.omega; ++w) {
            if (!atom_seen[static_cast<std::size_t>(w)]) {
              throw ParseError("charge '" + charge_name + "' is missing atom " + std::to_string(w + 1));
            }
          }
          spec.charges.emplace_back(charge_name, charge_table);
          in_charge = false;
        } else if (tok[0] == "atom") {
          if (tok.size() != 3 + static_cast<std::size_t>(spec.omega) || tok[2] != ":") {
            throw ParseError("expected 'atom <k> : <" + std::to_string(spec.omega) + " rationals>'");
          }
          const Index k = parse_index(tok[1]);
          if (k < 1 || k > spec.omega) throw ParseError("atom index out of range");
          if (atom_seen[static_cast<std::size_t>(k - 1)]) {
            throw ParseError("atom " + std::to_string(k) + " given twice");
          }
          atom_seen[static_cast<std::size_t>(k - 1)] = true;
          for (Index i = 0; i < spec.omega; ++i) {
            charge_table(i, k - 1) = parse_rational(tok[3 + static_cast<std::size_t>(i)]);
          }
        } else {
          throw ParseError("expected 'atom' or 'end' inside charge block");
        }
        continue;
      }

      if (tok[0] == "omega") {
        if (have_omega) throw ParseError("omega given twice");
        if (tok.size() != 2) throw ParseError("expected 'omega <n>'");
        spec.omega = parse_index(tok[1]);
        if (spec.omega < 1 || spec.omega > 63) throw ParseError("omega must be in 1..63");
        have_omega = true;
      } else if (tok[0] == "degenerate") {
        if (tok.size() != 1) throw ParseError("expected bare 'degenerate'");
        spec.degenerate = true;
      } else if (tok[0] == "weights") {
        if (!have_omega) throw ParseError("weights before omega");
        if (have_weights) throw ParseError("weights given twice");
        if (tok.size() != 1 + static_cast<std::size_t>(spec.omega)) {
          throw ParseError("expected " + std::to_string(spec.omega) + " weights");
        }
        spec.weights = zero_vec(spec.omega);
        for (Index i = 0; i < spec.omega; ++i) {
          spec.weights(i) = parse_rational(tok[1 + static_cast<std::size_t>(i)]);
        }
        have_weights = true;
      } else if (tok[0] == "partition") {
        if (!have_omega) throw ParseError("partition before omega");
        if (have_partition) throw ParseError("partition given twice");
        std::size_t pos = 1;
        while (pos < tok.size()) {
          if (tok[pos] != "{") throw ParseError("expected '{' starting a block");
          ++pos;
          std::uint64_t bits = 0;
          while (pos < tok.size() && tok[pos] != "}") {
            const Index k = parse_index(tok[pos]);
            if (k < 1 || k > spec.omega) throw ParseError("partition index out of range");
            bits |= 1ull << (k - 1);
            ++pos;
          }
          if (pos == tok.size()) throw ParseError("unterminated block");
          ++pos;
          spec.partition.blocks.push_back(component_from_bits(spec.omega, bits));
        }
        if (spec.partition.blocks.empty()) throw ParseError("partition needs at least one block");
        have_partition = true;
      } else if (tok[0] == "charge") {
        if (!have_omega) throw ParseError("charge before omega");
        if (tok.size() != 2) throw ParseError("expected 'charge <name>'");
        charge_name = tok[1];
        if (has_charge(spec, charge_name)) throw ParseError("charge '" + charge_name + "' given twice");
        charge_table = Mat::Zero(spec.omega, spec.omega);
        atom_seen.assign(static_cast<std::size_t>(spec.omega), false);
        in_charge = true;
      } else {
        throw ParseError("unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError& e) {
      if (e.line > 0) throw;
      throw ParseError(e.what(), lineno);
    }
  }
  if (in_charge) throw ParseError("charge '" + charge_name + "' not closed with 'end'", lineno);
  if (!have_omega) throw ParseError("missing omega");
  if (!have_weights) throw ParseError("missing weights");
  if (!have_partition) throw ParseError("missing partition");

  if (!is_nonneg(spec.weights)) throw ValidationError("weights must be nonnegative");
  if (!spec.degenerate) {
    for (Index i = 0; i < spec.omega; ++i) {
      if (spec.weights(i) == 0) {
        throw ValidationError("zero weight at point " + std::to_string(i + 1) +
                              " requires the degenerate flag");
      }
    }
  }
  validate_partition(spec.partition, spec.omega);
  if (!spec.degenerate) {
    // Forces block-constancy of every named charge's atom values.
    for (const auto& named : spec.charges) charge_from_spec(spec, named.first);
  }
  return spec;
}

SpaceSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

CondExp cond_exp_from_spec(const SpaceSpec& spec) {
  return CondExp(make_space(spec.weights), spec.partition);
}

DegenerateModel degenerate_from_spec(const SpaceSpec& spec) {
  return DegenerateModel{make_space(spec.weights), spec.partition};
}

bool has_charge(const SpaceSpec& spec, const std::string& name) {
  for (const auto& named : spec.charges) {
    if (named.first == name) return true;
  }
  return false;
}

Charge charge_from_spec(const SpaceSpec& spec, const std::string& name) {
  for (const auto& named : spec.charges) {
    if (named.first == name) return Charge(cond_exp_from_spec(spec), named.second);
  }
  throw ValidationError("no charge named '" + name + "'");
}

std::string reference_spec_text() {
  return
      "# Three points, two blocks. tmu is the operator's own charge, mixed has\n"
      "# both a continuous and a singular part, offblock sends mass across\n"
      "# blocks and is the standing counterexample.\n"
      "omega 3\n"
      "weights 1 1 2\n"
      "partition {1 2} {3}\n"
      "\n"
      "charge tmu\n"
      "  atom 1 : 1/2 1/2 0\n"
      "  atom 2 : 1/2 1/2 0\n"
      "  atom 3 : 0 0 1\n"
      "end\n"
      "\n"
      "charge mixed\n"
      "  atom 1 : 1 1 1\n"
      "  atom 2 : 0 0 3\n"
      "  atom 3 : 2 2 1\n"
      "end\n"
      "\n"
      "charge offblock\n"
      "  atom 1 : 0 0 1\n"
      "  atom 2 : 0 0 0\n"
      "  atom 3 : 0 0 0\n"
      "end\n";
}

SpaceSpec reference_spec() { return parse_spec_text(reference_spec_text()); }

}  // namespace riesz
