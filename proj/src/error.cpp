#include "rsemi/error.hpp"

#include <sstream>

namespace rsemi {

  std::string format_witness(std::vector<std::uint32_t> const& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i == 0 ? "" : ",") << w[i];
    }
    os << ')';
    return os.str();
  }

  AxiomViolation::AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness)
      : Error("identity " + axiom + " fails at " + format_witness(witness)),
        _axiom(std::move(axiom)),
        _witness(std::move(witness)) {}

  NotAMorphism::NotAMorphism(std::string operation, std::vector<std::uint32_t> witness)
      : Error("map does not preserve " + operation + " at " + format_witness(witness)),
        _operation(std::move(operation)),
        _witness(std::move(witness)) {}

  NotInverse::NotInverse(std::string reason, std::vector<std::uint32_t> witness)
      : Error("not an inverse semigroup: " + reason + " at " + format_witness(witness)),
        _witness(std::move(witness)) {}

  PMViolation::PMViolation(std::string condition, std::vector<std::uint32_t> witness)
      : Error(condition + " fails at " + format_witness(witness)),
        _condition(std::move(condition)),
        _witness(std::move(witness)) {}

  ParseError::ParseError(std::string const& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

}  // namespace rsemi
