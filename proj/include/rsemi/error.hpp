#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsemi {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A defining identity fails; `witness` holds the first failing tuple in
  /// lexicographic index order.
  class AxiomViolation : public Error {
   public:
    AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness);

    std::string const& axiom() const noexcept { return _axiom; }
    std::vector<std::uint32_t> const& witness() const noexcept { return _witness; }

   private:
    std::string _axiom;
    std::vector<std::uint32_t> _witness;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  /// Two independent computations of the same object disagree. This is a bug
  /// signal and never expected in practice.
  class OracleMismatch : public Error {
   public:
    using Error::Error;
  };

  class SizeLimit : public Error {
   public:
    using Error::Error;
  };

  class NotAMorphism : public Error {
   public:
    NotAMorphism(std::string operation, std::vector<std::uint32_t> witness);

    std::string const& operation() const noexcept { return _operation; }
    std::vector<std::uint32_t> const& witness() const noexcept { return _witness; }

   private:
    std::string _operation;
    std::vector<std::uint32_t> _witness;
  };

  class NotInverse : public Error {
   public:
    NotInverse(std::string reason, std::vector<std::uint32_t> witness);
    std::vector<std::uint32_t> const& witness() const noexcept { return _witness; }

   private:
    std::vector<std::uint32_t> _witness;
  };

  /// A premorphism condition (PM1, PM2 or PM3) fails.
  class PMViolation : public Error {
   public:
    PMViolation(std::string condition, std::vector<std::uint32_t> witness);

    std::string const& condition() const noexcept { return _condition; }
    std::vector<std::uint32_t> const& witness() const noexcept { return _witness; }

   private:
    std::string _condition;
    std::vector<std::uint32_t> _witness;
  };

  /// A proved equivalence between computed flags fails on a concrete instance.
  class EquivalenceViolation : public Error {
   public:
    using Error::Error;
  };

  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  class NotSemilatticeMorphism : public Error {
   public:
    using Error::Error;
  };

  class UniversalityFailure : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line);
    std::size_t line() const noexcept { return _line; }

   private:
    std::size_t _line;
  };

  std::string format_witness(std::vector<std::uint32_t> const& w);

}  // namespace rsemi
