#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class errc {
  empty_input,
  gcd_not_one,
  edim_too_large,
  value_too_large,
  modulus_not_in_semigroup,
  degree_overflow,
  cancellation_ambiguity,
  not_symmetric,
  wrong_edim,
  overflow,
  domain_error,
  lemma1_violation,
  bad_edim,
  not_in_base,
  is_generator,
  gcd_violation,
  edim_collapse,
  wrong_kind,
  inner_is_ci,
  file_not_found,
  no_candidates_found,
  io_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::edim_too_large: return "EdimTooLarge";
    case errc::value_too_large: return "ValueTooLarge";
    case errc::modulus_not_in_semigroup: return "ModulusNotInSemigroup";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::cancellation_ambiguity: return "CancellationAmbiguity";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::wrong_edim: return "WrongEdim";
    case errc::overflow: return "Overflow";
    case errc::domain_error: return "DomainError";
    case errc::lemma1_violation: return "Lemma1Violation";
    case errc::bad_edim: return "BadEdim";
    case errc::not_in_base: return "NotInBase";
    case errc::is_generator: return "IsGenerator";
    case errc::gcd_violation: return "GcdViolation";
    case errc::edim_collapse: return "EdimCollapse";
    case errc::wrong_kind: return "WrongKind";
    case errc::inner_is_ci: return "InnerIsCI";
    case errc::file_not_found: return "FileNotFound";
    case errc::no_candidates_found: return "NoCandidatesFound";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

/// Domain error raised by every numsg operation. The code is stable and is
/// what the CLI prints as the diagnostic kind.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace numsg
