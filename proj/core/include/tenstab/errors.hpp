#pragma once

#include <stdexcept>
#include <string>

namespace tenstab {

enum class Errc {
  UnsupportedSpace,
  DegreeMismatch,
  RankOrder,
  EmptyPattern,
  FormZero,
  ScaleLimit,
  NegativeWeightEntry,
  Degenerate,
  NotDegenerate,
  NotZeroWeight,
  NotSemistable,
  NotSupported,
  ZeroDenominator,
  InvalidDatum,
  RankMismatch,
  ParseError,
  Invariant,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedSpace: return "UnsupportedSpace";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::RankOrder: return "RankOrder";
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::FormZero: return "FormZero";
    case Errc::ScaleLimit: return "ScaleLimit";
    case Errc::NegativeWeightEntry: return "NegativeWeightEntry";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::NotZeroWeight: return "NotZeroWeight";
    case Errc::NotSemistable: return "NotSemistable";
    case Errc::NotSupported: return "NotSupported";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::InvalidDatum: return "InvalidDatum";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::Invariant: return "Invariant";
  }
  return "Error";
}

}  // namespace tenstab
