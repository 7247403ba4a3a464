#pragma once

#include <stdexcept>
#include <string>

namespace expframe {

enum class Errc {
  empty_spectrum,
  bad_interval,
  grid_too_coarse,
  index_out_of_range,
  not_hermitian,
  singular_operator,
  delta_out_of_range,
  no_certified_partition,
  problem_too_large,
  truncation_too_severe,
  invalid_argument,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_spectrum: return "EmptySpectrum";
    case Errc::bad_interval: return "BadInterval";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::singular_operator: return "SingularOperator";
    case Errc::delta_out_of_range: return "DeltaOutOfRange";
    case Errc::no_certified_partition: return "NoCertifiedPartition";
    case Errc::problem_too_large: return "ProblemTooLarge";
    case Errc::truncation_too_severe: return "TruncationTooSevere";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace expframe
