#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tribuild {

/// Index of a point of a finite projective plane. Doubles as the index of the
/// generator a_x of the triangle group.
struct PointId {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const PointId&) const = default;
};

/// Index of a line of a finite projective plane.
struct LineId {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const LineId&) const = default;
};

enum class ErrorCode {
  UnsupportedOrder,
  InvalidDifferenceSet,
  IndexOutOfRange,
  EqualLines,
  EqualPoints,
  InvalidPresentation,
  SearchBudgetExceeded,
  BudgetExceeded,
  ParseError,
  ChamberOutsideBall,
  InvalidGallery,
  InadmissibleWall,
  IncompatibleWalls,
  FillContradiction,
  DepthInsufficient,
  BacktrackExhausted,
  NotATransition,
  PreconditionFailed,
  InvalidDiagram,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::InvalidDifferenceSet: return "InvalidDifferenceSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ChamberOutsideBall: return "ChamberOutsideBall";
    case ErrorCode::InvalidGallery: return "InvalidGallery";
    case ErrorCode::InadmissibleWall: return "InadmissibleWall";
    case ErrorCode::IncompatibleWalls: return "IncompatibleWalls";
    case ErrorCode::FillContradiction: return "FillContradiction";
    case ErrorCode::DepthInsufficient: return "DepthInsufficient";
    case ErrorCode::BacktrackExhausted: return "BacktrackExhausted";
    case ErrorCode::NotATransition: return "NotATransition";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// boost-style hash mixing
inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace tribuild

template <>
struct std::hash<tribuild::PointId> {
  std::size_t operator()(tribuild::PointId p) const noexcept {
    return std::hash<std::uint32_t>{}(p.value);
  }
};
