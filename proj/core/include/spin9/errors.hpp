#pragma once

#include <stdexcept>
#include <string>

namespace spin9 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimMismatch : Error { using Error::Error; };
struct GradeMismatch : Error { using Error::Error; };
struct NotSkew : Error { using Error::Error; };
struct OddSubset : Error { using Error::Error; };
struct OddCoefficientRequested : Error { using Error::Error; };
struct MixedShapes : Error { using Error::Error; };
struct NonImaginaryInput : Error { using Error::Error; };
struct BadIndexSet : Error { using Error::Error; };
struct Spin7HasNoInvolutions : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotOnSphere : Error { using Error::Error; };
struct Divergent : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };
struct UnclassifiableMonomial : Error { using Error::Error; };

}  // namespace spin9
