#pragma once

#include <stdexcept>
#include <string>

namespace depthsup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct DegenerateProjection : Error { using Error::Error; };
struct NonPositiveScale : Error { using Error::Error; };

// nmg loss
struct DegenerateScale : Error { using Error::Error; };
struct InsufficientValidPixels : Error { using Error::Error; };

// arap loss
struct EmptySupport : Error { using Error::Error; };
struct DegenerateCluster : Error { using Error::Error; };

// calibration
struct InsufficientMatches : Error { using Error::Error; };
struct DegenerateConfiguration : Error { using Error::Error; };
struct NoConsensus : Error { using Error::Error; };
struct SingularNormalEquations : Error { using Error::Error; };
struct NonFiniteResidual : Error { using Error::Error; };

// metrics
struct EmptyEvaluationSet : Error { using Error::Error; };
struct ZeroMeanGT : Error { using Error::Error; };
struct NonPositiveMedian : Error { using Error::Error; };

// shared
struct ShapeMismatch : Error { using Error::Error; };

// file formats
struct IoError : Error { using Error::Error; };
struct BadMagic : IoError { using IoError::IoError; };
struct BadHeader : IoError { using IoError::IoError; };
struct BadImage : IoError { using IoError::IoError; };
struct TruncatedFile : IoError { using IoError::IoError; };
struct DimensionOverflow : IoError { using IoError::IoError; };

}  // namespace depthsup
