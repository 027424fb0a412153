// Copyright 2026 The Tropicon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROPICON_ERRORS_HPP_
#define TROPICON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tropicon {

// Base class for every contract violation raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands (or aggregate members) belong to different semifields.
struct KindMismatch : Error {
  using Error::Error;
};

// Vector/set dimensions do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// inv() applied to Bottom or Top; the caller must branch on the
// degenerate case instead.
struct InversionOfZeroOrTop : Error {
  using Error::Error;
};

// A value lies outside the required domain (typically a Top entry where a
// ground-space element of K was required).
struct DomainError : Error {
  using Error::Error;
};

// proj_point() requested although nu = Bottom (the point shares no
// support with the set).
struct ProjectionUndefined : Error {
  using Error::Error;
};

// Separation requested for a point that belongs to the convex set.
struct PointIsMember : Error {
  using Error::Error;
};

// Separation requested for a point that belongs to the module.
struct PointInModule : Error {
  using Error::Error;
};

// The perturbation descent exceeded its step cap. Must not happen on
// rational inputs; kept as a defensive bound.
struct SeparationFailed : Error {
  using Error::Error;
};

// supporting_function() requested for a point lying on the epigraph.
struct PointOnEpigraph : Error {
  using Error::Error;
};

// The value-coordinate coefficients of an epigraph separation disagree.
// Indicates an implementation bug; never expected on valid inputs.
struct MuMismatch : Error {
  using Error::Error;
};

// Malformed text or JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace tropicon

#endif  // TROPICON_ERRORS_HPP_
