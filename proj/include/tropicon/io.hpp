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
//
// JSON wire format. Scalars serialize exactly: integral values as JSON
// numbers, other rationals as "p/q" strings, and the two infinities as
// "-inf"/"+inf" in the semifield's own numeric reading (min-plus Bottom is
// numerically +inf). Fractional JSON floats are rejected rather than
// rounded.

#ifndef TROPICON_IO_HPP_
#define TROPICON_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropicon/convex_function.hpp"
#include "tropicon/diff_affine.hpp"
#include "tropicon/projection.hpp"
#include "tropicon/scalar.hpp"
#include "tropicon/separation.hpp"
#include "tropicon/vector.hpp"

namespace tropicon {

using Json = nlohmann::json;

// Parses a complete JSON document; throws ParseError with the underlying
// reason instead of nlohmann's exceptions.
Json json_from_text(const std::string& text);

std::string kind_to_string(SemifieldKind kind);
SemifieldKind kind_from_string(const std::string& name);

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, SemifieldKind kind);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, SemifieldKind kind);

Json diff_affine_to_json(const DiffAffine& u);
DiffAffine diff_affine_from_json(const Json& j, SemifieldKind kind);

// {"semifield", "dimension", "pieces": [DiffAffine...]}
Json hull_to_json(const Hull& hull);
Hull hull_from_json(const Json& j, SemifieldKind kind);

// {"dimension", "graph_points": [[[z...], lambda], ...]}
Json episet_to_json(const EpiSet& epi);
EpiSet episet_from_json(const Json& j, SemifieldKind kind);

// Full certificate: the hyperplane coefficient groups flattened at the top
// level, plus the separated family, point, mode, and derivation trace.
Json certificate_to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const Json& j,
                                            std::optional<SemifieldKind> forced_kind);

enum class PlotTarget : std::uint8_t {
  FunctionGraph,
  HyperplaneRegion2D,
  ShadowUpperset2D,
  DiffAffineGallery,
};

enum class PlotFormat : std::uint8_t { Csv, Svg };

PlotTarget plot_target_from_string(const std::string& name);

// Sampling window for plot outputs: per-axis rational bounds, an inclusive
// sample count per axis, and the output format.
struct PlotSpec {
  std::optional<PlotTarget> target;
  std::vector<std::pair<Rational, Rational>> range;
  int resolution = 33;
  PlotFormat format = PlotFormat::Csv;
};

// One parsed input file. Exactly the fields present in the JSON are set;
// commands validate that the combination they need is there.
struct Instance {
  SemifieldKind kind = SemifieldKind::MaxPlus;
  std::optional<ConvexSet> set;
  std::optional<ModuleBasis> module;
  std::optional<Vector> point;
  std::optional<EpiSet> episet;
  std::vector<FunctionSample> probes;
  std::optional<Hull> hull;
  std::optional<DiffAffine> diff_affine;
  std::optional<SeparationCertificate> certificate;
  PlotSpec plot;
};

// Parses an instance document. `forced_kind` is the TROPICON_SEMIFIELD
// override: a conflicting explicit "semifield" field is an error.
Instance instance_from_json(const Json& j, std::optional<SemifieldKind> forced_kind);

}  // namespace tropicon

#endif  // TROPICON_IO_HPP_
