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

#include "tropicon/io.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "tropicon/errors.hpp"

namespace tropicon {

namespace {

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + " must be a JSON object");
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(std::string(what) + " has an unknown field \"" + item.key() + "\"");
    }
  }
}

// Resolves the working semifield from the document field and the
// TROPICON_SEMIFIELD override; a conflict between the two is an error.
SemifieldKind resolve_kind(const Json& j, std::optional<SemifieldKind> forced) {
  std::optional<SemifieldKind> declared;
  if (j.contains("semifield")) {
    if (!j["semifield"].is_string()) {
      throw ParseError("\"semifield\" must be a string");
    }
    declared = kind_from_string(j["semifield"].get<std::string>());
  }
  if (declared && forced && *declared != *forced) {
    throw ParseError("TROPICON_SEMIFIELD conflicts with the instance's \"semifield\" field");
  }
  if (declared) return *declared;
  if (forced) return *forced;
  return SemifieldKind::MaxPlus;
}

std::vector<Vector> generators_from_json(const Json& j, SemifieldKind kind) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("\"generators\" must be a nonempty array of vectors");
  }
  std::vector<Vector> gens;
  gens.reserve(j.size());
  for (const Json& g : j) {
    gens.push_back(vector_from_json(g, kind));
  }
  return gens;
}

std::size_t family_dimension(const Json& j, const std::vector<Vector>& gens) {
  if (j.contains("dimension")) {
    if (!j["dimension"].is_number_unsigned() || j["dimension"].get<std::uint64_t>() == 0) {
      throw ParseError("\"dimension\" must be a positive integer");
    }
    return j["dimension"].get<std::size_t>();
  }
  return gens.front().size();
}

ConvexSet set_from_json(const Json& j, SemifieldKind kind) {
  require_object(j, "a convex set");
  require_keys(j, {"dimension", "generators"}, "a convex set");
  if (!j.contains("generators")) {
    throw ParseError("a convex set needs a \"generators\" array");
  }
  const std::vector<Vector> gens = generators_from_json(j["generators"], kind);
  return ConvexSet(kind, family_dimension(j, gens), gens);
}

ModuleBasis module_from_json(const Json& j, SemifieldKind kind) {
  require_object(j, "a module");
  require_keys(j, {"dimension", "generators"}, "a module");
  if (!j.contains("generators")) {
    throw ParseError("a module needs a \"generators\" array");
  }
  const std::vector<Vector> gens = generators_from_json(j["generators"], kind);
  return ModuleBasis(kind, family_dimension(j, gens), gens);
}

std::vector<FunctionSample> probes_from_json(const Json& j, SemifieldKind kind) {
  if (!j.is_array()) {
    throw ParseError("\"probes\" must be an array of [point, level] pairs");
  }
  std::vector<FunctionSample> probes;
  probes.reserve(j.size());
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("each probe must be a [point, level] pair");
    }
    probes.push_back(FunctionSample{vector_from_json(p[0], kind), scalar_from_json(p[1], kind)});
  }
  return probes;
}

PlotFormat format_from_string(const std::string& name) {
  if (name == "csv") return PlotFormat::Csv;
  if (name == "svg") return PlotFormat::Svg;
  throw ParseError("unknown plot output \"" + name + "\" (expected \"csv\" or \"svg\")");
}

PlotSpec plot_spec_from_json(const Json& j) {
  require_object(j, "\"plot\"");
  require_keys(j, {"target", "range", "resolution", "output"}, "\"plot\"");
  PlotSpec spec;
  if (j.contains("target")) {
    if (!j["target"].is_string()) throw ParseError("plot \"target\" must be a string");
    spec.target = plot_target_from_string(j["target"].get<std::string>());
  }
  if (j.contains("range")) {
    if (!j["range"].is_array() || j["range"].empty()) {
      throw ParseError("plot \"range\" must be an array of [lo, hi] pairs");
    }
    for (const Json& axis : j["range"]) {
      if (!axis.is_array() || axis.size() != 2) {
        throw ParseError("each plot range axis must be a [lo, hi] pair");
      }
      Rational lo = rational_from_json(axis[0]);
      Rational hi = rational_from_json(axis[1]);
      if (!(lo < hi)) {
        throw ParseError("plot range bounds must satisfy lo < hi");
      }
      spec.range.emplace_back(std::move(lo), std::move(hi));
    }
  }
  if (j.contains("resolution")) {
    if (!j["resolution"].is_number_integer() || j["resolution"].get<std::int64_t>() < 2) {
      throw ParseError("plot \"resolution\" must be an integer >= 2");
    }
    spec.resolution = j["resolution"].get<int>();
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ParseError("plot \"output\" must be a string");
    spec.format = format_from_string(j["output"].get<std::string>());
  }
  return spec;
}

SeparationTrace trace_from_json(const Json& j) {
  require_object(j, "\"trace\"");
  require_keys(j,
               {"orientation_swapped", "coordinate_index", "restricted_coords", "perturbation_m",
                "perturbation_steps", "homogenized"},
               "\"trace\"");
  SeparationTrace trace;
  if (j.contains("orientation_swapped")) {
    trace.orientation_swapped = j["orientation_swapped"].get<bool>();
  }
  if (j.contains("coordinate_index")) {
    trace.coordinate_index = j["coordinate_index"].get<std::size_t>();
  }
  if (j.contains("restricted_coords")) {
    trace.restricted_coords = j["restricted_coords"].get<std::vector<std::size_t>>();
  }
  if (j.contains("perturbation_m")) {
    trace.perturbation_m = rational_from_json(j["perturbation_m"]);
  }
  if (j.contains("perturbation_steps")) {
    trace.perturbation_steps = j["perturbation_steps"].get<int>();
  }
  if (j.contains("homogenized")) {
    trace.homogenized = j["homogenized"].get<bool>();
  }
  return trace;
}

}  // namespace

Json json_from_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string kind_to_string(SemifieldKind kind) {
  return kind == SemifieldKind::MaxPlus ? "max-plus" : "min-plus";
}

SemifieldKind kind_from_string(const std::string& name) {
  if (name == "max-plus" || name == "maxplus") return SemifieldKind::MaxPlus;
  if (name == "min-plus" || name == "minplus") return SemifieldKind::MinPlusDual;
  throw ParseError("unknown semifield \"" + name + "\" (expected \"max-plus\" or \"min-plus\")");
}

Json rational_to_json(const Rational& value) {
  if (rational_is_integral(value)) {
    const BigInt num = numerator(value);
    static const BigInt kLo = std::numeric_limits<std::int64_t>::min();
    static const BigInt kHi = std::numeric_limits<std::int64_t>::max();
    if (num >= kLo && num <= kHi) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(rational_to_string(value));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_unsigned()) {
    return Rational(BigInt(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) {
    return Rational(BigInt(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    // Integral doubles are exact; anything fractional would round silently,
    // so it is rejected in favour of the string form.
    if (std::trunc(v) == v && std::abs(v) <= 9007199254740992.0) {
      return Rational(BigInt(static_cast<long long>(v)));
    }
    throw ParseError("non-integral JSON number " + j.dump() +
                     " would lose exactness; write it as a string like \"5/2\"");
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw ParseError("expected a number or rational string, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) {
  const bool maxplus = s.kind() == SemifieldKind::MaxPlus;
  if (s.is_bottom()) return Json(maxplus ? "-inf" : "+inf");
  if (s.is_top()) return Json(maxplus ? "+inf" : "-inf");
  return rational_to_json(s.numeric());
}

Scalar scalar_from_json(const Json& j, SemifieldKind kind) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    const bool maxplus = kind == SemifieldKind::MaxPlus;
    if (text == "-inf") return maxplus ? Scalar::bottom(kind) : Scalar::top(kind);
    if (text == "+inf" || text == "inf") {
      return maxplus ? Scalar::top(kind) : Scalar::bottom(kind);
    }
  }
  return Scalar::finite(rational_from_json(j), kind);
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (const Scalar& s : v.entries()) {
    arr.push_back(scalar_to_json(s));
  }
  return arr;
}

Vector vector_from_json(const Json& j, SemifieldKind kind) {
  if (!j.is_array()) {
    throw ParseError("expected a vector (JSON array), got " + j.dump());
  }
  std::vector<Scalar> entries;
  entries.reserve(j.size());
  for (const Json& item : j) {
    entries.push_back(scalar_from_json(item, kind));
  }
  return Vector(kind, std::move(entries));
}

Json diff_affine_to_json(const DiffAffine& u) {
  Json j;
  j["w_prime"] = vector_to_json(u.w_prime());
  j["d_prime"] = scalar_to_json(u.d_prime());
  j["w_second"] = vector_to_json(u.w_second());
  j["d_second"] = scalar_to_json(u.d_second());
  return j;
}

DiffAffine diff_affine_from_json(const Json& j, SemifieldKind kind) {
  require_object(j, "a difference of affine functions");
  require_keys(j, {"w_prime", "d_prime", "w_second", "d_second"},
               "a difference of affine functions");
  for (const char* key : {"w_prime", "d_prime", "w_second", "d_second"}) {
    if (!j.contains(key)) {
      throw ParseError(std::string("a difference of affine functions needs \"") + key + "\"");
    }
  }
  return DiffAffine(vector_from_json(j["w_prime"], kind), scalar_from_json(j["d_prime"], kind),
                    vector_from_json(j["w_second"], kind), scalar_from_json(j["d_second"], kind));
}

Json hull_to_json(const Hull& hull) {
  Json j;
  j["semifield"] = kind_to_string(hull.kind);
  j["dimension"] = hull.dimension;
  Json pieces = Json::array();
  for (const DiffAffine& u : hull.pieces) {
    pieces.push_back(diff_affine_to_json(u));
  }
  j["pieces"] = pieces;
  return j;
}

Hull hull_from_json(const Json& j, SemifieldKind kind) {
  require_object(j, "a hull");
  require_keys(j, {"semifield", "dimension", "pieces"}, "a hull");
  if (!j.contains("pieces") || !j["pieces"].is_array()) {
    throw ParseError("a hull needs a \"pieces\" array");
  }
  Hull hull{kind, 0, {}};
  for (const Json& p : j["pieces"]) {
    hull.pieces.push_back(diff_affine_from_json(p, kind));
  }
  if (j.contains("dimension")) {
    hull.dimension = j["dimension"].get<std::size_t>();
  } else if (!hull.pieces.empty()) {
    hull.dimension = hull.pieces.front().dimension();
  } else {
    throw ParseError("an empty hull needs an explicit \"dimension\"");
  }
  for (const DiffAffine& u : hull.pieces) {
    if (u.dimension() != hull.dimension) {
      throw ParseError("hull pieces have inconsistent dimensions");
    }
  }
  return hull;
}

Json episet_to_json(const EpiSet& epi) {
  Json j;
  j["dimension"] = epi.dimension();
  Json points = Json::array();
  for (const GraphPoint& p : epi.points()) {
    points.push_back(Json::array({vector_to_json(p.z), scalar_to_json(p.lambda)}));
  }
  j["graph_points"] = points;
  return j;
}

EpiSet episet_from_json(const Json& j, SemifieldKind kind) {
  require_object(j, "an epigraph");
  require_keys(j, {"dimension", "graph_points"}, "an epigraph");
  if (!j.contains("graph_points") || !j["graph_points"].is_array()) {
    throw ParseError("an epigraph needs a \"graph_points\" array");
  }
  std::vector<GraphPoint> points;
  for (const Json& p : j["graph_points"]) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("each graph point must be an [argument, value] pair");
    }
    points.push_back(GraphPoint{vector_from_json(p[0], kind), scalar_from_json(p[1], kind)});
  }
  std::size_t dimension = 0;
  if (j.contains("dimension")) {
    dimension = j["dimension"].get<std::size_t>();
  } else if (!points.empty()) {
    dimension = points.front().z.size();
  } else {
    throw ParseError("an empty epigraph needs an explicit \"dimension\"");
  }
  return EpiSet(kind, dimension, std::move(points));
}

Json certificate_to_json(const SeparationCertificate& cert) {
  Json j;
  j["semifield"] = kind_to_string(cert.hyperplane.kind());
  j["mode"] = cert.mode == CertificateMode::Universal ? "universal" : "refined";
  j["family"] = cert.family_is_module ? "module" : "convex";
  Json gens = Json::array();
  for (const Vector& g : cert.generators) {
    gens.push_back(vector_to_json(g));
  }
  j["generators"] = gens;
  j["point"] = vector_to_json(cert.point);
  j["w_prime"] = vector_to_json(cert.hyperplane.w_prime());
  j["d_prime"] = scalar_to_json(cert.hyperplane.d_prime());
  j["w_second"] = vector_to_json(cert.hyperplane.w_second());
  j["d_second"] = scalar_to_json(cert.hyperplane.d_second());
  Json trace;
  trace["orientation_swapped"] = cert.trace.orientation_swapped;
  if (cert.trace.coordinate_index) {
    trace["coordinate_index"] = *cert.trace.coordinate_index;
  }
  trace["restricted_coords"] = cert.trace.restricted_coords;
  if (cert.trace.perturbation_m) {
    trace["perturbation_m"] = rational_to_json(*cert.trace.perturbation_m);
  }
  trace["perturbation_steps"] = cert.trace.perturbation_steps;
  trace["homogenized"] = cert.trace.homogenized;
  j["trace"] = trace;
  return j;
}

SeparationCertificate certificate_from_json(const Json& j,
                                            std::optional<SemifieldKind> forced_kind) {
  try {
    require_object(j, "a certificate");
    require_keys(j,
                 {"semifield", "mode", "family", "generators", "point", "w_prime", "d_prime",
                  "w_second", "d_second", "trace", "plot"},
                 "a certificate");
    const SemifieldKind kind = resolve_kind(j, forced_kind);
    for (const char* key : {"generators", "point", "w_prime", "d_prime", "w_second", "d_second"}) {
      if (!j.contains(key)) {
        throw ParseError(std::string("a certificate needs \"") + key + "\"");
      }
    }
    Hyperplane hyperplane(vector_from_json(j["w_prime"], kind),
                          scalar_from_json(j["d_prime"], kind),
                          vector_from_json(j["w_second"], kind),
                          scalar_from_json(j["d_second"], kind));
    SeparationCertificate cert{std::move(hyperplane),
                               generators_from_json(j["generators"], kind),
                               false,
                               vector_from_json(j["point"], kind),
                               CertificateMode::Refined,
                               SeparationTrace{}};
    if (j.contains("family")) {
      const std::string family = j["family"].get<std::string>();
      if (family == "module") {
        cert.family_is_module = true;
      } else if (family != "convex") {
        throw ParseError("certificate \"family\" must be \"convex\" or \"module\"");
      }
    }
    if (j.contains("mode")) {
      const std::string mode = j["mode"].get<std::string>();
      if (mode == "universal") {
        cert.mode = CertificateMode::Universal;
      } else if (mode != "refined") {
        throw ParseError("certificate \"mode\" must be \"refined\" or \"universal\"");
      }
    }
    if (j.contains("trace")) {
      cert.trace = trace_from_json(j["trace"]);
    }
    return cert;
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid certificate: ") + e.what());
  }
}

PlotTarget plot_target_from_string(const std::string& name) {
  if (name == "function-graph") return PlotTarget::FunctionGraph;
  if (name == "hyperplane-region-2d") return PlotTarget::HyperplaneRegion2D;
  if (name == "shadow-upperset-2d") return PlotTarget::ShadowUpperset2D;
  if (name == "diffaffine-gallery") return PlotTarget::DiffAffineGallery;
  throw ParseError("unknown plot target \"" + name +
                   "\" (expected function-graph, hyperplane-region-2d, shadow-upperset-2d, or "
                   "diffaffine-gallery)");
}

Instance instance_from_json(const Json& j, std::optional<SemifieldKind> forced_kind) {
  try {
    require_object(j, "an instance");
    if (j.contains("w_prime")) {
      // Certificate documents are recognized by their hyperplane fields.
      Instance inst;
      inst.certificate = certificate_from_json(j, forced_kind);
      inst.kind = inst.certificate->hyperplane.kind();
      if (j.contains("plot")) {
        inst.plot = plot_spec_from_json(j["plot"]);
      }
      return inst;
    }
    require_keys(j,
                 {"semifield", "dimension", "family", "generators", "set", "module", "point",
                  "episet", "probes", "hull", "diff_affine", "plot"},
                 "an instance");
    Instance inst;
    inst.kind = resolve_kind(j, forced_kind);

    int families = 0;
    if (j.contains("set")) {
      inst.set = set_from_json(j["set"], inst.kind);
      ++families;
    }
    if (j.contains("module")) {
      inst.module = module_from_json(j["module"], inst.kind);
      ++families;
    }
    if (j.contains("generators")) {
      // Top-level shorthand: a generator list is a convex set unless the
      // instance says "family": "module".
      const std::vector<Vector> gens = generators_from_json(j["generators"], inst.kind);
      const std::size_t dim = family_dimension(j, gens);
      bool as_module = false;
      if (j.contains("family")) {
        const std::string family = j["family"].get<std::string>();
        if (family == "module") {
          as_module = true;
        } else if (family != "convex") {
          throw ParseError("\"family\" must be \"convex\" or \"module\"");
        }
      }
      if (as_module) {
        inst.module = ModuleBasis(inst.kind, dim, gens);
      } else {
        inst.set = ConvexSet(inst.kind, dim, gens);
      }
      ++families;
    }
    if (families > 1) {
      throw ParseError("an instance may carry only one of \"set\", \"module\", or a top-level "
                       "\"generators\" list");
    }

    if (j.contains("point")) {
      inst.point = vector_from_json(j["point"], inst.kind);
    }
    if (j.contains("episet")) {
      inst.episet = episet_from_json(j["episet"], inst.kind);
    }
    if (j.contains("probes")) {
      inst.probes = probes_from_json(j["probes"], inst.kind);
    }
    if (j.contains("hull")) {
      inst.hull = hull_from_json(j["hull"], inst.kind);
    }
    if (j.contains("diff_affine")) {
      inst.diff_affine = diff_affine_from_json(j["diff_affine"], inst.kind);
    }
    if (j.contains("plot")) {
      inst.plot = plot_spec_from_json(j["plot"]);
    }
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

}  // namespace tropicon
