#pragma once

#include "satake/hecke.hpp"
#include "satake/laurent.hpp"
#include "satake/mvcells.hpp"
#include "satake/vinberg.hpp"

#include <json.hpp>

namespace satake::cli {

using Json = nlohmann::ordered_json;

/// Polynomials in q as coefficient lists [c0, c1, ...]; anything with half or
/// negative powers as {"half_exponents": [[e, c], ...]} with e in units of q^{1/2}.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"mu", "nu", "sign", "cells": [{"A", "Gm"}], "poly", "dim", "top_cells"}
Json cell_list_to_json(const CellList& c);
CellList cell_list_from_json(const Json& j);

/// {"terms": [{"nu": [...], "N": poly}]}
Json hecke_to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const Json& j);

/// [{"nu": [...], "grading": m, "mult": k}]
Json graded_to_json(const GradedCharacter& c);
GradedCharacter graded_from_json(const Json& j);

/// [{"mu": [...], "n": n, "coeff": c}]
Json vinberg_class_to_json(const VinbergClass& v);
VinbergClass vinberg_class_from_json(const Json& j);

/// [{"nu": [...], "coeff": poly}]
Json spherical_to_json(const SphericalFunction& f);
SphericalFunction spherical_from_json(const Json& j);

}  // namespace satake::cli
