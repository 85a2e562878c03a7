// Copyright 2026 The hhmat Authors
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

#pragma once

#include <json.hpp>

#include "hhmat/exact.hpp"
#include "hhmat/funcat.hpp"
#include "hhmat/hhcheck.hpp"
#include "hhmat/matcore.hpp"
#include "hhmat/orders.hpp"
#include "hhmat/plmaps.hpp"

namespace hhmat {

using Json = nlohmann::json;

/// Matrix literal {"n": int, "re": [[...]], "im": [[...]]}. Entries may be
/// numbers or exact strings ("1.75", "31/6"); "im" may be omitted.
Json matrix_to_json(const HermitianMatrix& h);
HermitianMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix general_matrix_from_json(const Json& j);
Json matrix_to_json(const exact::RationalMatrix& m);
exact::RationalMatrix rational_matrix_from_json(const Json& j);

Json vector_to_json(const RVector& v);
Json vector_to_json(const CVector& v);
CVector cvector_from_json(const Json& j);

Json interval_to_json(const Interval& i);
Interval interval_from_json(const Json& j);

/// Structural form, including the factors of every congruence.
Json map_to_json(const PositiveLinearMap& phi);
PositiveLinearMap map_from_json(const Json& j);

Json to_json(const OrderVerdict& v);
Json to_json(const MajorizationReport& r);
Json to_json(const ChainReport& r);
Json to_json(const NormComparison& c);
Json to_json(const AlphaResult& a);
Json to_json(const RefinementChainReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const FlagReport& r);

}  // namespace hhmat
