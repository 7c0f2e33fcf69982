/*
   Copyright 2026 The progsum authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PROGSUM_JSON_IO_HPP
#define PROGSUM_JSON_IO_HPP

#include <json.hpp>

#include "progsum/poly.hpp"
#include "progsum/rational.hpp"
#include "progsum/reduction.hpp"
#include "progsum/root_structure.hpp"
#include "progsum/search.hpp"

namespace progsum {

// All numeric payloads are exact: rationals and oversized integers are
// serialized as strings, never floats.
using OrderedJson = nlohmann::ordered_json;

OrderedJson json_of(const Rat& r);
OrderedJson json_of(const Poly& p);
OrderedJson json_of(const RootStructureReport& report);
OrderedJson json_of(const FinitenessCertificate& cert);
OrderedJson json_of(const Solution& solution);
OrderedJson json_of(const ProbeReport& report);

/// Integers as JSON numbers while they fit 64 bits, strings beyond.
OrderedJson json_of_integer(const BigInt& v);

}  // namespace progsum

#endif
