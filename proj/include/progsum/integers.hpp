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

#ifndef PROGSUM_INTEGERS_HPP
#define PROGSUM_INTEGERS_HPP

#include <map>
#include <vector>

#include "progsum/rational.hpp"

namespace progsum {

/// Prime factorization of |n|, n != 0, as prime -> exponent.
/// Trial division for small factors, Pollard-Brent rho beyond.
std::map<BigInt, int> factorize(const BigInt& n);

/// All positive divisors of |n|, n != 0, in ascending order.
std::vector<BigInt> divisors(const BigInt& n);

/// Distinct prime factors of n >= 2, ascending.
std::vector<int> prime_factors_int(int n);

}  // namespace progsum

#endif
