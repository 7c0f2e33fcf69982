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

#include "progsum/classical.hpp"

#include <mutex>
#include <stdexcept>

namespace progsum {

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void BernoulliTable::ensure(int k) {
    if (k < 0) throw std::domain_error("BernoulliTable: negative index");
    if (numbers_.empty()) {
        numbers_.emplace_back(1);
        polys_.push_back(Poly(Rat(1)));
    }
    for (int n = static_cast<int>(numbers_.size()); n <= k; ++n) {
        Rat acc(0);
        for (int j = 0; j < n; ++j)
            acc += Rat(binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(j))) * numbers_[static_cast<std::size_t>(j)];
        numbers_.push_back(-acc / Rat(n + 1));

        std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            c[static_cast<std::size_t>(n - j)] =
                Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) * numbers_[static_cast<std::size_t>(j)];
        polys_.push_back(Poly::from_coeffs(std::move(c)));
    }
}

Rat BernoulliTable::number(int k) {
    ensure(k);
    return numbers_[static_cast<std::size_t>(k)];
}

Poly BernoulliTable::poly(int k) {
    ensure(k);
    return polys_[static_cast<std::size_t>(k)];
}

void EulerTable::ensure(int k) {
    if (k < 0) throw std::domain_error("EulerTable: negative index");
    if (polys_.empty()) polys_.push_back(Poly(Rat(1)));
    for (int n = static_cast<int>(polys_.size()); n <= k; ++n) {
        Poly acc = Poly::monomial(n);
        const Rat half(1, 2);
        for (int j = 0; j < n; ++j)
            acc -= half * (Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) * polys_[static_cast<std::size_t>(j)]);
        polys_.push_back(std::move(acc));
    }
}

Poly EulerTable::poly(int k) {
    ensure(k);
    return polys_[static_cast<std::size_t>(k)];
}

namespace {

std::mutex table_mutex;

BernoulliTable& shared_bernoulli() {
    static BernoulliTable table;
    return table;
}

EulerTable& shared_euler() {
    static EulerTable table;
    return table;
}

}  // namespace

Rat bernoulli_number(int k) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return shared_bernoulli().number(k);
}

Poly bernoulli_poly(int k) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return shared_bernoulli().poly(k);
}

Poly euler_poly(int k) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return shared_euler().poly(k);
}

}  // namespace progsum
