// SPDX-License-Identifier: Apache-2.0
//
// seabeam - robust downlink beamforming for integrated satellite-terrestrial
// maritime communication systems
// Copyright (C) 2026 seabeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>
#include <set>

#include "seabeam/rng.hpp"
#include "seabeam/units.hpp"

using namespace seabeam;

TEST_CASE("unit conversions round trip") {
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(watts_to_dbm(dbm_to_watts(47.0)) == doctest::Approx(47.0).epsilon(1e-12));
    CHECK(db_to_linear(3.0) == doctest::Approx(1.9952623149688795).epsilon(1e-12));
    CHECK(linear_to_db(db_to_linear(-7.3)) == doctest::Approx(-7.3).epsilon(1e-12));
    CHECK(deg_to_rad(180.0) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(rad_to_deg(deg_to_rad(33.3)) == doctest::Approx(33.3).epsilon(1e-13));
}

TEST_CASE("random stream is deterministic and byte stable") {
    RandomStream a(42);
    // Frozen anchors: any change to the generator alters every stored
    // experiment result, so a change here must be deliberate.
    CHECK(a.next_u64() == 15021278609987233951ULL);
    CHECK(a.next_u64() == 5881210131331364753ULL);
    CHECK(a.uniform01() == doctest::Approx(0.98389416817748876).epsilon(1e-16));
    CHECK(derive_seed(1, 2, 3) == 1508899766107269644ULL);

    RandomStream b(42);
    RandomStream c(43);
    b.next_u64();
    b.next_u64();
    b.uniform01();
    CHECK(a.next_u64() == b.next_u64());
    CHECK(RandomStream(7).next_u64() != c.next_u64());
}

TEST_CASE("derive_seed separates counters") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 64; ++b)
            seen.insert(derive_seed(123456789ULL, a, b));
    CHECK(seen.size() == 8 * 64);
    CHECK(derive_seed(5, 1, 2) != derive_seed(5, 2, 1));
}

TEST_CASE("uniform draws stay inside their interval") {
    RandomStream r(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = r.uniform(-2.0, 3.0);
        CHECK(v >= -2.0);
        CHECK(v < 3.0);
    }
}

TEST_CASE("normal moments match a standard gaussian") {
    RandomStream r(2024);
    const int n = 40000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(var == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("complex normal has unit power split evenly") {
    RandomStream r(7);
    const int n = 40000;
    double p = 0.0;
    double pre = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = r.cnormal();
        p += std::norm(z);
        pre += z.real() * z.real();
    }
    CHECK(p / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(pre / n == doctest::Approx(0.5).epsilon(0.05));
}
