// Copyright 2026 The emqa-sim authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emqa/schedule.hpp"

using namespace emqa;

TEST_CASE("kind names") {
  CHECK(to_string(ScheduleKind::conventional) == "conventional");
  CHECK(to_string(ScheduleKind::rqa) == "rqa");
  CHECK(to_string(ScheduleKind::emqa) == "emqa");
  CHECK(schedule_kind_from_string("emqa") == ScheduleKind::emqa);
  CHECK(schedule_kind_from_string("rqa") == ScheduleKind::rqa);
  CHECK(schedule_kind_from_string("conventional") == ScheduleKind::conventional);
  CHECK_THROWS_AS(schedule_kind_from_string("linear"), ConfigError);
}

TEST_CASE("conventional ramp") {
  const Schedule s = make_conventional(4.0);
  CHECK(s.total_duration == doctest::Approx(4.0));
  CHECK(!s.measurement_time.has_value());
  CHECK(evaluate(s, 0.0).a == doctest::Approx(0.0));
  CHECK(evaluate(s, 0.0).b == doctest::Approx(1.0));
  CHECK(evaluate(s, 1.0).a == doctest::Approx(0.25));
  CHECK(evaluate(s, 1.0).b == doctest::Approx(0.75));
  CHECK(evaluate(s, 4.0).a == doctest::Approx(1.0));
  CHECK(evaluate(s, 4.0).b == doctest::Approx(0.0));
  CHECK_THROWS_AS(evaluate(s, -0.1), ContractViolation);
  CHECK_THROWS_AS(evaluate(s, 4.1), ContractViolation);
  CHECK_THROWS_AS(make_conventional(0.0), ConfigError);
  CHECK_THROWS_AS(make_conventional(-1.0), ConfigError);
}

TEST_CASE("retraced schedule mirrors without inverting") {
  const Real t_anneal = 3.0;
  const Schedule s = make_rqa(t_anneal);
  CHECK(s.total_duration == doctest::Approx(6.0));
  REQUIRE(s.measurement_time.has_value());
  CHECK(*s.measurement_time == doctest::Approx(3.0));
  CHECK(evaluate(s, 3.0).a == doctest::Approx(1.0));
  CHECK(evaluate(s, 3.0).b == doctest::Approx(0.0));
  CHECK(evaluate(s, 6.0).a == doctest::Approx(0.0));
  CHECK(evaluate(s, 6.0).b == doctest::Approx(1.0));
  // Palindromic: H(t_mid + u) = H(t_mid - u) with no sign flip.
  for (Real u : {0.2, 1.0, 2.9}) {
    CHECK(evaluate(s, 3.0 + u).a == doctest::Approx(evaluate(s, 3.0 - u).a));
    CHECK(evaluate(s, 3.0 + u).b == doctest::Approx(evaluate(s, 3.0 - u).b));
  }
}

TEST_CASE("mitigated schedule is odd about its measurement time") {
  const Real t_anneal = 2.0;
  const Real t_prime = 5.0;
  const Schedule s = make_emqa(t_anneal, t_prime);
  CHECK(s.total_duration == doctest::Approx(2 * t_anneal + t_prime));
  REQUIRE(s.measurement_time.has_value());
  const Real t_mid = *s.measurement_time;
  CHECK(t_mid == doctest::Approx(t_anneal + t_prime / 2));

  // Endpoints and the bridge.
  CHECK(evaluate(s, 0.0).a == doctest::Approx(0.0));
  CHECK(evaluate(s, 0.0).b == doctest::Approx(1.0));
  CHECK(evaluate(s, t_anneal).a == doctest::Approx(1.0));
  CHECK(evaluate(s, t_anneal).b == doctest::Approx(0.0));
  CHECK(evaluate(s, t_anneal + t_prime).a == doctest::Approx(-1.0));
  CHECK(evaluate(s, t_anneal + t_prime).b == doctest::Approx(0.0));
  CHECK(evaluate(s, s.total_duration).a == doctest::Approx(0.0));
  CHECK(evaluate(s, s.total_duration).b == doctest::Approx(-1.0));
  CHECK(evaluate(s, t_mid).a == doctest::Approx(0.0));
  CHECK(evaluate(s, t_mid).b == doctest::Approx(0.0));

  // H(t_mid + u) = -H(t_mid - u): the property that makes the second half
  // an exact inverse of the first at lambda = 0.
  for (Real u : {0.1, 1.5, 2.5, 3.3, 4.5}) {
    const AB fwd = evaluate(s, t_mid + u);
    const AB bwd = evaluate(s, t_mid - u);
    CHECK(fwd.a == doctest::Approx(-bwd.a).epsilon(1e-14));
    CHECK(fwd.b == doctest::Approx(-bwd.b).epsilon(1e-14));
  }

  CHECK_THROWS_AS(make_emqa(2.0, 0.0), ConfigError);
  CHECK_THROWS_AS(make_emqa(0.0, 5.0), ConfigError);
}

TEST_CASE("piecewise evaluation is continuous at the kinks") {
  const Schedule s = make_emqa(1.5, 4.0);
  for (Real kink : {1.5, 5.5}) {
    const Real eps = 1e-9;
    const AB lo = evaluate(s, kink - eps);
    const AB at = evaluate(s, kink);
    const AB hi = evaluate(s, kink + eps);
    CHECK(std::abs(lo.a - at.a) < 1e-8);
    CHECK(std::abs(hi.a - at.a) < 1e-8);
    CHECK(std::abs(lo.b - at.b) < 1e-8);
    CHECK(std::abs(hi.b - at.b) < 1e-8);
  }
}
