// Copyright 2026 the revec authors
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

#include <doctest.h>

#include <set>

#include "revec/point_gadget.hpp"

using namespace revec;

namespace {

const CurveParams kCase(5, 3, 3);
const AffinePoint kG = AffinePoint::xy(3, 2);

bool ancillas_clean(const Circuit& c, const BasisState& s) {
  for (uint32_t q : c.ancilla_indices()) {
    if (s.get(q)) return false;
  }
  return true;
}

struct RunResult {
  EncodedPoint acc;
  bool clean;
};

RunResult run_gadget(const Circuit& c, const CurveParams& params,
                     const AffinePoint& r) {
  PointRegisters acc = acc_registers(c, params);
  BasisState s(c.qubit_count());
  write_point(s, acc, r);
  BasisState out = simulate(c, s);
  return {read_point(out, acc), ancillas_clean(c, out)};
}

}  // namespace

TEST_SUITE("point_gadget") {

TEST_CASE("doubles_schedule lists 2^i G and validates") {
  DoublingSchedule sched = doubles_schedule(kG, 3, kCase);
  REQUIRE(sched.entries.size() == 3);
  CHECK(sched.entries[0] == kG);  // 2^0 G is always G
  CHECK(sched.entries[1] == AffinePoint::xy(4, 3));
  CHECK(sched.entries[2] == AffinePoint::xy(3, 3));
  for (unsigned i = 0; i < 3; ++i) {
    CHECK(sched.entries[i] == scalar_mul(uint64_t{1} << i, kG, kCase));
  }
}

TEST_CASE("doubles_schedule fails on points of order two") {
  // y^2 = x^3 + 6 over F_7 has the order-2 point (1, 0).
  CurveParams params(7, 0, 6);
  AffinePoint g2 = AffinePoint::xy(1, 0);
  REQUIRE(on_curve(g2, params));
  CHECK(ec_add(g2, g2, params) == AffinePoint::identity());
  CHECK_THROWS_AS(doubles_schedule(g2, 2, params), ScheduleHitsIdentity);
  CHECK_NOTHROW(doubles_schedule(g2, 1, params));
}

TEST_CASE("standing witness: AddInpl_G maps (4,3) to (4,2), ancillas clean") {
  Circuit c = build_add_inpl(kCase, kG);
  RunResult res = run_gadget(c, kCase, AffinePoint::xy(4, 3));
  CHECK(res.acc == EncodedPoint{4, 2});
  CHECK(res.clean);
}

TEST_CASE("derived witness: (3,2) + (4,3) = (4,2)") {
  Circuit c = build_add_inpl(kCase, AffinePoint::xy(4, 3));
  REQUIRE(wf_affine_add(AffinePoint::xy(3, 2), AffinePoint::xy(4, 3), kCase));
  RunResult res = run_gadget(c, kCase, AffinePoint::xy(3, 2));
  CHECK(res.acc == EncodedPoint{4, 2});
  CHECK(res.clean);
}

TEST_CASE("AddInpl matches ec_add on every WF input, four primes") {
  for (auto [p, a, b] : {std::tuple<uint64_t, uint64_t, uint64_t>{5, 3, 3},
                         {7, 3, 3},
                         {11, 3, 3},
                         {13, 1, 1}}) {
    CurveParams params(p, a, b);
    auto points = enumerate_group(params);
    for (const AffinePoint& g : points) {
      if (g.is_identity) continue;
      Circuit c = build_add_inpl(params, g);
      for (const AffinePoint& r : points) {
        if (!wf_affine_add(r, g, params)) continue;
        RunResult res = run_gadget(c, params, r);
        CHECK(res.acc == encode_point(ec_add(r, g, params)));
        CHECK(res.clean);
      }
    }
  }
}

TEST_CASE("the singular family R = -2G is handled (x3 = Gx)") {
  // G = (4,2) on the case-study curve: -2G = (3,3) passes the WF screen and
  // lands on -G, the one point where the uncompute chord is singular.
  AffinePoint g = AffinePoint::xy(4, 2);
  AffinePoint r = ec_neg(scalar_mul(2, g, kCase), kCase);
  REQUIRE(r == AffinePoint::xy(3, 3));
  REQUIRE(wf_affine_add(r, g, kCase));
  AffinePoint expected = ec_add(r, g, kCase);
  REQUIRE(expected.x == g.x);  // the collision that makes it singular
  Circuit c = build_add_inpl(kCase, g);
  RunResult res = run_gadget(c, kCase, r);
  CHECK(res.acc == encode_point(expected));
  CHECK(res.clean);
}

TEST_CASE("AddInpl stays exact at m=5 (spot check on p=23)") {
  CurveParams params(23, 3, 3);
  auto points = enumerate_group(params);
  AffinePoint g;
  for (const AffinePoint& pt : points) {
    if (!pt.is_identity) {
      g = pt;
      break;
    }
  }
  Circuit c = build_add_inpl(params, g);
  unsigned judged = 0;
  for (const AffinePoint& r : points) {
    if (!wf_affine_add(r, g, params)) continue;
    RunResult res = run_gadget(c, params, r);
    CHECK(res.acc == encode_point(ec_add(r, g, params)));
    CHECK(res.clean);
    ++judged;
  }
  CHECK(judged > 0);
}

TEST_CASE("inverse(AddInpl) restores every WF input") {
  Circuit c = build_add_inpl(kCase, kG);
  Circuit round_trip = compose(c, inverse(c));
  PointRegisters acc = acc_registers(c, kCase);
  for (const AffinePoint& r : enumerate_group(kCase)) {
    if (!wf_affine_add(r, kG, kCase)) continue;
    BasisState s(c.qubit_count());
    write_point(s, acc, r);
    CHECK(simulate(round_trip, s) == s);
  }
}

TEST_CASE("gadget construction rejects bad constants") {
  CHECK_THROWS_AS(build_add_inpl(kCase, AffinePoint::identity()),
                  AddIdentityUnsupported);
  CHECK_THROWS_AS(build_add_inpl(kCase, AffinePoint::xy(1, 1)), NotOnCurve);
}

TEST_CASE("gate count grows with the register width") {
  // No constant-size lookup table: m=4 must cost more than m=3.
  Circuit m3 = build_add_inpl(CurveParams(5, 3, 3), AffinePoint::xy(3, 2));
  CurveParams p11(11, 3, 3);
  AffinePoint g11;
  for (const AffinePoint& pt : enumerate_group(p11)) {
    if (!pt.is_identity) {
      g11 = pt;
      break;
    }
  }
  Circuit m4 = build_add_inpl(p11, g11);
  CHECK(m4.gates().size() > m3.gates().size());
}

TEST_CASE("AddInpl generalises to a seven-bit field (p=101 smoke test)") {
  CurveParams params(101, 3, 3);
  auto points = enumerate_group(params);
  AffinePoint g, r;
  bool found = false;
  for (const AffinePoint& cand_g : points) {
    if (cand_g.is_identity) continue;
    g = cand_g;
    for (const AffinePoint& cand_r : points) {
      if (wf_affine_add(cand_r, g, params)) {
        r = cand_r;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found);
  Circuit c = build_add_inpl(params, g);
  RunResult res = run_gadget(c, params, r);
  CHECK(res.acc == encode_point(ec_add(r, g, params)));
  CHECK(res.clean);
}

TEST_CASE("off-contract inputs stay permutations (observed, not judged)") {
  Circuit c = build_add_inpl(kCase, kG);
  PointRegisters acc = acc_registers(c, kCase);
  std::set<std::string> images;
  for (uint64_t x = 0; x < 8; ++x) {
    for (uint64_t y = 0; y < 8; ++y) {
      BasisState s(c.qubit_count());
      s.write(acc.x.bits, x);
      s.write(acc.y.bits, y);
      images.insert(simulate(c, s).str());
    }
  }
  CHECK(images.size() == 64);
}

}  // TEST_SUITE
