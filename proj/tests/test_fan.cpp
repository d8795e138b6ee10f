#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/fan.hpp"

using namespace blowup;

TEST_CASE("fan sizes") {
  auto f2 = build_fan(FamilyParam(2));
  CHECK(f2.num_rays() == 5);
  CHECK(f2.max_cones.size() == 5);
  CHECK(picard_rank(f2) == 3);
  auto f3 = build_fan(FamilyParam(3));
  CHECK(f3.num_rays() == 6);
  CHECK(f3.max_cones.size() == 8);
  CHECK_THROWS_AS(build_fan(FamilyParam(1)), std::invalid_argument);
}

TEST_CASE("smooth, complete, 3n-1 cones for n in 2..10") {
  for (std::int64_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    auto f = build_fan(FamilyParam(n));
    CHECK(f.num_rays() == static_cast<std::size_t>(n + 3));
    CHECK(f.max_cones.size() == static_cast<std::size_t>(3 * n - 1));
    CHECK(is_smooth(f));
    CHECK(is_complete(f));
    CHECK(picard_rank(f) == 3);
  }
}

TEST_CASE("completeness check rejects a fan with a missing cone") {
  auto f = build_fan(FamilyParam(3));
  f.max_cones.pop_back();
  CHECK_FALSE(is_complete(f));
}

TEST_CASE("labels follow the primitive collections") {
  auto f = build_fan(FamilyParam(4));
  CHECK(f.rays_of(RayClass::Y).size() == 3);
  for (auto c : {RayClass::V, RayClass::Z, RayClass::T, RayClass::U})
    CHECK(f.rays_of(c).size() == 1);
  // the shared rays e_2..e_n of the two blown-up cones form the y class
  CHECK(f.rays_of(RayClass::Y) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("linear equivalences") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto f = build_fan(FamilyParam(n));
    auto ray = [&](RayClass c) { return f.ray_divisor(f.representative(c)); };
    auto plus = [&](TDivisor x, const TDivisor& y) {
      for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        x.coeffs[i] += y.coeffs[i];
      return x;
    };
    CHECK(linearly_equivalent(f, ray(RayClass::Z), plus(ray(RayClass::T), ray(RayClass::Y))));
    CHECK(linearly_equivalent(f, ray(RayClass::V), plus(ray(RayClass::U), ray(RayClass::Y))));
    CHECK_FALSE(linearly_equivalent(f, ray(RayClass::Z), ray(RayClass::T)));
    auto ys = f.rays_of(RayClass::Y);
    for (auto y : ys)
      CHECK(linearly_equivalent(f, f.ray_divisor(ys.front()), f.ray_divisor(y)));
  }
}

TEST_CASE("basis round trip") {
  auto f = build_fan(FamilyParam(4));
  CHECK(divisor_class_to_ray_coeffs(f, {0, 0, 0}).coeffs == std::vector<std::int64_t>(7, 0));
  CHECK(divisor_class_to_ray_coeffs(f, {1, 0, 0}) == f.ray_divisor(f.representative(RayClass::Y)));
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c) {
        DivisorClass d{a, b, c};
        CHECK(reduce_to_class(f, divisor_class_to_ray_coeffs(f, d)) == d);
      }
  // Reduction respects linear equivalence: D_z reduces to D_t + D_y.
  CHECK(reduce_to_class(f, f.ray_divisor(f.representative(RayClass::Z))) == DivisorClass{1, 1, 0});
  CHECK(reduce_to_class(f, f.ray_divisor(f.representative(RayClass::V))) == DivisorClass{1, 0, 1});
}

TEST_CASE("linear equivalence is an equivalence relation on sampled divisors") {
  auto f = build_fan(FamilyParam(3));
  std::vector<TDivisor> ds;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b) {
      TDivisor d{std::vector<std::int64_t>(f.num_rays(), 0)};
      d.coeffs[0] = a;
      d.coeffs[3] = b;
      d.coeffs[5] = a - b;
      ds.push_back(d);
    }
  for (const auto& x : ds) {
    CHECK(linearly_equivalent(f, x, x));
    for (const auto& y : ds) {
      CHECK(linearly_equivalent(f, x, y) == linearly_equivalent(f, y, x));
      CHECK(linearly_equivalent(f, x, y) == (reduce_to_class(f, x) == reduce_to_class(f, y)));
      for (const auto& z : ds)
        if (linearly_equivalent(f, x, y) && linearly_equivalent(f, y, z))
          CHECK(linearly_equivalent(f, x, z));
    }
  }
}

TEST_CASE("primitive collections") {
  for (std::int64_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    auto f = build_fan(FamilyParam(n));
    auto pcs = primitive_collections(f);
    CHECK(pcs.size() == 5);
    auto rep = verify_batyrev_data(f);
    CHECK(rep.verified());
    CHECK(rep.stats["size_v"] == 1);
    CHECK(rep.stats["size_y"] == n - 1);
    CHECK(rep.stats["size_z"] == 1);
    CHECK(rep.stats["size_t"] == 1);
    CHECK(rep.stats["size_u"] == 1);
  }
  // n = 4 sizes are (1,3,1,1,1); collections come ascending by size.
  auto pcs = primitive_collections(build_fan(FamilyParam(4)));
  std::vector<std::size_t> sizes;
  for (const auto& p : pcs)
    sizes.push_back(p.size());
  CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 4, 4});
}

TEST_CASE("fan JSON") {
  auto f = build_fan(FamilyParam(2));
  nlohmann::json j = f;
  CHECK(j["dim"] == 2);
  CHECK(j["rays"].size() == 5);
  CHECK(j["max_cones"].size() == 5);
  CHECK(j["labels"]["y"].size() == 1);
  for (const char* k : {"v", "z", "t", "u"})
    CHECK(j["labels"].contains(k));
}
