#include "fnls/fractional.hpp"
#include "fnls/grid.hpp"
#include "fnls/transform.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

using namespace fnls;
using fnls::test::max_abs;
using fnls::test::max_abs_diff;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("grid spec geometry and wavenumber layout") {
  const GridSpec spec(-20.0, 20.0, 320);
  CHECK(spec.h() * 320.0 == doctest::Approx(40.0).epsilon(1e-15));
  CHECK(spec.mu() * spec.length() == doctest::Approx(2.0 * pi).epsilon(1e-15));

  const auto k = spec.wavenumbers();
  REQUIRE(k.size() == 320);
  CHECK(k.front() == -160);
  CHECK(k.back() == 159);
  for (std::size_t s = 1; s < k.size(); ++s) {
    CHECK(k[s] == k[s - 1] + 1);
    CHECK(spec.slot(k[s]) == s);
  }
  // Every nonzero wavenumber except -N/2 has its mirror image.
  for (long w : k) {
    if (w != -160) {
      CHECK(std::find(k.begin(), k.end(), -w) != k.end());
    }
  }
}

TEST_CASE("grid spec rejects odd or tiny N and bad domains") {
  CHECK_THROWS_AS(GridSpec(0.0, 1.0, 7), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1.0, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(0.0, NAN, 8), std::invalid_argument);
  CHECK_NOTHROW(GridSpec(0.0, 1.0, 4));
}

TEST_CASE("grid functions validate their samples") {
  const GridSpec spec(0.0, 1.0, 8);
  CHECK_THROWS_AS(GridFunction(spec, std::vector<cplx>(7)), std::invalid_argument);
  std::vector<cplx> bad(8);
  bad[3] = {NAN, 0.0};
  CHECK_THROWS_AS(GridFunction(spec, bad), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumFunction(spec, std::vector<cplx>(9)), std::invalid_argument);
}

TEST_CASE("forward transform of simple inputs") {
  for (auto path : {TransformPath::fast, TransformPath::naive}) {
    const GridSpec spec(-pi, pi, 16, path);
    SUBCASE("constant maps to the DC mode") {
      const auto s = forward_dft(GridFunction::constant(spec, 1.0));
      for (long k = -8; k < 8; ++k) {
        CHECK(std::abs(s.at_wavenumber(k) - (k == 0 ? 1.0 : 0.0)) < 1e-15);
      }
    }
    SUBCASE("pure modes map to a single coefficient") {
      for (long lambda : {-7L, -3L, 0L, 1L, 5L, 7L}) {
        std::vector<cplx> v(16);
        for (std::size_t j = 0; j < 16; ++j) {
          v[j] = std::polar(1.0, static_cast<double>(lambda) * spec.mu() * spec.node(j));
        }
        const auto s = forward_dft(GridFunction(spec, v));
        for (long k = -8; k < 8; ++k) {
          CHECK(std::abs(s.at_wavenumber(k) - (k == lambda ? 1.0 : 0.0)) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("forward transform matches direct summation, including shifted domains") {
  std::mt19937_64 rng(7);
  for (auto [a, b] : {std::pair{0.0, 2.0 * pi}, std::pair{-pi, pi}, std::pair{-20.0, 20.0}, std::pair{0.3, 1.7}}) {
    const GridSpec spec(a, b, 16);
    const auto u = test::random_function(spec, rng);
    const auto expected = test::direct_forward(spec, u.values());
    CHECK(max_abs_diff(forward_dft(u).coeffs(), expected) < 1e-12);
  }
}

TEST_CASE("inverse transform") {
  SUBCASE("delta at k = 0 gives ones") {
    const GridSpec spec(-pi, pi, 8);
    std::vector<cplx> c(8);
    c[spec.slot(0)] = 1.0;
    const auto u = inverse_dft(SpectrumFunction(spec, c));
    for (const auto &v : u.values()) {
      CHECK(std::abs(v - 1.0) < 1e-15);
    }
  }
  SUBCASE("Nyquist coefficient alternates in sign on [0, 2 pi]") {
    const GridSpec spec(0.0, 2.0 * pi, 8);
    std::vector<cplx> c(8);
    c[spec.slot(-4)] = 1.0;
    const auto u = inverse_dft(SpectrumFunction(spec, c));
    const auto direct = test::direct_inverse(spec, c);
    for (std::size_t j = 0; j < 8; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      CHECK(std::abs(u[j] - sign) < 1e-14);
      CHECK(std::abs(direct[j] - sign) < 1e-13);
    }
  }
  SUBCASE("round trip is the identity") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {8U, 32U, 128U}) {
      for (auto [a, b] : {std::pair{-pi, pi}, std::pair{-20.0, 20.0}}) {
        const GridSpec spec(a, b, n);
        const auto u = test::random_function(spec, rng);
        const auto back = inverse_dft(forward_dft(u));
        CHECK(max_abs_diff(back.values(), u.values()) <= 1e-13 * max_abs(u.values()));
      }
    }
  }
}

TEST_CASE("span transforms reject wrong lengths") {
  const GridSpec spec(0.0, 1.0, 8);
  std::vector<cplx> in(8);
  std::vector<cplx> out(6);
  CHECK_THROWS_AS(forward_transform(spec, in, out), std::invalid_argument);
  CHECK_THROWS_AS(inverse_transform(spec, out, in), std::invalid_argument);
}

TEST_CASE("inner product and norms") {
  SUBCASE("ones and orthogonal modes") {
    for (std::size_t n : {4U, 6U, 10U, 64U}) {
      const GridSpec spec(-pi, pi, n);
      const auto ones = GridFunction::constant(spec, 1.0);
      std::vector<cplx> wave(n);
      for (std::size_t j = 0; j < n; ++j) {
        wave[j] = std::polar(1.0, spec.mu() * spec.node(j));
      }
      CHECK(std::abs(inner_product(ones, ones) - 1.0) < 1e-15);
      CHECK(std::abs(inner_product(GridFunction(spec, wave), ones)) < 1e-15);
      CHECK(norm_l2(ones) == doctest::Approx(1.0));
      CHECK(norm_linf(ones) == 1.0);
      for (double p : {1.0, 1.5, 2.0, 4.0, 7.0}) {
        CHECK(norm_lp(ones, p) == doctest::Approx(1.0).epsilon(1e-15));
      }
    }
  }
  SUBCASE("spike") {
    const GridSpec spec(0.0, 1.0, 4);
    const GridFunction u(spec, {2.0, 0.0, 0.0, 0.0});
    CHECK(norm_lp(u, 4.0) == doctest::Approx(2.0 * std::pow(0.25, 0.25)).epsilon(1e-15));
    CHECK(norm_linf(u) == 2.0);
  }
  SUBCASE("p = 2 coincides with the l2 norm") {
    std::mt19937_64 rng(3);
    const GridSpec spec(0.0, 1.0, 32);
    const auto u = test::random_function(spec, rng);
    CHECK(std::abs(norm_lp(u, 2.0) - norm_l2(u)) < 1e-13);
  }
  SUBCASE("errors") {
    const GridSpec spec(0.0, 1.0, 8);
    const auto u = GridFunction::constant(spec, 1.0);
    CHECK_THROWS_AS(norm_lp(u, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(u, GridFunction::constant(GridSpec(0.0, 2.0, 8), 1.0)), std::invalid_argument);
  }
}

TEST_CASE("Parseval identity against the spectral-side sum") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {4U, 8U, 32U, 100U, 256U}) {
    const GridSpec spec(-20.0, 20.0, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = test::random_function(spec, rng);
      const auto v = test::random_function(spec, rng);
      const auto uh = test::direct_forward(spec, u.values());
      const auto vh = test::direct_forward(spec, v.values());
      cplx spectral{};
      for (std::size_t s = 0; s < n; ++s) {
        spectral += uh[s] * std::conj(vh[s]);
      }
      CHECK(std::abs(inner_product(u, v) - spectral) <= 1e-12 * (norm_l2(u) * norm_l2(v) + 1.0));
    }
  }
}

TEST_CASE("transforms are linear") {
  std::mt19937_64 rng(13);
  const GridSpec spec(-pi, pi, 64);
  const auto u = test::random_function(spec, rng);
  const auto v = test::random_function(spec, rng);
  const cplx p{0.3, -1.2};
  const cplx q{-2.0, 0.5};
  const auto combo = forward_dft(u * p + v * q);
  const auto fu = forward_dft(u);
  const auto fv = forward_dft(v);
  std::vector<cplx> expected(64);
  for (std::size_t s = 0; s < 64; ++s) {
    expected[s] = p * fu.coeffs()[s] + q * fv.coeffs()[s];
  }
  CHECK(max_abs_diff(combo.coeffs(), expected) < 1e-12);

  const auto back = inverse_dft(SpectrumFunction(spec, expected));
  const auto direct = (inverse_dft(fu) * p) + (inverse_dft(fv) * q);
  CHECK(max_abs_diff(back.values(), direct.values()) < 1e-12);
}

TEST_CASE("Hausdorff-Young with the h-weighted sum") {
  std::mt19937_64 rng(17);
  // On a unit-length domain h = 1/N and the inequality holds as stated.
  for (std::size_t n : {8U, 32U, 128U}) {
    const GridSpec spec(0.0, 1.0, n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = test::random_function(spec, rng);
      for (double q : {1.0, 4.0 / 3.0, 2.0}) {
        const auto hy = hausdorff_young(u, q);
        CHECK(hy.lhs <= hy.rhs + 1e-12);
      }
    }
  }
  // For q = 2 both sides are Parseval norms and differ by exactly sqrt(L).
  const GridSpec wide(-pi, pi, 32);
  const auto u = test::random_function(wide, rng);
  const auto hy = hausdorff_young(u, 2.0);
  CHECK(hy.lhs == doctest::Approx(std::sqrt(2.0 * pi) * hy.rhs).epsilon(1e-13));
  CHECK_THROWS_AS(hausdorff_young(u, 2.5), std::invalid_argument);
}

TEST_CASE("concurrent transforms agree with serial ones") {
  std::mt19937_64 rng(19);
  const GridSpec spec(-pi, pi, 128);
  const auto u = test::random_function(spec, rng);
  const auto serial = forward_dft(u);
  std::vector<std::vector<cplx>> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < results.size(); ++t) {
      pool.emplace_back([&, t] {
        for (int rep = 0; rep < 50; ++rep) {
          const GridSpec local(-pi, pi, 128);
          const auto s = forward_dft(GridFunction(local, std::vector<cplx>(u.values().begin(), u.values().end())));
          results[t].assign(s.coeffs().begin(), s.coeffs().end());
        }
      });
    }
  }
  for (const auto &r : results) {
    CHECK(max_abs_diff(r, serial.coeffs()) == 0.0);
  }
}
