#include <doctest.h>

#include <random>

#include "nullsl2/cli.hpp"
#include "nullsl2/error.hpp"
#include "nullsl2/kernels.hpp"
#include "nullsl2/periods.hpp"
#include "support.hpp"

using namespace nullsl2;
using kernels::Exec;

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel paths agree bit for bit") {
    std::mt19937_64 rng(91);
    std::vector<cplx> pts;
    for (int k = 0; k < 5000; ++k) pts.push_back(std::polar(0.2 + 0.7 * (k % 97) / 97.0, 0.37 * k));
    const MeroFunction f = support::random_rational(rng) + MeroFunction::monomial(1, -2);
    const auto fs = kernels::evaluate_function(f, pts, Exec::serial);
    const auto fp = kernels::evaluate_function(f, pts, Exec::parallel);
    CHECK(fs == fp);

    const SL2NullCurve F = end_model({2, 0.0});
    const auto cs = kernels::evaluate_curve(F, pts, Exec::serial);
    const auto cp = kernels::evaluate_curve(F, pts, Exec::parallel);
    REQUIRE(cs.size() == cp.size());
    bool same = true;
    for (std::size_t i = 0; i < cs.size(); ++i) same = same && cs[i] == cp[i];
    CHECK(same);

    const Quadrature q = quadrature(Cycle::circle(0.0, 0.5));
    CHECK(kernels::weighted_sum(f, q.points, q.weights, Exec::serial) ==
          kernels::weighted_sum(f, q.points, q.weights, Exec::parallel));
    CHECK(kernels::min_sup_norm(F, pts, Exec::serial) == kernels::min_sup_norm(F, pts, Exec::parallel));

    const cli::Grid g{16, 32, 0.2, 0.8, 0.0};
    const cli::Mesh ms = cli::build_mesh(F, g, cli::Target::h3, Exec::serial);
    const cli::Mesh mp = cli::build_mesh(F, g, cli::Target::h3, Exec::parallel);
    CHECK(ms.vertices == mp.vertices);
    CHECK(ms.metric == mp.metric);
  }

  TEST_CASE("the lowest-index error is rethrown") {
    std::vector<cplx> pts{0.5, 0.0, 0.25, 0.0};
    const MeroFunction f = MeroFunction::monomial(1, -1);
    for (Exec e : {Exec::serial, Exec::parallel}) {
      try {
        (void)kernels::evaluate_function(f, pts, e);
        FAIL("expected EvaluationAtPole");
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::EvaluationAtPole);
      }
    }
    CHECK(kernels::max_threads() >= 1);
  }
}
