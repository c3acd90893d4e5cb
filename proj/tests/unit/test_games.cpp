#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "virgame/error.hpp"
#include "virgame/games.hpp"

using namespace virgame;

namespace {

BimatrixGame matching_pennies() {
  return BimatrixGame({"Heads", "Tails"}, {"Heads", "Tails"},
                      {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

BimatrixGame zero_game() {
  return BimatrixGame({"x", "y"}, {"u", "v"}, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
}

std::vector<std::pair<std::size_t, std::size_t>> profiles(const std::vector<Equilibrium>& eqs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : eqs) out.emplace_back(e.row_index, e.col_index);
  return out;
}

}  // namespace

TEST_CASE("game construction validates shape") {
  CHECK_THROWS_AS(BimatrixGame({"a"}, {"b", "c"}, {{{0, 0}}}), DimensionError);
  CHECK_THROWS_AS(BimatrixGame({"a", "b"}, {"c"}, {{{0, 0}}}), DimensionError);
  CHECK_THROWS_AS(BimatrixGame({}, {}, {}), DimensionError);
  CHECK_THROWS_AS(BimatrixGame({"a"}, {"b"}, {{{INFINITY, 0}}}), ParameterError);
}

TEST_CASE("ransom game defaults") {
  const auto g = ransom_game();
  REQUIRE(g.rows() == 2);
  CHECK(g.row_labels() == std::vector<std::string>{"NotPay", "Pay"});
  CHECK(g.col_labels() == std::vector<std::string>{"Decrypt", "NotDecrypt"});
  CHECK(g.at(0, 0).row == 100.0);
  CHECK(g.at(1, 1) == PayoffPair{-100, 100});

  SUBCASE("shipped defaults: not paying strictly dominates for the user") {
    const auto dom = dominant_strategies(g);
    CHECK(dom.row == std::vector<std::size_t>{0});
    CHECK(dom.col.empty());  // the virus is indifferent when nobody pays
    CHECK(profiles(pure_nash(g)) == oracle::enumerate_pure_nash(g));
    CHECK(profiles(pure_nash(g)) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}});
  }

  SUBCASE("explicit payoffs match brute force") {
    const auto h = ransom_game({100, -30, 20, -100}, {0, 0, 100, 100});
    const auto brute = oracle::enumerate_pure_nash(h);
    // The user never pays; the virus is indifferent against NotPay.
    CHECK(brute == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}});
    CHECK(profiles(pure_nash(h)) == brute);
  }

  SUBCASE("all-zero payoffs make every profile an equilibrium") {
    const auto z = ransom_game({0, 0, 0, 0}, {0, 0, 0, 0});
    CHECK(pure_nash(z).size() == 4);
  }
}

TEST_CASE("pure Nash") {
  CHECK(profiles(pure_nash(pd_game(5, 3, 1, 0))) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}});
  CHECK(pure_nash(matching_pennies()).empty());
  const auto all = pure_nash(zero_game());
  CHECK(profiles(all) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto e = pure_nash(pd_game(5, 3, 1, 0)).front();
  CHECK(e.kind == EquilibriumKind::Pure);
  CHECK(e.row_mix == std::vector<double>{0, 1});
  CHECK(e.row_value == 1.0);
}

TEST_CASE("mixed Nash 2x2") {
  const auto mp = mixed_nash_2x2(matching_pennies());
  REQUIRE(mp.has_value());
  CHECK(mp->row_mix == std::vector<double>{0.5, 0.5});
  CHECK(mp->col_mix == std::vector<double>{0.5, 0.5});
  CHECK(mp->kind == EquilibriumKind::Mixed);
  CHECK(mp->row_value == doctest::Approx(0.0));

  SUBCASE("snowdrift(3, 1): cooperate with probability 0.8") {
    const auto g = snowdrift_game(3, 1);
    const auto eq = mixed_nash_2x2(g);
    REQUIRE(eq.has_value());
    // Indifference by hand: 2.5x + 2(1 - x) = 3x  =>  x = 0.8.
    CHECK(eq->row_mix[0] == doctest::Approx(0.8));
    CHECK(eq->col_mix[0] == doctest::Approx(0.8));
    const double coop = 2.5 * eq->col_mix[0] + 2.0 * eq->col_mix[1];
    const double defect = 3.0 * eq->col_mix[0];
    CHECK(coop == doctest::Approx(defect).epsilon(1e-12));
    CHECK(oracle::max_deviation_gain(g, eq->row_mix, eq->col_mix) <= 1e-9);
  }

  CHECK_FALSE(mixed_nash_2x2(pd_game(5, 3, 1, 0)).has_value());
  CHECK_FALSE(mixed_nash_2x2(zero_game()).has_value());
  CHECK_THROWS_AS(mixed_nash_2x2(BimatrixGame({"a"}, {"b"}, {{{1, 1}}})), DimensionError);
}

TEST_CASE("dominant strategies") {
  const auto pd = dominant_strategies(pd_game(5, 3, 1, 0));
  CHECK(pd.row == std::vector<std::size_t>{1});
  CHECK(pd.col == std::vector<std::size_t>{1});
  const auto z = dominant_strategies(zero_game());
  CHECK(z.row.empty());
  CHECK(z.col.empty());
  const auto sd = dominant_strategies(snowdrift_game(2, 1));
  CHECK(sd.row.empty());
  CHECK(sd.col.empty());
}

TEST_CASE("expected payoffs") {
  const auto g = ransom_game();
  const std::vector<double> e0{1, 0}, e1{0, 1}, half{0.5, 0.5};
  CHECK(expected_payoffs(g, e1, e1) == PayoffPair{-100, 100});
  CHECK(expected_payoffs(g, e0, e0) == PayoffPair{100, 0});
  CHECK(expected_payoffs(zero_game(), half, half) == PayoffPair{0, 0});
  const auto mean = expected_payoffs(g, half, half);
  CHECK(mean.row == doctest::Approx((100 - 50 + 20 - 100) / 4.0));
  CHECK(mean.col == doctest::Approx((0 + 0 + 90 + 100) / 4.0));

  const std::vector<double> three{0.2, 0.3, 0.5};
  CHECK_THROWS_AS(expected_payoffs(g, three, half), DimensionError);
  const std::vector<double> bad{0.7, 0.7};
  CHECK_THROWS_AS(expected_payoffs(g, bad, half), ParameterError);
  const std::vector<double> neg{1.5, -0.5};
  CHECK_THROWS_AS(expected_payoffs(g, neg, half), ParameterError);
}

TEST_CASE("templates validate their parameters") {
  CHECK_NOTHROW(pd_game(5, 3, 1, 0));
  CHECK_THROWS_AS(pd_game(3, 3, 1, 0), ParameterError);
  CHECK_THROWS_AS(snowdrift_game(1, 1), ParameterError);
  CHECK_THROWS_AS(snowdrift_game(2, 0), ParameterError);
  CHECK(pd_game(5, 3, 1, 0).is_symmetric());
  CHECK(snowdrift_game(2, 1).is_symmetric());
  CHECK_FALSE(ransom_game().is_symmetric());
}

TEST_CASE("replicator dynamics") {
  const auto pd = pd_game(5, 3, 1, 0);
  const std::vector<double> mono{1, 0};
  CHECK(replicator_step(pd, mono, 0.1) == mono);

  const std::vector<double> half{0.5, 0.5};
  const auto next = replicator_step(pd, half, 0.1);
  // Fitness against the 50/50 population: cooperate 1.5, defect 3.
  CHECK(next[1] > 0.5);
  CHECK(next[0] + next[1] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(replicator_step(zero_game(), half, 0.5) == half);

  CHECK_THROWS_AS(replicator_step(ransom_game(), half, 0.1), ParameterError);
  const std::vector<double> bad{0.9, 0.3};
  CHECK_THROWS_AS(replicator_step(pd, bad, 0.1), ParameterError);
  CHECK_THROWS_AS(replicator_step(pd, half, 0.0), ParameterError);

  SUBCASE("stays on the simplex for large steps") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
      auto g = oracle::random_game(rng, 3, 3, 9);
      std::vector<std::vector<PayoffPair>> sym(3, std::vector<PayoffPair>(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) sym[i][j] = {g.at(i, j).row, g.at(j, i).row};
      const BimatrixGame s(g.row_labels(), g.row_labels(), sym);
      std::vector<double> x{u(rng), u(rng), u(rng)};
      const double t = x[0] + x[1] + x[2];
      for (double& v : x) v /= t;
      x[2] = 1.0 - x[0] - x[1];
      if (x[2] < 0) continue;
      const auto y = replicator_step(s, x, 0.5 + 2 * u(rng));
      double sum = 0;
      for (double v : y) {
        REQUIRE(v >= 0.0);
        sum += v;
      }
      REQUIRE(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("pure Nash agrees with enumeration on random games up to 4x4") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int k = 0; k < 2000; ++k) {
    const auto g = oracle::random_game(rng, dim(rng), dim(rng), 3);
    REQUIRE(profiles(pure_nash(g)) == oracle::enumerate_pure_nash(g));
  }
}

TEST_CASE("equilibria survive positive affine payoff transforms") {
  std::mt19937_64 rng(1234);
  // Power-of-two scales and integer shifts keep the transformed payoffs
  // exact, so ties and zero denominators are preserved bit for bit.
  const double scales[] = {0.25, 0.5, 2.0, 4.0, 8.0};
  std::uniform_int_distribution<int> pick(0, 4), shift(-50, 50);
  for (int k = 0; k < 500; ++k) {
    const auto g = oracle::random_game(rng, 2, 2, 6);
    const double a = scales[pick(rng)], b = shift(rng);
    auto p = g.payoffs();
    for (auto& row : p)
      for (auto& cell : row) cell.row = a * cell.row + b;
    const BimatrixGame h(g.row_labels(), g.col_labels(), p);
    REQUIRE(profiles(pure_nash(h)) == profiles(pure_nash(g)));
    const auto mg = mixed_nash_2x2(g);
    const auto mh = mixed_nash_2x2(h);
    REQUIRE(mg.has_value() == mh.has_value());
    if (mg) {
      CHECK(mh->row_mix[0] == doctest::Approx(mg->row_mix[0]).epsilon(1e-9));
      CHECK(mh->col_mix[0] == doctest::Approx(mg->col_mix[0]).epsilon(1e-9));
      CHECK(oracle::max_deviation_gain(g, mg->row_mix, mg->col_mix) <= 1e-9);
    }
  }
}
