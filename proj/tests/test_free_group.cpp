#include <doctest.h>

#include <random>
#include <stdexcept>

#include "parshift/free_group.hpp"

using namespace parshift;

namespace {

ReducedWord w(std::initializer_list<Letter> ls) {
  return ReducedWord::reduce(std::vector<Letter>(ls));
}

const Letter A{0, +1}, Ai{0, -1}, B{1, +1}, Bi{1, -1};

std::vector<Letter> random_letters(std::mt19937_64& rng, int len, int n_symbols) {
  std::uniform_int_distribution<int> sym(0, n_symbols - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) out.push_back(Letter{sym(rng), sgn(rng) ? +1 : -1});
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w({A, Ai}).is_identity());
  CHECK(w({A, B, Bi, A}) == w({A, A}));
  CHECK_THROWS_AS(ReducedWord::reduce({Letter{5, +1}}, 2), std::invalid_argument);

  // Idempotence on random raw sequences.
  std::mt19937_64 rng(0);
  for (int t = 0; t < 1000; ++t) {
    auto raw = random_letters(rng, 12, 2);
    ReducedWord once = ReducedWord::reduce(raw);
    CHECK(ReducedWord::reduce(once.letters()) == once);
    for (std::size_t i = 0; i + 1 < once.letters().size(); ++i)
      CHECK_FALSE(once.letters()[i].cancels(once.letters()[i + 1]));
  }
}

TEST_CASE("group laws") {
  CHECK(multiply(w({A, Bi}), w({B, Ai})).is_identity());
  ReducedWord g = w({A, B, Ai});
  CHECK(multiply(ReducedWord{}, g) == g);
  CHECK(multiply(g, ReducedWord{}) == g);
  CHECK(multiply(g, invert(g)).is_identity());
  CHECK(multiply(invert(g), g).is_identity());

  // Exhaustive associativity over the radius-3 ball on two letters.
  auto ball = reduced_ball(2, 3);
  for (const auto& x : ball)
    for (const auto& y : ball)
      for (const auto& z : ball)
        REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
}

TEST_CASE("invert") {
  CHECK(invert(w({A, B})) == w({Bi, Ai}));
  CHECK(invert(ReducedWord{}).is_identity());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    ReducedWord g = ReducedWord::reduce(random_letters(rng, 9, 2));
    CHECK(invert(invert(g)) == g);
    CHECK(degree(invert(g)) == -degree(g));
  }
}

TEST_CASE("degree homomorphism") {
  CHECK(degree(w({A, A, B})) == 3);
  CHECK(degree(w({A, Bi})) == 0);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    ReducedWord g = ReducedWord::reduce(random_letters(rng, 7, 2));
    ReducedWord h = ReducedWord::reduce(random_letters(rng, 7, 2));
    CHECK(degree(multiply(g, h)) == degree(g) + degree(h));
  }
}

TEST_CASE("one-sided normal form") {
  auto nf = one_sided_normal_form(w({A, Bi}));
  REQUIRE(nf);
  CHECK(nf->first == Word{0});
  CHECK(nf->second == Word{1});

  CHECK_FALSE(one_sided_normal_form(w({Ai, B})));

  nf = one_sided_normal_form(w({A, A, Bi, Ai}));
  REQUIRE(nf);
  CHECK(nf->first == Word{0, 0});
  CHECK(nf->second == Word{0, 1});

  // Round trip across the ball: mu nu^{-1} recovers g, last letters differ.
  for (const auto& g : reduced_ball(2, 3)) {
    auto f = one_sided_normal_form(g);
    if (!f) continue;
    const auto& [mu, nu] = *f;
    CHECK(multiply(ReducedWord::from_positive(mu), invert(ReducedWord::from_positive(nu))) == g);
    if (!mu.empty() && !nu.empty()) CHECK(mu.back() != nu.back());
  }
}

TEST_CASE("positivity") {
  CHECK(w({A, B}).is_positive());
  CHECK_FALSE(w({A, Bi}).is_positive());
  CHECK(ReducedWord{}.is_positive());
  CHECK(w({A, B}).positive_word() == Word{0, 1});
}

TEST_CASE("reduced ball size") {
  // 1 + 4 + 4*3 + 12*3 over two letters.
  CHECK(reduced_ball(2, 3).size() == 1 + 4 + 12 + 36);
}
