#include <stdexcept>

#include "doctest.h"
#include "qhf/fock.hpp"
#include "qhf/tableaux.hpp"

using namespace qhf;

namespace {

FockState word_state(const Partition& p, const Box& box) { return FockState(word_of_partition(p, box)); }

// Operator identity A = B checked on every basis word of the given length.
template <class A, class B>
bool same_operator(int length, A a, B b) {
  for (const auto& w : all_words(length))
    if (!(a(FockState(w)) == b(FockState(w)))) return false;
  return true;
}

}  // namespace

TEST_CASE("QPoly arithmetic") {
  QPoly a = QPoly::monomial(1) + QPoly(2);
  CHECK(a.to_string() == "2 + q");
  CHECK((a * a).to_string() == "4 + 4q + q^2");
  CHECK((a - a).is_zero());
  CHECK(a.negate_q().to_string() == "2 - q");
  CHECK(QPoly::monomial(2, -3).to_string() == "-3q^2");
}

TEST_CASE("creation and annihilation") {
  Box box(4, 4);
  FockState mu = word_state({4, 3, 3, 1}, box);
  CHECK(word_of_partition({4, 3, 3, 1}, box).to_string() == "01001101");
  // ψ*_3 adds a particle at site 3.
  FockState created = apply_create(3, mu);
  CHECK(created == FockState(BitWord::from_string("01101101"), -1));
  FockState removed = apply_annihilate(2, mu);
  CHECK(removed == FockState(BitWord::from_string("00001101")));
  CHECK(partition_of_word(removed.terms().begin()->first) == Partition{5, 4, 4});

  FockState vac(BitWord(5, 0));
  CHECK(apply_create(1, vac) == FockState(BitWord::from_string("10000")));
  CHECK(apply_annihilate(2, vac).is_zero());
  CHECK(apply_create(2, apply_create(2, vac)).is_zero());
}

TEST_CASE("Clifford relations and adjointness for N <= 6") {
  for (int len = 1; len <= 6; ++len) {
    for (int i = 1; i <= len; ++i)
      for (int j = 1; j <= len; ++j) {
        REQUIRE(same_operator(
            len, [&](const FockState& s) { return apply_annihilate(i, apply_annihilate(j, s)); },
            [&](const FockState& s) { return FockState{} - apply_annihilate(j, apply_annihilate(i, s)); }));
        REQUIRE(same_operator(
            len, [&](const FockState& s) { return apply_create(i, apply_create(j, s)); },
            [&](const FockState& s) { return FockState{} - apply_create(j, apply_create(i, s)); }));
        for (const auto& w : all_words(len)) {
          FockState s(w);
          FockState lhs = apply_annihilate(i, apply_create(j, s));
          FockState rhs = apply_create(j, apply_annihilate(i, s));
          if (i == j) {
            REQUIRE((lhs + rhs) == s);
          } else {
            REQUIRE(lhs == FockState{} - rhs);
          }
        }
      }
    for (int i = 1; i <= len; ++i)
      for (const auto& w : all_words(len))
        for (const auto& v : all_words(len)) {
          auto left = apply_create(i, FockState(w)).coeff(v);
          auto right = apply_annihilate(i, FockState(v)).coeff(w);
          REQUIRE(left == right);
        }
  }
}

TEST_CASE("apply_extended wraps once") {
  FockState vac(BitWord(5, 0));
  FockState one = apply_create(2, vac);  // 1 particle
  // Barred creation at 3 + 5 on a 1-particle word: q (−1)^{p} with p after creation = 2.
  auto barred = apply_extended({Flavor::create, true, 8}, one);
  CHECK(barred == apply_create(3, one).scaled(1, 1));
  auto plain = apply_extended({Flavor::create, false, 8}, one);
  CHECK(plain == apply_create(3, one).scaled(1, -1));
  CHECK(apply_extended({Flavor::create, false, 7}, one).is_zero());
  CHECK_THROWS_AS(apply_extended({Flavor::create, false, 10}, one), std::out_of_range);
  CHECK_THROWS_AS(apply_extended({Flavor::annihilate, false, 6}, one), std::out_of_range);
}

TEST_CASE("nil-Temperley-Lieb relations for N <= 6") {
  CHECK(nil_tl_letter(1, FockState(BitWord::from_string("1000"))) == FockState(BitWord::from_string("0100")));
  for (int len = 2; len <= 6; ++len) {
    auto next = [len](int i) { return i % len + 1; };
    for (int i = 1; i <= len; ++i) {
      const int j = next(i);
      for (const auto& w : all_words(len)) {
        FockState s(w);
        REQUIRE(nil_tl_letter(i, nil_tl_letter(i, s)).is_zero());
        if (len > 2) {
          REQUIRE(nil_tl_letter(i, nil_tl_letter(j, nil_tl_letter(i, s))).is_zero());
          REQUIRE(nil_tl_letter(j, nil_tl_letter(i, nil_tl_letter(j, s))).is_zero());
        }
        for (int m = 1; m <= len; ++m) {
          if (m == i || m == j || next(m) == i) continue;
          REQUIRE(nil_tl_letter(i, nil_tl_letter(m, s)) == nil_tl_letter(m, nil_tl_letter(i, s)));
        }
      }
    }
  }
}

TEST_CASE("noncommutative e and h for N <= 6") {
  for (int len = 2; len <= 6; ++len) {
    REQUIRE(same_operator(
        len, [](const FockState& s) { return nc_elementary(1, s); },
        [len](const FockState& s) {
          FockState out;
          for (int i = 1; i <= len; ++i) out += nil_tl_letter(i, s);
          return out;
        }));
    REQUIRE(same_operator(
        len, [](const FockState& s) { return nc_elementary(1, s); },
        [](const FockState& s) { return nc_complete(1, s); }));
    for (int r = 0; r <= len; ++r)
      for (int t = 0; t <= len; ++t) {
        REQUIRE(same_operator(
            len, [&](const FockState& s) { return nc_elementary(r, nc_complete(t, s)); },
            [&](const FockState& s) { return nc_complete(t, nc_elementary(r, s)); }));
        REQUIRE(same_operator(
            len, [&](const FockState& s) { return nc_elementary(r, nc_elementary(t, s)); },
            [&](const FockState& s) { return nc_elementary(t, nc_elementary(r, s)); }));
        REQUIRE(same_operator(
            len, [&](const FockState& s) { return nc_complete(r, nc_complete(t, s)); },
            [&](const FockState& s) { return nc_complete(t, nc_complete(r, s)); }));
      }
    FockState vac(BitWord(len, 0));
    for (int r = 1; r < len; ++r) REQUIRE(nc_complete(r, vac).is_zero());
  }
}

TEST_CASE("noncommutative Schur polynomials") {
  // e-determinant equals h-determinant; specialisations to e_r and h_r.
  for (int len = 2; len <= 6; ++len)
    for (int n = 1; n < len; ++n) {
      Box box(n, len - n);
      for (const auto& lambda : partitions_in_box(box)) {
        for (const auto& w : all_words(len)) {
          FockState s(w);
          REQUIRE(nc_schur(lambda, s) == nc_schur_h(lambda, s));
        }
      }
      for (int r = 1; r <= len - n; ++r)
        for (const auto& w : all_words(len)) {
          REQUIRE(nc_schur(Partition{r}, FockState(w)) == nc_complete(r, FockState(w)));
        }
      for (int r = 1; r <= n; ++r)
        for (const auto& w : all_words(len)) {
          REQUIRE(nc_schur(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), FockState(w)) ==
                  nc_elementary(r, FockState(w)));
        }
    }
  // s_(2,2,1) = e_2 e_3 − e_1 e_4 on 4-particle words of length 7.
  for (const auto& w : basis_words(7, 4)) {
    FockState s(w);
    REQUIRE(nc_schur({2, 2, 1}, s) == nc_elementary(2, nc_elementary(3, s)) - nc_elementary(1, nc_elementary(4, s)));
  }
}

TEST_CASE("fermionic product reproduces the worked example") {
  Box box(4, 3);
  FockState got = star_fermionic({2, 2, 1}, {3, 3, 2, 1}, box);
  FockState expect;
  auto add = [&](const Partition& p, const QPoly& c) { expect.add(word_of_partition(p, box), c); };
  add({2, 2, 2, 1}, QPoly::monomial(1));
  add({3, 2, 1, 1}, QPoly::monomial(1, 2));
  add({3, 2, 2}, QPoly::monomial(1));
  add({3, 3, 1}, QPoly::monomial(1));
  add({}, QPoly::monomial(2));
  CHECK(got.to_string() == expect.to_string());
  CHECK(got == expect);
}

TEST_CASE("fermionic product: unit, Schur oracle, commutativity, associativity") {
  for (int len = 1; len <= 6; ++len)
    for (int n = 0; n <= len; ++n) {
      Box box(n, len - n);
      auto parts = partitions_in_box(box);
      for (const auto& mu : parts) {
        REQUIRE(star_fermionic({}, mu, box) == word_state(mu, box));
        for (const auto& lambda : parts) {
          FockState lm = star_fermionic(lambda, mu, box);
          REQUIRE(lm == star_fermionic(mu, lambda, box));
          if (len <= 5 && static_cast<int>(lambda.length()) + lambda[1] <= len)
            REQUIRE(lm == nc_schur(lambda, word_state(mu, box)));
        }
      }
      if (len > 5) continue;
      for (const auto& a : parts)
        for (const auto& b : parts)
          for (const auto& c : parts) {
            FockState ab = star_fermionic(a, b, box);
            FockState left, right;
            for (const auto& [w, coeff] : ab.terms()) {
              FockState t = star_fermionic(c, partition_of_word(w), box);
              for (const auto& [w2, c2] : t.terms()) left.add(w2, coeff * c2);
            }
            FockState bc = star_fermionic(b, c, box);
            for (const auto& [w, coeff] : bc.terms()) {
              FockState t = star_fermionic(a, partition_of_word(w), box);
              for (const auto& [w2, c2] : t.terms()) right.add(w2, coeff * c2);
            }
            REQUIRE(left == right);
          }
    }
}

TEST_CASE("Schur / fermion commutation relation") {
  CHECK(commutation_check({}, 1, 4));
  for (int i = 1; i <= 4; ++i) CHECK(commutation_check({1}, i, 4));
  for (const auto& lambda : partitions_in_box(Box(2, 2)))
    for (int i = 1; i <= 4; ++i) CHECK(commutation_check(lambda, i, 4));
}

TEST_CASE("render_young_diagram") {
  CHECK(render_young_diagram({2, 1}, Box(2, 2)) == "[][]\n[]\n0101\n");
}
