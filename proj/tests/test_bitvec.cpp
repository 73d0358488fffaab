#include "doctest.h"

#include <set>

#include "maxcover/bitvec.hpp"
#include "maxcover/rng.hpp"

using maxcover::BitVec;

TEST_CASE("bitvec basic membership and counting") {
  BitVec v(130);
  CHECK(v.size() == 130);
  CHECK(v.count() == 0);
  CHECK(v.none());

  v.set(0);
  v.set(63);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 4);
  CHECK(v.any());
  CHECK(v.test(63));
  CHECK(v.test(64));
  CHECK(!v.test(1));

  v.reset(63);
  CHECK(!v.test(63));
  CHECK(v.count() == 3);

  CHECK(v.to_indices() == std::vector<std::uint32_t>{0, 64, 129});
  CHECK(v.words().size() == 3);
}

TEST_CASE("bitvec zero-width universe") {
  BitVec v(0);
  CHECK(v.size() == 0);
  CHECK(v.count() == 0);
  CHECK(v.none());
  CHECK(v.words().empty());
  CHECK(v == BitVec(0));
}

TEST_CASE("bitvec set algebra matches a std::set oracle") {
  maxcover::SplitMix64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const std::size_t width = 1 + rng.next_below(200);
    BitVec a(width), b(width);
    std::set<std::size_t> sa, sb;
    for (std::size_t i = 0; i < width; ++i) {
      if (rng.next_below(3) == 0) {
        a.set(i);
        sa.insert(i);
      }
      if (rng.next_below(3) == 0) {
        b.set(i);
        sb.insert(i);
      }
    }

    const BitVec u = a | b;
    const BitVec n = a & b;
    BitVec d = a;
    d.and_not(b);

    std::set<std::size_t> su = sa, sn, sd;
    su.insert(sb.begin(), sb.end());
    for (const auto e : sa) {
      if (sb.count(e)) sn.insert(e);
      if (!sb.count(e)) sd.insert(e);
    }

    CHECK(u.count() == su.size());
    CHECK(n.count() == sn.size());
    CHECK(d.count() == sd.size());
    CHECK(BitVec::intersection_count(a, b) == sn.size());
    for (std::size_t i = 0; i < width; ++i) {
      CHECK(u.test(i) == (su.count(i) > 0));
      CHECK(n.test(i) == (sn.count(i) > 0));
      CHECK(d.test(i) == (sd.count(i) > 0));
    }
  }
}

TEST_CASE("bitvec equality is value equality") {
  BitVec a(65), b(65);
  a.set(64);
  CHECK(a != b);
  b.set(64);
  CHECK(a == b);
  CHECK(BitVec(64) != BitVec(65));
}
