#include <doctest.h>

#include <cstdlib>
#include <set>

#include "stableorders/distributions.hpp"
#include "stableorders/rng.hpp"
#include "stableorders/stats.hpp"

using namespace stableorders;

TEST_CASE("philox known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("same seed and stream reproduce, different streams differ") {
  RngState a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
}

TEST_CASE("copy forks the sequence") {
  RngState a(1);
  a.next_u64();
  RngState b = a;
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform_open stays inside (0,1) and has mean 1/2") {
  RngState r(11);
  RunningStats s;
  for (int i = 0; i < 200000; ++i) {
    const double u = r.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    s.add(u);
  }
  CHECK(std::abs(s.mean() - 0.5) < 4.0 * s.std_error());
}

TEST_CASE("substreams are distinct and leave the parent untouched") {
  RngState p(5);
  std::set<std::uint64_t> first;
  for (std::uint64_t k = 0; k < 1000; ++k) first.insert(p.substream(k).next_u64());
  CHECK(first.size() == 1000);
  CHECK(p.blocks_consumed() == 0);
  CHECK(p.substream_for(1, 0.5).next_u64() == p.substream_for(1, 0.5).next_u64());
  CHECK(p.substream_for(1, 0.5).next_u64() != p.substream_for(1, 0.6).next_u64());
  CHECK(p.substream_for(1, 0.5).next_u64() != p.substream_for(2, 0.5).next_u64());
}

TEST_CASE("batch draws do not depend on the worker count") {
  const RngState rng(42);
  auto sampler = [](RngState& r) { return sample_positive_stable(Alpha(0.6), r); };
  const char* old = std::getenv("STABLE_ORDERS_THREADS");
  const std::string saved = old ? old : "";
  setenv("STABLE_ORDERS_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  const auto one = draw(300000, rng, sampler);
  setenv("STABLE_ORDERS_THREADS", "4", 1);
  CHECK(thread_count() <= 4);
  const auto four = draw(300000, rng, sampler);
  if (old) setenv("STABLE_ORDERS_THREADS", saved.c_str(), 1); else unsetenv("STABLE_ORDERS_THREADS");
  CHECK(one == four);
}

TEST_CASE("batch layout: chunk k comes from substream k") {
  const RngState rng(43);
  const std::size_t n = 2 * kDrawChunk + 17;
  const auto v = draw(n, rng, [](RngState& r) { return r.uniform_open(); });
  std::vector<double> want;
  for (std::size_t k = 0; want.size() < n; ++k) {
    RngState s = rng.substream(k);
    for (std::size_t i = 0; i < kDrawChunk && want.size() < n; ++i) want.push_back(s.uniform_open());
  }
  CHECK(v == want);
}
