#include <gtest/gtest.h>

#include "rehub/bounded_buffer.hpp"

using namespace rehub;

namespace {

std::vector<ObjectPair> items(const BoundedBuffer& b) {
  return {b.items().begin(), b.items().end()};
}

}  // namespace

TEST(BoundedBuffer, KeepsSmallestInOrder) {
  BoundedBuffer b(3);
  for (ObjectPair p : {ObjectPair{0, 5}, {1, 2}, {2, 9}, {3, 1}, {4, 7}}) b.push(p);
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{3, 1}, {1, 2}, {0, 5}}));
  EXPECT_EQ(b.worst(), 5u);
}

TEST(BoundedBuffer, WorstIsInfiniteUntilFull) {
  BoundedBuffer b(2);
  b.push({0, 1});
  EXPECT_EQ(b.worst(), kInfinity);
  b.push({1, 4});
  EXPECT_EQ(b.worst(), 4u);
}

TEST(BoundedBuffer, TiesKeepSmallerIndex) {
  BoundedBuffer b(2);
  b.push({5, 3});
  b.push({7, 3});
  b.push({2, 3});
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{2, 3}, {5, 3}}));
  b.push({9, 3});
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{2, 3}, {5, 3}}));
}

TEST(BoundedBuffer, PushUniqueIgnoresNotBetterDuplicate) {
  BoundedBuffer b(3);
  b.push_unique({1, 4});
  EXPECT_FALSE(b.push_unique({1, 4}));
  EXPECT_FALSE(b.push_unique({1, 6}));
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{1, 4}}));
}

TEST(BoundedBuffer, PushUniqueLowersAndResorts) {
  BoundedBuffer b(3);
  b.push_unique({1, 4});
  b.push_unique({2, 5});
  b.push_unique({3, 6});
  EXPECT_TRUE(b.push_unique({3, 1}));
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{3, 1}, {1, 4}, {2, 5}}));
}

TEST(BoundedBuffer, PushUniqueEvictsWorstWhenFull) {
  BoundedBuffer b(2);
  b.push_unique({1, 4});
  b.push_unique({2, 5});
  EXPECT_FALSE(b.push_unique({3, 5}));
  EXPECT_TRUE(b.push_unique({0, 5}));
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{1, 4}, {0, 5}}));
  EXPECT_TRUE(b.push_unique({2, 2}));
  EXPECT_EQ(items(b), (std::vector<ObjectPair>{{2, 2}, {1, 4}}));
}

TEST(BoundedBuffer, ZeroCapacityRejectsEverything) {
  BoundedBuffer b(0);
  EXPECT_FALSE(b.push({0, 0}));
  EXPECT_TRUE(b.empty());
}
