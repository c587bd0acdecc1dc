#include <doctest.h>

#include "gqi/partition.hpp"

using namespace gqi;

TEST_CASE("partition index maps") {
  const Partition part{{"A", 1}, {"B", 2}, {"E", 1}};
  CHECK(part.total_modes() == 4);
  CHECK(part.dim() == 8);
  CHECK(part.modes_of("B") == 2);
  CHECK(part.mode_offset("B") == 1);
  CHECK(part.mode_offset("E") == 3);

  // x rows of the selected modes first, then their p rows (global m = 4).
  CHECK(part.xp_indices({"B"}) == std::vector<int>{1, 2, 5, 6});
  CHECK(part.xp_indices({"E", "A"}) == std::vector<int>{3, 0, 7, 4});
  CHECK(part.mode_indices({"B", "E"}) == std::vector<int>{1, 2, 3});
  CHECK(part.complement({"B"}) == std::vector<std::string>{"A", "E"});
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS((Partition{{"A", 1}, {"A", 2}}), PartitionError);
  const Partition part{{"A", 1}, {"B", 1}};
  CHECK_THROWS_AS(part.modes_of("C"), PartitionError);
  CHECK_THROWS_AS(part.xp_indices({"C"}), PartitionError);
}

TEST_CASE("submatrix gathers principal blocks") {
  Eigen::MatrixXd M(3, 3);
  M << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  const Eigen::MatrixXd S = submatrix(M, {0, 2});
  CHECK(S(0, 0) == 1);
  CHECK(S(0, 1) == 3);
  CHECK(S(1, 0) == 7);
  CHECK(S(1, 1) == 9);
}
