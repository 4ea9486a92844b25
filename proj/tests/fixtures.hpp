// SPDX-License-Identifier: Apache-2.0
//
// Hand-transcribed golden arrays used as oracles across the test suite.

#ifndef MACC_TESTS_FIXTURES_HPP
#define MACC_TESTS_FIXTURES_HPP

namespace fixtures {

// K=7, r=2, t=2: cyclic placement, column k starred on rows <2(k-1)+1>..<2k>.
inline const char *kCaching7 = R"(macc-array v1
kind caching
K 7
F 7
Z 2
r 2
rows
1 | * . . * . . .
2 | * . . . * . .
3 | . * . . * . .
4 | . * . . . * .
5 | . . * . . * .
6 | . . * . . . *
7 | . . . * . . *
end
)";

// Matching L=3 delivery array: S = 3, every integer once per column.
inline const char *kDelivery7 = R"(macc-array v1
kind delivery
K 7
F 7
Z 2
r 2
S 3
L 3
caching f0367901762969dc
rows
1 | * 2 * * 3 1 *
2 | * 3 1 * * 2 *
3 | * * 2 * * 3 1
4 | * * 3 1 * * 2
5 | 1 * * 2 * * 3
6 | 2 * * 3 1 * *
7 | 3 1 * * 2 * *
end
)";

// General construction at K=9, r=2, t=2, L=2: rows (J, window).
inline const char *kCaching9 = R"(macc-array v1
kind caching
K 9
F 36
Z 8
r 2
rows
(1357,13) | * . * . . . . . .
(1357,35) | . . * . * . . . .
(1357,57) | . . . . * . * . .
(1357,71) | * . . . . . * . .
(1358,13) | * . * . . . . . .
(1358,35) | . . * . * . . . .
(1358,58) | . . . . * . . * .
(1358,81) | * . . . . . . * .
(1368,13) | * . * . . . . . .
(1368,36) | . . * . . * . . .
(1368,68) | . . . . . * . * .
(1368,81) | * . . . . . . * .
(1468,14) | * . . * . . . . .
(1468,46) | . . . * . * . . .
(1468,68) | . . . . . * . * .
(1468,81) | * . . . . . . * .
(2468,24) | . * . * . . . . .
(2468,46) | . . . * . * . . .
(2468,68) | . . . . . * . * .
(2468,82) | . * . . . . . * .
(2469,24) | . * . * . . . . .
(2469,46) | . . . * . * . . .
(2469,69) | . . . . . * . . *
(2469,92) | . * . . . . . . *
(2479,24) | . * . * . . . . .
(2479,47) | . . . * . . * . .
(2479,79) | . . . . . . * . *
(2479,92) | . * . . . . . . *
(2579,25) | . * . . * . . . .
(2579,57) | . . . . * . * . .
(2579,79) | . . . . . . * . *
(2579,92) | . * . . . . . . *
(3579,35) | . . * . * . . . .
(3579,57) | . . . . * . * . .
(3579,79) | . . . . . . * . *
(3579,93) | . . * . . . . . *
end
)";

inline const char *kDelivery9 = R"(macc-array v1
kind delivery
K 9
F 36
Z 8
r 2
S 45
L 2
caching 935ae00e74fbff3a
rows
(1357,13) | * * * 4 2 3 1 10 *
(1357,35) | 1 * * * * 4 2 25 3
(1357,57) | 2 3 1 * * * * 20 4
(1357,71) | * 4 2 3 1 * * 15 *
(1358,13) | * * * 9 7 30 8 6 *
(1358,35) | 6 * * * * 25 9 7 8
(1358,58) | 7 8 6 * * 20 * * 9
(1358,81) | * 9 7 8 6 15 * * *
(1368,13) | * * * 30 14 12 13 11 *
(1368,36) | 11 * * 25 * * 14 12 13
(1368,68) | 12 13 11 20 * * * * 14
(1368,81) | * 14 12 35 13 11 * * *
(1468,14) | * 30 * * 19 17 18 16 *
(1468,46) | 16 25 * * * * 19 17 18
(1468,68) | 17 40 18 16 * * * * 19
(1468,81) | * 35 19 17 18 16 * * *
(2468,24) | * * * * 24 22 23 21 30
(2468,46) | 23 21 * * * * 24 22 45
(2468,68) | 24 22 23 21 * * * * 40
(2468,82) | * * 24 22 23 21 * * 35
(2469,24) | * * * * 29 27 5 28 26
(2469,46) | 28 26 * * * * 45 29 27
(2469,69) | 29 27 28 26 * * 40 * *
(2469,92) | * * 29 27 28 26 35 * *
(2479,24) | * * * * 5 34 32 33 31
(2479,47) | 33 31 * * 45 * * 34 32
(2479,79) | 34 32 33 31 40 * * * *
(2479,92) | * * 34 32 10 33 31 * *
(2579,25) | * * 5 * * 39 37 38 36
(2579,57) | 38 36 45 * * * * 39 37
(2579,79) | 39 37 15 38 36 * * * *
(2579,92) | * * 10 39 37 38 36 * *
(3579,35) | 5 * * * * 44 42 43 41
(3579,57) | 20 43 41 * * * * 44 42
(3579,79) | 15 44 42 43 41 * * * *
(3579,93) | 10 * * 44 42 43 41 * *
end
)";

// (5,2,20,8,15) EPDA, every integer occurring 4 times.
inline const char *kEpda5 = R"(macc-array v1
kind epda
K 5
F 20
Z 8
L 2
S 15
rows
- | * * 2 1 6
- | 1 * * 2 15
- | 2 1 * * 12
- | * 2 1 * 9
- | * * 5 3 4
- | 4 * * 15 5
- | 5 4 * 12 *
- | * 5 4 9 *
- | * * 3 8 7
- | 7 * 15 * 8
- | 8 7 12 * *
- | * 8 6 7 *
- | * 3 * 11 10
- | 10 15 * * 11
- | 11 9 10 * *
- | * 6 11 10 *
- | 3 * * 14 13
- | 12 13 * * 14
- | 9 14 13 * *
- | 6 * 14 13 *
end
)";

} // namespace fixtures

#endif
