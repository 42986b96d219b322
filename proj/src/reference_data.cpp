#include "luckypark/reference_data.hpp"

namespace luckypark {

namespace {

// Row n holds the column sums for j = 1..min(n, 6).
constexpr long kColumnSums[10][6] = {
    {1, 0, 0, 0, 0, 0},
    {3, 2, 0, 0, 0, 0},
    {16, 11, 9, 0, 0, 0},
    {125, 87, 74, 64, 0, 0},
    {1296, 908, 783, 708, 625, 0},
    {16807, 11824, 10266, 9421, 8733, 7776},
    {262144, 184944, 161221, 148992, 140298, 131632},
    {4782969, 3381341, 2955366, 2742090, 2600879, 2480787},
    {100000000, 70805696, 61999923, 57671104, 54921875, 52779840},
    {2357947691L, 1671605646L, 1465709426L, 1365730231L, 1303885965L, 1258181726L},
};

// j = n-1 column sums for n = 2..10.
constexpr long kSubdiagonal[9] = {
    3, 11, 74, 708, 8733, 131632, 2342820, 48068672, 1116809255L,
};

}  // namespace

std::optional<BigInt> reference_column_sum(int n, int j) {
    if (n < 1 || n > 10 || j < 1 || j > n || j > 6) return std::nullopt;
    return BigInt(kColumnSums[n - 1][j - 1]);
}

std::optional<BigInt> reference_subdiagonal(int n) {
    if (n < 2 || n > 10) return std::nullopt;
    return BigInt(kSubdiagonal[n - 2]);
}

int reference_column_sum_max_n() { return 10; }

}  // namespace luckypark
