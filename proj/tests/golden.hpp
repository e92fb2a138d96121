#pragma once

// Reference sequences for n = 6, all starting at 000000.

#include <string_view>
#include <vector>

namespace golden {

struct BandsRow {
  std::vector<int> ks;
  std::string_view bits;
};

struct KRow {
  unsigned k;
  std::string_view bits;
};

inline const std::vector<BandsRow> kBandsLz = {
    {{1, 7}, "0000001111110110100100110111010101100101000101111001110001100001"},
    {{1, 2, 7}, "0000001000011000101000111001001011001101001111010101110110111111"},
    {{1, 2, 3, 7}, "0000001000101001001101010111000111011000011001011011111100111101"},
    {{1, 2, 3, 4, 7}, "0000001001011011111100111101001100001101010001010111000111011001"},
    {{1, 2, 3, 4, 5, 7}, "0000001010111000111011001001011011111100111101001100001101010001"},
};

inline const std::vector<BandsRow> kBandsEo = {
    {{1, 7}, "0000001111110111100111000110110100110000101110101100101010001001"},
    {{1, 3, 7}, "0000001100111100101100011100001010100110111111011010111010001001"},
    {{1, 3, 4, 7}, "0000001100101101100011101111110101110011110000101010011010001001"},
    {{1, 2, 3, 5, 7}, "0000001001000101010011011010111010000110011110111111001011000111"},
    {{1, 2, 3, 4, 5, 7}, "0000001001000101010011010000110010110110001110101110011110111111"},
};

inline const std::vector<KRow> kShiftLz = {
    {0, "0000001111110110100100110111010101100101000101111001110001100001"},
    {1, "0000001000011000101000111001001011001101001111010101110110111111"},
    {2, "0000001000101001001101010111100111111011000011001011011100011101"},
    {3, "0000001001011101101001100001101111110011100011110101000101011001"},
    {4, "0000001011001101001001111110110111010101111000110000111001010001"},
    {55, "0000001101001111010100010101110110111111000111001001011001100001"},
    {56, "0000001000011101001001101010111100111111011001010001011011100011"},
    {57, "0000001000111101010110010010111011010011011111100111000011000101"},
    {58, "0000001001111110110111010101111000111001011000011001101000101001"},
    {59, "0000001010111000111011001001011011111100111101001100001101010001"},
};

inline const std::vector<KRow> kShiftEo = {
    {0, "0000001111110111100111000110110100110000101110101100101010001001"},
    {1, "0000001001111001101001011011001000111000101011111101110101000011"},
    {2, "0000001100111100101100011100001010100110111111011010111010001001"},
    {3, "0000001001000101101100101010000111011111101011100111100011010011"},
    {4, "0000001100001010100011110111111001110001001101101001011101011001"},
    {55, "0000001001101001011011001000111010111001111110111100010101000011"},
    {56, "0000001100101111110111010110001111001110000101010011011010001001"},
    {57, "0000001001000101101111110110010101110101000011100011010011110011"},
    {58, "0000001100001010100011100010011011010111011111101001011001111001"},
    {59, "0000001001000101010011010000110010110110001110101110011110111111"},
};

inline const std::vector<KRow> kPsrRun = {
    {0, "0000001001000101110010101101010000111010011111101111000110110011"},
    {1, "0000001001000101110010100001110100111111011110001101010110110011"},
    {2, "0000001001000101101010111001010000111010011111101111000110110011"},
};

inline const std::vector<KRow> kPsrEo = {
    {1, "0000001111110111100011011001110100110000101110010101101010001001"},
    {2, "0000001100001010001111000100111010101101001011111101110011011001"},
    {3, "0000001100110111111011010101100011110010111000010100111010001001"},
    {4, "0000001111000110110011101111110100110000101110010101101010001001"},
    {5, "0000001111011111100011011001110100110000101110010101101010001001"},
    {6, "0000001100001010001111110111100010011101010110100101110011011001"},
    {7, "0000001100110110101011000111111011110010111000010100111010001001"},
    {8, "0000001111000110110011101001100001011111101110010101101010001001"},
    {9, "0000001111000110111111011001110100110000101110010101101010001001"},
    {10, "0000001100001010001111000100111011111101010110100101110011011001"},
    {11, "0000001100110110101011000111101111110010111000010100111010001001"},
};

inline const std::vector<KRow> kPsrMixed = {
    {0, "0000001111110101011010010001001110110011011100101000010111100011"},
    {1, "0000001100010010001111010101101000010100111011001101110010111111"},
    {2, "0000001100110111001000100101111000111111010100001010110100111011"},
    {3, "0000001101110010100001011111100011110101011010010001001110110011"},
    {4, "0000001111110101011010000101001110110011011100101111000100100011"},
    {5, "0000001100011110101000010101101001110110011011100100010010111111"},
    {6, "0000001100110111001010000101111000111111010101101001000100111011"},
    {7, "0000001101110010111111000100100011110101011010000101001110110011"},
    {8, "0000001111110101000010101101001110110011011100100010010111100011"},
    {9, "0000001100011110101011010010001001110110011011100101000010111111"},
    {10, "0000001100110111001011110001001000111111010101101000010100111011"},
    {11, "0000001101110010001001011111100011110101000010101101001110110011"},
};

inline constexpr std::string_view kLastLz = "0000001010111000111011001001011011111100111101001100001101010001";
inline constexpr std::string_view kFirstEo = "0000001001111001101001011011001000111000101011111101110101000011";

}  // namespace golden
