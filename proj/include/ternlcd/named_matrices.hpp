#pragma once

// Generator blocks transcribed from the published constructions. Each entry
// carries the SHA-256 of its canonical text (rows joined by '\n') so a
// transcription slip cannot go unnoticed.

#include <string>
#include <string_view>
#include <vector>

namespace ternlcd {

struct NamedMatrixEntry {
  std::string_view id;
  std::vector<std::string> rows;
  std::string_view sha256;
};

inline const std::vector<NamedMatrixEntry>& named_matrix_table() {
  static const std::vector<NamedMatrixEntry> table = {
      {"A_11_9",
       {"110011110", "001002211", "021110020", "002112002", "012202201", "022200022", "011210100", "001122010",
        "000111101", "021022112", "011121212"},
       "4161fc7bd8f28a24644b28536eb2eb0a00afd573a2fbf4d58982784c237b654d"},
      {"A_13_10",
       {"0000101111", "0011000211", "0010210121", "0010022110", "0002001212", "0022120020", "0001121001",
        "0011201202", "0021200021", "0012220100", "0002111010", "0000122102", "0022011111"},
       "381adc3a2a70a252466f145a8366961032e81bac078e9333a1f6a97ac5a62da1"},
      {"A_4_17",
       {"12210021201022200", "02110102002112112", "12121001101200111", "01011222110020101"},
       "ebe791ff2e66a7c27683c95b37f5f42a7d6cea8b56aec798139d6e2d81ce20fe"},
      {"A_6_11",
       {"01001212021", "11121120202", "11020021210", "12220112111", "02211222202", "11202010022"},
       "a2d561ee83c1811ca00218e344e4f6009b5c2f38bddb4b0ed95a8d2d205b0f2f"},
      {"A_5_12",
       {"220201202221", "212111120002", "012001122210", "212022012122", "122221000112"},
       "3b41173ed402a8dc69eb87d8abeb7158ca5e91a8f3ab153b6e5d5bf2801e788d"},
      {"G_A_13",
       {"2222222200000", "1222002120012", "2210021021020", "1122221121222", "2001200201112"},
       "1708d0ab2312912983309af2a511b1a64e459dea92610bf7dbc20aed8c73572f"},
      {"B_5_2", {"10", "21", "20", "20", "00"}, "f4b05282cad54a54043b09f1e35b150d80eab930e79fca68a3d326142b9902df"},
      {"A_5_15",
       {"102222112021010", "010220212202201", "021121211111211", "121100122020022", "121202201002221"},
       "4d941c0c6e44ed30216025213e185b425c8e06385b074b5a8a8900c270d34be3"},
      {"A_9_11",
       {"10110110202", "21021110201", "12122012112", "21222000122", "22102002220", "02210200222", "20201122200",
        "02020112220", "00202011222"},
       "41428faf74f55c310adb59e30f360123d85b2c85aa72494c33654bcb0548bf89"},
  };
  return table;
}

}  // namespace ternlcd
