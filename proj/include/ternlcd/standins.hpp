#pragma once

// Search-recovered LCD codes with the parameters of the small-dimension
// lemma whose explicit matrices are unavailable. Each one was produced by
// randomized_search and is checked on every load. C_15_6_7 and C_20_12_6
// have additionally been relabeled so the coordinate sets of the shortening
// chains built on them land on the stated parameters.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ternlcd {

struct StandinEntry {
  std::string id;
  std::size_t n, k, d;
  std::string dual_id;  // empty when the dual is not part of the lemma
  std::size_t dual_d;
  std::vector<std::string> rows;
  std::string note;
  bool lemma = true;  // false for codes matched to a printed enumerator
};

inline const std::vector<StandinEntry>& standin_table() {
  static const std::vector<StandinEntry> table = {
      {"C_13_6_6", 13, 6, 6, "C_13_7_5", 5,
       {
           "1000002220012",
           "0100000201121",
           "0010001220220",
           "0001001211002",
           "0000101121122",
           "0000010222110",
       },
       "default-seed search witness"},
      {"C_14_7_6", 14, 7, 6, "", 0,
       {
           "10000000111011",
           "01000002210211",
           "00100002011110",
           "00010000102221",
           "00001002022011",
           "00000101102110",
           "00000012221101",
       },
       "default-seed search witness"},
      {"C_14_8_5", 14, 8, 5, "C_14_6_6", 6,
       {
           "10000000202220",
           "01000000220210",
           "00100000122020",
           "00010000111002",
           "00001000100212",
           "00000100021202",
           "00000010012022",
           "00000001001122",
       },
       "default-seed search witness"},
      {"C_15_6_7", 15, 6, 7, "C_15_9_4", 4,
       {
           "111000000220011",
           "210100001101001",
           "010010000121222",
           "020000101220201",
           "000000011222022",
           "011011111000000",
       },
       "search witness, coordinates permuted to match the shortening chain"},
      {"C_16_9_5", 16, 9, 5, "C_16_7_6", 6,
       {
           "1000000001002120",
           "0100000001000211",
           "0010000002221220",
           "0001000002220121",
           "0000100000120011",
           "0000010001211101",
           "0000001002220212",
           "0000000101201202",
           "0000000010011212",
       },
       "default-seed search witness"},
      {"C_19_12_5", 19, 12, 5, "C_19_7_8", 8,
       {
           "1000000000002002220",
           "0100000000001010120",
           "0010000000000122001",
           "0001000000001120221",
           "0000100000000112110",
           "0000010000001110022",
           "0000001000002020122",
           "0000000100002122100",
           "0000000010001212121",
           "0000000001002012201",
           "0000000000101102002",
           "0000000000010021011",
       },
       "default-seed search witness"},
      {"C_20_12_6", 20, 12, 6, "C_20_8_8", 8,
       {
           "00100000000000122120",
           "01000001000002220210",
           "00010000000000011122",
           "10000002000000220202",
           "00001000000002020222",
           "00000000001001111221",
           "00000000100001101012",
           "00000102000001122111",
           "00000001000100120022",
           "00000012000001000212",
           "00000001010000212020",
           "00000001000011022021",
       },
       "search witness, coordinates permuted to match the shortening chains"},
      {"C_20_13_5", 20, 13, 5, "C_20_7_8", 8,
       {
           "10000000000000211202",
           "01000000000002221002",
           "00100000000000221210",
           "00010000000000111012",
           "00001000000001100101",
           "00000100000001111111",
           "00000010000001102110",
           "00000001000002101100",
           "00000000100001001221",
           "00000000010000021222",
           "00000000001000100211",
           "00000000000102021111",
           "00000000000011210211",
       },
       "default-seed search witness"},
      {"C_18_6_8_enum", 18, 6, 8, "", 0,
       {
           "100000210102102101",
           "010000200002220211",
           "001000222000112200",
           "000100100022021220",
           "000010212110010121",
           "000001222122000222",
       },
       "search witness with the printed [18,6,8] enumerator",
       false},
      {"C_17_5_8_enum", 17, 5, 8, "", 0,
       {
           "10000120100222210",
           "01000122210120201",
           "00100121112020110",
           "00010012012211120",
           "00001211111221001",
       },
       "search witness with the printed [17,5,8] enumerator",
       false},
      {"C_19_5_10_enum", 19, 5, 10, "", 0,
       {
           "1000022020120222110",
           "0100021211112000211",
           "0010001200112221020",
           "0001021202201212200",
           "0000112222100011210",
       },
       "[I_5|A_5_12|B'] where B' differs from the printed B in three entries",
       false},
      {"C_10_7_3", 10, 7, 3, "", 0,
       {
           "1000000122",
           "0100000202",
           "0010000121",
           "0001000120",
           "0000100110",
           "0000010011",
           "0000001012",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_11_4_6", 11, 4, 6, "", 0,
       {
           "10001111001",
           "01001010121",
           "00100022111",
           "00012112100",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_14_4_8", 14, 4, 8, "", 0,
       {
           "10000110111202",
           "01002022001211",
           "00101002210221",
           "00010201112011",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_19_16_2", 19, 16, 2, "", 0,
       {
           "1000000000000000200",
           "0100000000000000021",
           "0010000000000000022",
           "0001000000000000211",
           "0000100000000000010",
           "0000010000000000022",
           "0000001000000000100",
           "0000000100000000202",
           "0000000010000000222",
           "0000000001000000100",
           "0000000000100000020",
           "0000000000010000011",
           "0000000000001000110",
           "0000000000000100020",
           "0000000000000010012",
           "0000000000000001221",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_20_6_9", 20, 6, 9, "", 0,
       {
           "10000020021102222000",
           "01000012201002022221",
           "00100000222021110010",
           "00010001022101020101",
           "00001012102111001021",
           "00000120211200222212",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_20_9_7", 20, 9, 7, "", 0,
       {
           "10000000012220010121",
           "01000000012201200002",
           "00100000001202201210",
           "00010000010021010022",
           "00001000022210011222",
           "00000100012012202112",
           "00000010010000222212",
           "00000001020122121012",
           "00000000122202021101",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_20_14_4", 20, 14, 4, "", 0,
       {
           "10000000000000110221",
           "01000000000000211100",
           "00100000000000211022",
           "00010000000000110210",
           "00001000000000110100",
           "00000100000000121102",
           "00000010000000020121",
           "00000001000000021120",
           "00000000100000222111",
           "00000000010000210001",
           "00000000001000122020",
           "00000000000100101020",
           "00000000000010012001",
           "00000000000001201212",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_20_16_3", 20, 16, 3, "", 0,
       {
           "10000000000000001022",
           "01000000000000002010",
           "00100000000000001102",
           "00010000000000002112",
           "00001000000000001001",
           "00000100000000001120",
           "00000010000000002221",
           "00000001000000001200",
           "00000000100000000222",
           "00000000010000001222",
           "00000000001000001121",
           "00000000000100002120",
           "00000000000010001212",
           "00000000000001000210",
           "00000000000000101002",
           "00000000000000010201",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_20_17_2", 20, 17, 2, "", 0,
       {
           "10000000000000000200",
           "01000000000000000211",
           "00100000000000000022",
           "00010000000000000221",
           "00001000000000000020",
           "00000100000000000020",
           "00000010000000000100",
           "00000001000000000202",
           "00000000100000000222",
           "00000000010000000100",
           "00000000001000000020",
           "00000000000100000011",
           "00000000000010000110",
           "00000000000001000020",
           "00000000000000100112",
           "00000000000000010221",
           "00000000000000001010",
       },
       "search witness for a bounds-table cell",
       false},
      {"C_8_4_4", 8, 4, 4, "", 0,
       {
           "10001220",
           "01001021",
           "00102101",
           "00010221",
       },
       "search witness for a bounds-table cell",
       false},
  };
  return table;
}

inline const StandinEntry& standin(const std::string& id) {
  for (const auto& s : standin_table())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown stand-in '" + id + "'");
}

}  // namespace ternlcd
