#include "turaev/corpus.hpp"

#include <stdexcept>

namespace turaev {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"unknot", "", 0, 1, true, true, true, 0, "1", "1", "1", true},
      {"unknot-kink-positive", "X[1,1,2,2]", 1, 1, true, true, false, 0, "1",
       "-A^3", "1", true},
      {"unknot-kink-negative", "X[1,2,2,1]", 1, 1, true, false, true, 0, "1",
       "-A^-3", "1", true},
      {"hopf-link", "X[1,2,3,4];X[2,1,4,3]", 2, 2, true, true, true, 0, "",
       "-A^-4 - A^4", "-A^-10 - A^-2", false},
      {"trefoil-right", "X[1,2,3,4];X[2,5,6,3];X[5,1,4,6]", 3, 1, true, true,
       true, 0, "3", "A^-7 - A^-3 - A^5", "t + t^3 - t^4", true},
      {"trefoil-left", "X[1,2,3,4];X[4,3,5,6];X[6,5,2,1]", 3, 1, true, true,
       true, 0, "3", "-A^-5 - A^3 + A^7", "-t^-4 + t^-3 + t^-1", true},
      {"figure-eight", "X[1,2,3,4];X[2,5,6,7];X[8,6,5,1];X[7,8,4,3]", 4, 1,
       true, true, true, 0, "5", "A^-8 - A^-4 + 1 - A^4 + A^8",
       "t^-2 - t^-1 + 1 - t + t^2", true},
      {"5_1", "X[1,2,3,4];X[2,5,6,3];X[5,7,8,6];X[7,9,10,8];X[9,1,4,10]", 5, 1,
       true, true, true, 0, "5", "A^-13 - A^-9 + A^-5 - A^-1 - A^7",
       "t^2 + t^4 - t^5 + t^6 - t^7", true},
      {"5_2", "X[1,2,3,4];X[5,6,4,3];X[6,5,7,8];X[9,1,8,10];X[2,9,10,7]", 5, 1,
       true, true, true, 0, "7", "A^-9 - A^-5 + A^-1 - 2A^3 + A^7 - A^11",
       "t - t^2 + 2t^3 - t^4 + t^5 - t^6", true},
      {"6_1",
       "X[1,2,3,4];X[5,6,4,3];X[6,5,7,8];X[9,10,8,7];X[10,11,12,1];"
       "X[2,12,11,9]",
       6, 1, true, true, true, 0, "9",
       "A^-10 - A^-6 + A^-2 - 2A^2 + 2A^6 - A^10 + A^14",
       "t^-2 - t^-1 + 2 - 2t + t^2 - t^3 + t^4", true},
      {"6_2",
       "X[1,2,3,4];X[4,3,5,6];X[6,5,7,8];X[9,1,10,11];X[8,12,11,10];"
       "X[12,7,2,9]",
       6, 1, true, true, true, 0, "11",
       "A^-10 - A^-6 + 2A^-2 - 2A^2 + 2A^6 - 2A^10 + A^14",
       "t^-5 - 2t^-4 + 2t^-3 - 2t^-2 + 2t^-1 - 1 + t", true},
      {"6_3",
       "X[1,2,3,4];X[4,3,5,6];X[7,8,9,5];X[6,9,10,1];X[8,11,12,10];"
       "X[11,7,2,12]",
       6, 1, true, true, true, 0, "13",
       "-A^-12 + 2A^-8 - 2A^-4 + 3 - 2A^4 + 2A^8 - A^12",
       "-t^-3 + 2t^-2 - 2t^-1 + 3 - 2t + 2t^2 - t^3", true},
      {"7_4",
       "X[1,2,3,4];X[5,6,4,3];X[6,5,7,8];X[9,1,10,11];X[12,13,11,10];"
       "X[13,12,8,14];X[2,9,14,7]",
       7, 1, true, true, true, 0, "15",
       "A^-11 - A^-7 + 2A^-3 - 3A + 2A^5 - 3A^9 + 2A^13 - A^17",
       "t - 2t^2 + 3t^3 - 2t^4 + 3t^5 - 2t^6 + t^7 - t^8", true},
      {"pretzel-3m23",
       "X[1,2,3,4];X[4,3,5,6];X[6,5,7,8];X[9,10,1,11];X[11,8,12,9];"
       "X[13,14,2,10];X[15,16,14,13];X[12,7,16,15]",
       8, 1, false, false, true, 1, "3", "A^-12 + A^-4 - A^8",
       "-t^-8 + t^-5 + t^-3", true},
      {"pretzel-5m23",
       "X[1,2,3,4];X[4,3,5,6];X[6,5,7,8];X[8,7,9,10];X[10,9,11,12];"
       "X[13,14,1,15];X[15,12,16,13];X[17,18,2,14];X[19,20,18,17];"
       "X[16,11,20,19]",
       10, 1, false, false, true, 1, "1", "A^-14 + A^-6 - A^10",
       "-t^-10 + t^-6 + t^-4", true},
      {"torus-3-4",
       "X[1,2,3,4];X[5,6,7,2];X[7,8,9,3];X[6,10,11,8];X[11,12,13,9];"
       "X[10,14,15,12];X[15,16,4,13];X[14,5,1,16]",
       8, 1, false, true, false, 3, "3", "-A^-8 + A^4 + A^12",
       "t^3 + t^5 - t^8", true},
      {"8_20",
       "X[1,2,3,4];X[2,5,6,3];X[5,7,8,6];X[7,9,10,11];X[8,11,12,13];"
       "X[13,12,14,15];X[15,14,16,4];X[16,10,9,1]",
       8, 1, false, true, false, 1, "9",
       "-A^-10 + 2A^-6 - A^-2 + 2A^2 - A^6 + A^10 - A^14",
       "-t^-5 + t^-4 - t^-3 + 2t^-2 - t^-1 + 2 - t", true},
      {"split-kinks", "X[1,1,2,2];X[3,3,4,4]", 2, 2, true, true, false, -1, "",
       "-A^4 - A^8", "-A^-2 - A^2", false},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& entry : corpus())
    if (entry.name == name) return entry;
  throw std::out_of_range("no corpus entry named '" + name + "'");
}

}  // namespace turaev
