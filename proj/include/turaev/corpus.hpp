#pragma once

#include <string>
#include <vector>

#include "turaev/polynomial.hpp"

namespace turaev {

// One frozen reference diagram.  The stored values were generated by this
// library's own routines (each one confirmed by at least two independent
// methods) and are committed so that regressions show up as data mismatches.
// Names follow the usual knot tables up to mirror image; determinant is empty
// for links, and turaev_genus is -1 for the split entry, where it is not
// defined.  The split code exists only to exercise the extra-circle axiom.
struct CorpusEntry {
  std::string name;
  std::string pd;
  int crossings = 0;
  int components = 0;
  bool alternating = false;
  bool a_adequate = false, b_adequate = false;
  int turaev_genus = 0;
  std::string determinant;
  std::string bracket;  // canonical text of <D>
  std::string jones;    // canonical text of V, in t when jones_t_form
  bool jones_t_form = false;
};

const std::vector<CorpusEntry>& corpus();

// The entry with the given name; throws std::out_of_range when absent.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace turaev
