#pragma once

#include <string>
#include <vector>

namespace turaev::test {

// PD code for the closure of a braid word.  Letter +k is the generator on
// strand positions k, k+1 whose crossing is positive (the strand entering at
// the lower left passes over); -k is its inverse.  Strands run upward and
// every strand position must be touched by some letter.
std::string braid_closure_pd(int strands, const std::vector<int>& word);

// PD code for the pretzel link P(p1,...,pk): vertical twist regions of |pi|
// crossings joined cyclically along the top and the bottom.  Positive pi
// makes the strand entering at the upper left pass over at each crossing of
// the region.
std::string pretzel_pd(const std::vector<int>& twists);

}  // namespace turaev::test
