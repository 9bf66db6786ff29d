#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperharm/moebius.hpp"

namespace hyperharm {

// Letter 2i is generator i, letter 2i+1 its inverse.
using Word = std::vector<int>;

inline int inverse_letter(int l) { return l ^ 1; }
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

inline constexpr std::uint64_t kWordCap = 10'000'000;

struct GroupPresentation {
  int genus = 0;
  std::vector<MoebiusMap> generators;  // a1, b1, ..., ag, bg
  // Optional side pairings of a Dirichlet domain centred at 0 (disk model),
  // each with its expression in the generators. Used for point reduction
  // and for canonical element enumeration.
  std::vector<MoebiusMap> side_pairings;
  std::vector<Word> side_pairing_words;

  MoebiusMap letter(int l) const;
  MoebiusMap evaluate(const Word& w) const;
  Word relation() const;  // a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1
  double relation_residual() const;
  std::vector<std::string> generator_names() const;
  bool has_side_pairings() const { return !side_pairings.empty(); }
  // Letters 2k / 2k+1 address side pairing k and its inverse.
  MoebiusMap pairing_letter(int l) const;
  void validate() const;
};

// Regular-octagon genus-2 group (SU(1,1)). Throws ConstructionFailed if the
// relation check fails.
GroupPresentation octagon_group();

std::uint64_t reduced_word_count(int generators, int max_len);

// Depth-first walk over reduced words of length <= max_len in the letters of
// `gens`; visit(word, product) is called once per word, identity included.
// Throws TruncationTooLarge beyond `cap` words.
void enumerate_words(const std::vector<MoebiusMap>& gens, int max_len,
                     const std::function<void(const Word&, const MoebiusMap&)>& visit, std::uint64_t cap = kWordCap);

struct WordCensus {
  std::uint64_t words = 0;
  std::uint64_t identity_words = 0;  // non-empty words evaluating to +-I
  std::uint64_t non_hyperbolic = 0;  // non-identity, non-hyperbolic
  std::uint64_t distinct_elements = 0;
  double min_trace_squared = 0.0;
};
// Classifies every reduced word of length <= max_len; distinct elements are
// counted by matrix distance < 1e-8 when count_distinct is set.
WordCensus word_census(const GroupPresentation& g, int max_len, bool count_distinct);

// Greedy Dirichlet reduction of a disk point by the side pairings: returns the
// reduced point and the element R with R(w) = reduced.
struct Reduction {
  Complex point;
  MoebiusMap element;
  Word letters;  // pairing letters in the order applied
};
Reduction reduce_to_domain(const GroupPresentation& g, Complex w, int max_steps = 500);

// m as a word in pairing letters (product left to right), found by reducing
// m(0). Throws ConstructionFailed if the reduced element is not m.
Word pairing_word(const GroupPresentation& g, const MoebiusMap& m);

// The same reduction carried out on the half-plane with the Cayley-conjugated
// pairings (domain centred at i). Points close to the real axis or to infinity
// keep their hyperbolic precision here, unlike after a transport to the disk.
class HalfPlaneReducer {
 public:
  explicit HalfPlaneReducer(const GroupPresentation& g);
  Reduction reduce(Complex z, int max_steps = 500) const;

 private:
  std::vector<MoebiusMap> letters_;
};

// Elements whose canonical (greedy-reduction) pairing word has length <= L,
// each listed once. Calls visit(word, element); the word is in pairing letters.
void enumerate_elements(const GroupPresentation& g, int max_len,
                        const std::function<void(const Word&, const MoebiusMap&)>& visit,
                        std::uint64_t cap = kWordCap);
std::vector<MoebiusMap> group_ball(const GroupPresentation& g, int max_len);

// Numerical rank of d/d(u,v) of the commutator [A e^{hu}, B e^{hv}] at 0.
int commutator_rank(const MoebiusMap& a, const MoebiusMap& b, double h = 1e-6);

}  // namespace hyperharm
