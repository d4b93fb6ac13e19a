#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistdec/error.hpp"

namespace twistdec {

// Permutation of {1..n} in image-list form. Points and symbols are 1-based
// throughout, matching the text formats. The action is on the right:
// apply(x) is x^g, and compose(g,h) applies g first, so x^(gh) = (x^g)^h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  static Permutation from_images(std::vector<int> images);
  // Accepts cycle notation "(1,4,6)(2,7)", "()" for the identity, or an
  // image list "[4,7,1,6,3,8,2,5]". The degree is always explicit.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& then) const;  // this first
  Permutation inverse() const;
  int fix_count() const;
  bool is_identity() const;

  std::string to_cycles() const;
  std::string to_list() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// x^g for 1-based x.
inline int image_of(int x, const Permutation& g) { return g.apply(x); }

// Hamming distance between equal-degree permutations: n - fix(g h^-1).
int hamming_distance(const Permutation& g, const Permutation& h);

// A received or transmitted word: symbols from {1..alphabet}, any length.
// Codewords of a degree-n code with lambda components have length lambda*n,
// but corrupted words need no structure beyond the symbol range.
struct Word {
  std::vector<int> symbols;
  int alphabet = 0;

  Word() = default;
  Word(std::vector<int> syms, int alphabet_size);
  int length() const { return static_cast<int>(symbols.size()); }
};

int hamming_distance(const Word& a, const Word& b);

// "[4,7,1,6,3,8,2,5|7,4,6,1,8,3,5,2]"; brackets optional, components
// separated by '|', symbols by commas or spaces.
Word parse_word(std::string_view text, int alphabet);
std::string format_word(const Word& w, int component_length);

}  // namespace twistdec
