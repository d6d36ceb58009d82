#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ufn {

// A letter is an index into the generator list of a Presentation.
using Letter = std::int32_t;

// A word in the free monoid on the generators; the empty word is the unit.
using Word = std::vector<Letter>;

Word concat(const Word& u, const Word& v);

// First `len` letters; `len` must not exceed the length of `w`.
Word prefix(const Word& w, std::size_t len);

// Last `len` letters; `len` must not exceed the length of `w`.
Word suffix(const Word& w, std::size_t len);

// True when `factor` occurs as a contiguous subword of `w`.
// The empty word is a factor of every word.
bool is_factor(const Word& factor, const Word& w);

// True when `tail` is a suffix of `w`.
bool ends_with(const Word& w, const Word& tail);

}  // namespace ufn
