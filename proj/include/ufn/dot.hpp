#pragma once

#include <functional>
#include <string>

#include "ufn/quiver.hpp"
#include "ufn/word.hpp"

namespace ufn {

// Arrow captions in DOT output: the full defining word of each arrow (its
// name), or just the letter it is labelled by.
enum class ArrowNaming { payload, label };

// letter_name supplies the caption for label mode; arrows without a stored
// label, or a missing namer, fall back to the arrow name.
std::string to_dot(const Quiver& q, ArrowNaming naming = ArrowNaming::payload,
                   const std::function<std::string(Letter)>& letter_name = {});

}  // namespace ufn
