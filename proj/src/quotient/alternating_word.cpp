#include "lpi/quotient/quotient.hpp"

#include "lpi/errors.hpp"

namespace lpi {

AlternatingWord AlternatingWord::from_letters(std::string_view letters) {
  if (letters.empty()) return AlternatingWord();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != 'x' && letters[i] != 'y')
      throw PreconditionError(std::string("letter '") + letters[i] + "' is not x or y");
    if (i > 0 && letters[i] == letters[i - 1])
      throw PreconditionError("'" + std::string(letters) + "' is not alternating");
  }
  return AlternatingWord(letters[0] == 'x' ? Letter::x : Letter::y, static_cast<std::uint32_t>(letters.size()));
}

std::string AlternatingWord::letters() const {
  std::string out;
  Letter l = first_;
  for (std::uint32_t i = 0; i < length_; ++i, l = other(l)) out += letter_char(l);
  return out;
}

std::string AlternatingWord::str() const {
  if (length_ == 0) return "1";
  std::string out;
  for (char c : letters()) {
    if (!out.empty()) out += "*";
    out += c;
  }
  return out;
}

}  // namespace lpi
