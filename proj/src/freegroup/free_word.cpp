#include "lpi/freegroup/free_word.hpp"

#include <algorithm>
#include <cstdlib>

#include "lpi/errors.hpp"

namespace lpi {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw PreconditionError("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("exponent overflow");
  return r;
}

namespace {

// Appends s to a reduced syllable stack, cancelling as far as needed.
void push_reduced(std::vector<Syllable>& stack, Syllable s) {
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().generator == s.generator) {
    std::int64_t e = checked_add(stack.back().exponent, s.exponent);
    if (e == 0) stack.pop_back();
    else stack.back().exponent = e;
    return;
  }
  stack.push_back(s);
}

}  // namespace

FreeWord::FreeWord(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const auto& s : syllables) {
    if (s.generator < 1) throw PreconditionError("generator indices start at 1");
    push_reduced(syllables_, s);
  }
}

FreeWord FreeWord::generator(int index, std::int64_t exponent) { return FreeWord({{index, exponent}}); }

std::uint64_t FreeWord::letter_length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  return n;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (const auto& s : syllables_) m = std::max(m, s.generator);
  return m;
}

bool FreeWord::has_negative_exponent() const {
  return std::any_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.exponent < 0; });
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    r.syllables_.push_back({it->generator, checked_mul(it->exponent, -1)});
  return r;
}

FreeWord FreeWord::power(std::int64_t k) const {
  if (syllables_.empty() || k == 0) return FreeWord();
  if (syllables_.size() == 1) return FreeWord::generator(syllables_[0].generator, checked_mul(syllables_[0].exponent, k));
  std::int64_t syllable_count = static_cast<std::int64_t>(syllables_.size());
  if (checked_mul(syllable_count, k < 0 ? checked_mul(k, -1) : k) > 10'000'000)
    throw PreconditionError("word power too long");
  FreeWord base = k < 0 ? inverse() : *this;
  std::int64_t n = k < 0 ? checked_mul(k, -1) : k;
  FreeWord r;
  for (std::int64_t i = 0; i < n; ++i) r = r * base;
  return r;
}

std::int64_t FreeWord::exp_sum(int var) const {
  std::int64_t total = 0;
  for (const auto& s : syllables_)
    if (s.generator == var) total = checked_add(total, s.exponent);
  return total;
}

std::int64_t FreeWord::exp_sum_total() const {
  std::int64_t total = 0;
  for (const auto& s : syllables_) total = checked_add(total, s.exponent);
  return total;
}

FreeWord FreeWord::substitute(int var, const FreeWord& replacement) const {
  std::vector<Syllable> out;
  for (const auto& s : syllables_) {
    if (s.generator != var) {
      push_reduced(out, s);
      continue;
    }
    FreeWord image = replacement.power(s.exponent);
    for (const auto& t : image.syllables_) push_reduced(out, t);
  }
  FreeWord r;
  r.syllables_ = std::move(out);
  return r;
}

std::string FreeWord::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord r;
  r.syllables_.reserve(u.syllables_.size() + v.syllables_.size());
  r.syllables_ = u.syllables_;
  for (const auto& s : v.syllables_) push_reduced(r.syllables_, s);
  return r;
}

std::strong_ordering operator<=>(const FreeWord& u, const FreeWord& v) {
  if (auto c = u.letter_length() <=> v.letter_length(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.syllables_.begin(), u.syllables_.end(), v.syllables_.begin(),
                                                v.syllables_.end());
}

FreeWord word_multiply(const FreeWord& u, const FreeWord& v) { return u * v; }
FreeWord word_inverse(const FreeWord& u) { return u.inverse(); }
FreeWord word_substitute(const FreeWord& u, int var, const FreeWord& replacement) {
  return u.substitute(var, replacement);
}

}  // namespace lpi
