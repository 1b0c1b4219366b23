#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lpi {

// One syllable x_g^e of a free-group word. Generators are 1-based.
struct Syllable {
  int generator = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Reduced word of the free group F_l. The constructor reduces eagerly, so
// adjacent syllables always have distinct generators and no exponent is 0.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Syllable> syllables);

  static FreeWord generator(int index, std::int64_t exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Total number of letters: sum of |exponent|.
  std::uint64_t letter_length() const;
  // Largest generator index occurring, 0 for the identity.
  int max_generator() const;
  bool has_negative_exponent() const;

  FreeWord inverse() const;
  FreeWord power(std::int64_t k) const;

  // Sum of the exponents of x_var.
  std::int64_t exp_sum(int var) const;
  // Sum of all exponents.
  std::int64_t exp_sum_total() const;

  // Homomorphic image under x_var -> replacement, other generators fixed.
  FreeWord substitute(int var, const FreeWord& replacement) const;

  // "x1^2*x2^-1"; the identity prints as "1".
  std::string str() const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  // Canonical order: letter length, then lexicographic on syllables.
  friend std::strong_ordering operator<=>(const FreeWord& u, const FreeWord& v);

 private:
  std::vector<Syllable> syllables_;
};

FreeWord word_multiply(const FreeWord& u, const FreeWord& v);
FreeWord word_inverse(const FreeWord& u);
FreeWord word_substitute(const FreeWord& u, int var, const FreeWord& replacement);

// Checked int64 arithmetic for exponents; throws PreconditionError on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace lpi
