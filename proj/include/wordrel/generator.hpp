#pragma once

#include "wordrel/bigint.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <memory>
#include <variant>

namespace wordrel {

// (p + q·sqrt(d)) / r with integers p, q, r != 0, d >= 0.
struct QuadraticNumber {
  BigInt p = 0;
  BigInt q = 0;
  BigInt d = 0;
  BigInt r = 1;

  static QuadraticNumber integer(BigInt value) { return {std::move(value), 0, 0, 1}; }
  bool is_irrational() const;
};

// Sign of a + b·sqrt(d), exactly.
int sign_of(const BigInt& a, const BigInt& b, const BigInt& d);

// Sign of x - y for two numbers over the same sqrt(d) (or rationals).
int compare(const QuadraticNumber& x, const QuadraticNumber& y);

class InfiniteWord {
 public:
  struct Morphic {
    Morphism f;
    Morphism coding;
    Letter seed;
  };
  // Coding of n -> {x0 + n·alpha}: [0, 1-alpha) gives 0, [1-alpha, 1) gives 1.
  struct Rotation {
    QuadraticNumber alpha;
    QuadraticNumber start;
  };
  // (s_base(n) mod modulus)_n where s_base is the base-`base` digit sum.
  struct SumOfDigits {
    unsigned base;
    unsigned modulus;
  };
  struct UltimatelyPeriodic {
    Word preperiod;
    Word period;
  };
  // f applied to another infinite word; f must be non-erasing.
  struct Image {
    std::shared_ptr<const InfiniteWord> base;
    Morphism f;
  };
  using Variant = std::variant<Morphic, Rotation, SumOfDigits, UltimatelyPeriodic, Image>;

  static InfiniteWord morphic(Morphism f, Morphism coding, Letter seed, Alphabet alphabet);
  static InfiniteWord morphic(Morphism f, Letter seed);
  static InfiniteWord rotation(QuadraticNumber alpha, QuadraticNumber start = {});
  static InfiniteWord sum_of_digits(unsigned base, unsigned modulus);
  static InfiniteWord ultimately_periodic(Word preperiod, Word period, Alphabet alphabet);
  static InfiniteWord image(InfiniteWord base, Morphism f, Alphabet alphabet);

  // 0110100110010110... (a -> ab, b -> ba from a, over {0,1}).
  static InfiniteWord thue_morse();
  // Fixed point of 0 -> 01, 1 -> 02, 2 -> 0.
  static InfiniteWord tribonacci();
  // Rotation by (sqrt(5) - 1) / 2 from x0 = 0.
  static InfiniteWord golden_rotation();

  const Variant& variant() const noexcept { return variant_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }

  // First n letters. Pure and prefix-monotone in n.
  Word prefix(std::size_t n) const;

 private:
  InfiniteWord(Variant variant, Alphabet alphabet)
      : variant_(std::move(variant)), alphabet_(std::move(alphabet)) {}

  Variant variant_;
  Alphabet alphabet_;
};

Word prefix(const InfiniteWord& gen, std::size_t n);

}  // namespace wordrel
