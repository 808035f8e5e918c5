#include "wordrel/generator.hpp"

#include "wordrel/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace wordrel {

namespace {

int sign(const BigInt& x) { return x.sign(); }

bool is_perfect_square(const BigInt& d) {
  if (d < 0) return false;
  BigInt root = boost::multiprecision::sqrt(d);
  return root * root == d;
}

// x = (p + q·sqrt(d)) / r rewritten with r > 0.
QuadraticNumber normalized(QuadraticNumber x) {
  if (x.r == 0) throw DomainError("quadratic number with zero denominator");
  if (x.d < 0) throw DomainError("quadratic number needs d >= 0");
  if (x.r < 0) {
    x.p = -x.p;
    x.q = -x.q;
    x.r = -x.r;
  }
  if (x.d == 0) x.q = 0;
  return x;
}

}  // namespace

bool QuadraticNumber::is_irrational() const { return q != 0 && d > 0 && !is_perfect_square(d); }

int sign_of(const BigInt& a, const BigInt& b, const BigInt& d) {
  if (b == 0 || d == 0) return sign(a);
  const int sa = sign(a);
  const int sb = sign(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  // a and b have opposite signs: the larger magnitude wins.
  if (sa > 0) return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  return rhs > lhs ? 1 : (lhs == rhs ? 0 : -1);
}

int compare(const QuadraticNumber& x_in, const QuadraticNumber& y_in) {
  auto x = normalized(x_in);
  auto y = normalized(y_in);
  if (x.q != 0 && y.q != 0 && x.d != y.d)
    throw DomainError("quadratic numbers over different square roots");
  const BigInt& d = x.q != 0 ? x.d : y.d;
  // x - y = (x.p·y.r - y.p·x.r + (x.q·y.r - y.q·x.r)·sqrt(d)) / (x.r·y.r)
  return sign_of(x.p * y.r - y.p * x.r, x.q * y.r - y.q * x.r, d);
}

// ---------------------------------------------------------------------------

InfiniteWord InfiniteWord::morphic(Morphism f, Morphism coding, Letter seed, Alphabet alphabet) {
  if (!f.is_endomorphism()) throw DomainError("morphic generator needs an endomorphism");
  if (!coding.is_coding() || coding.domain_size() != f.domain_size())
    throw DomainError("morphic generator needs a coding on the morphism's alphabet");
  if (seed >= f.domain_size()) throw DomainError("seed letter outside the morphism alphabet");
  if (alphabet.size() != coding.codomain_size())
    throw DomainError("output alphabet does not match the coding");
  return InfiniteWord(Morphic{std::move(f), std::move(coding), seed}, std::move(alphabet));
}

InfiniteWord InfiniteWord::morphic(Morphism f, Letter seed) {
  auto k = f.domain_size();
  auto alphabet = k <= 36 ? Alphabet::digits(k) : throw DomainError("alphabet too large");
  return morphic(std::move(f), Morphism::identity(k), seed, std::move(alphabet));
}

InfiniteWord InfiniteWord::rotation(QuadraticNumber alpha, QuadraticNumber start) {
  alpha = normalized(std::move(alpha));
  start = normalized(std::move(start));
  if (!alpha.is_irrational()) throw DomainError("rotation angle must be a quadratic irrational");
  if (compare(alpha, QuadraticNumber::integer(0)) <= 0 ||
      compare(alpha, QuadraticNumber::integer(1)) >= 0)
    throw DomainError("rotation angle must lie in (0,1)");
  if (start.q != 0 && start.d != alpha.d)
    throw DomainError("initial point must be rational or share the angle's square root");
  if (compare(start, QuadraticNumber::integer(0)) < 0 ||
      compare(start, QuadraticNumber::integer(1)) >= 0)
    throw DomainError("initial point must lie in [0,1)");
  return InfiniteWord(Rotation{std::move(alpha), std::move(start)}, Alphabet::digits(2));
}

InfiniteWord InfiniteWord::sum_of_digits(unsigned base, unsigned modulus) {
  if (base < 2 || modulus < 2) throw DomainError("sum-of-digits needs base >= 2 and modulus >= 2");
  if (modulus > 36) throw DomainError("sum-of-digits modulus must be at most 36");
  return InfiniteWord(SumOfDigits{base, modulus}, Alphabet::digits(modulus));
}

InfiniteWord InfiniteWord::ultimately_periodic(Word preperiod, Word period, Alphabet alphabet) {
  if (period.empty()) throw DomainError("period must be non-empty");
  for (const Word* w : {&preperiod, &period})
    for (Letter a : *w)
      if (a >= alphabet.size()) throw DomainError("letter outside alphabet");
  return InfiniteWord(UltimatelyPeriodic{std::move(preperiod), std::move(period)},
                      std::move(alphabet));
}

InfiniteWord InfiniteWord::image(InfiniteWord base, Morphism f, Alphabet alphabet) {
  if (!f.is_nonerasing()) throw DomainError("image generator needs a non-erasing morphism");
  if (f.domain_size() != base.alphabet_size())
    throw DomainError("morphism domain does not match the base word's alphabet");
  if (alphabet.size() != f.codomain_size())
    throw DomainError("output alphabet does not match the morphism codomain");
  return InfiniteWord(Image{std::make_shared<const InfiniteWord>(std::move(base)), std::move(f)},
                      std::move(alphabet));
}

InfiniteWord InfiniteWord::thue_morse() {
  return morphic(Morphism(2, 2, {Word{0, 1}, Word{1, 0}}), 0);
}

InfiniteWord InfiniteWord::tribonacci() {
  return morphic(Morphism(3, 3, {Word{0, 1}, Word{0, 2}, Word{0}}), 0);
}

InfiniteWord InfiniteWord::golden_rotation() {
  return rotation(QuadraticNumber{-1, 1, 5, 2});
}

// ---------------------------------------------------------------------------

namespace {

Word morphic_prefix(const InfiniteWord::Morphic& m, std::size_t n) {
  if (!is_prolongable(m.f, m.seed)) throw DomainError("morphism is not prolongable on the seed");
  // x = f(x): appending f(x[j]) for j = 0, 1, ... reproduces x from its first letter.
  Word x{m.seed};
  x.reserve(n + 64);
  for (std::size_t j = 0; x.size() < n; ++j) {
    if (j >= x.size()) throw Error("morphic prefix generation stalled");
    const Word& img = m.f.image(x[j]);
    x.append(j == 0 ? img.view().subspan(1) : img.view());
  }
  x.truncate(n);
  return m.coding.apply(x);
}

Word rotation_prefix(const InfiniteWord::Rotation& rot, std::size_t n) {
  const auto& a = rot.alpha;
  const auto& s = rot.start;
  const BigInt& d = a.d;
  // x_m = (P0 + m·P + (Q0 + m·Q)·sqrt(d)) / R over the common denominator R = a.r·s.r.
  const BigInt den = a.r * s.r;
  const BigInt p_step = a.p * s.r;
  const BigInt q_step = a.q * s.r;
  BigInt p_acc = s.p * a.r;
  BigInt q_acc = s.q * a.r;
  BigInt floor_value = 0;  // floor(x_0) = 0 since x_0 is in [0,1)

  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    p_acc += p_step;
    q_acc += q_step;
    // floor(x_{m+1}) is floor(x_m) or floor(x_m) + 1 because 0 < alpha < 1.
    const BigInt threshold = (floor_value + 1) * den;
    const bool crossed = sign_of(p_acc - threshold, q_acc, d) >= 0;
    if (crossed) ++floor_value;
    out.push_back(crossed ? 1 : 0);
  }
  return Word(std::move(out));
}

Word sum_of_digits_prefix(const InfiniteWord::SumOfDigits& s, std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i;
    std::size_t sum = 0;
    while (v > 0) {
      sum += v % s.base;
      v /= s.base;
    }
    out.push_back(static_cast<Letter>(sum % s.modulus));
  }
  return Word(std::move(out));
}

Word periodic_prefix(const InfiniteWord::UltimatelyPeriodic& u, std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < u.preperiod.size()) out.push_back(u.preperiod[i]);
    else out.push_back(u.period[(i - u.preperiod.size()) % u.period.size()]);
  }
  return out;
}

Word image_prefix(const InfiniteWord::Image& im, std::size_t n) {
  std::size_t shortest = im.f.image(0).size();
  for (const auto& img : im.f.images()) shortest = std::min(shortest, img.size());
  const std::size_t needed = (n + shortest - 1) / shortest;
  Word out = im.f.apply(im.base->prefix(needed));
  out.truncate(n);
  return out;
}

}  // namespace

Word InfiniteWord::prefix(std::size_t n) const {
  if (n == 0) return Word{};
  return std::visit(
      [n](const auto& v) -> Word {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Morphic>) return morphic_prefix(v, n);
        else if constexpr (std::is_same_v<T, Rotation>) return rotation_prefix(v, n);
        else if constexpr (std::is_same_v<T, SumOfDigits>) return sum_of_digits_prefix(v, n);
        else if constexpr (std::is_same_v<T, UltimatelyPeriodic>) return periodic_prefix(v, n);
        else return image_prefix(v, n);
      },
      variant_);
}

Word prefix(const InfiniteWord& gen, std::size_t n) { return gen.prefix(n); }

}  // namespace wordrel
