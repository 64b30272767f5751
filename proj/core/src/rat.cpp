#include "exotic/rat.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace exotic {

Rat make_rat(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("make_rat: zero denominator");
  }
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

IntSqrtResult int_sqrt(const Int& n) {
  if (n < 0) {
    throw std::domain_error("int_sqrt: negative input");
  }
  IntSqrtResult out;
  Int rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = (rem == 0);
  return out;
}

bool is_square(const Int& n) {
  if (n < 0) {
    return false;
  }
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) {
    return std::nullopt;
  }
  // Canonical form: q square iff numerator and denominator are both squares.
  const auto num = int_sqrt(q.get_num());
  if (!num.exact) {
    return std::nullopt;
  }
  const auto den = int_sqrt(q.get_den());
  if (!den.exact) {
    return std::nullopt;
  }
  return make_rat(num.root, den.root);
}

Int height(const Rat& q) {
  Int n = abs(q.get_num());
  return n > q.get_den() ? n : Int(q.get_den());
}

std::vector<Rat> enumerate_rats(long h_max) {
  if (h_max < 1) {
    throw std::domain_error("enumerate_rats: h_max must be >= 1");
  }
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(4 * h_max));
  for (long h = 1; h <= h_max; ++h) {
    // Values of height exactly h, ordered by (|num|, den), + before -.
    if (h == 1) {
      out.push_back(make_rat(0));
    }
    for (long m = 1; m < h; ++m) {
      if (std::gcd(m, h) == 1) {
        out.push_back(make_rat(m, h));
        out.push_back(make_rat(-m, h));
      }
    }
    const long d_max = (h == 1) ? 1 : h - 1;
    for (long d = 1; d <= d_max; ++d) {
      if (std::gcd(h, d) == 1) {
        out.push_back(make_rat(h, d));
        out.push_back(make_rat(-h, d));
      }
    }
  }
  return out;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

std::optional<Rat> try_parse_rat(std::string_view text) {
  // Shape: -?digits(/digits)?
  auto all_digits = [](std::string_view s) {
    if (s.empty()) {
      return false;
    }
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        return false;
      }
    }
    return true;
  };

  const bool negative = !text.empty() && text.front() == '-';
  std::string_view rest = negative ? text.substr(1) : text;
  const std::size_t slash = rest.find('/');
  std::string_view num_part = rest.substr(0, slash);
  if (!all_digits(num_part)) {
    return std::nullopt;
  }
  Int den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      return std::nullopt;
    }
    den = Int(std::string(den_part), 10);
    if (den == 0) {
      return std::nullopt;
    }
  }
  Int num(std::string(num_part), 10);
  if (negative) {
    num = -num;
  }
  return make_rat(std::move(num), std::move(den));
}

Rat parse_rat(std::string_view text) {
  auto q = try_parse_rat(text);
  if (!q) {
    throw std::invalid_argument("parse_rat: malformed rational '" + std::string(text) + "'");
  }
  return *std::move(q);
}

}  // namespace exotic
