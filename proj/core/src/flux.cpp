#include "peierls/flux.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "peierls/errors.hpp"

namespace peierls {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::flux_parse: return "flux-parse";
    case Errc::rational_flux_unsupported: return "rational-flux-unsupported";
    case Errc::non_reduced_fraction: return "non-reduced-fraction";
    case Errc::depth_exceeds_expansion: return "depth-exceeds-expansion";
    case Errc::incompatible_periodicity: return "incompatible-periodicity";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::truncation_too_small: return "truncation-too-small";
    case Errc::dataset_format: return "dataset-format";
  }
  return "unknown";
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::vector<std::int64_t> repeated_expansion(std::int64_t term, std::size_t count) {
  std::vector<std::int64_t> cf(count + 1, term);
  cf[0] = 0;
  return cf;
}

Flux parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw Error(Errc::flux_parse, "empty decimal literal '" + std::string(text) + "'");
  }
  auto all_digits = [](std::string_view s) {
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (!all_digits(int_part) || !all_digits(frac_part)) {
    throw Error(Errc::flux_parse, "unrecognized flux '" + std::string(text) + "'");
  }
  if (frac_part.size() > 17) {
    throw Error(Errc::flux_parse, "decimal flux limited to 17 fractional digits");
  }

  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  std::int64_t frac_num = 0;
  if (!frac_part.empty()) {
    std::from_chars(frac_part.data(), frac_part.data() + frac_part.size(), frac_num);
  }
  // Only the fractional part survives canonicalization; the integer part
  // affects it solely through the sign.
  if (negative && frac_num != 0) frac_num = den - frac_num;
  if (frac_num == 0) {
    throw Error(Errc::flux_parse, "decimal flux '" + std::string(text) +
                                      "' is an integer; write it as a fraction such as 0/1");
  }
  const std::int64_t g = std::gcd(frac_num, den);
  frac_num /= g;
  den /= g;
  const double value = static_cast<double>(frac_num) / static_cast<double>(den);
  return Flux::irrational(value, continued_fraction_of(frac_num, den));
}

}  // namespace

Flux Flux::rational(std::int64_t nu, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_parameters, "flux denominator must be nonzero");
  if (den < 0) {
    nu = -nu;
    den = -den;
  }
  nu = floor_mod(nu, den);
  const std::int64_t g = std::gcd(nu, den);
  Flux f;
  f.kind_ = Kind::rational;
  f.nu_ = nu / g;
  f.den_ = den / g;
  f.value_ = static_cast<double>(f.nu_) / static_cast<double>(f.den_);
  f.cf_ = continued_fraction_of(f.nu_, f.den_);
  return f;
}

Flux Flux::irrational(double value, std::vector<std::int64_t> cf, std::string name) {
  if (!std::isfinite(value)) throw Error(Errc::invalid_parameters, "flux value must be finite");
  Flux f;
  f.kind_ = Kind::irrational;
  f.nu_ = 0;
  f.den_ = 0;
  f.value_ = value - std::floor(value);
  if (cf.empty()) cf.push_back(0);
  cf[0] = 0;
  f.cf_ = std::move(cf);
  f.name_ = std::move(name);
  return f;
}

Flux Flux::golden() {
  return irrational(std::numbers::phi - 1.0, repeated_expansion(1, 40), "golden");
}

Flux Flux::sqrt2() { return irrational(std::numbers::sqrt2 - 1.0, repeated_expansion(2, 40), "sqrt2"); }

Flux Flux::pi_minus_3() {
  return irrational(std::numbers::pi - 3.0,
                    {0, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2,
                     2, 2, 2, 1, 84, 2, 1, 1, 15, 3, 13, 1, 4, 2, 6, 6},
                    "pi3");
}

Flux Flux::parse(std::string_view text) {
  if (text == "golden") return golden();
  if (text == "sqrt2") return sqrt2();
  if (text == "pi3") return pi_minus_3();
  if (text.empty()) throw Error(Errc::flux_parse, "empty flux");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    const auto lhs = text.substr(0, slash);
    const auto rhs = text.substr(slash + 1);
    auto parse_int = [&](std::string_view s, std::int64_t& out) {
      const char* first = s.data();
      if (!s.empty() && s.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
      return ec == std::errc{} && ptr == s.data() + s.size() && first != s.data() + s.size();
    };
    if (!parse_int(lhs, num) || !parse_int(rhs, den)) {
      throw Error(Errc::flux_parse, "malformed fraction '" + std::string(text) + "'");
    }
    if (den == 0) throw Error(Errc::flux_parse, "zero denominator in '" + std::string(text) + "'");
    return rational(num, den);
  }

  const char first = text.front();
  if ((first >= '0' && first <= '9') || first == '.' || first == '-' || first == '+') {
    return parse_decimal(text);
  }
  throw Error(Errc::flux_parse, "unknown flux name '" + std::string(text) + "'");
}

double Flux::theta() const noexcept { return 2.0 * std::numbers::pi * value_; }

Flux Flux::shifted(std::int64_t k) const {
  if (is_rational()) return rational(nu_ + k * den_, den_);
  return *this;
}

std::string Flux::to_string() const {
  if (is_rational()) return std::to_string(nu_) + "/" + std::to_string(den_);
  if (!name_.empty()) return name_;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", value_);
  return buf;
}

bool operator==(const Flux& a, const Flux& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  if (a.is_rational()) return a.nu_ == b.nu_ && a.den_ == b.den_;
  return a.value_ == b.value_ && a.cf_ == b.cf_;
}

std::vector<std::int64_t> continued_fraction_of(std::int64_t num, std::int64_t den) {
  std::vector<std::int64_t> cf;
  std::int64_t a0 = num / den;
  std::int64_t r = num % den;
  if (r < 0) {
    r += den;
    --a0;
  }
  cf.push_back(a0);
  num = den;
  den = r;
  while (den != 0) {
    cf.push_back(num / den);
    const std::int64_t next = num % den;
    num = den;
    den = next;
  }
  return cf;
}

std::vector<Fraction> convergents(std::span<const std::int64_t> cf, int depth) {
  if (depth < 1) throw Error(Errc::invalid_parameters, "depth must be positive");
  if (cf.size() < static_cast<std::size_t>(depth) + 1) {
    throw Error(Errc::depth_exceeds_expansion, "requested depth " + std::to_string(depth) +
                                                   " but only " + std::to_string(cf.size() - 1) +
                                                   " partial quotients are known");
  }
  std::vector<Fraction> out;
  std::int64_t h_prev = 1, h = cf[0];
  std::int64_t k_prev = 0, k = 1;
  for (int i = 1; i <= depth; ++i) {
    std::int64_t h_next = 0, k_next = 0;
    if (__builtin_mul_overflow(cf[i], h, &h_next) || __builtin_add_overflow(h_next, h_prev, &h_next) ||
        __builtin_mul_overflow(cf[i], k, &k_next) || __builtin_add_overflow(k_next, k_prev, &k_next)) {
      throw Error(Errc::depth_exceeds_expansion, "convergent " + std::to_string(i) + " overflows");
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    out.push_back({h, k});
  }
  return out;
}

}  // namespace peierls
