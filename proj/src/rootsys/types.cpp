#include "homrat/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace homrat {

std::string SimpleType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void validate(const SimpleType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw std::invalid_argument("rank out of range for type " + t.str());
}

bool canonical_less(const SimpleType& a, const SimpleType& b) {
  if (a.family != b.family) return a.family < b.family;
  return a.rank > b.rank;
}

namespace {

// Low-rank aliases. Anything else must already be a catalogued type.
void normalize_into(const SimpleType& t, std::vector<SimpleType>& out) {
  const auto f = t.family;
  if ((f == Family::B || f == Family::C) && t.rank == 1) {
    out.push_back({Family::A, 1});
  } else if (f == Family::B && t.rank == 2) {
    out.push_back({Family::C, 2});
  } else if (f == Family::D && t.rank == 2) {
    out.push_back({Family::A, 1});
    out.push_back({Family::A, 1});
  } else if (f == Family::D && t.rank == 3) {
    out.push_back({Family::A, 3});
  } else {
    validate(t);
    out.push_back(t);
  }
}

}  // namespace

SemisimpleType::SemisimpleType(std::vector<SimpleType> components) {
  components_.reserve(components.size());
  for (const auto& c : components) normalize_into(c, components_);
  std::sort(components_.begin(), components_.end(), canonical_less);
}

int SemisimpleType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string SemisimpleType::str() const {
  if (components_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += components_[i].str();
    i = j;
  }
  return out;
}

SemisimpleType SemisimpleType::operator+(const SemisimpleType& other) const {
  std::vector<SimpleType> all = components_;
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  return SemisimpleType(std::move(all));
}

std::strong_ordering operator<=>(const SemisimpleType& a, const SemisimpleType& b) {
  const auto& x = a.components_;
  const auto& y = b.components_;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] == y[i]) continue;
    return canonical_less(x[i], y[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

ParseError::ParseError(std::size_t position, std::string token, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(position) + " ('" + token +
                            "'): " + message),
      position_(position),
      token_(std::move(token)),
      message_(message) {}

SemisimpleType parse_type(std::string_view text) {
  // Strip whitespace but remember original offsets for diagnostics.
  std::string s;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    s.push_back(text[i]);
    offset.push_back(i);
  }
  if (s.empty()) throw ParseError(0, std::string(text), "empty type string");

  std::vector<SimpleType> comps;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string token = s.substr(start, end - start);
    const std::size_t where = start < offset.size() ? offset[start] : text.size();
    if (token.empty()) throw ParseError(where, token, "empty component");

    std::size_t k = 0;
    while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) ++k;
    int count = 1;
    if (k > 0) {
      if (k > 4) throw ParseError(where, token, "repetition count too large");
      count = std::stoi(token.substr(0, k));
      if (count < 1) throw ParseError(where, token, "repetition count must be positive");
    }
    if (k >= token.size() || token[k] < 'A' || token[k] > 'G')
      throw ParseError(where, token, "expected a family letter A-G");
    const auto family = static_cast<Family>(token[k]);
    const std::string digits = token.substr(k + 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(where, token, "expected a decimal rank after the family letter");
    if (digits.size() > 4) throw ParseError(where, token, "rank too large");
    const SimpleType t{family, std::stoi(digits)};
    try {
      std::vector<SimpleType> probe;
      normalize_into(t, probe);
    } catch (const std::invalid_argument&) {
      throw ParseError(where, token, "rank out of range for family " + std::string(1, token[k]));
    }
    for (int i = 0; i < count; ++i) comps.push_back(t);

    if (end == s.size()) break;
    pos = end + 1;
    if (pos == s.size()) throw ParseError(offset[end], "+", "trailing '+'");
  }
  return SemisimpleType(std::move(comps));
}

Ratio Ratio::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g ? g : 1), den / (g ? g : 1)};
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_valid_characteristic(std::int64_t p) { return p == 0 || is_prime(p); }

}  // namespace homrat
