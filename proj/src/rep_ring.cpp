#include "trcalc/rep_ring.hpp"

#include <cctype>
#include <optional>

namespace trcalc {

VirtualRep::VirtualRep(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

VirtualRep VirtualRep::monomial(const Integer& coefficient, const Integer& exponent) {
  VirtualRep r;
  r.add_term(exponent, coefficient);
  return r;
}

Integer VirtualRep::coefficient(const Integer& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void VirtualRep::add_term(const Integer& exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

std::string VirtualRep::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    out += "t";
    if (e != 1) out += "^" + e.str();
  }
  return out;
}

namespace {

class RepParser {
 public:
  explicit RepParser(std::string_view text) : text_(text) {}

  VirtualRep parse() {
    VirtualRep result;
    skip_space();
    if (at_end()) throw ParseError("empty representation expression", pos_);
    Integer sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += parse_term(sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      result += parse_term(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::optional<Integer> unsigned_int() {
    skip_space();
    std::size_t start = pos_;
    Integer value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return value;
  }

  Integer signed_int() {
    skip_space();
    Integer sign = 1;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    auto value = unsigned_int();
    if (!value) throw ParseError("expected an integer", pos_);
    return sign * *value;
  }

  VirtualRep parse_term(const Integer& sign) {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    Integer coefficient = 1;
    bool have_coefficient = false;
    if (auto c = unsigned_int()) {
      coefficient = *c;
      have_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 't') throw ParseError("expected 't' after '*'", pos_);
      }
    }
    skip_space();
    Integer exponent = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exponent = signed_int();
      }
    } else if (!have_coefficient) {
      throw ParseError("expected an integer or 't'", pos_);
    }
    return VirtualRep::monomial(sign * coefficient, exponent);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VirtualRep parse_rep(std::string_view text) { return RepParser(text).parse(); }

Integer dim(const VirtualRep& r) {
  Integer total = 0;
  for (const auto& [e, c] : r.terms()) total += c;
  return total;
}

VirtualRep prime_op(const VirtualRep& r, int p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_op: p must be prime");
  VirtualRep::Terms out;
  for (const auto& [e, c] : r.terms()) {
    if (e % p == 0) out.emplace(e / p, c);
  }
  return VirtualRep(out);
}

DimSeq dim_sequence(const VirtualRep& r, int p, int n) {
  if (n < 1) throw std::invalid_argument("dim_sequence: n must be >= 1");
  DimSeq d{p, {}};
  d.dims.reserve(static_cast<std::size_t>(n));
  VirtualRep current = r;
  for (int k = 0; k < n; ++k) {
    d.dims.push_back(dim(current));
    current = prime_op(current, p);
  }
  return d;
}

VirtualRep realize(const DimSeq& d) {
  VirtualRep result;
  const int n = d.n();
  for (int k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    Integer b = k + 1 < n ? Integer(d.dims[idx] - d.dims[idx + 1]) : d.dims[idx];
    result += VirtualRep::monomial(b, pow_int(d.p, k));
  }
  return result;
}

}  // namespace trcalc
