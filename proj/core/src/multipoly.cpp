#include "padicig/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace padicig {

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c) {
  MultiPoly r(nvars);
  r.add_term(Exponents(nvars, 0), c);
  return r;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly r(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  r.add_term(e, Integer(1));
  return r;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::widened(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot drop variables");
  MultiPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(nvars, 0);
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    r.add_term(f, c * e[i]);
  }
  return r;
}

MultiPoly MultiPoly::without_p_content(unsigned long p) const {
  if (terms_.empty()) return *this;
  long v = -1;
  for (const auto& [e, c] : terms_) {
    const long w = valuation(c, p);
    v = v < 0 ? w : std::min(v, w);
  }
  if (v == 0) return *this;
  const Integer pv = ipow(p, v);
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / pv);
  return r;
}

Integer MultiPoly::evaluate(const std::vector<Integer>& x) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    acc += t;
  }
  return acc;
}

std::uint64_t MultiPoly::evaluate(const ModRing& ring, const std::vector<std::uint64_t>& x) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = ring.reduce(c);
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i) {
      if (e[i] > 0) t = ring.mul(t, ring.pow(x[i], static_cast<unsigned long>(e[i])));
    }
    acc = ring.add(acc, t);
  }
  return acc;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  MultiPoly r = a.widened(n);
  for (const auto& [e, c] : b.widened(n).terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  MultiPoly r = a.widened(n);
  for (const auto& [e, c] : b.widened(n).terms_) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  const MultiPoly aw = a.widened(n), bw = b.widened(n);
  MultiPoly r(n);
  for (const auto& [ea, ca] : aw.terms_) {
    for (const auto& [eb, cb] : bw.terms_) {
      MultiPoly::Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Integer(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest exponent vectors first, so x0^d leads.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.get_str() + "*" + mono;
    }
  }
  return s;
}

namespace {

// Recursive descent: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ('-' factor) | atom ('^' int)?, atom := int | x<i> | '(' expr ')'.
class Parser {
 public:
  Parser(const std::string& s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + s_ + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }
  MultiPoly expr() {
    MultiPoly r = term();
    while (true) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }
  MultiPoly term() {
    MultiPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }
  MultiPoly factor() {
    if (eat('-')) return MultiPoly::constant(nvars_, Integer(-1)) * factor();
    MultiPoly a = atom();
    if (eat('^')) a = a.pow(static_cast<unsigned>(std::stoul(digits())));
    return a;
  }
  MultiPoly atom() {
    skip();
    if (eat('(')) {
      MultiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      const std::size_t i = std::stoul(digits());
      if (i >= nvars_) fail("variable index exceeds the ambient dimension");
      return MultiPoly::variable(nvars_, i);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return MultiPoly::constant(nvars_, Integer(digits()));
    }
    fail("expected a term");
  }

  const std::string& s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t infer_nvars(const std::string& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x') continue;
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i + 1) n = std::max<std::size_t>(n, std::stoul(s.substr(i + 1, j - i - 1)) + 1);
  }
  return std::max<std::size_t>(n, 1);
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::size_t nvars) {
  return Parser(text, nvars == 0 ? infer_nvars(text) : nvars).parse();
}

}  // namespace padicig
