#include "rankclass/symfunc.hpp"

#include <cctype>

#include "rankclass/error.hpp"

namespace rankclass {

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out;
  for (const auto& [mu, cm] : a.terms())
    for (const auto& [nu, cn] : b.terms())
      for (const auto& [lambda, c] : lr_expand(mu, nu)) out.add(lambda, cm * cn * c);
  return out;
}

namespace {

// Semistandard tableaux of shape `target` are chains of horizontal strips;
// grow from `cur` by a strip of size content[idx].
class KostkaCounter {
 public:
  KostkaCounter(const Partition& target, const Partition& content)
      : target_(target), content_(content) {}

  Integer run() { return grow(Partition{}, 0); }

 private:
  Integer grow(const Partition& cur, std::size_t idx) {
    if (idx == content_.parts().size()) return cur == target_ ? 1 : 0;
    const auto key = std::make_pair(cur, idx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    std::vector<int> next(target_.length(), 0);
    strips(cur, 0, content_[idx], next, idx, total);
    memo_.emplace(key, total);
    return total;
  }

  // Row r of the next shape ranges over [cur_r, min(target_r, cur_{r-1})].
  void strips(const Partition& cur, int r, int remaining, std::vector<int>& next, std::size_t idx,
              Integer& total) {
    if (r == target_.length()) {
      if (remaining == 0) total += grow(Partition(next), idx + 1);
      return;
    }
    const int cap = r == 0 ? target_[0] : std::min(target_[r], cur[r - 1]);
    for (int add = 0; cur[r] + add <= cap && add <= remaining; ++add) {
      next[r] = cur[r] + add;
      strips(cur, r + 1, remaining - add, next, idx, total);
    }
    next[r] = 0;
  }

  const Partition& target_;
  const Partition& content_;
  std::map<std::pair<Partition, std::size_t>, Integer> memo_;
};

}  // namespace

Integer kostka_number(const Partition& lambda, const Partition& mu) {
  if (!dominates(lambda, mu)) return 0;
  return KostkaCounter(lambda, mu).run();
}

MonomialExpansion schur_to_monomial(const SchurExpansion& s) {
  MonomialExpansion out;
  for (const auto& [lambda, c] : s.terms())
    for (const Partition& mu : partitions_of(lambda.size()))
      if (dominates(lambda, mu)) out.add(mu, c * kostka_number(lambda, mu));
  return out;
}

SchurExpansion monomial_to_schur(const MonomialExpansion& m) {
  if (!m.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "monomial expansion mixes degrees");
  // Kostka matrix is unitriangular in dominance order; lexicographic order
  // refines dominance, so peeling the lex-largest term is a valid
  // back-substitution.
  SchurExpansion out;
  MonomialExpansion rest = m;
  while (!rest.is_zero()) {
    const auto& [top, c] = *rest.terms().rbegin();
    const Partition lambda = top;
    const Integer coeff = c;
    out.add(lambda, coeff);
    rest -= schur_to_monomial(SchurExpansion::basis(lambda, coeff));
  }
  return out;
}

bool is_schur_nonnegative(const SchurExpansion& s) {
  for (const auto& [p, c] : s.terms())
    if (c < 0) return false;
  return true;
}

std::string format_terms(const std::map<Partition, Integer>& terms, char letter) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms) {
    const Integer mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    out += mag.get_str() + "*" + letter + "[" + to_string(p) + "]";
    first = false;
  }
  return out;
}

std::map<Partition, Integer> parse_terms(std::string_view text, char letter) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::map<Partition, Integer> out;
  if (s == "0") return out;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty expansion text");
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      if (first && s[pos] == '+') throw Error(ErrorKind::Parse, "leading '+' in expansion");
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw Error(ErrorKind::Parse, "expected '+' or '-' between terms");
    }
    std::size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits == pos) throw Error(ErrorKind::Parse, "missing coefficient in '" + s + "'");
    Integer coeff(s.substr(pos, digits - pos));
    pos = digits;
    if (pos + 2 >= s.size() || s[pos] != '*' || s[pos + 1] != letter || s[pos + 2] != '[')
      throw Error(ErrorKind::Parse, std::string("expected '*") + letter + "[' in '" + s + "'");
    pos += 3;
    const std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw Error(ErrorKind::Parse, "unterminated '[' in expansion");
    const Partition p = parse_partition(std::string_view(s).substr(pos, close - pos));
    pos = close + 1;
    auto& slot = out[p];
    slot += negative ? Integer(-coeff) : coeff;
    if (slot == 0) out.erase(p);
    first = false;
  }
  return out;
}

std::string to_string(const SchurExpansion& e) { return format_terms(e.terms(), 's'); }
std::string to_string(const MonomialExpansion& e) { return format_terms(e.terms(), 'm'); }

SchurExpansion parse_schur(std::string_view text) { return SchurExpansion(parse_terms(text, 's')); }
MonomialExpansion parse_monomial(std::string_view text) {
  return MonomialExpansion(parse_terms(text, 'm'));
}

}  // namespace rankclass
