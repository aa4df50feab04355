#include "rankclass/grassmann.hpp"

#include <charconv>

#include "rankclass/error.hpp"

namespace rankclass {

namespace {

void require_same_context(const SchubertClass& a, const SchubertClass& b) {
  if (a.k() != b.k() || a.n() != b.n())
    throw Error(ErrorKind::ContextMismatch, "classes live in Gr(" + std::to_string(a.k()) + "," +
                                                std::to_string(a.n()) + ") and Gr(" +
                                                std::to_string(b.k()) + "," + std::to_string(b.n()) + ")");
}

}  // namespace

SchubertClass::SchubertClass(int k, int n) : k_(k), n_(n) {
  if (k < 0 || n < k) throw Error(ErrorKind::ContextMismatch, "Grassmannian needs 0 <= k <= n");
}

SchubertClass::SchubertClass(int k, int n, const std::map<Partition, Integer>& terms)
    : SchubertClass(k, n) {
  for (const auto& [p, c] : terms) add(p, c);
}

SchubertClass SchubertClass::basis(int k, int n, const Partition& p, const Integer& c) {
  SchubertClass x(k, n);
  x.add(p, c);
  return x;
}

SchubertClass SchubertClass::point(int k, int n) {
  SchubertClass x(k, n);
  x.add(x.box().full(), 1);
  return x;
}

Integer SchubertClass::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertClass::add(const Partition& p, const Integer& c) {
  if (!box().fits(p))
    throw Error(ErrorKind::ShapeTooLarge,
                to_string(p) + " is outside Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  require_same_context(*this, o);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& o) {
  require_same_context(*this, o);
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

SchubertClass phi(const SchurExpansion& s, int k, int n) {
  SchubertClass out(k, n);
  const RectangleContext box = out.box();
  for (const auto& [p, c] : s.terms())
    if (box.fits(p)) out.add(p, c);
  return out;
}

SchurExpansion lift(const SchubertClass& x) { return SchurExpansion(x.terms()); }

SchubertClass pullback(const SchubertClass& x, int m) {
  if (m > x.n()) throw Error(ErrorKind::ContextMismatch, "pullback target must be a smaller Grassmannian");
  return phi(lift(x), x.k(), m);
}

SchubertClass class_product(const SchubertClass& a, const SchubertClass& b) {
  require_same_context(a, b);
  SchubertClass out(a.k(), a.n());
  for (const auto& [mu, cm] : a.terms())
    for (const auto& [nu, cn] : b.terms())
      for (const auto& [lambda, c] : lr_expand(mu, nu, a.box())) out.add(lambda, cm * cn * c);
  return out;
}

SchubertClass class_sub(const SchubertClass& a, const SchubertClass& b) { return a - b; }

Integer class_degree(const SchubertClass& x) {
  Integer total = 0;
  for (const auto& [p, c] : x.terms()) total += c * syt_count(complement(p, x.box()));
  return total;
}

bool is_schubert_nonnegative(const SchubertClass& x) {
  for (const auto& [p, c] : x.terms())
    if (c < 0) return false;
  return true;
}

SchubertClass skew_complement_class(const Partition& lambda, const Partition& mu, int k, int n) {
  SchubertClass out(k, n);
  const RectangleContext box = out.box();
  if (!box.fits(lambda))
    throw Error(ErrorKind::ShapeTooLarge, to_string(lambda) + " does not fit the box");
  if (!lambda.contains(mu)) throw Error(ErrorKind::ShapeTooLarge, "inner shape is not inside outer");
  for (const Partition& nu : partitions_in_box(lambda.size() - mu.size(), k, n - k)) {
    const Integer c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.add(complement(nu, box), c);
  }
  return out;
}

std::string to_string(const SchubertClass& x) {
  return format_terms(x.terms(), 'o') + "@Gr(" + std::to_string(x.k()) + "," + std::to_string(x.n()) + ")";
}

SchubertClass parse_schubert(std::string_view text) {
  const std::size_t at = text.rfind("@Gr(");
  if (at == std::string_view::npos || text.back() != ')')
    throw Error(ErrorKind::Parse, "class text needs an '@Gr(k,n)' suffix");
  const std::string_view ctx = text.substr(at + 4, text.size() - at - 5);
  const std::size_t comma = ctx.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "bad Grassmannian context");
  int k = 0, n = 0;
  auto parse_int = [](std::string_view s, int& v) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
  };
  parse_int(ctx.substr(0, comma), k);
  parse_int(ctx.substr(comma + 1), n);
  const auto terms = parse_terms(text.substr(0, at), 'o');
  try {
    return SchubertClass(k, n, terms);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace rankclass
