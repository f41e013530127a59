#include "rook/laurent.hpp"

#include <mutex>
#include <stdexcept>

namespace rook {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("VarSet: duplicate variable");
}

const VarSet& VarSet::pq() {
  static const VarSet v({"p", "q"});
  return v;
}
const VarSet& VarSet::q() {
  static const VarSet v({"q"});
  return v;
}
const VarSet& VarSet::qt() {
  static const VarSet v({"q", "t"});
  return v;
}
const VarSet& VarSet::pqPQ() {
  static const VarSet v({"p", "q", "P", "Q"});
  return v;
}
const VarSet& VarSet::pqx() {
  static const VarSet v({"p", "q", "x"});
  return v;
}

std::size_t VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("VarSet: unknown variable '" + std::string(name) + "'");
}

VarSet VarSet::without(std::size_t index) const {
  if (index >= names_.size()) throw std::invalid_argument("VarSet::without: bad index");
  std::vector<std::string> rest = names_;
  rest.erase(rest.begin() + static_cast<long>(index));
  return VarSet(std::move(rest));
}

LaurentPoly LaurentPoly::constant(const VarSet& vars, Int c) {
  return monomial(vars, std::vector<int>(vars.size(), 0), std::move(c));
}

LaurentPoly LaurentPoly::monomial(const VarSet& vars, std::vector<int> exps, Int coeff) {
  if (exps.size() != vars.size())
    throw std::invalid_argument("LaurentPoly::monomial: exponent count mismatch");
  LaurentPoly p(vars);
  if (coeff != 0) p.terms_[std::move(exps)] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarSet& vars, std::size_t index) {
  std::vector<int> exps(vars.size(), 0);
  exps.at(index) = 1;
  return monomial(vars, std::move(exps), 1);
}

Int LaurentPoly::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::evaluate_all_ones() const {
  Int out = 0;
  for (const auto& [e, c] : terms_) out += c;
  return out;
}

std::optional<std::pair<std::vector<int>, Int>> LaurentPoly::first_negative_term() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return std::make_pair(e, c);
  return std::nullopt;
}

LaurentPoly LaurentPoly::map_vars(const VarSet& target,
                                  const std::vector<std::vector<int>>& images) const {
  if (images.size() != vars_.size())
    throw std::invalid_argument("map_vars: one image per source variable required");
  for (const auto& img : images)
    if (img.size() != target.size()) throw std::invalid_argument("map_vars: bad image length");
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) {
    std::vector<int> exps(target.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (std::size_t w = 0; w < target.size(); ++w) exps[w] += e[v] * images[v][w];
    out.set(exps, out.coefficient(exps) + c);
  }
  return out;
}

LaurentPoly LaurentPoly::embed(const VarSet& superset) const {
  std::vector<std::vector<int>> images;
  for (const auto& name : vars_.names()) {
    std::vector<int> img(superset.size(), 0);
    img[superset.index_of(name)] = 1;
    images.push_back(std::move(img));
  }
  return map_vars(superset, images);
}

LaurentPoly LaurentPoly::coefficient_in(std::size_t var_index, int k) const {
  if (var_index >= vars_.size()) throw std::invalid_argument("coefficient_in: bad index");
  LaurentPoly out(vars_.without(var_index));
  for (const auto& [e, c] : terms_) {
    if (e[var_index] != k) continue;
    std::vector<int> rest;
    rest.reserve(e.size() - 1);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != var_index) rest.push_back(e[v]);
    out.set(rest, out.coefficient(rest) + c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.names()[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += "*";
      }
      out += mono;
    }
  }
  return out;
}

void LaurentPoly::set(const std::vector<int>& exps, Int value) {
  if (value == 0)
    terms_.erase(exps);
  else
    terms_[exps] = std::move(value);
}

void LaurentPoly::check_same_vars(const LaurentPoly& other) const {
  if (!(vars_ == other.vars_))
    throw std::invalid_argument("LaurentPoly: mixed variable sets");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_) set(e, coefficient(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_) set(e, coefficient(e) - c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_vars(b);
  LaurentPoly out(a.vars_);
  std::vector<int> exps(a.vars_.size(), 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = ea[v] + eb[v];
      out.set(exps, out.coefficient(exps) + ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly pq_integer(long n) {
  if (n < 0) throw std::invalid_argument("pq_integer: negative argument");
  LaurentPoly out(VarSet::pq());
  for (long i = 0; i < n; ++i)
    out += LaurentPoly::monomial(VarSet::pq(), {static_cast<int>(n - 1 - i), static_cast<int>(i)}, 1);
  return out;
}

LaurentPoly pq_integer_laurent(long n) {
  if (n >= 0) return pq_integer(n);
  LaurentPoly shift =
      LaurentPoly::monomial(VarSet::pq(), {static_cast<int>(n), static_cast<int>(n)}, -1);
  return shift * pq_integer(-n);
}

LaurentPoly pq_factorial(long n) {
  if (n < 0) throw std::invalid_argument("pq_factorial: negative argument");
  LaurentPoly out = LaurentPoly::constant(VarSet::pq(), 1);
  for (long i = 1; i <= n; ++i) out *= pq_integer(i);
  return out;
}

LaurentPoly pq_falling(long x, long n, long m) {
  if (n < 0) throw std::invalid_argument("pq_falling: negative length");
  LaurentPoly out = LaurentPoly::constant(VarSet::pq(), 1);
  for (long i = 0; i < n; ++i) out *= pq_integer_laurent(x - i * m);
  return out;
}

LaurentPoly q_integer(long n) {
  if (n < 0) throw std::invalid_argument("q_integer: negative argument");
  LaurentPoly out(VarSet::q());
  for (long i = 0; i < n; ++i) out += LaurentPoly::monomial(VarSet::q(), {static_cast<int>(i)}, 1);
  return out;
}

LaurentPoly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly out = LaurentPoly::constant(VarSet::q(), 1);
  for (long i = 1; i <= n; ++i) out *= q_integer(i);
  return out;
}

LaurentPoly q_binomial(long n, long k) {
  if (k < 0) return LaurentPoly(VarSet::q());
  if (k == 0) return LaurentPoly::constant(VarSet::q(), 1);
  if (n < 0 || n < k) return LaurentPoly(VarSet::q());

  static std::map<std::pair<long, long>, LaurentPoly> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  LaurentPoly result = q_binomial(n - 1, k - 1);
  LaurentPoly right = q_binomial(n - 1, k);
  right *= LaurentPoly::monomial(VarSet::q(), {static_cast<int>(k)}, 1);
  result += right;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(n, k), result);
  }
  return result;
}

}  // namespace rook
