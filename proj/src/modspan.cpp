#include "qmc/modspan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmc {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t from_int(std::int64_t v) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % kPrime;  // avoids overflow at INT64_MIN
  return sub(sub(0, m), 1);
}

namespace {

std::uint64_t from_bigint(const BigInt& v) {
  BigInt m = v % kPrime;
  if (m < 0) m += kPrime;
  return static_cast<std::uint64_t>(m);
}

}  // namespace

std::uint64_t from_rational(const Rational& r) {
  std::uint64_t den = from_bigint(boost::multiprecision::denominator(r));
  if (den == 0) throw std::domain_error("denominator divisible by the modulus");
  return mul(from_bigint(boost::multiprecision::numerator(r)), inv(den));
}

std::optional<Rational> reconstruct(std::uint64_t a) {
  // Extended Euclid on (p, a), stopped at the first remainder below the bound.
  const std::int64_t bound = 1518500249;  // floor(sqrt(p / 2))
  std::int64_t r0 = static_cast<std::int64_t>(kPrime), r1 = static_cast<std::int64_t>(a);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    __int128 t2 = static_cast<__int128>(t0) - static_cast<__int128>(q) * t1;
    if (t2 > INT64_MAX || t2 < INT64_MIN) return std::nullopt;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = static_cast<std::int64_t>(t2);
  }
  if (t1 == 0 || t1 > bound || t1 < -bound) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  Rational out{BigInt(r1), BigInt(t1)};
  if (from_rational(out) != a) return std::nullopt;
  return out;
}

}  // namespace modp

ModVec to_mod(const ExactVec& v) {
  ModVec out;
  out.reserve(v.size());
  for (const auto& [k, c] : v) {
    std::uint64_t m = modp::from_rational(c);
    if (m) out.emplace_back(k, m);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> ModSpan::columns_of(const ModVec& v, bool create) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
  out.reserve(v.size());
  for (const auto& [k, x] : v) {
    if (!x) continue;
    auto it = column_.find(k);
    if (it == column_.end()) {
      if (!create) continue;
      it = column_.emplace(k, static_cast<std::uint32_t>(pivot_row_.size())).first;
      pivot_row_.push_back(-1);
    }
    out.emplace_back(it->second, x);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> ModSpan::columns_of(const ModVec& v) const {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
  out.reserve(v.size());
  for (const auto& [k, x] : v) {
    if (!x) continue;
    auto it = column_.find(k);
    // A column no accepted row touches: mark it with a sentinel past the end.
    out.emplace_back(it == column_.end() ? static_cast<std::uint32_t>(pivot_row_.size()) : it->second, x);
  }
  return out;
}

long ModSpan::reduce(std::vector<std::uint64_t>& acc,
                     std::vector<std::pair<std::uint32_t, std::uint64_t>>* used, bool stop_at_free) const {
  long free_col = -1;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c) {
    std::uint64_t f = acc[c];
    if (!f) continue;
    long r = pivot_row_[c];
    if (r < 0) {
      if (free_col < 0) free_col = static_cast<long>(c);
      if (stop_at_free) return free_col;
      continue;
    }
    for (const auto& [col, val] : rows_[r].entries) acc[col] = modp::sub(acc[col], modp::mul(f, val));
    if (used) used->emplace_back(static_cast<std::uint32_t>(r), f);
  }
  return free_col;
}

bool ModSpan::add(const ModVec& v) {
  auto cols = columns_of(v, true);
  if (cols.empty()) return false;
  std::vector<std::uint64_t> acc(pivot_row_.size(), 0);
  for (const auto& [c, x] : cols) acc[c] = modp::add(acc[c], x);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> used;
  long pivot = reduce(acc, &used, true);
  if (pivot < 0) return false;
  Row row;
  row.scale = modp::inv(acc[pivot]);
  for (std::size_t c = pivot; c < acc.size(); ++c)
    if (acc[c]) row.entries.emplace_back(static_cast<std::uint32_t>(c), modp::mul(acc[c], row.scale));
  row.deps = std::move(used);
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool ModSpan::contains(const ModVec& v) const {
  auto cols = columns_of(v);
  std::vector<std::uint64_t> acc(pivot_row_.size() + 1, 0);
  for (const auto& [c, x] : cols) acc[c] = modp::add(acc[c], x);
  if (acc.back()) return false;
  return reduce(acc, nullptr, true) < 0;
}

std::optional<std::vector<std::uint64_t>> ModSpan::solve(const ModVec& v) const {
  auto cols = columns_of(v);
  std::vector<std::uint64_t> acc(pivot_row_.size() + 1, 0);
  for (const auto& [c, x] : cols) acc[c] = modp::add(acc[c], x);
  if (acc.back()) return std::nullopt;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> used;
  if (reduce(acc, &used, true) >= 0) return std::nullopt;
  // v = sum a_r row_r and row_r = scale_r (e_r - sum_d f_d row_d); unwind from
  // the newest row down.
  std::vector<std::uint64_t> a(rows_.size(), 0);
  for (const auto& [r, f] : used) a[r] = modp::add(a[r], f);
  std::vector<std::uint64_t> out(rows_.size(), 0);
  for (std::size_t r = rows_.size(); r-- > 0;) {
    if (!a[r]) continue;
    std::uint64_t w = modp::mul(a[r], rows_[r].scale);
    out[r] = w;
    for (const auto& [d, f] : rows_[r].deps) a[d] = modp::sub(a[d], modp::mul(w, f));
  }
  return out;
}

std::optional<std::vector<Rational>> exact_solve(const std::vector<ExactVec>& basis, const ExactVec& v) {
  // Columns of the system are basis vectors; rows are coordinates. Eliminate
  // with an augmented identity to keep track of the combination.
  std::size_t m = basis.size();
  struct Eq {
    std::map<std::uint64_t, Rational> vec;
    std::map<std::size_t, Rational> combo;
  };
  std::vector<Eq> rows;
  std::map<std::uint64_t, std::size_t> pivot;
  auto reduce = [&](Eq& e) {
    while (true) {
      bool changed = false;
      for (auto it = e.vec.begin(); it != e.vec.end(); ++it) {
        auto p = pivot.find(it->first);
        if (p == pivot.end()) continue;
        Rational f = it->second;
        const Eq& row = rows[p->second];
        for (const auto& [k, c] : row.vec) {
          Rational& x = e.vec[k];
          x -= f * c;
        }
        for (const auto& [k, c] : row.combo) {
          Rational& x = e.combo[k];
          x -= f * c;
        }
        std::erase_if(e.vec, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(e.combo, [](const auto& kv) { return kv.second == 0; });
        changed = true;
        break;
      }
      if (!changed) return;
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    Eq e;
    for (const auto& [k, c] : basis[i])
      if (c != 0) e.vec[k] = c;
    e.combo[i] = 1;
    reduce(e);
    if (e.vec.empty()) throw std::invalid_argument("exact_solve: dependent basis");
    auto lead = e.vec.begin();
    Rational s = 1 / lead->second;
    for (auto& [k, c] : e.vec) c *= s;
    for (auto& [k, c] : e.combo) c *= s;
    pivot[lead->first] = rows.size();
    rows.push_back(std::move(e));
  }
  Eq t;
  for (const auto& [k, c] : v)
    if (c != 0) t.vec[k] = c;
  reduce(t);
  if (!t.vec.empty()) return std::nullopt;
  // t = v - sum coeff * basis = 0 after reduction; combo holds -coeff.
  std::vector<Rational> out(m);
  for (const auto& [k, c] : t.combo) out[k] = -c;
  return out;
}

}  // namespace qmc
