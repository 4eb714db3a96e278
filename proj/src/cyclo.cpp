#include "jacq/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace jacq {

namespace {

using Poly = std::vector<Int>;  // ascending, over Z

// quotient of exact polynomial division (remainder must vanish)
Poly divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (rem.size() >= den.size() && !(rem.size() == 1 && rem[0] == 0)) {
    size_t shift = rem.size() - den.size();
    Int lead = rem.back() / den.back();
    quot[shift] = lead;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= lead * den[i];
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    if (rem.size() < den.size()) break;
  }
  return quot;
}

std::mutex cache_mutex;

}  // namespace

int phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // compute recursively without re-locking
  std::vector<int> todo{n};
  while (!todo.empty()) {
    int k = todo.back();
    if (cache.count(k)) { todo.pop_back(); continue; }
    bool ready = true;
    for (int d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) { todo.push_back(d); ready = false; }
    if (!ready) continue;
    todo.pop_back();
    Poly num(k + 1, 0);
    num[0] = -1;
    num[k] = 1;  // x^k - 1
    Poly acc{1};
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      const Poly& f = cache.at(d);
      Poly next(acc.size() + f.size() - 1, 0);
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
      acc = std::move(next);
    }
    cache[k] = divide_exact(num, acc);
  }
  return cache.at(n);
}

namespace {

// x^j mod Phi_n as a phi(n)-vector, cached for j in [0, limit)
const std::vector<std::vector<Rat>>& power_rows(int n) {
  static std::map<int, std::vector<std::vector<Rat>>> cache;
  const Poly& f = cyclotomic_poly(n);  // before taking the lock (same mutex)
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  int d = static_cast<int>(f.size()) - 1;  // = phi(n)
  int limit = std::max(n, 2 * d);
  std::vector<std::vector<Rat>> rows;
  rows.reserve(limit);
  for (int j = 0; j < limit; ++j) {
    std::vector<Rat> row(d, Rat(0));
    if (j < d) {
      row[j] = 1;
    } else {
      // x * rows[j-1], folding the overflow term via x^d = -(f_0 + ... )/f_d
      const std::vector<Rat>& prev = rows[j - 1];
      Rat top = prev[d - 1];
      for (int i = d - 1; i > 0; --i) row[i] = prev[i - 1];
      row[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i) row[i] -= top * Rat(f[i]);  // f monic
    }
    rows.push_back(std::move(row));
  }
  cache[n] = std::move(rows);
  return cache.at(n);
}

}  // namespace

Cyc::Cyc(int order) : n_(order), c_(phi(order), Rat(0)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
}

Cyc Cyc::root(int n, long k) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  Cyc r(n);
  long j = ((k % n) + n) % n;
  r.c_ = power_rows(n)[j];
  return r;
}

Cyc Cyc::rational(int n, const Rat& q) {
  Cyc r(n);
  r.c_[0] = q;
  return r;
}

bool Cyc::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  int m = std::lcm(n_, o.n_);
  return embed(m).c_ == o.embed(m).c_;
}

Cyc Cyc::embed(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("embed: target order not a multiple");
  const auto& rows = power_rows(m);
  int step = m / n_;
  Cyc out(m);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = rows[(j * step) % m];
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += c_[j] * row[i];
  }
  return out;
}

Cyc Cyc::conj() const {
  const auto& rows = power_rows(n_);
  Cyc out(n_);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = rows[(n_ - static_cast<int>(j)) % n_];
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += c_[j] * row[i];
  }
  return out;
}

std::optional<Rat> Cyc::as_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc out(*this);
  for (Rat& x : out.c_) x = -x;
  return out;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.embed(m) + b.embed(m);
  }
  Cyc out(a);
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.embed(m) * b.embed(m);
  }
  int d = static_cast<int>(a.c_.size());
  std::vector<Rat> conv(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& rows = power_rows(a.n_);
  Cyc out(a.n_);
  for (int i = 0; i < d; ++i) out.c_[i] = conv[i];
  for (int j = d; j < 2 * d - 1; ++j) {
    if (conv[j] == 0) continue;
    const auto& row = rows[j];
    for (int i = 0; i < d; ++i) out.c_[i] += conv[j] * row[i];
  }
  return out;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic value");
  // extended Euclid in Q[x]: s * this + t * Phi_n = gcd = const
  using QPoly = std::vector<Rat>;
  auto trim = [](QPoly& p) { while (p.size() > 1 && p.back() == 0) p.pop_back(); };
  QPoly r0(cyclotomic_poly(n_).size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(cyclotomic_poly(n_)[i]);
  QPoly r1(c_.begin(), c_.end());
  trim(r1);
  QPoly s0{Rat(0)}, s1{Rat(1)};  // coefficients on `this`
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // r0 = q * r1 + r2
    QPoly rem = r0;
    QPoly quot(std::max<size_t>(1, rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1), Rat(0));
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      size_t shift = rem.size() - r1.size();
      Rat lead = rem.back() / r1.back();
      quot[shift] += lead;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
      trim(rem);
      if (rem.size() < r1.size()) break;
    }
    // s2 = s0 - q * s1
    QPoly qs(quot.size() + s1.size() - 1, Rat(0));
    for (size_t i = 0; i < quot.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += quot[i] * s1[j];
    QPoly s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 is a nonzero constant (Phi_n is irreducible): inverse = s0 / r0
  Rat unit = r0[0];
  Cyc out(n_);
  const auto& rows = power_rows(n_);
  for (size_t j = 0; j < s0.size(); ++j) {
    if (s0[j] == 0) continue;
    Rat coef = s0[j] / unit;
    if (j < out.c_.size()) {
      out.c_[j] += coef;
    } else {
      const auto& row = rows[j];
      for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += coef * row[i];
    }
  }
  return out;
}

Cyc operator/(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.embed(m) / b.embed(m);
  }
  return a * b.inverse();
}

int Cyc::sign_real() const {
  if (auto q = as_rational()) {
    if (*q > 0) return 1;
    if (*q < 0) return -1;
    return 0;
  }
  if (!(conj() == *this)) throw std::invalid_argument("sign_real: element is not real");
  // Height guard for the separation argument in the header.
  if (n_ > 360) throw std::invalid_argument("sign_real: conductor out of certified range");
  using Big = boost::multiprecision::cpp_bin_float_100;
  Big two_pi = 2 * boost::math::constants::pi<Big>();
  Big value = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Big coef = Big(numerator(c_[j]).str()) / Big(denominator(c_[j]).str());
    if (coef > 1e30 || coef < -1e30)
      throw std::invalid_argument("sign_real: coefficients out of certified range");
    value += coef * cos(two_pi * Big(j) / Big(n_));
  }
  // A nonzero value here is irrational, hence bounded away from zero far
  // beyond the ~1e-95 evaluation error.
  return value > 0 ? 1 : -1;
}

LinearSolution solve_linear(const std::vector<std::vector<Rat>>& columns,
                            const std::vector<Rat>& rhs) {
  size_t ncols = columns.size();
  size_t nrows = rhs.size();
  for (const auto& col : columns)
    if (col.size() != nrows) throw std::invalid_argument("solve_linear: dimension mismatch");

  // augmented row-major matrix
  std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(ncols + 1, Rat(0)));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < nrows; ++i) m[i][j] = columns[j][i];
  for (size_t i = 0; i < nrows; ++i) m[i][ncols] = rhs[i];

  std::vector<int> pivot_of_col(ncols, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t j = col; j <= ncols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t i = row; i < nrows; ++i)
    if (m[i][ncols] != 0) return {LinearSolution::kInfeasible, {}, {}};

  LinearSolution sol;
  sol.particular.assign(ncols, Rat(0));
  std::vector<size_t> free_cols;
  for (size_t col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] >= 0)
      sol.particular[col] = m[pivot_of_col[col]][ncols];
    else
      free_cols.push_back(col);
  }
  if (free_cols.empty()) {
    sol.kind = LinearSolution::kUnique;
    return sol;
  }
  sol.kind = LinearSolution::kFamily;
  for (size_t fc : free_cols) {
    std::vector<Rat> vec(ncols, Rat(0));
    vec[fc] = 1;
    for (size_t col = 0; col < ncols; ++col)
      if (pivot_of_col[col] >= 0) vec[col] = -m[pivot_of_col[col]][fc];
    sol.nullspace.push_back(std::move(vec));
  }
  return sol;
}

LinearSolution solve_linear(const std::vector<Cyc>& columns, const Cyc& rhs) {
  int m = rhs.order();
  for (const Cyc& c : columns) m = std::lcm(m, c.order());
  std::vector<std::vector<Rat>> cols;
  cols.reserve(columns.size());
  for (const Cyc& c : columns) cols.push_back(c.embed(m).coeffs());
  return solve_linear(cols, rhs.embed(m).coeffs());
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

long to_long(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_long: not an integer");
  return static_cast<long>(numerator(q));
}

}  // namespace jacq
