#include "rootnum/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rootnum {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly IntPoly::x_pow_minus_one(long n) {
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, BigInt(0));
  c[0] = -1;
  c[static_cast<size_t>(n)] = 1;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly::zero();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& num,
                                             const IntPoly& den) {
  if (den.is_zero() || !den.is_monic()) {
    throw NonMonic("divisor must be monic, got " + den.str());
  }
  if (num.is_zero()) return IntPoly::zero();
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> rem = num.c_;
  std::vector<BigInt> quot(num.c_.size() - den.c_.size() + 1, BigInt(0));
  for (long i = num.degree(); i >= den.degree(); --i) {
    BigInt q = rem[static_cast<size_t>(i)];
    if (q == 0) continue;
    quot[static_cast<size_t>(i - den.degree())] = q;
    for (long j = 0; j <= den.degree(); ++j) {
      rem[static_cast<size_t>(i - den.degree() + j)] -=
          q * den.coeff(j);
    }
  }
  for (const BigInt& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    BigInt a = coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    BigInt aa = abs(a);
    if (i == 0 || aa != 1) os << aa.get_str();
    if (i > 0) os << "X";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and phi

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {
std::mutex g_cyclo_mutex;
std::map<long, IntPoly>& cyclo_cache() {
  static std::map<long, IntPoly> cache;
  return cache;
}

IntPoly cyclotomic_poly_locked(long d) {
  auto& cache = cyclo_cache();
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IntPoly result;
  if (d == 1) {
    result = IntPoly({BigInt(-1), BigInt(1)});
  } else {
    IntPoly divisor = IntPoly::one();
    for (long e = 1; e < d; ++e) {
      if (d % e == 0) divisor = divisor * cyclotomic_poly_locked(e);
    }
    auto q = IntPoly::divide_exact(IntPoly::x_pow_minus_one(d), divisor);
    result = *q;  // exact by construction
  }
  cache.emplace(d, result);
  return result;
}
}  // namespace

IntPoly cyclotomic_poly(long d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclotomic_poly_locked(d);
}

std::optional<std::vector<std::pair<long, long>>> char_poly_factorization(
    const IntPoly& p, const std::vector<long>& root_orders) {
  if (!p.is_monic()) throw NonMonic("char_poly_factorization: " + p.str());
  std::vector<long> orders = root_orders;
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  IntPoly rest = p;
  std::vector<std::pair<long, long>> factors;
  for (long d : orders) {
    if (d < 1) return std::nullopt;
    IntPoly phi = cyclotomic_poly(d);
    long mult = 0;
    while (true) {
      auto q = IntPoly::divide_exact(rest, phi);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    if (mult > 0) factors.emplace_back(d, mult);
  }
  if (!(rest == IntPoly::one())) return std::nullopt;
  return factors;
}

// ---------------------------------------------------------------------------
// Per-conductor reduction tables

namespace {

struct CycloTable {
  long m = 1;
  long phi = 1;
  IntPoly phi_poly;
  // powers[j] = X^j mod Phi_m for 0 <= j < max(m, 2*phi-1), as integer rows
  std::vector<std::vector<BigInt>> powers;
};

std::mutex g_table_mutex;

const CycloTable& table_for(long m) {
  static std::map<long, std::unique_ptr<CycloTable>> cache;
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<CycloTable>();
  t->m = m;
  t->phi_poly = cyclotomic_poly(m);
  t->phi = t->phi_poly.degree();
  long limit = std::max(m, 2 * t->phi - 1);
  t->powers.reserve(static_cast<size_t>(limit));
  std::vector<BigInt> cur(static_cast<size_t>(t->phi), BigInt(0));
  cur[0] = 1;
  t->powers.push_back(cur);
  for (long j = 1; j < limit; ++j) {
    std::vector<BigInt> next(static_cast<size_t>(t->phi), BigInt(0));
    // multiply by X, then fold the overflowing top term through Phi_m
    BigInt top = cur[static_cast<size_t>(t->phi - 1)];
    for (long i = t->phi - 1; i >= 1; --i) cur[static_cast<size_t>(i)] =
        cur[static_cast<size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0) {
      for (long i = 0; i < t->phi; ++i) {
        cur[static_cast<size_t>(i)] -= top * t->phi_poly.coeff(i);
      }
    }
    next = cur;
    t->powers.push_back(std::move(next));
  }
  const CycloTable& ref = *t;
  cache.emplace(m, std::move(t));
  return ref;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycNum

CycNum zeta(long m, long e) {
  if (m < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
  const CycloTable& t = table_for(m);
  long em = ((e % m) + m) % m;
  std::vector<Rat> c(static_cast<size_t>(t.phi), Rat(0));
  const auto& row = t.powers[static_cast<size_t>(em)];
  for (long i = 0; i < t.phi; ++i) c[static_cast<size_t>(i)] = Rat(row[static_cast<size_t>(i)]);
  return CycNum(m, std::move(c));
}

CycNum CycNum::embedded(long target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) {
    throw std::invalid_argument("CycNum::embedded: target not a multiple");
  }
  const CycloTable& t = table_for(target);
  long k = target / m_;
  std::vector<Rat> c(static_cast<size_t>(t.phi), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& row = t.powers[i * static_cast<size_t>(k)];
    for (long j = 0; j < t.phi; ++j) {
      c[static_cast<size_t>(j)] += c_[i] * Rat(row[static_cast<size_t>(j)]);
    }
  }
  return CycNum(target, std::move(c));
}

CycNum CycNum::operator-() const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x = -x;
  return CycNum(m_, std::move(c));
}

CycNum CycNum::scaled(const Rat& r) const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x *= r;
  return CycNum(m_, std::move(c));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  long l = std::lcm(a.m_, b.m_);
  CycNum ea = a.embedded(l), eb = b.embedded(l);
  for (size_t i = 0; i < ea.c_.size(); ++i) ea.c_[i] += eb.c_[i];
  return ea;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  long l = std::lcm(a.m_, b.m_);
  CycNum ea = a.embedded(l), eb = b.embedded(l);
  const CycloTable& t = table_for(l);
  size_t phi = static_cast<size_t>(t.phi);
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (size_t i = 0; i < phi; ++i) {
    if (ea.c_[i].is_zero()) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (eb.c_[j].is_zero()) continue;
      conv[i + j] += ea.c_[i] * eb.c_[j];
    }
  }
  std::vector<Rat> out(phi, Rat(0));
  for (size_t i = 0; i < phi; ++i) out[i] = conv[i];
  for (size_t i = phi; i < conv.size(); ++i) {
    if (conv[i].is_zero()) continue;
    const auto& row = t.powers[i];
    for (size_t j = 0; j < phi; ++j) out[j] += conv[i] * Rat(row[j]);
  }
  return CycNum(l, std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
  long l = std::lcm(a.m_, b.m_);
  return a.embedded(l).c_ == b.embedded(l).c_;
}

CycNum CycNum::conjugate() const {
  const CycloTable& t = table_for(m_);
  std::vector<Rat> out(static_cast<size_t>(t.phi), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long e = (m_ - static_cast<long>(i)) % m_;
    const auto& row = t.powers[static_cast<size_t>(e)];
    for (long j = 0; j < t.phi; ++j) {
      out[static_cast<size_t>(j)] += c_[i] * Rat(row[static_cast<size_t>(j)]);
    }
  }
  return CycNum(m_, std::move(out));
}

std::optional<Rat> CycNum::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return std::nullopt;
  }
  return c_[0];
}

bool CycNum::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<long> CycNum::root_of_unity_order(long bound) const {
  CycNum acc = *this;
  const CycNum unit = CycNum::one();
  for (long j = 1; j <= bound; ++j) {
    if (acc == unit) return j;
    acc = acc * (*this);
  }
  return std::nullopt;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i > 0) os << "*z" << m_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// ZetaSum

ZetaSum::ZetaSum(long m) : m_(m), counts_(static_cast<size_t>(m), 0) {
  if (m < 1) throw std::invalid_argument("ZetaSum: conductor must be >= 1");
}

void ZetaSum::add(long long e, long long mult) {
  long long r = e % m_;
  if (r < 0) r += m_;
  counts_[static_cast<size_t>(r)] += mult;
}

CycNum ZetaSum::materialize() const {
  const CycloTable& t = table_for(m_);
  std::vector<Rat> c(static_cast<size_t>(t.phi), Rat(0));
  for (long e = 0; e < m_; ++e) {
    long long k = counts_[static_cast<size_t>(e)];
    if (k == 0) continue;
    const auto& row = t.powers[static_cast<size_t>(e)];
    Rat rk{BigInt(static_cast<long>(k))};
    for (long j = 0; j < t.phi; ++j) {
      if (row[static_cast<size_t>(j)] != 0)
        c[static_cast<size_t>(j)] += rk * Rat(row[static_cast<size_t>(j)]);
    }
  }
  return CycNum(m_, std::move(c));
}

std::optional<Rat> ZetaSum::rational_value() const {
  // prime-power factorization of the conductor
  struct Axis {
    long q;       // p^a
    long p;
    long phi;     // q - q/p
    long stride;  // into the tensor basis
  };
  std::vector<Axis> axes;
  long rest = m_;
  long stride = 1;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // the remainder is prime
    if (rest % p != 0) continue;
    long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    Axis ax;
    ax.q = q;
    ax.p = p;
    ax.phi = q - q / p;
    ax.stride = stride;
    stride *= ax.phi;
    axes.push_back(ax);
  }
  long dim = stride;  // = phi(m_)
  std::vector<long long> acc(static_cast<size_t>(dim), 0);

  // expansion of one exponent along one axis: positions and signs
  auto expand = [](const Axis& ax, long e,
                   std::vector<std::pair<long, int>>& out) {
    out.clear();
    if (e < ax.phi) {
      out.emplace_back(e, +1);
    } else {
      long r = e - ax.phi;
      for (long j = 0; j + 1 < ax.p; ++j) {
        out.emplace_back(r + j * (ax.q / ax.p), -1);
      }
    }
  };

  std::vector<std::vector<std::pair<long, int>>> parts(axes.size());
  for (long e = 0; e < m_; ++e) {
    long long cnt = counts_[static_cast<size_t>(e)];
    if (cnt == 0) continue;
    for (size_t i = 0; i < axes.size(); ++i) {
      expand(axes[i], e % axes[i].q, parts[i]);
    }
    // cartesian product over axes (at most a handful of axes)
    std::vector<size_t> idx(axes.size(), 0);
    while (true) {
      long pos = 0;
      int sign = 1;
      for (size_t i = 0; i < axes.size(); ++i) {
        pos += parts[i][idx[i]].first * axes[i].stride;
        sign *= parts[i][idx[i]].second;
      }
      acc[static_cast<size_t>(pos)] += sign * cnt;
      size_t ax = 0;
      for (; ax < axes.size(); ++ax) {
        if (++idx[ax] < parts[ax].size()) break;
        idx[ax] = 0;
      }
      if (ax == axes.size()) break;
    }
  }
  for (long i = 1; i < dim; ++i) {
    if (acc[static_cast<size_t>(i)] != 0) return std::nullopt;
  }
  return Rat(BigInt(static_cast<long>(acc[0])));
}

}  // namespace rootnum
