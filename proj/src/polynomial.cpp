#include "coedge/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "coedge/graph.hpp"

namespace coedge {

namespace mp = boost::multiprecision;

ExactPolynomial::ExactPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ExactPolynomial ExactPolynomial::constant(BigInt c) {
  return ExactPolynomial(std::vector<BigInt>{std::move(c)});
}

ExactPolynomial ExactPolynomial::linear_root(const BigInt& r) {
  return ExactPolynomial(std::vector<BigInt>{-r, 1});
}

ExactPolynomial ExactPolynomial::monomial(int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  return ExactPolynomial(std::move(c));
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt ExactPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt ExactPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational ExactPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int ExactPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // den^d * p(num/den) = sum a_i num^i den^(d-i); den > 0 keeps the sign.
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  BigInt acc = coeffs_.back();
  BigInt den_pow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_pow;
  }
  return acc.sign();
}

int ExactPolynomial::sign_at_infinity(bool negative_infinity) const {
  if (is_zero()) return 0;
  int s = leading().sign();
  if (negative_infinity && degree() % 2 == 1) s = -s;
  return s;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return ExactPolynomial(std::move(c));
}

BigInt ExactPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = mp::gcd(g, c);
    if (g == 1) break;
  }
  return mp::abs(g);
}

ExactPolynomial ExactPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  if (g == 1) return *this;
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] / g;
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::operator-() const {
  ExactPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) { return a + (-b); }

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const BigInt& k, const ExactPolynomial& a) {
  std::vector<BigInt> c(a.coeffs_);
  for (auto& x : c) x *= k;
  return ExactPolynomial(std::move(c));
}

std::string ExactPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = mp::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// Division ---------------------------------------------------------------------

ExactPolynomial pseudo_remainder(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw Error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> r = a.coeffs();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    BigInt lr = r[static_cast<std::size_t>(dr)];
    const int shift = dr - db;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(i + shift)] -= lr * b.coeffs()[static_cast<std::size_t>(i)];
    --e;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
  if (e > 0) {
    BigInt f = mp::pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return ExactPolynomial(std::move(r));
}

ExactPolynomial divide_exact(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error("inexact polynomial division");
  const int db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int dr = a.degree(); dr >= db; --dr) {
    const BigInt& lr = r[static_cast<std::size_t>(dr)];
    if (lr == 0) continue;
    BigInt t, rem;
    mp::divide_qr(lr, b.leading(), t, rem);
    if (rem != 0) throw Error("inexact polynomial division");
    const int shift = dr - db;
    q[static_cast<std::size_t>(shift)] = t;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(i + shift)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) throw Error("inexact polynomial division");
  return ExactPolynomial(std::move(q));
}

bool divides(const ExactPolynomial& b, const ExactPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.degree() == 0) return true;
  return pseudo_remainder(a, b).is_zero();
}

ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  ExactPolynomial u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return ExactPolynomial::constant(1);
    ExactPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

ExactPolynomial squarefree_part(const ExactPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  ExactPolynomial pp = p.primitive_part();
  return divide_exact(pp, gcd(pp, pp.derivative()));
}

std::vector<std::pair<ExactPolynomial, int>> squarefree_decomposition(const ExactPolynomial& p) {
  std::vector<std::pair<ExactPolynomial, int>> out;
  if (p.degree() < 1) return out;
  // c_i = gcd(c_{i-1}, c_{i-1}'), s_i = c_{i-1}/c_i = product of factors of
  // multiplicity >= i.
  std::vector<ExactPolynomial> s;
  ExactPolynomial c = p.primitive_part();
  while (c.degree() >= 1) {
    ExactPolynomial next = gcd(c, c.derivative());
    s.push_back(divide_exact(c, next));
    c = std::move(next);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    ExactPolynomial f = i + 1 < s.size() ? divide_exact(s[i], s[i + 1]) : s[i];
    if (f.degree() >= 1) out.emplace_back(f.primitive_part(), static_cast<int>(i + 1));
  }
  return out;
}

// Sturm ------------------------------------------------------------------------

SturmSequence::SturmSequence(const ExactPolynomial& squarefree) {
  if (squarefree.is_zero()) throw Error("Sturm sequence of zero polynomial");
  chain_.push_back(squarefree);
  if (squarefree.degree() < 1) return;
  chain_.push_back(squarefree.derivative());
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    ExactPolynomial r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && delta % 2 == 1) r = -r;
    if (r.is_zero()) break;
    // Negate and divide by the (positive) content; signs are what matter.
    ExactPolynomial next = -r;
    BigInt g = next.content();
    if (g != 1) {
      std::vector<BigInt> c = next.coeffs();
      for (auto& x : c) x /= g;
      next = ExactPolynomial(std::move(c));
    }
    chain_.push_back(std::move(next));
    if (chain_.back().degree() == 0) break;
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_infinity(bool negative_infinity) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at_infinity(negative_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count_in(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_below(const Rational& x) const {
  int n = variations_at_infinity(true) - variations_at(x);
  if (chain_.front().sign_at(x) == 0) --n;
  return n;
}

int SturmSequence::count_real() const {
  return variations_at_infinity(true) - variations_at_infinity(false);
}

BigInt root_bound(const ExactPolynomial& p) {
  if (p.degree() < 1) return 1;
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(mp::abs(p.coeff(i))));
  BigInt lead = mp::abs(p.leading());
  return m / lead + 2;
}

// Characteristic polynomial ----------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % sp == 0) return n == sp;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^62, generated on demand.
const std::vector<u64>& modular_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
  const std::size_t n = m.size();
  std::vector<u64> h(n * n);
  auto H = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = m[i][j] % static_cast<std::int64_t>(p);
      H(i, j) = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }

  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && H(i, col) == 0) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(piv_row, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, piv_row));
    }
    const u64 inv = inv_mod(H(piv_row, col), p);
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (H(r, col) == 0) continue;
      const u64 u = mul_mod(H(r, col), inv, p);
      const u64 neg_u = p - u;
      for (std::size_t j = 0; j < n; ++j)
        H(r, j) = (H(r, j) + mul_mod(neg_u, H(piv_row, j), p)) % p;
      for (std::size_t j = 0; j < n; ++j)
        H(j, piv_row) = (H(j, piv_row) + mul_mod(u, H(j, r), p)) % p;
    }
  }

  // polys[k] = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> pk(k + 1, 0);
    const auto& prev = polys[k - 1];
    const u64 diag = H(k - 1, k - 1);
    // (x - h_kk) * p_{k-1}
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] = (pk[d + 1] + prev[d]) % p;
      pk[d] = (pk[d] + p - mul_mod(diag, prev[d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = mul_mod(t, H(i, i - 1), p);
      if (t == 0) break;
      const u64 coef = mul_mod(H(i - 1, k - 1), t, p);
      if (coef == 0) continue;
      const auto& q = polys[i - 1];
      for (std::size_t d = 0; d < q.size(); ++d)
        pk[d] = (pk[d] + p - mul_mod(coef, q[d], p)) % p;
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

}  // namespace

ExactPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("characteristic polynomial of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error("characteristic polynomial needs a square matrix");

  // |coefficient of x^(n-i)| <= C(n,i) * R^i where R bounds the Euclidean
  // norm of every row (Hadamard on each principal minor).
  long double max_row_sq = 1;
  for (const auto& row : m) {
    long double s = 0;
    for (auto v : row) s += static_cast<long double>(v) * static_cast<long double>(v);
    max_row_sq = std::max(max_row_sq, s);
  }
  const double bound_bits =
      static_cast<double>(n) + 0.5 * static_cast<double>(n) * std::log2(static_cast<double>(max_row_sq)) + 8;
  const std::size_t prime_count = static_cast<std::size_t>(std::ceil(bound_bits / 61.0)) + 1;
  const auto& primes = modular_primes(prime_count);

  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  for (std::size_t pi = 0; pi < prime_count; ++pi) {
    const u64 p = primes[pi];
    const auto residues = charpoly_mod(m, p);
    const u64 mod_p = static_cast<u64>(modulus % p);
    const u64 inv = inv_mod(mod_p, p);
    for (std::size_t d = 0; d <= n; ++d) {
      const u64 cur = static_cast<u64>(value[d] % p);
      const u64 diff = (residues[d] + p - cur) % p;
      value[d] += modulus * BigInt(mul_mod(diff, inv, p));
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return ExactPolynomial(std::move(value));
}

}  // namespace coedge
