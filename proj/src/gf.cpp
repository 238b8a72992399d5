#include "toricq/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricq {

namespace {

using i64 = std::int64_t;
using Poly = std::vector<i64>;  // coefficients low degree first, reduced mod p

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder of a modulo the monic polynomial f.
Poly poly_rem(Poly a, const Poly& f, i64 p) {
  const int df = degree(f);
  for (int i = degree(a); i >= df; --i) {
    const i64 c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p) % p;
    }
  }
  a.resize(df);
  return a;
}

// Monic degree-d polynomial x^d + (base-p digits of k).
Poly monic_from(i64 k, int d, i64 p) {
  Poly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = k % p;
    k /= p;
  }
  f[d] = 1;
  return f;
}

// All monic irreducibles over GF(p) of degree 1..max_deg, grouped by degree.
std::vector<std::vector<Poly>> irreducibles_up_to(i64 p, int max_deg) {
  std::vector<std::vector<Poly>> irr(max_deg + 1);
  for (int d = 1; d <= max_deg; ++d) {
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 k = 0; k < count; ++k) {
      Poly f = monic_from(k, d, p);
      bool reducible = false;
      for (int dd = 1; dd <= d / 2 && !reducible; ++dd)
        for (const Poly& g : irr[dd]) {
          if (degree(poly_rem(f, g, p)) < 0) {
            reducible = true;
            break;
          }
        }
      if (!reducible) irr[d].push_back(std::move(f));
    }
  }
  return irr;
}

// Lexicographically smallest (by encoding) monic irreducible of degree m.
Poly canonical_modulus(i64 p, int m) {
  if (m == 1) return Poly{0, 1};
  auto irr = irreducibles_up_to(p, m / 2);
  i64 count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (i64 k = 0; k < count; ++k) {
    Poly f = monic_from(k, m, p);
    bool reducible = false;
    for (int dd = 1; dd <= m / 2 && !reducible; ++dd)
      for (const Poly& g : irr[dd]) {
        if (degree(poly_rem(f, g, p)) < 0) {
          reducible = true;
          break;
        }
      }
    if (!reducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct Field::Tables {
  i64 p = 0, m = 0, q = 0;
  std::vector<i64> modulus;
  std::vector<std::uint16_t> expt;  // expt[i] = g^i, i in [0, q-1)
  std::vector<std::int32_t> logt;   // logt[x] with logt[0] = -1
  std::uint16_t generator = 0;

  Field::enc_t encode(const Poly& f) const {
    i64 v = 0;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i)
      v = v * p + (i < static_cast<int>(f.size()) ? f[i] : 0);
    return static_cast<Field::enc_t>(v);
  }
  Poly decode(Field::enc_t a) const {
    Poly f(m, 0);
    i64 v = a;
    for (i64 i = 0; i < m; ++i) {
      f[i] = v % p;
      v /= p;
    }
    return f;
  }
  Field::enc_t mul_slow(Field::enc_t a, Field::enc_t b) const {
    if (a == 0 || b == 0) return 0;
    return encode(poly_rem(poly_mul(decode(a), decode(b), p), modulus, p));
  }
  Field::enc_t pow_slow(Field::enc_t a, i64 e) const {
    Field::enc_t r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return r;
  }
};

Field::Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

Field Field::make(i64 p, i64 m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  i64 q = 1;
  for (i64 i = 0; i < m; ++i) {
    q *= p;
    if (q > (1LL << 16)) throw std::invalid_argument("field order exceeds 2^16");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = q;
  t->modulus = canonical_modulus(p, static_cast<int>(m));

  // Find a multiplicative generator, then fill the log/exp tables.
  const auto factors = prime_factors(q - 1);
  std::uint16_t gen = 1;
  for (i64 cand = (q == 2 ? 1 : 2); cand < q; ++cand) {
    bool ok = true;
    for (i64 ell : factors)
      if (t->pow_slow(static_cast<enc_t>(cand), (q - 1) / ell) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = static_cast<std::uint16_t>(cand);
      break;
    }
  }
  t->generator = gen;
  t->expt.resize(q - 1);
  t->logt.assign(q, -1);
  enc_t acc = 1;
  for (i64 i = 0; i < q - 1; ++i) {
    t->expt[i] = static_cast<std::uint16_t>(acc);
    t->logt[acc] = static_cast<std::int32_t>(i);
    acc = t->mul_slow(acc, gen);
  }
  return Field(std::move(t));
}

Field Field::of_order(i64 q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  i64 p = 0;
  for (i64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return make(q, 1);  // q itself prime
  i64 m = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(p, m);
}

i64 Field::p() const noexcept { return t_->p; }
i64 Field::m() const noexcept { return t_->m; }
i64 Field::q() const noexcept { return t_->q; }
const std::vector<i64>& Field::modulus() const noexcept { return t_->modulus; }

FieldElement Field::element(i64 encoding) const {
  if (encoding < 0 || encoding >= t_->q)
    throw std::invalid_argument("element encoding out of range");
  return FieldElement(*this, static_cast<enc_t>(encoding));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> out;
  out.reserve(t_->q - 1);
  for (i64 v = 1; v < t_->q; ++v) out.push_back(FieldElement(*this, static_cast<enc_t>(v)));
  return out;
}

Field::enc_t Field::add(enc_t a, enc_t b) const {
  const auto& t = *t_;
  if (t.p == 2) return a ^ b;
  if (t.m == 1) return (a + b) % static_cast<enc_t>(t.q);
  enc_t r = 0, mult = 1;
  for (i64 i = 0; i < t.m; ++i) {
    const i64 d = (a % t.p + b % t.p) % t.p;
    r += static_cast<enc_t>(d) * mult;
    mult *= static_cast<enc_t>(t.p);
    a /= static_cast<enc_t>(t.p);
    b /= static_cast<enc_t>(t.p);
  }
  return r;
}

Field::enc_t Field::sub(enc_t a, enc_t b) const { return add(a, neg(b)); }

Field::enc_t Field::neg(enc_t a) const {
  const auto& t = *t_;
  if (t.p == 2) return a;
  if (t.m == 1) return a == 0 ? 0 : static_cast<enc_t>(t.q) - a;
  enc_t r = 0, mult = 1;
  for (i64 i = 0; i < t.m; ++i) {
    const i64 d = (t.p - a % t.p) % t.p;
    r += static_cast<enc_t>(d) * mult;
    mult *= static_cast<enc_t>(t.p);
    a /= static_cast<enc_t>(t.p);
  }
  return r;
}

Field::enc_t Field::mul(enc_t a, enc_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& t = *t_;
  return t.expt[(t.logt[a] + t.logt[b]) % (t.q - 1)];
}

Field::enc_t Field::inv(enc_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(q)");
  const auto& t = *t_;
  return t.expt[(t.q - 1 - t.logt[a]) % (t.q - 1)];
}

Field::enc_t Field::pow(enc_t base, i64 e) const {
  const auto& t = *t_;
  if (base == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("negative power of zero in GF(q)");
  }
  i64 er = e % (t.q - 1);
  if (er < 0) er += t.q - 1;
  return t.expt[(static_cast<i64>(t.logt[base]) * er) % (t.q - 1)];
}

Field::enc_t Field::sqrt(enc_t a) const {
  const auto& t = *t_;
  if (t.p != 2) throw std::domain_error("sqrt table only available in characteristic 2");
  if (a == 0) return 0;
  return t.expt[(static_cast<i64>(t.logt[a]) * (t.q / 2)) % (t.q - 1)];
}

std::vector<i64> Field::coeffs(enc_t a) const {
  std::vector<i64> out(t_->m, 0);
  i64 v = a;
  for (i64 i = 0; i < t_->m; ++i) {
    out[i] = v % t_->p;
    v /= t_->p;
  }
  return out;
}

bool Field::operator==(const Field& other) const {
  if (t_ == other.t_) return true;
  return t_->p == other.t_->p && t_->m == other.t_->m && t_->modulus == other.t_->modulus;
}

namespace {
void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(f_, o.f_);
  return FieldElement(f_, f_.add(v_, o.v_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(f_, o.f_);
  return FieldElement(f_, f_.sub(v_, o.v_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(f_, o.f_);
  return FieldElement(f_, f_.mul(v_, o.v_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(f_, o.f_);
  return FieldElement(f_, f_.mul(v_, f_.inv(o.v_)));
}
FieldElement FieldElement::operator-() const { return FieldElement(f_, f_.neg(v_)); }
FieldElement FieldElement::inv() const { return FieldElement(f_, f_.inv(v_)); }
FieldElement FieldElement::pow(std::int64_t e) const { return FieldElement(f_, f_.pow(v_, e)); }
FieldElement FieldElement::sqrt() const { return FieldElement(f_, f_.sqrt(v_)); }

bool FieldElement::operator==(const FieldElement& o) const {
  return f_ == o.f_ && v_ == o.v_;
}

}  // namespace toricq
