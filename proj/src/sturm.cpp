#include "wrz/sturm.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wrz {

namespace {

using Poly = std::vector<mpz_class>;  // index = power

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

void trim(Poly* p) {
  p->resize(degree(*p) + 1);
}

// Rounds each coefficient to precision_bits significant bits of its own
// magnitude (a relative 2^-precision_bits perturbation, exactly dyadic) and
// scales the whole polynomial by a common power of two into integers.
// Rounding relative to the largest coefficient instead would wipe out the
// small-scale coefficients that control the roots near the origin.
Poly to_dyadic_poly(std::span<const double> coeffs, int precision_bits) {
  if (precision_bits < 1 || precision_bits > 62) {
    throw std::invalid_argument("count_real_roots: precision_bits in [1,62]");
  }
  bool any = false;
  std::vector<long long> mant(coeffs.size(), 0);
  std::vector<int> expo(coeffs.size(), 0);
  int e_min = std::numeric_limits<int>::max();
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0.0) continue;
    any = true;
    int e = 0;
    const double m = std::frexp(coeffs[j], &e);  // |m| in [0.5, 1)
    mant[j] = std::llround(std::ldexp(m, precision_bits));
    expo[j] = e - precision_bits;
    e_min = std::min(e_min, expo[j]);
  }
  if (!any) {
    throw std::invalid_argument("count_real_roots: zero polynomial");
  }
  Poly p(coeffs.size());
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (mant[j] == 0) continue;
    p[j] = static_cast<long>(mant[j]);
    mpz_mul_2exp(p[j].get_mpz_t(), p[j].get_mpz_t(),
                 static_cast<unsigned long>(expo[j] - e_min));
  }
  trim(&p);
  return p;
}

// Pseudo-remainder: returns lc(B)^(dA-dB+1) * (A mod B), destroying A.
Poly prem(Poly A, const Poly& B) {
  const int dB = degree(B);
  const mpz_class& lcB = B[dB];
  int dA = degree(A);
  int e = dA - dB + 1;
  while (dA >= dB && dA >= 0) {
    const mpz_class lcA = A[dA];
    const int shift = dA - dB;
    A.resize(dA);  // drop the top term, eliminated below
    for (int i = 0; i < dA; ++i) {
      A[i] *= lcB;
      if (i >= shift) {
        mpz_submul(A[i].get_mpz_t(), lcA.get_mpz_t(), B[i - shift].get_mpz_t());
      }
    }
    --e;
    dA = degree(A);
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lcB.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : A) c *= f;
  }
  trim(&A);
  return A;
}

struct ChainSign {
  int deg;
  int lc_sign;  // sign of the true Sturm chain element's leading coefficient
};

int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Sturm chain over a primitive PRS: each pseudo-remainder is divided by the
// gcd of its coefficients. The content is positive, so only the prem
// multiplier lc(B)^(delta+1) affects the sign bookkeeping; content removal
// caps the bit growth through the chain.
int sturm_count(Poly p) {
  const int d = degree(p);
  if (d <= 0) return 0;

  Poly dp(d);
  for (int i = 1; i <= d; ++i) dp[i - 1] = p[i] * i;

  std::vector<ChainSign> chain;
  chain.push_back({d, sgn(p[d])});
  chain.push_back({d - 1, sgn(dp[d - 1])});

  Poly A = std::move(p);
  Poly B = std::move(dp);
  int sigma_prev = 1, sigma_cur = 1;
  while (true) {
    const int dB = degree(B);
    const int delta = degree(A) - dB;
    Poly R = prem(A, B);
    if (degree(R) < 0) break;

    mpz_class content = 0;
    for (const auto& c : R) {
      if (c == 0) continue;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      if (content == 1) break;
    }
    if (content > 1) {
      for (auto& c : R) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      }
    }

    const int lcB_sign = sgn(B[dB]);
    const int mult_sign = (delta % 2 == 0) ? lcB_sign : 1;  // sign(lcB^(delta+1))
    const int sigma_next = -mult_sign * sigma_prev;

    const int dR = degree(R);
    chain.push_back({dR, sigma_next * sgn(R[dR])});

    A = std::move(B);
    B = std::move(R);
    sigma_prev = sigma_cur;
    sigma_cur = sigma_next;
  }

  std::vector<int> at_pos, at_neg;
  at_pos.reserve(chain.size());
  at_neg.reserve(chain.size());
  for (const ChainSign& cs : chain) {
    at_pos.push_back(cs.lc_sign);
    at_neg.push_back((cs.deg % 2 == 0) ? cs.lc_sign : -cs.lc_sign);
  }
  return variations(at_neg) - variations(at_pos);
}

// ---------------------------------------------------------------------------
// Exact Descartes (Vincent-Collins-Akritas) bisection counter. Counts the
// distinct real roots of the same integer polynomial with far smaller
// intermediate integers than the Sturm chain: the only operations are Taylor
// shifts by 1 and scalings by powers of two. A cluster the bisection cannot
// split (a genuinely multiple root) exhausts the depth budget, which the
// caller resolves by falling back to the Sturm chain.

struct DepthExhausted {};

// Divides out the largest common power of two.
void strip_pow2(Poly* p) {
  unsigned long shift = std::numeric_limits<unsigned long>::max();
  for (const auto& c : *p) {
    if (c == 0) continue;
    shift = std::min(shift, mpz_scan1(c.get_mpz_t(), 0));
    if (shift == 0) return;
  }
  if (shift == std::numeric_limits<unsigned long>::max()) return;
  for (auto& c : *p) {
    if (c != 0) {
      mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), shift);
    }
  }
}

// In-place Taylor shift p(x) -> p(x+1).
void taylor_shift1(Poly* p) {
  const int d = static_cast<int>(p->size()) - 1;
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) {
      (*p)[j] += (*p)[j + 1];
    }
  }
}

// Descartes sign variation count of the coefficient sequence.
int descartes_variations(const Poly& p) {
  int v = 0;
  int prev = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Upper bound on the number of roots of q in the open interval (0, 1):
// variations of (1+x)^d q(1/(1+x)) (coefficient reversal + shift).
int variation_bound_01(const Poly& q) {
  Poly r(q.rbegin(), q.rend());
  taylor_shift1(&r);
  return descartes_variations(r);
}

// Distinct real roots of q in the open interval (0, 1); q(0) != 0.
int count_01(Poly q, int depth) {
  const int v = variation_bound_01(q);
  if (v == 0) return 0;
  if (v == 1) return 1;
  if (depth <= 0) throw DepthExhausted{};

  // Left half via q(x/2) scaled: a_j <- a_j 2^(d-j).
  const int d = static_cast<int>(q.size()) - 1;
  for (int j = 0; j <= d; ++j) {
    if (q[j] != 0) {
      mpz_mul_2exp(q[j].get_mpz_t(), q[j].get_mpz_t(),
                   static_cast<unsigned long>(d - j));
    }
  }
  strip_pow2(&q);
  const int left = count_01(q, depth - 1);

  // Right half: shift to move (1/2, 1) onto (0, 1).
  taylor_shift1(&q);
  int mid = 0;
  if (q[0] == 0) {
    mid = 1;  // root exactly at the midpoint, counted once
    size_t k = 0;
    while (k < q.size() && q[k] == 0) ++k;
    q.erase(q.begin(), q.begin() + k);
  }
  const int right = count_01(q, depth - 1);
  return left + mid + right;
}

// Distinct roots in (0, inf): rescale by a power-of-two Cauchy bound so all
// positive roots land in (0, 1), then bisect.
int count_positive(Poly p, int depth) {
  trim(&p);
  const int d = degree(p);
  if (d <= 0) return 0;
  const long lead_bits = static_cast<long>(mpz_sizeinbase(p[d].get_mpz_t(), 2));
  long b = 1;  // roots have |x| < 1 + max_j |a_j/a_d|
  for (int j = 0; j < d; ++j) {
    if (p[j] == 0) continue;
    const long bits = static_cast<long>(mpz_sizeinbase(p[j].get_mpz_t(), 2));
    const long need = (bits - lead_bits + 1) / (d - j) + 2;
    b = std::max(b, need);
  }
  // p(2^b y): a_j <- a_j 2^(jb).
  for (int j = 1; j <= d; ++j) {
    if (p[j] != 0) {
      mpz_mul_2exp(p[j].get_mpz_t(), p[j].get_mpz_t(),
                   static_cast<unsigned long>(j) * static_cast<unsigned long>(b));
    }
  }
  strip_pow2(&p);
  return count_01(std::move(p), depth);
}

// Distinct roots in the open interval (0, c) for dyadic c = m 2^e: substitute
// x = c y (a_j <- a_j m^j 2^(je), a pure scaling) and bisect on (0, 1).
int count_positive_below(Poly p, double c, int depth) {
  trim(&p);
  const int d = degree(p);
  if (d <= 0) return 0;
  int e = 0;
  const double frac = std::frexp(c, &e);
  long long m = std::llround(std::ldexp(frac, 53));
  while (m % 2 == 0) {
    m /= 2;
    ++e;
  }
  e -= 53;
  // Uniform offset keeps every power-of-two shift non-negative.
  mpz_class mpow = 1;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) mpow *= static_cast<long>(m);
    if (p[j] == 0) continue;
    if (j > 0) p[j] *= mpow;
    const long shift = (e >= 0) ? static_cast<long>(j) * e
                                : static_cast<long>(d - j) * (-e);
    mpz_mul_2exp(p[j].get_mpz_t(), p[j].get_mpz_t(),
                 static_cast<unsigned long>(shift));
  }
  strip_pow2(&p);
  return count_01(std::move(p), depth);
}

int descartes_count(const Poly& p) {
  const int d = degree(p);
  if (d <= 0) return 0;

  int count = 0;
  size_t t = 0;
  while (t < p.size() && p[t] == 0) ++t;
  Poly q(p.begin() + t, p.end());
  if (t > 0) ++count;  // root at the origin, counted once

  const int depth = 96;
  count += count_positive(q, depth);
  for (size_t j = 1; j < q.size(); j += 2) q[j] = -q[j];  // x -> -x
  count += count_positive(std::move(q), depth);
  return count;
}

int descartes_count_within(const Poly& p, double half_width, int depth) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("count within: half_width must be positive");
  }
  int count = 0;
  size_t t = 0;
  while (t < p.size() && p[t] == 0) ++t;
  Poly q(p.begin() + t, p.end());
  if (t > 0) ++count;  // root at the origin
  count += count_positive_below(q, half_width, depth);
  for (size_t j = 1; j < q.size(); j += 2) q[j] = -q[j];
  count += count_positive_below(std::move(q), half_width, depth);
  return count;
}

}  // namespace

int count_real_roots_dyadic(std::span<const double> coeffs, int precision_bits) {
  return sturm_count(to_dyadic_poly(coeffs, precision_bits));
}

int count_real_roots_descartes(std::span<const double> coeffs, int precision_bits) {
  Poly p = to_dyadic_poly(coeffs, precision_bits);
  try {
    return descartes_count(p);
  } catch (const DepthExhausted&) {
    // Unsplittable cluster: a multiple root. The Sturm chain settles it.
    return sturm_count(std::move(p));
  }
}

int count_real_roots_descartes_within(std::span<const double> coeffs,
                                      double half_width, int precision_bits) {
  const Poly p = to_dyadic_poly(coeffs, precision_bits);
  try {
    return descartes_count_within(p, half_width, /*depth=*/96);
  } catch (const DepthExhausted&) {
    throw std::runtime_error(
        "count within: multiple root blocked the bisection");
  }
}

}  // namespace wrz
