#include "trx/series.hpp"

#include <algorithm>

#include "trx/errors.hpp"

namespace trx {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw Error(errc::bad_format, "series order mismatch");
}

} // namespace

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

Series mul_z(const Series& a) {
  Series r(a.order());
  for (int k = 1; k <= a.order(); ++k) r.c[k] = a.c[k - 1];
  return r;
}

Series inverse(const Series& a) {
  if (a.c[0] == 0) throw Error(errc::bad_format, "series has no inverse (zero constant term)");
  Series r(a.order());
  r.c[0] = 1 / a.c[0];
  for (int k = 1; k <= a.order(); ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= k; ++i) s += a.c[i] * r.c[k - i];
    r.c[k] = -s / a.c[0];
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return a * inverse(b); }

namespace {

Series series_one(int N) {
  Series s(N);
  s.c[0] = 1;
  return s;
}

} // namespace

Series series_A(int N) {
  Series a(N), one = series_one(N);
  // one z-order of precision per pass
  for (int pass = 0; pass < N; ++pass) {
    Series s = one + a;
    a = mul_z(s * s * s);
  }
  return a;
}

Series series_C(int N) {
  Series a = series_A(N), one = series_one(N);
  Series x = mul_z(a - a * a + one); // z (A - A^2 + 1)
  Series c = x / (one + x);

  // consistency: with U = C/z - 1 and T = A - A^2, T+1 = (U+1)/(1-z(U+1))
  Series u1(N); // U + 1
  for (int k = 0; k + 1 <= N; ++k) u1.c[k] = c.c[k + 1];
  Series t1 = a - a * a + one;
  Series rhs = u1 / (one - mul_z(u1));
  for (int k = 0; k + 1 <= N; ++k)
    if (t1.c[k] != rhs.c[k]) throw Error(errc::bad_format, "series identity T+1=(U+1)/(1-z(U+1)) broken");
  return c;
}

namespace {

mpz_class fac(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (3n)! / (n! (2n+2)!), the per-root share of the rooted count
mpq_class rooted_quarter(long n) {
  return mpq_class(fac(3 * n)) / mpq_class(fac(n) * fac(2 * n + 2));
}

mpz_class to_integer(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  if (r.get_den() != 1) throw Error(errc::bad_format, "count formula produced a non-integer");
  return r.get_num();
}

} // namespace

mpz_class rooted_irreducible_count(long n) {
  if (n < 1) throw Error(errc::bad_format, "counts are defined for n >= 1");
  return to_integer(4 * rooted_quarter(n));
}

mpz_class unrooted_irreducible_count(long n) {
  if (n < 1) throw Error(errc::bad_format, "counts are defined for n >= 1");
  mpq_class half(1, 2);
  mpq_class res = rooted_quarter(n);
  if (n % 2 == 0) {
    long k = n / 2;
    res += half * mpq_class(fac(3 * k)) / mpq_class(fac(k) * fac(2 * k + 1));
  } else {
    long k = (n - 1) / 2;
    res += half * mpq_class(fac(3 * k + 1)) / mpq_class(fac(k) * fac(2 * k + 2));
    if (n % 4 == 1) {
      long kk = (n - 1) / 4;
      res += half * mpq_class(fac(3 * kk)) / mpq_class(fac(kk) * fac(2 * kk + 1));
    }
  }
  return to_integer(res);
}

mpz_class tutte_4connected(long n) {
  if (n < 2) throw Error(errc::bad_format, "Tutte formula needs n >= 2");
  mpz_class sum = 0;
  for (long i = 1; i <= n; ++i) {
    mpz_class b1, b2;
    mpz_bin_uiui(b1.get_mpz_t(), 3 * n - i - 1, n - i);
    mpz_bin_uiui(b2.get_mpz_t(), 2 * i, 2);
    mpz_class term = b1 * b2;
    sum += (i % 2 == 0) ? term : -term;
  }
  return to_integer(mpq_class(sum) / n);
}

// ---- bivariate counting ----
// Small dense polynomials in u with mpz coefficients, stacked per z-order.

namespace {

using PolyU = std::vector<mpz_class>;

PolyU padd(const PolyU& a, const PolyU& b) {
  PolyU r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PolyU pmul(const PolyU& a, const PolyU& b) {
  if (a.empty() || b.empty()) return {};
  PolyU r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// truncated series over PolyU, with enough structure for the two systems
struct ZU {
  std::vector<PolyU> c;
  explicit ZU(int N) : c(N + 1) {}
  int order() const { return (int)c.size() - 1; }
};

ZU zmul(const ZU& a, const ZU& b, int trunc) {
  ZU r(a.order());
  for (int i = 0; i <= trunc; ++i)
    for (int j = 0; i + j <= trunc; ++j)
      if (!a.c[i].empty() && !b.c[j].empty()) r.c[i + j] = padd(r.c[i + j], pmul(a.c[i], b.c[j]));
  return r;
}

ZU shift_z(const ZU& a) {
  ZU r(a.order());
  for (int k = 1; k <= a.order(); ++k) r.c[k] = a.c[k - 1];
  return r;
}

ZU with_const(const ZU& a, const PolyU& k0) {
  ZU r = a;
  r.c[0] = padd(r.c[0], k0);
  return r;
}

ZU scale_u(const ZU& a) { // multiply by u
  ZU r(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    if (a.c[k].empty()) continue;
    r.c[k].assign(a.c[k].size() + 1, 0);
    for (std::size_t i = 0; i < a.c[k].size(); ++i) r.c[k][i + 1] = a.c[k][i];
  }
  return r;
}

} // namespace

BivariateSeries bivariate_red_edges(int N) {
  PolyU one{mpz_class(1)}, u{mpz_class(0), mpz_class(1)};
  ZU r(N), b(N);
  for (int k = 1; k <= N; ++k) {
    // R = z u (1+B) (u+R) (1+B),  B = z (u+R) (1+B) (u+R)
    ZU p = with_const(b, one), q = with_const(r, u);
    ZU pq = zmul(p, q, k - 1);
    ZU nr = shift_z(scale_u(zmul(pq, p, k - 1)));
    ZU nb = shift_z(zmul(pq, q, k - 1));
    r = nr;
    b = nb;
  }
  BivariateSeries out;
  out.zu.resize(N + 1);
  for (int k = 0; k <= N; ++k) out.zu[k] = padd(r.c[k], b.c[k]);
  return out;
}

BivariateSeries bivariate_internal_red(int N) {
  PolyU one{mpz_class(1)};
  ZU f(N), g(N), fh(N), gh(N);
  for (int k = 1; k <= N; ++k) {
    int t = k - 1;
    ZU F1 = with_const(f, one), Fh1 = with_const(fh, one), Gh1 = with_const(gh, one);
    ZU fhgh = zmul(Fh1, gh, t); // (1+Fh) Gh
    // Fh = z(1+F) + zu(1+F)Gh + z(1+Fh)Gh + zu Gh(1+Fh)Gh
    ZU t2 = scale_u(zmul(F1, gh, t));
    ZU t4 = scale_u(zmul(gh, fhgh, t));
    ZU sum_fh(N), sum_gh(N), sum_f(N), sum_g(N);
    for (int i = 0; i <= t; ++i)
      sum_fh.c[i] = padd(padd(F1.c[i], t2.c[i]), padd(fhgh.c[i], t4.c[i]));
    // Gh = z(1+Fh)(1+F) + z(1+Fh)Gh(1+Fh)
    ZU a1 = zmul(Fh1, F1, t), a2 = zmul(fhgh, Fh1, t);
    // F = z(1+F)(1+Gh) + z Gh(1+Fh)(1+Gh)
    ZU b1 = zmul(F1, Gh1, t), b2 = zmul(fhgh, Gh1, t);
    // G = z(1+F)^2 + z(1+F)Gh(1+Fh)
    ZU c1 = zmul(F1, F1, t), c2 = zmul(F1, fhgh, t);
    for (int i = 0; i <= t; ++i) {
      sum_gh.c[i] = padd(a1.c[i], a2.c[i]);
      sum_f.c[i] = padd(b1.c[i], b2.c[i]);
      sum_g.c[i] = padd(c1.c[i], c2.c[i]);
    }
    fh = shift_z(sum_fh);
    gh = shift_z(sum_gh);
    f = shift_z(sum_f);
    g = shift_z(sum_g);
  }
  BivariateSeries out;
  out.zu.resize(N + 1);
  for (int k = 0; k <= N; ++k) out.zu[k] = padd(f.c[k], g.c[k]);
  return out;
}

// ---- first-order jets at u = 1: value and d/du ----

namespace {

struct Jet {
  mpz_class v, d;
};

struct JetSeries {
  std::vector<Jet> c;
  explicit JetSeries(int N) : c(N + 1) {}
};

JetSeries jmul(const JetSeries& a, const JetSeries& b, int trunc) {
  JetSeries r((int)a.c.size() - 1);
  for (int i = 0; i <= trunc; ++i) {
    if (a.c[i].v == 0 && a.c[i].d == 0) continue;
    for (int j = 0; i + j <= trunc; ++j) {
      r.c[i + j].v += a.c[i].v * b.c[j].v;
      r.c[i + j].d += a.c[i].v * b.c[j].d + a.c[i].d * b.c[j].v;
    }
  }
  return r;
}

JetSeries jshift(const JetSeries& a) {
  JetSeries r((int)a.c.size() - 1);
  for (std::size_t k = a.c.size() - 1; k >= 1; --k) r.c[k] = a.c[k - 1];
  return r;
}

JetSeries jadd(const JetSeries& a, const JetSeries& b) {
  JetSeries r((int)a.c.size() - 1);
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    r.c[k].v = a.c[k].v + b.c[k].v;
    r.c[k].d = a.c[k].d + b.c[k].d;
  }
  return r;
}

JetSeries jconst(const Jet& k0, const JetSeries& a) {
  JetSeries r = a;
  r.c[0].v += k0.v;
  r.c[0].d += k0.d;
  return r;
}

std::vector<mpq_class> means_from(const JetSeries& e, int N) {
  std::vector<mpq_class> out(N + 1, 0);
  for (int n = 1; n <= N; ++n) {
    if (e.c[n].v == 0) continue;
    mpq_class m(e.c[n].d, e.c[n].v);
    m.canonicalize();
    out[n] = m;
  }
  return out;
}

} // namespace

std::vector<mpq_class> mean_red_edges(int N) {
  Jet one{1, 0}, u{1, 1};
  JetSeries r(N), b(N);
  for (int k = 1; k <= N; ++k) {
    int t = k - 1;
    JetSeries p = jconst(one, b), q = jconst(u, r);
    JetSeries pq = jmul(p, q, t);
    JetSeries nr = jshift(jmul(pq, p, t));
    // times u
    for (auto& c : nr.c) {
      c.d = c.d + c.v; // d(u*x) = x + u x' at u=1
    }
    JetSeries nb = jshift(jmul(pq, q, t));
    r = nr;
    b = nb;
  }
  return means_from(jadd(r, b), N);
}

std::vector<mpq_class> mean_internal_red(int N) {
  Jet one{1, 0};
  JetSeries f(N), g(N), fh(N), gh(N);
  auto times_u = [](JetSeries s) {
    for (auto& c : s.c) c.d += c.v;
    return s;
  };
  for (int k = 1; k <= N; ++k) {
    int t = k - 1;
    JetSeries F1 = jconst(one, f), Fh1 = jconst(one, fh), Gh1 = jconst(one, gh);
    JetSeries fhgh = jmul(Fh1, gh, t);
    JetSeries nfh = jshift(jadd(jadd(F1, times_u(jmul(F1, gh, t))),
                                jadd(fhgh, times_u(jmul(gh, fhgh, t)))));
    JetSeries ngh = jshift(jadd(jmul(Fh1, F1, t), jmul(fhgh, Fh1, t)));
    JetSeries nf = jshift(jadd(jmul(F1, Gh1, t), jmul(fhgh, Gh1, t)));
    JetSeries ng = jshift(jadd(jmul(F1, F1, t), jmul(F1, fhgh, t)));
    f = nf;
    g = ng;
    fh = nfh;
    gh = ngh;
  }
  return means_from(jadd(f, g), N);
}

} // namespace trx
