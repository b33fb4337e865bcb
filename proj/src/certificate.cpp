#include "certificate.hpp"

#include <numeric>
#include <stdexcept>

namespace asymcert {

Rat elementary_symmetric(const std::vector<long>& s, int m) {
  if (m < 0 || m > static_cast<int>(s.size()))
    throw std::domain_error("elementary symmetric sum undefined for m outside [0, |s|]");
  // e_m via the one-row recurrence e_k <- e_k + v * e_{k-1}.
  std::vector<Rat> e(m + 1, Rat(0));
  e[0] = 1;
  for (size_t i = 0; i < s.size(); ++i)
    for (int k = std::min<int>(m, static_cast<int>(i) + 1); k >= 1; --k)
      e[k] += Rat(s[i]) * e[k - 1];
  return e[m];
}

namespace {

// {1..n} with the members of `excluded` (sorted, ascending) removed.
std::vector<long> complement(int n, const std::vector<long>& excluded) {
  std::vector<long> out;
  out.reserve(n);
  size_t pos = 0;
  for (long v = 1; v <= n; ++v) {
    if (pos < excluded.size() && excluded[pos] == v) {
      ++pos;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

CertificatePoly build_certificate(const std::vector<Rat>& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw std::domain_error("certificate needs at least one scalar");

  CertificatePoly cert;
  cert.denominator = Poly(Rat(1));
  for (int i = 1; i <= n; ++i) cert.denominator = cert.denominator * Poly::k_plus(i);

  // Route (a): direct expansion sum_i x_i * prod_{j != i} (K+j).
  Poly expanded;
  for (int i = 1; i <= n; ++i) {
    Poly prod(Rat(1));
    for (int j = 1; j <= n; ++j)
      if (j != i) prod = prod * Poly::k_plus(j);
    expanded = expanded + prod * x[i - 1];
  }

  // Route (b): B_i = sum_j x_j * e_{n-i-1}({1..n} \ {j}), B_{n-1} = sum_j x_j.
  cert.b_coeffs.assign(n, Rat(0));
  for (int j = 1; j <= n; ++j) {
    std::vector<long> others = complement(n, {static_cast<long>(j)});
    for (int i = 0; i <= n - 1; ++i)
      cert.b_coeffs[i] += x[j - 1] * elementary_symmetric(others, n - i - 1);
  }
  Poly closed_form{std::vector<Rat>(cert.b_coeffs)};

  if (!(expanded == closed_form))
    throw std::logic_error("certificate coefficient routes disagree");
  cert.numerator = std::move(expanded);
  return cert;
}

OmegaMatrix build_omega(int n) {
  if (n < 2) throw std::domain_error("omega matrix requires n >= 2");
  OmegaMatrix m;
  m.n = n;
  m.level = 1;
  m.entries.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int c = 1; c <= n; ++c) {
    std::vector<long> others = complement(n, {static_cast<long>(c)});
    for (int r = 1; r <= n; ++r) m.entries[r - 1][c - 1] = elementary_symmetric(others, r - 1);
  }
  return m;
}

namespace {

// Closed form of the level-j matrix: scalar * e_{r-1} of the complement of
// the consecutive window {c, .., c+j-1}, scalar = 1 at levels 1 and 2,
// j-1 beyond.
OmegaMatrix omega_closed_form(int n, int level) {
  OmegaMatrix m;
  m.n = n;
  m.level = level;
  const int dim = n - level + 1;
  const Rat scalar(level <= 2 ? 1 : level - 1);
  m.entries.assign(dim, std::vector<Rat>(dim, Rat(0)));
  for (int c = 1; c <= dim; ++c) {
    std::vector<long> window(level);
    std::iota(window.begin(), window.end(), static_cast<long>(c));
    std::vector<long> rest = complement(n, window);
    for (int r = 1; r <= dim; ++r)
      m.entries[r - 1][c - 1] = scalar * elementary_symmetric(rest, r - 1);
  }
  return m;
}

}  // namespace

OmegaChain reduce_omega_chain(const OmegaMatrix& omega1) {
  const int n = omega1.n;
  if (n < 2 || omega1.dim() != n || omega1.level != 1)
    throw std::domain_error("expected a level-1 omega matrix");
  if (!(omega1.entries == omega_closed_form(n, 1).entries))
    throw std::logic_error("level-1 omega does not match its closed form");

  OmegaChain chain;
  chain.levels.push_back(omega1);
  OmegaMatrix cur = omega1;
  while (cur.dim() > 1) {
    const int dim = cur.dim();
    const Rat head = cur.entries[0][0];  // common first-row value
    OmegaMatrix next;
    next.n = n;
    next.level = cur.level + 1;
    next.entries.assign(dim - 1, std::vector<Rat>(dim - 1, Rat(0)));
    for (int r = 1; r < dim; ++r)
      for (int c = 0; c + 1 < dim; ++c)
        next.entries[r - 1][c] = cur.entries[r][c] / head - cur.entries[r][c + 1] / head;
    if (!(next.entries == omega_closed_form(n, next.level).entries))
      throw std::logic_error("omega reduction diverged from the closed form at level " +
                             std::to_string(next.level));
    chain.levels.push_back(next);
    cur = std::move(next);
  }
  chain.terminal = cur.entries[0][0];
  return chain;
}

Int omega_det(const OmegaMatrix& omega1) {
  // Bareiss fraction-free elimination; entries are integers by construction.
  const int n = omega1.dim();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rat& q = omega1.entries[r][c];
      if (q.get_den() != 1) throw std::domain_error("omega matrix entries must be integers");
      a[r][c] = q.get_num();
    }
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool omega_det_nonzero(const OmegaMatrix& omega1) { return omega_det(omega1) != 0; }

Rat root_upper_bound(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("root bound needs degree >= 1");
  Rat lead = abs(p.leading());
  Rat max_ratio = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat ratio = abs(p.coeff(i)) / lead;
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return Rat(1) + max_ratio;
}

Rat certificate_gamma(const std::vector<Rat>& x) {
  CertificatePoly cert = build_certificate(x);
  if (cert.numerator.degree() < 1) return Rat(1);
  return root_upper_bound(cert.numerator);
}

bool is_trivial_via_certificate(const std::vector<Rat>& x) {
  CertificatePoly cert = build_certificate(x);
  Rat k0 = certificate_gamma(x) + 1;
  return sgn(cert.value().eval_at(k0)) == 0;
}

}  // namespace asymcert
