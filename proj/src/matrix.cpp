/*
   Copyright 2026 The discres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "discres/matrix.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "discres/deadline.hpp"
#include "discres/error.hpp"
#include "discres/euclid.hpp"
#include "modular.hpp"

namespace discres {

namespace {

VarTable unify_tables(Matrix<Poly>& m) {
  VarTable t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t = t.merged_with(m(i, j).vars());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).vars().identical(t)) m(i, j) = m(i, j).over(t);
    }
  }
  return t;
}

std::vector<std::size_t> matrix_support(const Matrix<Poly>& m, std::size_t arity) {
  std::vector<bool> used(arity, false);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& t : m(i, j).terms()) {
        for (std::size_t k = 0; k < arity; ++k) {
          if (t.mono.exp[k]) used[k] = true;
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < arity; ++k) {
    if (used[k]) out.push_back(k);
  }
  return out;
}

// Tries to write m(i,j) = v^(a_i + b_j) * n(i,j) with n free of v. On success
// strips the powers from m in place and returns a_1 + ... + b_n.
std::optional<long> scale_out(Matrix<Poly>& m, std::size_t v) {
  const std::size_t n = m.rows();
  Matrix<long> e(n, n, -1);
  bool any_positive = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& p = m(i, j);
      if (p.is_zero()) continue;
      std::uint32_t d = p.terms()[0].mono.exp[v];
      for (const auto& t : p.terms()) {
        if (t.mono.exp[v] != d) return std::nullopt;
      }
      e(i, j) = d;
      any_positive = any_positive || d > 0;
    }
  }
  if (!any_positive) return std::nullopt;
  std::vector<std::optional<long>> a(n), b(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (a[root]) continue;
    a[root] = 0;
    std::deque<std::pair<bool, std::size_t>> queue{{true, root}};
    while (!queue.empty()) {
      auto [is_row, k] = queue.front();
      queue.pop_front();
      for (std::size_t o = 0; o < n; ++o) {
        long ek = is_row ? e(k, o) : e(o, k);
        if (ek < 0) continue;
        auto& other = is_row ? b[o] : a[o];
        long want = ek - (is_row ? *a[k] : *b[k]);
        if (!other) {
          other = want;
          queue.emplace_back(!is_row, o);
        } else if (*other != want) {
          return std::nullopt;
        }
      }
    }
  }
  long total = 0;
  for (std::size_t k = 0; k < n; ++k) total += *a[k] + (b[k] ? *b[k] : 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (e(i, j) <= 0) continue;
      std::vector<Poly::Term> terms = m(i, j).terms();
      for (auto& t : terms) {
        t.mono.exp[v] = 0;
        t.mono.degree -= static_cast<std::uint32_t>(e(i, j));
      }
      m(i, j) = Poly::from_terms(m(i, j).vars(), std::move(terms));
    }
  }
  return total;
}

Matrix<Rational> to_rational(const Matrix<Poly>& m) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = *m(i, j).constant_value();
  }
  return r;
}

detail::u64 det_mod(const Matrix<Integer>& m, detail::u64 p) {
  using detail::mulmod;
  const std::size_t n = m.rows();
  std::vector<detail::u64> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = detail::mod_of(m(i, j), p);
  }
  detail::u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = p - det;
      if (det == p) det = 0;
    }
    detail::u64 pk = a[k * n + k];
    det = mulmod(det, pk, p);
    detail::u64 inv = detail::invmod(pk, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      detail::u64 f = a[i * n + k];
      if (f == 0) continue;
      f = mulmod(f, inv, p);
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = detail::submod(a[i * n + j], mulmod(f, a[k * n + j], p), p);
      }
    }
  }
  return det;
}

}  // namespace

Poly determinant_bareiss(Matrix<Poly> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  VarTable table = unify_tables(m);
  const std::size_t n = m.rows();
  if (n == 0) return Poly(table, 1);
  int sign = 1;
  Poly prev(table, 1);
  for (std::size_t k = 0; k < n; ++k) {
    poll_deadline();
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (!piv || m(i, k).size() < m(*piv, k).size()) piv = i;
    }
    if (!piv) return Poly(table);
    if (*piv != k) {
      m.swap_rows(*piv, k);
      sign = -sign;
    }
    const bool divide = !prev.is_constant() || prev.constant_value() != Rational(1);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = m(k, k) * m(i, j);
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
        m(i, j) = divide ? exact_div(v, prev) : std::move(v);
      }
      m(i, k) = Poly(table);
    }
    prev = m(k, k);
  }
  Poly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Poly determinant_interpolation(const Matrix<Poly>& m0) {
  Matrix<Poly> m = m0;
  VarTable table = unify_tables(m);
  const std::size_t n = m.rows();
  auto supp = matrix_support(m, table.size());
  if (supp.size() > 1) throw Error(ErrorCode::kInvalidArgument, "interpolation needs univariate entries");
  if (supp.empty()) return Poly(table, determinant(to_rational(m)));
  const std::size_t v = supp[0];
  const std::string& name = table.name(v);
  Matrix<std::vector<Rational>> dense(n, n);
  long row_bound = 0, col_bound = 0;
  std::vector<long> col_max(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long rmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto& d = dense(i, j);
      for (const auto& t : m(i, j).terms()) {
        std::uint32_t e = t.mono.exp[v];
        if (d.size() <= e) d.resize(e + 1);
        d[e] = t.coeff;
      }
      long dj = static_cast<long>(d.size()) - 1;
      rmax = std::max(rmax, dj);
      col_max[j] = std::max(col_max[j], dj);
    }
    row_bound += rmax;
  }
  for (auto c : col_max) col_bound += c;
  const long bound = std::min(row_bound, col_bound);
  std::vector<Rational> xs, ys;
  Matrix<Rational> at(n, n);
  for (long k = 0; k <= bound; ++k) {
    poll_deadline();
    Rational x(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        const auto& d = dense(i, j);
        for (std::size_t e = d.size(); e-- > 0;) {
          acc *= x;
          acc += d[e];
        }
        at(i, j) = acc;
      }
    }
    xs.push_back(x);
    ys.push_back(determinant(at));
  }
  // Newton divided differences, then expansion to the monomial basis.
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < c.size(); ++j) {
    for (std::size_t k = c.size() - 1; k >= j; --k) {
      c[k] = (c[k] - c[k - 1]) / (xs[k] - xs[k - j]);
    }
  }
  std::vector<Rational> coeffs{c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xs[k];
    }
    next[0] += c[k];
    coeffs = std::move(next);
  }
  std::vector<Poly> cs;
  for (const auto& q : coeffs) cs.emplace_back(table, q);
  return from_coefficients(cs, name).over(table);
}

Poly determinant(Matrix<Poly> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  VarTable table = unify_tables(m);
  const std::size_t n = m.rows();
  if (n == 0) return Poly(table, 1);
  Monomial factor(table.size());
  bool vanishes = false;
  for (std::size_t v : matrix_support(m, table.size())) {
    if (auto total = scale_out(m, v)) {
      if (*total < 0) {
        vanishes = true;
      } else {
        factor.exp[v] = static_cast<std::uint32_t>(*total);
      }
    }
  }
  factor = Monomial(std::move(factor.exp));
  auto supp = matrix_support(m, table.size());
  Poly d(table);
  if (supp.empty()) {
    d = Poly(table, determinant(to_rational(m)));
  } else if (supp.size() == 1 && n >= 4) {
    d = determinant_interpolation(m);
  } else {
    d = determinant_bareiss(std::move(m));
  }
  if (vanishes) {
    if (!d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inconsistent monomial scaling");
    return d;
  }
  return factor.is_one() ? d : d.times_monomial(factor);
}

Integer determinant_bareiss(Matrix<Integer> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1, t;
  for (std::size_t k = 0; k < n; ++k) {
    poll_deadline();
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k) == 0) continue;
      if (!piv || mpz_cmpabs(m(i, k).get_mpz_t(), m(*piv, k).get_mpz_t()) < 0) piv = i;
    }
    if (!piv) return 0;
    if (*piv != k) {
      m.swap_rows(*piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m(i, j);
        x *= m(k, k);
        t = m(i, k) * m(k, j);
        x -= t;
        if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign < 0 ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

Integer determinant_modular(const Matrix<Integer>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // log2 of the Hadamard bound, rounded up.
  std::size_t bits = 2;
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) * m(i, j);
    if (s == 0) return 0;
    bits += mpz_sizeinbase(s.get_mpz_t(), 2) / 2 + 1;
  }
  Integer x = 0, mod = 1;
  for (std::size_t idx = 0; mpz_sizeinbase(mod.get_mpz_t(), 2) <= bits; ++idx) {
    poll_deadline();
    const detail::u64 p = detail::word_prime(idx);
    detail::u64 r = det_mod(m, p);
    detail::u64 xr = detail::mod_of(x, p);
    detail::u64 minv = detail::invmod(detail::mod_of(mod, p), p);
    detail::u64 t = detail::mulmod(detail::submod(r, xr, p), minv, p);
    x += mod * Integer(static_cast<unsigned long>(t));
    mod *= Integer(static_cast<unsigned long>(p));
  }
  if (x > mod / 2) x -= mod;
  return x;
}

Rational determinant(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Integer> z(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Integer d = n <= 30 ? determinant_bareiss(std::move(z)) : determinant_modular(z);
  Rational r(d, scale);
  r.canonicalize();
  return r;
}

}  // namespace discres
