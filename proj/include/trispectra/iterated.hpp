#pragma once

#include <string>

#include "trispectra/error.hpp"
#include "trispectra/mutation.hpp"
#include "trispectra/transfer.hpp"

namespace trispectra {

/// Base graph data for R_{q,k}(G): sizes and quantities of G = R_{q,0}(G).
template <class Scalar>
struct IteratedQuery {
  long long nodes = 0;
  long long edges = 0;
  Quantities<Scalar> base;
  int q = 1;
  int k = 0;
};

template <class Scalar>
Scalar power(Scalar base, int exponent) {
  Scalar out(1);
  for (int j = 0; j < exponent; ++j) out *= base;
  return out;
}

namespace detail {

inline void check_query(int q, int k) {
  if (q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer, got " + std::to_string(q));
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be non-negative, got " + std::to_string(k));
}

// Growth factors of the closed forms, raised to the k-th power.
template <class Scalar>
struct Powers {
  Scalar a;   // ((4q+2)/(q+2))^k
  Scalar b;   // (2q+1)^k
  Scalar b2;  // (2q+1)^{2k}
  Scalar c;   // (2(2q+1)^2/(q+2))^k
  Scalar d;   // (2(2q+1)/(q+2))^k
  Scalar e;   // (2/(q+2))^k

  Powers(int q, int k)
      : a(power(ratio<Scalar>(4 * q + 2, q + 2), k)),
        b(power(Scalar(2 * q + 1), k)),
        b2(b * b),
        c(power(ratio<Scalar>(2 * (2 * q + 1) * (2 * q + 1), q + 2), k)),
        d(power(ratio<Scalar>(2 * (2 * q + 1), q + 2), k)),
        e(power(ratio<Scalar>(2, q + 2), k)) {}
};

}  // namespace detail

/// Kemeny's constant of R_{q,k}(G).
template <class Scalar>
Scalar iterated_kemeny(const IteratedQuery<Scalar>& query) {
  detail::check_query(query.q, query.k);
  if (query.k == 0) return query.base.kemeny;
  const int q = query.q;
  const Scalar n(query.nodes), m(query.edges);
  const detail::Powers<Scalar> p(q, query.k);
  return formula_term(FormulaTerm::IterKemeny1, p.a * query.base.kemeny) +
         formula_term(FormulaTerm::IterKemeny2, m * Scalar(2 * q + 3) / Scalar(2 * (2 * q + 1)) * (p.b - p.a)) +
         formula_term(FormulaTerm::IterKemeny3,
                      (ratio<Scalar>(q - 1, 3 * (2 * q + 1)) + (m - Scalar(2) * n) / Scalar(6)) *
                          (p.a - Scalar(1)));
}

/// Multiplicative degree-Kirchhoff index of R_{q,k}(G).
template <class Scalar>
Scalar iterated_multiplicative(const IteratedQuery<Scalar>& query) {
  detail::check_query(query.q, query.k);
  if (query.k == 0) return query.base.multiplicative;
  const int q = query.q;
  const Scalar n(query.nodes), m(query.edges);
  const detail::Powers<Scalar> p(q, query.k);
  return formula_term(FormulaTerm::IterMult1, p.c * query.base.multiplicative) +
         formula_term(FormulaTerm::IterMult2, m * m * Scalar(2 * q + 3) / Scalar(2 * q + 1) * (p.b2 - p.c)) +
         formula_term(FormulaTerm::IterMult3,
                      (Scalar(2) * m * Scalar(q - 1) / Scalar(3 * (2 * q + 1)) +
                       m * (m - Scalar(2) * n) / Scalar(3)) *
                          (p.c - p.b));
}

/// Additive degree-Kirchhoff index of R_{q,k}(G).
template <class Scalar>
Scalar iterated_additive(const IteratedQuery<Scalar>& query) {
  detail::check_query(query.q, query.k);
  if (query.k == 0) return query.base.additive;
  const int q = query.q;
  const Scalar n(query.nodes), m(query.edges);
  const Scalar mult0 = query.base.multiplicative;
  const detail::Powers<Scalar> p(q, query.k);
  const Scalar shift = m - Scalar(2) * n;
  return formula_term(FormulaTerm::IterAdd1, p.d * query.base.additive) +
         formula_term(FormulaTerm::IterAdd2,
                      (p.c - p.d) * (mult0 / Scalar(2) -
                                     (Scalar(2 * (q + 2)) * m * m + Scalar(2 * q + 1) * m * n - m * Scalar(q - 1)) /
                                         Scalar(3 * (2 * q + 1)))) +
         formula_term(FormulaTerm::IterAdd3,
                      (p.b2 - p.d) * m * m * Scalar((2 * q + 3) * (6 * q + 11)) /
                          Scalar(4 * (2 * q + 1) * (2 * q + 5))) +
         formula_term(FormulaTerm::IterAdd4,
                      (p.d - p.b) * (m / Scalar(2 * (2 * q + 1)) +
                                     Scalar(q + 2) * m * (shift + Scalar(1)) / Scalar(3 * (2 * q + 1)))) -
         formula_term(FormulaTerm::IterAdd5, (p.d - Scalar(1)) * shift * (shift + Scalar(2)) / Scalar(12));
}

/// Kirchhoff index of R_{q,k}(G).
template <class Scalar>
Scalar iterated_kirchhoff(const IteratedQuery<Scalar>& query) {
  detail::check_query(query.q, query.k);
  if (query.k == 0) return query.base.kirchhoff;
  const int q = query.q;
  const Scalar n(query.nodes), m(query.edges);
  const Scalar mult0 = query.base.multiplicative;
  const Scalar add0 = query.base.additive;
  const detail::Powers<Scalar> p(q, query.k);
  const Scalar shift = m - Scalar(2) * n;
  const Scalar den = Scalar(12 * (2 * q + 1) * (2 * q + 5));
  return formula_term(FormulaTerm::IterKir1, p.e * query.base.kirchhoff) +
         formula_term(FormulaTerm::IterKir2,
                      (p.c - p.e) * (mult0 / Scalar(16) - m * m * Scalar(q + 2) / Scalar(12 * (2 * q + 1)) -
                                     m * n / Scalar(24) + m * Scalar(q - 1) / Scalar(24 * (2 * q + 1)))) +
         formula_term(FormulaTerm::IterKir3,
                      (p.d - p.e) *
                          (add0 / Scalar(4) - mult0 / Scalar(8) -
                           m * m * Scalar((q + 2) * (2 * q - 1)) / Scalar(6 * (2 * q + 1) * (2 * q + 5)) +
                           m * (Scalar(2) * n * Scalar(q - 1) - Scalar(q) + Scalar(4)) / Scalar(12 * (2 * q + 1)) -
                           n * (n - Scalar(1)) / Scalar(12))) +
         formula_term(FormulaTerm::IterKir4,
                      (p.b2 - p.e) * m * m * Scalar((2 * q + 3) * (2 * q + 3)) /
                          Scalar(8 * (2 * q + 1) * (2 * q + 5))) -
         formula_term(FormulaTerm::IterKir5,
                      (p.b - p.e) * (m * Scalar(4 * q * q + 12 * q + 11) * shift / den +
                                     m * Scalar(4 * q * q + 18 * q + 23) / den)) +
         formula_term(FormulaTerm::IterKir6, (p.e - Scalar(1)) * shift * (shift + Scalar(2)) / Scalar(24));
}

template <class Scalar>
Quantities<Scalar> iterated_quantities(const IteratedQuery<Scalar>& query) {
  return {iterated_kemeny(query), iterated_multiplicative(query), iterated_additive(query),
          iterated_kirchhoff(query)};
}

/// The same quantities obtained by applying the single-step transfer k times.
template <class Scalar>
Quantities<Scalar> chained_transfers(const IteratedQuery<Scalar>& query) {
  detail::check_query(query.q, query.k);
  Scalar n(query.nodes), m(query.edges);
  Quantities<Scalar> state = query.base;
  for (int j = 0; j < query.k; ++j) {
    state = transfer_step(query.q, n, m, state);
    n += Scalar(query.q) * m;
    m *= Scalar(2 * query.q + 1);
  }
  return state;
}

/// N_{q,0} = K3 as an iterated base.
template <class Scalar>
IteratedQuery<Scalar> pseudofractal_query(int q, int k) {
  return {3, 3, {ratio<Scalar>(4, 3), Scalar(8), Scalar(8), Scalar(2)}, q, k};
}

/// Closed forms for the pseudofractal scale-free web N_{q,k}, evaluated
/// term by term (no k = 0 short-circuit).
template <class Scalar>
Quantities<Scalar> pseudofractal_metrics(int q, int k) {
  detail::check_query(q, k);
  const detail::Powers<Scalar> p(q, k);
  const Scalar b_prev = p.b / Scalar(2 * q + 1);  // (2q+1)^{k-1}
  Quantities<Scalar> out;
  out.kemeny = formula_term(FormulaTerm::WebKemeny1, Scalar(3 * (2 * q + 3)) * b_prev / Scalar(2)) -
               formula_term(FormulaTerm::WebKemeny2, ratio<Scalar>(q + 4, 2 * q + 1) * p.a) +
               formula_term(FormulaTerm::WebKemeny3, ratio<Scalar>(4 * q + 5, 6 * (2 * q + 1)));
  out.multiplicative =
      formula_term(FormulaTerm::WebMult1, ratio<Scalar>(9 * (2 * q + 3), 2 * q + 1) * p.b2) -
      formula_term(FormulaTerm::WebMult2, ratio<Scalar>(6 * (q + 4), 2 * q + 1) * p.c) +
      formula_term(FormulaTerm::WebMult3, Scalar(4 * q + 5) * b_prev);
  out.additive =
      formula_term(FormulaTerm::WebAdd1,
                   ratio<Scalar>(9 * (2 * q + 3) * (6 * q + 11), 4 * (2 * q + 1) * (2 * q + 5)) * p.b2) -
      formula_term(FormulaTerm::WebAdd2, ratio<Scalar>(3 * (q + 4), 2 * q + 1) * p.c) +
      formula_term(FormulaTerm::WebAdd3, ratio<Scalar>(3 * (q + 4), 2 * q + 5) * p.d) +
      formula_term(FormulaTerm::WebAdd4, ratio<Scalar>(4 * q + 5, 2) * b_prev) +
      formula_term(FormulaTerm::WebAdd5, ratio<Scalar>(1, 4));
  out.kirchhoff =
      formula_term(FormulaTerm::WebKir1,
                   ratio<Scalar>(9 * (2 * q + 3) * (2 * q + 3), 8 * (2 * q + 1) * (2 * q + 5)) * p.b2) -
      formula_term(FormulaTerm::WebKir2, ratio<Scalar>(3 * (q + 4), 8 * (2 * q + 1)) * p.c) +
      formula_term(FormulaTerm::WebKir3, ratio<Scalar>(3 * (q + 4), 4 * (2 * q + 5)) * p.d) +
      formula_term(FormulaTerm::WebKir4, ratio<Scalar>((q + 1) * (4 * q + 5), 2 * (2 * q + 5)) * b_prev) +
      formula_term(FormulaTerm::WebKir5, ratio<Scalar>(5 * (q + 4), 8 * (2 * q + 5)) * p.e) -
      formula_term(FormulaTerm::WebKir6, ratio<Scalar>(1, 8));
  return out;
}

}  // namespace trispectra
