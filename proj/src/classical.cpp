#include "qsuff/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsuff::classical {

namespace {

struct Marginals {
  Vec ac;  // a * d_c + c
  Vec bc;  // b * d_c + c
  Vec c;
};

Marginals marginals(const Joint3& j) {
  Marginals m{Vec(j.d_a * j.d_c, 0.0), Vec(j.d_b * j.d_c, 0.0), Vec(j.d_c, 0.0)};
  for (std::size_t a = 0; a < j.d_a; ++a)
    for (std::size_t b = 0; b < j.d_b; ++b)
      for (std::size_t c = 0; c < j.d_c; ++c) {
        const double v = j.at(a, b, c);
        m.ac[a * j.d_c + c] += v;
        m.bc[b * j.d_c + c] += v;
        m.c[c] += v;
      }
  return m;
}

// p_ac p_bc / p_c, the Petz-recovered distribution.
double recovered(const Joint3& j, const Marginals& m, std::size_t a, std::size_t b, std::size_t c) {
  return m.ac[a * j.d_c + c] * m.bc[b * j.d_c + c] / m.c[c];
}

}  // namespace

double entropy(const Vec& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double kl(const Vec& p, const Vec& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log2(p[i] / q[i]);
  }
  return d;
}

double renyi(const Vec& p, const Vec& q, double alpha) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] > 0.0) s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  }
  return std::log2(s) / (alpha - 1.0);
}

double sandwiched(const Vec& p, const Vec& q, double alpha) {
  const double e = (1.0 - alpha) / alpha;
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] > 0.0) s += std::pow(p[i] * std::pow(q[i], e), alpha);
  }
  return std::log2(s) / (alpha - 1.0);
}

double d_min(const Vec& p, const Vec& q) {
  double bc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
  return -2.0 * std::log2(bc);
}

double d_max(const Vec& p, const Vec& q) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    best = std::max(best, p[i] / q[i]);
  }
  return std::log2(best);
}

Vec push_forward(const Transition& t, const Vec& p) {
  Vec out(t.size(), 0.0);
  for (std::size_t y = 0; y < t.size(); ++y)
    for (std::size_t x = 0; x < p.size(); ++x) out[y] += t[y][x] * p[x];
  return out;
}

Vec bayes_recover(const Transition& t, const Vec& q, const Vec& p) {
  const Vec tp = push_forward(t, p);
  const Vec tq = push_forward(t, q);
  Vec r(q.size(), 0.0);
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (tq[y] > 0.0) r[x] += q[x] * t[y][x] * tp[y] / tq[y];
    }
  return r;
}

double cmi(const Joint3& j) {
  const Marginals m = marginals(j);
  return entropy(m.ac) + entropy(m.bc) - entropy(m.c) - entropy(j.p);
}

double renyi_cmi(const Joint3& j, double alpha) {
  const Marginals m = marginals(j);
  double s = 0.0;
  for (std::size_t a = 0; a < j.d_a; ++a)
    for (std::size_t b = 0; b < j.d_b; ++b)
      for (std::size_t c = 0; c < j.d_c; ++c) {
        const double p = j.at(a, b, c);
        if (p <= 0.0) continue;
        s += std::pow(p, alpha) * std::pow(m.ac[a * j.d_c + c], 1.0 - alpha) *
             std::pow(m.c[c], alpha - 1.0) * std::pow(m.bc[b * j.d_c + c], 1.0 - alpha);
      }
  return std::log2(s) / (alpha - 1.0);
}

double sandwiched_cmi(const Joint3& j, double alpha) {
  const Marginals m = marginals(j);
  const double e = (1.0 - alpha) / (2.0 * alpha);
  double s = 0.0;
  for (std::size_t a = 0; a < j.d_a; ++a)
    for (std::size_t b = 0; b < j.d_b; ++b)
      for (std::size_t c = 0; c < j.d_c; ++c) {
        const double p = j.at(a, b, c);
        if (p <= 0.0) continue;
        const double entry = std::sqrt(p) * std::pow(m.ac[a * j.d_c + c], e) *
                             std::pow(m.c[c], -e) * std::pow(m.bc[b * j.d_c + c], e);
        s += std::pow(entry, 2.0 * alpha);
      }
  return 2.0 * alpha / (alpha - 1.0) * std::log2(std::pow(s, 1.0 / (2.0 * alpha)));
}

double i_max(const Joint3& j) {
  const Marginals m = marginals(j);
  double best = 0.0;
  for (std::size_t a = 0; a < j.d_a; ++a)
    for (std::size_t b = 0; b < j.d_b; ++b)
      for (std::size_t c = 0; c < j.d_c; ++c) {
        best = std::max(best, j.at(a, b, c) / recovered(j, m, a, b, c));
      }
  return std::log2(best);
}

double i_min(const Joint3& j) {
  const Marginals m = marginals(j);
  double bc = 0.0;
  for (std::size_t a = 0; a < j.d_a; ++a)
    for (std::size_t b = 0; b < j.d_b; ++b)
      for (std::size_t c = 0; c < j.d_c; ++c) {
        bc += std::sqrt(j.at(a, b, c) * recovered(j, m, a, b, c));
      }
  return -2.0 * std::log2(bc);
}

double rel_ent_diff(const Vec& p, const Vec& q, const Transition& t) {
  return kl(p, q) - kl(push_forward(t, p), push_forward(t, q));
}

double delta_alpha(const Vec& p, const Vec& q, const Transition& t, double alpha) {
  const Vec tp = push_forward(t, p);
  const Vec tq = push_forward(t, q);
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    double inner = 0.0;
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t[y][x] > 0.0) {
        inner += t[y][x] * std::pow(tq[y], alpha - 1.0) * std::pow(tp[y], 1.0 - alpha);
      }
    }
    s += std::pow(p[x], alpha) * std::pow(q[x], 1.0 - alpha) * inner;
  }
  return std::log2(s) / (alpha - 1.0);
}

double delta_tilde_alpha(const Vec& p, const Vec& q, const Transition& t, double alpha) {
  const Vec tp = push_forward(t, p);
  const Vec tq = push_forward(t, q);
  const double e = (1.0 - alpha) / (2.0 * alpha);
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    double inner = 0.0;
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t[y][x] > 0.0) inner += t[y][x] * std::pow(tq[y], -2.0 * e) * std::pow(tp[y], 2.0 * e);
    }
    const double w = std::pow(q[x], 2.0 * e) * inner;
    s += std::pow(p[x] * w, alpha);
  }
  return alpha / (alpha - 1.0) * std::log2(std::pow(s, 1.0 / alpha));
}

double delta_min(const Vec& p, const Vec& q, const Transition& t) {
  return d_min(p, bayes_recover(t, q, p));
}

double delta_max(const Vec& p, const Vec& q, const Transition& t) {
  return d_max(p, bayes_recover(t, q, p));
}

}  // namespace qsuff::classical
