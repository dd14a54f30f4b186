// classical.hpp - probability-vector versions of every measure, written
// without any matrix code. Diagonal quantum instances must reproduce these.

#pragma once

#include <cstddef>
#include <vector>

namespace qsuff::classical {

using Vec = std::vector<double>;

/// p(a, b, c) stored at (a * d_b + b) * d_c + c.
struct Joint3 {
  std::size_t d_a = 1;
  std::size_t d_b = 1;
  std::size_t d_c = 1;
  Vec p;

  double at(std::size_t a, std::size_t b, std::size_t c) const { return p[(a * d_b + b) * d_c + c]; }
};

/// T[y][x] = P(y | x).
using Transition = std::vector<Vec>;

double entropy(const Vec& p);
double kl(const Vec& p, const Vec& q);
double renyi(const Vec& p, const Vec& q, double alpha);
double sandwiched(const Vec& p, const Vec& q, double alpha);
double d_min(const Vec& p, const Vec& q);
double d_max(const Vec& p, const Vec& q);

Vec push_forward(const Transition& t, const Vec& p);
/// r(x) = q(x) sum_y T(y|x) (Tp)(y) / (Tq)(y).
Vec bayes_recover(const Transition& t, const Vec& q, const Vec& p);

double cmi(const Joint3& j);
double renyi_cmi(const Joint3& j, double alpha);
double sandwiched_cmi(const Joint3& j, double alpha);
double i_max(const Joint3& j);
double i_min(const Joint3& j);

double rel_ent_diff(const Vec& p, const Vec& q, const Transition& t);
double delta_alpha(const Vec& p, const Vec& q, const Transition& t, double alpha);
double delta_tilde_alpha(const Vec& p, const Vec& q, const Transition& t, double alpha);
double delta_min(const Vec& p, const Vec& q, const Transition& t);
double delta_max(const Vec& p, const Vec& q, const Transition& t);

}  // namespace qsuff::classical
