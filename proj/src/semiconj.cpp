#include "linedyn/semiconj.hpp"

namespace linedyn {

const PlaneMapModel& plane_map_model(int n) {
  static const PlaneMapModel m7 = [] {
    const auto& d = constants::plane_map7();
    PlaneMapModel m;
    m.n = 7;
    m.Q = d.Q;
    m.Q1 = d.Q1;
    m.Q2 = d.Q2;
    m.Q3 = d.Q3;
    m.R4 = d.R4;
    m.R7 = d.R7;
    m.R = d.R;
    m.indeterminacy = constants::indeterminacy_f7();
    return m;
  }();
  static const PlaneMapModel m8 = [] {
    PlaneMapModel m;
    m.n = 8;
    m.conic = constants::branch_conic8();
    m.quartic = constants::branch_quartic8();
    m.indeterminacy = constants::indeterminacy_mu8();
    return m;
  }();
  if (n == 7) return m7;
  if (n == 8) return m8;
  throw UnsupportedDegree("plane maps exist for n = 7 and n = 8");
}

IdentityReport verify_semiconjugacy_identity(std::uint64_t sample_prime, std::size_t samples, std::uint64_t seed) {
  const auto& m = constants::plane_map7();
  IdentityReport rep;
  MPoly<Rational> lhs = m.Q1.substitute({m.Q1, m.Q2, m.Q3});
  MPoly<Rational> rhs = m.Q1 * m.R * m.R;
  rep.equal = lhs == rhs;
  rep.degree = lhs.degree();
  rep.lhs_terms = lhs.size();
  rep.rhs_terms = rhs.size();
  if (auto q = exact_divide(lhs, rhs); q && q->is_constant() && !q->is_zero())
    rep.observed_scalar = q->leading_term().second;

  // Evaluation oracle: the composite is evaluated as Q1 at the image point,
  // never as the expanded degree-36 polynomial.
  PrimeField f(sample_prime);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Fp> z{f.from_uint(dist(rng)), f.from_uint(dist(rng)), f.from_uint(dist(rng))};
    std::vector<Fp> w{m.Q1.evaluate<Fp>(z, f), m.Q2.evaluate<Fp>(z, f), m.Q3.evaluate<Fp>(z, f)};
    Fp r = m.R.evaluate<Fp>(z, f);
    rep.sampled_points++;
    if (m.Q1.evaluate<Fp>(w, f) == w[0] * r * r) rep.sampled_agree++;
  }
  return rep;
}

BranchData certify_branch(const MPoly<Rational>& D, const MPoly<Rational>& W) {
  if (D.is_zero()) throw CertificationFailed("discriminant vanishes identically");
  auto q = exact_divide(D, W);
  if (!q) throw CertificationFailed("the branch curve does not divide the discriminant");
  // Leading coefficients in grlex order fix c; the rest must be a square.
  Rational c = q->leading_term().second;
  auto s = poly_sqrt(q->scaled(c.inv()));
  if (!s) throw CertificationFailed("D / (c W) is not a perfect square");
  return BranchData{D, W, *s, c};
}

MPoly<Rational> branch_discriminant(int n) {
  const auto& q = constants::quartic(n);
  MPoly<Rational> d = discriminant_wrt(q, 0);
  RationalField Q;
  std::vector<MPoly<Rational>> to_z{MPoly<Rational>(Q, 3)};
  for (int i = 0; i < 3; ++i) to_z.push_back(MPoly<Rational>::variable(Q, 3, i));
  return d.substitute(to_z);
}

BranchData branch_curve(int n) {
  MPoly<Rational> W;
  if (n == 7) {
    RationalField Q;
    W = MPoly<Rational>::variable(Q, 3, 0) * constants::plane_map7().Q;
  } else if (n == 8) {
    W = constants::branch_conic8() * constants::branch_quartic8();
  } else {
    throw UnsupportedDegree("branch curves exist for n = 7 and n = 8");
  }
  return certify_branch(branch_discriminant(n), W);
}

MuValue mu_pointwise(int n, const Vec3<Fp>& z) {
  if (z[2].is_zero()) throw NoLift("z3 = 0: the lifts lie outside the chart y4 != 0");
  Fp i = z[2].inv();
  Vec3<Fp> zn{z[0] * i, z[1] * i, z[0].field().one()};
  auto roots = y1_roots(n, zn);
  if (roots.empty()) throw NoLift("the quadratic in y1 has no root over F_" + std::to_string(z[0].modulus()));
  MuValue out;
  out.lifts = static_cast<int>(roots.size());
  std::optional<ProjPoint2<Fp>> first;
  std::string last_error;
  for (const auto& y1 : roots) {
    ChartPoint<Fp> x{y1, zn[0], zn[1]};
    ChartPoint<Fp> y;
    try {
      y = lambda_step(n, x);
    } catch (const Error& e) {
      last_error = e.what();
      continue;
    }
    out.lifts_in_domain++;
    ProjPoint2<Fp> img(cover_projection(y));
    if (first && *first != img)
      throw CertificationFailed("the two lifts of " + ProjPoint2<Fp>(z).to_string() + " map to " + first->to_string() +
                                " and " + img.to_string());
    if (!first) first = img;
  }
  if (!first) throw DegenerateOperator("lambda is undefined at every lift: " + last_error);
  out.image = *first;
  return out;
}

namespace {

// One nonzero vector of the right kernel of `rows`, or nullopt.
std::optional<std::vector<Fp>> kernel_vector(std::vector<std::vector<Fp>> rows, std::size_t ncols, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c].is_zero()) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    Fp inv = rows[r][c].inv();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r || rows[j][c].is_zero()) continue;
      Fp m = rows[j][c];
      for (std::size_t t = c; t < ncols; ++t) rows[j][t] -= m * rows[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  std::size_t free_col = ncols;
  for (std::size_t c = 0, p = 0; c < ncols; ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    free_col = c;
    break;
  }
  if (free_col == ncols) return std::nullopt;
  std::vector<Fp> sol(ncols, f.zero());
  sol[free_col] = f.one();
  for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = -rows[i][free_col];
  return sol;
}

}  // namespace

MuInterpolation mu_via_line_interpolation(int n, const Vec3<Fp>& z, std::mt19937_64& rng, int samples,
                                          int max_degree) {
  const PrimeField f = z[0].field();
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
  Vec3<Fp> v{f.from_uint(dist(rng)), f.from_uint(dist(rng)), f.from_uint(dist(rng))};
  std::vector<std::pair<Fp, Vec3<Fp>>> pts;  // (s, mu(z + s v)) with third coordinate 1
  for (int tries = 0; static_cast<int>(pts.size()) < samples; ++tries) {
    if (tries > 50 * samples) throw BudgetExceeded("too few liftable points on the sampling line");
    Fp s = f.from_uint(1 + dist(rng) % (f.p - 1));
    Vec3<Fp> w{z[0] + s * v[0], z[1] + s * v[1], z[2] + s * v[2]};
    try {
      // Images come straight from the chart, so their third coordinate is 1.
      pts.emplace_back(s, mu_pointwise(n, w).image.coords());
    } catch (const Error&) {
    }
  }
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t m = d + 1, ncols = 3 * m;
    std::vector<std::vector<Fp>> rows;
    for (const auto& [s, img] : pts) {
      std::vector<Fp> pw(m);
      pw[0] = f.one();
      for (std::size_t k = 1; k < m; ++k) pw[k] = pw[k - 1] * s;
      // A(s) - mu0 C(s) = 0 and B(s) - mu1 C(s) = 0
      std::vector<Fp> r1(ncols, f.zero()), r2(ncols, f.zero());
      for (std::size_t k = 0; k < m; ++k) {
        r1[k] = pw[k];
        r1[2 * m + k] = -img[0] * pw[k];
        r2[m + k] = pw[k];
        r2[2 * m + k] = -img[1] * pw[k];
      }
      rows.push_back(std::move(r1));
      rows.push_back(std::move(r2));
    }
    auto sol = kernel_vector(std::move(rows), ncols, f);
    if (!sol) continue;
    Vec3<Fp> at0{(*sol)[0], (*sol)[m], (*sol)[2 * m]};
    if (all_vanish(at0)) throw IndeterminacyPoint("restricted map vanishes at the base point of the line");
    return MuInterpolation{ProjPoint2<Fp>(at0), d, static_cast<int>(pts.size())};
  }
  throw BudgetExceeded("no polynomial triple of degree <= " + std::to_string(max_degree) + " fits the samples");
}

SquareCheck commuting_square_check(const ChartPoint<Fp>& x) {
  ProjPoint2<Fp> via_lambda(cover_projection(lambda_step(7, x)));
  ProjPoint2<Fp> via_F = F_eval(cover_projection(x));
  return SquareCheck{via_lambda == via_F, via_lambda, via_F};
}

namespace {

template <class S>
std::vector<IterateDegree> iterate_degrees_in(int k, const std::array<MPoly<S>, 3>& F) {
  if (k < 1 || k > 3) throw BudgetExceeded("iterate degrees are supported for k = 1, 2, 3");
  std::vector<MPoly<S>> G;
  for (int i = 0; i < 3; ++i) G.push_back(MPoly<S>::variable(F[0].field(), 3, i));
  std::vector<IterateDegree> out;
  for (int j = 1; j <= k; ++j) {
    std::vector<MPoly<S>> H{F[0].substitute(G), F[1].substitute(G), F[2].substitute(G)};
    IterateDegree d;
    d.k = j;
    d.raw_degree = H[0].degree();
    MPoly<S> g = gcd(H);
    d.gcd_degree = g.degree();
    if (d.gcd_degree > 0)
      for (auto& h : H) {
        auto q = exact_divide(h, g);
        if (!q) throw CertificationFailed("gcd does not divide an iterate component");
        h = std::move(*q);
      }
    d.degree = H[0].degree();
    out.push_back(d);
    G = std::move(H);
  }
  return out;
}

}  // namespace

std::vector<IterateDegree> iterate_degrees(int k) {
  const auto& m = constants::plane_map7();
  return iterate_degrees_in<Rational>(k, {m.Q1, m.Q2, m.Q3});
}

int iterate_degree(int k) { return iterate_degrees(k).back().degree; }

std::vector<IterateDegree> iterate_degrees_mod_p(int k, std::uint64_t p) {
  const auto& m = constants::plane_map7();
  PrimeField f(p);
  return iterate_degrees_in<Fp>(k, {m.Q1.map_to<Fp>(f), m.Q2.map_to<Fp>(f), m.Q3.map_to<Fp>(f)});
}

}  // namespace linedyn
