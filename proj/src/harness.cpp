#include "linedyn/harness.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "linedyn/extension.hpp"
#include "linedyn/io.hpp"
#include "linedyn/modular.hpp"
#include "linedyn/semiconj.hpp"

namespace linedyn {

using nlohmann::json;

const CheckResult* VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::check_passed(const std::string& name) const {
  const CheckResult* c = check(name);
  return c && c->pass;
}

json VerificationReport::to_json(bool timing) const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json j = {{"case", id}, {"status", status}, {"seed", seed}, {"reference", reference}, {"checks", cs}};
  if (!message.empty()) j["message"] = message;
  if (timing) j["seconds"] = seconds;
  return j;
}

const std::vector<CaseInfo>& case_catalog() {
  static const std::vector<CaseInfo> c = {
      {"semiconj7", "the double cover of Z7 semi-conjugates lambda to F = (Q1:Q2:Q3), with Q1(Q1,Q2,Q3) = Q1 R^2"},
      {"branch7", "the branch locus of the double cover of Z7 is the line z1 = 0 plus the quintic Q = 0"},
      {"branch8", "the branch locus of the double cover of Z8 is the conic z1^2 = z2 z3 plus the quartic Q8 = 0"},
      {"degrees7", "the iterates F, F^2, F^3 of the plane map have degrees 6, 21, 82"},
      {"mu8", "the plane map mu of Z8 is the identity on the branch conic and sends the branch quartic onto it"},
      {"aut7", "sigma1, sigma2 generate a group of order 42 acting on Z7; the orbit of (-6:-25/8:5:1) has 42 points"},
      {"aut8", "the automorphism group of M8 has order 32 and lambda is invariant under (1,5)(2,6)(3,7)(4,8)"},
      {"commute7", "lambda on Z7 commutes with sigma1 and sigma2 and acts on the base line by t -> -1/(t+1)"},
      {"tvectors7", "C0(x*) u C1(x*) has 28 double and 21 triple points and Lambda_{2},{3}(C0) = C1"},
      {"tvectors8", "C0 u C1 u C2 at the period-three witness has 24 double and 84 triple points"},
      {"periodic8", "(794,582,116) on Z8 over F_1013 is a fixed point of lambda with arrangement period three"},
      {"degree7", "lambda_{2},{3} is a rational self-map of degree 4 on Z7"},
      {"degree8", "lambda_{2},{3,4} is a rational self-map of degree 4 on Z8"},
      {"multiplier7", "lambda on Z7 multiplies the holomorphic 2-form by -2"},
      {"multiplier8", "lambda on Z8 multiplies the holomorphic 2-form by -2"},
      {"modular7", "the fibration of Z7 has a 7-torsion section and singular fibers 3 I7 + 3 I1"},
      {"modular8", "the fibration of Z8 has the cubic model, the j-invariant identity and singular fibers 2 I8 + I4 + I2 + 2 I1"},
      {"matroids", "C0(x) u C1(x) realizes M7 (21 non-bases) and M8 (28 non-bases) at generic surface points"},
      {"families", "the surfaces Z7, Z8: singular points, lines, excluded loci, base points and point counts"},
  };
  return c;
}

namespace {

// Per-case state: the rng and the list of checks being filled in.
struct Ctx {
  RunOptions opts;
  std::mt19937_64 rng;
  std::vector<CheckResult> checks;

  void check(const std::string& name, bool pass, json detail = json::object()) {
    checks.push_back({name, pass, std::move(detail)});
  }
  // Runs `body`; an Error becomes a failed check carrying its kind.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      check(name, false, {{"error", e.kind()}, {"message", e.what()}});
    }
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class S>
json chart_json(const ChartPoint<S>& x) {
  return coords_json(x);
}

Fp random_fp(const PrimeField& f, std::mt19937_64& rng) {
  return f.from_uint(std::uniform_int_distribution<std::uint64_t>(0, f.p - 1)(rng));
}

const PrimeField& field_for(std::uint64_t p) {
  thread_local std::map<std::uint64_t, PrimeField> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, PrimeField(p)).first;
  return it->second;
}

// Runs fn on the coordinates of an algebraic point in Q or in Q[u]/(minpoly).
template <class Fn>
bool on_algebraic_point(const constants::AlgebraicPoint& p, Fn&& fn) {
  if (p.minpoly.empty()) {
    RationalField Q;
    std::vector<Rational> c;
    for (const auto& m : p.coords) c.push_back(m.evaluate<Rational>({Q.zero()}, Q));
    return fn(c);
  }
  auto E = adjoin_root(RationalField{}, p.minpoly);
  return fn(algebraic_coords<Ext<Rational>>(p, E, E.generator()));
}

template <class S>
Vec3<S> vec3(const std::vector<S>& c) {
  return {c[0], c[1], c[2]};
}
template <class S>
std::array<S, 4> vec4(const std::vector<S>& c) {
  return {c[0], c[1], c[2], c[3]};
}

// Points of the plane curve G = 0 over F_p, in canonical coordinates.
std::vector<Vec3<Fp>> plane_curve_points(const MPoly<Rational>& G, std::uint64_t p) {
  const PrimeField& f = field_for(p);
  MPoly<Fp> g = G.map_to<Fp>(f);
  std::vector<Vec3<Fp>> out;
  auto test = [&](Vec3<Fp> z) {
    if (g.evaluate({z[0], z[1], z[2]}).is_zero()) out.push_back(z);
  };
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) test({f.from_uint(a), f.from_uint(b), f.one()});
  for (std::uint64_t a = 0; a < p; ++a) test({f.from_uint(a), f.one(), f.zero()});
  test({f.one(), f.zero(), f.zero()});
  return out;
}

// Outcome of a sampled check; the first disagreeing sample is kept as the
// reproducer.
struct Sampling {
  int evaluated = 0;
  int agreed = 0;
  int skipped = 0;
  json first_failure;
  std::map<std::string, int> skip_reasons;

  json to_json() const {
    json j = {{"evaluated", evaluated}, {"agreed", agreed}, {"skipped", skipped}};
    if (!skip_reasons.empty()) j["skip_reasons"] = skip_reasons;
    if (!first_failure.is_null()) j["first_failure"] = first_failure;
    return j;
  }
  bool all(int wanted) const { return evaluated == wanted && agreed == evaluated; }
};

// Draws points until `count` of them were evaluated by fn. Draws on which
// fn hits a domain error are counted as skipped and replaced, within
// `budget` draws overall.
template <class Draw, class Fn>
Sampling sample_points(int count, int budget, Draw&& draw, Fn&& fn) {
  Sampling s;
  for (int attempt = 0; attempt < budget && s.evaluated < count; ++attempt) {
    try {
      auto x = draw();
      json witness;
      bool ok = fn(x, witness);
      s.evaluated++;
      if (ok) {
        s.agreed++;
      } else if (s.first_failure.is_null()) {
        s.first_failure = witness;
      }
    } catch (const DegenerateRealization& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    } catch (const DegenerateOperator& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    } catch (const IndeterminacyPoint& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    } catch (const LinearSolveDegenerate& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    } catch (const NoLift& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    } catch (const ChartSingular& e) {
      s.skipped++, s.skip_reasons[e.kind()]++;
    }
  }
  return s;
}

ChartPoint<Rational> heptagon_point() {
  auto w = constants::heptagon_witness();
  return {w[0], w[1], w[2]};
}

ChartPoint<Fp> periodic_point() {
  const PrimeField& f = field_for(constants::kPeriodicPrime);
  auto w = constants::periodic_witness();
  return {f.from_int(w[0]), f.from_int(w[1]), f.from_int(w[2])};
}

json t_vector_json(const std::map<int, int>& t) {
  json j = json::object();
  for (auto [k, c] : t) j["t" + std::to_string(k)] = c;
  return j;
}

// ---- semiconj7 --------------------------------------------------------------

void case_semiconj7(Ctx& c) {
  const auto& m = constants::plane_map7();
  const auto& z = constants::z_vars();
  c.guarded("identity", [&] {
    IdentityReport r = verify_semiconjugacy_identity(c.opts.sample_prime, 100, c.rng());
    json d = {{"degree", r.degree},
              {"lhs_terms", r.lhs_terms},
              {"rhs_terms", r.rhs_terms},
              {"sampled_points", r.sampled_points},
              {"sampled_agree", r.sampled_agree},
              {"field", "Q"}};
    if (r.observed_scalar) d["observed_lhs_over_rhs"] = r.observed_scalar->to_string();
    c.check("identity", r.equal && r.degree == 36, d);
  });
  c.check("q1_equals_z1_Q", m.Q1 == MPoly<Rational>::variable(RationalField{}, 3, 0) * m.Q);
  c.guarded("coprime", [&] {
    auto g = gcd(std::vector<MPoly<Rational>>{m.Q1, m.Q2, m.Q3});
    c.check("coprime", g.is_constant(), {{"gcd", g.to_string(z)}});
  });
  c.check("degrees", m.Q1.degree() == 6 && m.Q2.degree() == 6 && m.Q3.degree() == 6 && m.R.degree() == 15,
          {{"Q1", m.Q1.degree()}, {"Q2", m.Q2.degree()}, {"Q3", m.Q3.degree()}, {"R", m.R.degree()}});

  // The printed indeterminacy points annihilate Q1, Q2, Q3.
  {
    json d = json::object();
    bool all = true;
    for (const auto& p : constants::indeterminacy_f7()) {
      bool ok = on_algebraic_point(p, [&](const auto& v) {
        using S = std::decay_t<decltype(v[0])>;
        try {
          F_eval<S>(vec3(v));
          return false;
        } catch (const IndeterminacyPoint&) {
          return true;
        }
      });
      d[p.name] = ok;
      all = all && ok;
    }
    c.check("indeterminacy_points", all, d);
  }

  // F on L = {z1 = 0}, symbolically: the claim is (0:z2:z3) -> (0:z2-z3:z3).
  {
    RationalField Q;
    auto q1 = m.Q1.evaluate_var(0, Q.zero()), q2 = m.Q2.evaluate_var(0, Q.zero()), q3 = m.Q3.evaluate_var(0, Q.zero());
    auto z2 = MPoly<Rational>::variable(Q, 3, 1), z3 = MPoly<Rational>::variable(Q, 3, 2);
    bool claim = q1.is_zero() && !q2.is_zero() && q2 * z3 == q3 * (z2 - z3);
    auto g = gcd(q2, q3);
    auto r2 = exact_divide(q2, g), r3 = exact_divide(q3, g);
    c.check("F_on_L", claim,
            {{"claimed", "(0 : z2 - z3 : z3)"},
             {"observed", "(0 : " + (r2 ? r2->to_string(z) : "?") + " : " + (r3 ? r3->to_string(z) : "?") + ")"},
             {"Q1_on_L", q1.to_string(z)}});
  }

  // F maps the quintic B = {Q = 0} into L (enumeration over the scan prime).
  {
    auto pts = plane_curve_points(m.Q, c.opts.scan_prime);
    int on_l = 0, undefined = 0;
    json bad;
    for (const auto& zp : pts) {
      try {
        auto w = F_eval<Fp>(zp);
        if (w[0].is_zero()) {
          ++on_l;
        } else if (bad.is_null()) {
          bad = {{"z", coords_json(zp)}, {"F", coords_json(w.coords())}};
        }
      } catch (const IndeterminacyPoint&) {
        ++undefined;
      }
    }
    const int defined = static_cast<int>(pts.size()) - undefined;
    json d = {{"p", c.opts.scan_prime}, {"curve_points", pts.size()}, {"indeterminate", undefined}, {"images_on_L", on_l}};
    if (!bad.is_null()) d["first_failure"] = bad;
    c.check("quintic_to_L", defined > 0 && on_l == defined, d);
  }

  // Contracted curves: z2 = 0 -> q2, z1 = z3 -> q4, R4 = 0 -> q2.
  {
    RationalField Q;
    auto zv = [&](int i) { return MPoly<Rational>::variable(Q, 3, i); };
    struct Curve {
      std::string name;
      MPoly<Rational> eq;
      Vec3<std::int64_t> target;
    };
    std::vector<Curve> curves = {{"z2=0", zv(1), {1, 0, 1}}, {"z1=z3", zv(0) - zv(2), {-1, 1, 0}}, {"R4=0", m.R4, {1, 0, 1}}};
    json d = json::object();
    bool all = true;
    const PrimeField& f = field_for(c.opts.scan_prime);
    for (const auto& cv : curves) {
      ProjPoint2<Fp> target(Vec3<Fp>{f.from_int(cv.target[0]), f.from_int(cv.target[1]), f.from_int(cv.target[2])});
      int hits = 0, defined = 0;
      for (const auto& zp : plane_curve_points(cv.eq, c.opts.scan_prime)) {
        try {
          auto w = F_eval<Fp>(zp);
          ++defined;
          if (w == target) ++hits;
        } catch (const IndeterminacyPoint&) {
        }
      }
      d[cv.name] = {{"defined_points", defined}, {"mapped_to_target", hits}, {"target", coords_json(target.coords())}};
      all = all && defined > 0 && hits == defined;
    }
    c.check("contracted_curves", all, d);
  }

  // mu computed through lambda agrees with F.
  {
    const PrimeField& f = field_for(c.opts.sample_prime);
    auto s = sample_points(
        50, 2000, [&] { return Vec3<Fp>{random_fp(f, c.rng), random_fp(f, c.rng), f.one()}; },
        [&](const Vec3<Fp>& zp, json& w) {
          MuValue mu = mu_pointwise(7, zp);
          auto F = F_eval<Fp>(zp);
          w = {{"z", coords_json(zp)}, {"mu", coords_json(mu.image.coords())}, {"F", coords_json(F.coords())}};
          return mu.image == F;
        });
    json d = s.to_json();
    d["p"] = c.opts.sample_prime;
    c.check("mu7_matches_F", s.all(50), d);
  }

  // Commuting square pi o lambda = F o pi over the scan prime.
  {
    const PrimeField& f = field_for(c.opts.scan_prime);
    auto s = sample_points(
        100, 5000, [&] { return random_chart_point(7, f, c.rng); },
        [&](const ChartPoint<Fp>& x, json& w) {
          SquareCheck sq = commuting_square_check(x);
          w = {{"x", chart_json(x)},
               {"pi_lambda", coords_json(sq.via_lambda.coords())},
               {"F_pi", coords_json(sq.via_F.coords())}};
          return sq.holds;
        });
    json d = s.to_json();
    d["p"] = c.opts.scan_prime;
    c.check("commuting_square", s.all(100), d);
  }
}

// ---- branch7 / branch8 ------------------------------------------------------

void case_branch(Ctx& c, int n) {
  c.guarded("certified", [&] {
    BranchData b = branch_curve(n);
    c.check("certified", !b.S.is_zero() && b.D == b.W.scaled(b.c) * b.S * b.S,
            {{"c", b.c.to_string()},
             {"S", b.S.to_string(constants::z_vars())},
             {"W_degree", b.W.degree()},
             {"D_degree", b.D.degree()},
             {"D_terms", b.D.terms().size()}});
  });
}

// ---- degrees7 ---------------------------------------------------------------

void case_degrees7(Ctx& c) {
  const std::vector<int> expected = {6, 21, 82};
  auto to_json = [](const std::vector<IterateDegree>& v) {
    json j = json::array();
    for (const auto& d : v)
      j.push_back({{"k", d.k}, {"raw_degree", d.raw_degree}, {"gcd_degree", d.gcd_degree}, {"degree", d.degree}});
    return j;
  };
  auto degrees_of = [](const std::vector<IterateDegree>& v) {
    std::vector<int> out;
    for (const auto& d : v) out.push_back(d.degree);
    return out;
  };
  c.guarded("iterate_degrees", [&] {
    auto q = iterate_degrees(3);
    c.check("iterate_degrees", degrees_of(q) == expected, {{"field", "Q"}, {"iterates", to_json(q)}});
  });
  c.guarded("iterate_degrees_mod_p", [&] {
    auto m = iterate_degrees_mod_p(3, c.opts.sample_prime);
    c.check("iterate_degrees_mod_p", degrees_of(m) == expected, {{"p", c.opts.sample_prime}, {"iterates", to_json(m)}});
  });
}

// ---- mu8 --------------------------------------------------------------------

void case_mu8(Ctx& c) {
  const PrimeField& f = field_for(c.opts.sample_prime);
  const auto& model = plane_map_model(8);
  MPoly<Fp> conic = model.conic.map_to<Fp>(f), quartic = model.quartic.map_to<Fp>(f);

  auto conic_sample = sample_points(
      20, 200,
      [&] {
        Fp u = random_fp(f, c.rng);
        return Vec3<Fp>{u, u * u, f.one()};
      },
      [&](const Vec3<Fp>& z, json& w) {
        auto m = mu_via_line_interpolation(8, z, c.rng);
        w = {{"z", coords_json(z)}, {"mu", coords_json(m.image.coords())}, {"line_degree", m.degree}};
        return m.image == ProjPoint2<Fp>(z);
      });
  json d = conic_sample.to_json();
  d["p"] = c.opts.sample_prime;
  c.check("conic_fixed", conic_sample.all(20), d);

  // Points of Q8 with z3 = 1: Q8 is quadratic in z1, so solve for z1.
  auto q8_point = [&] {
    for (;;) {
      Fp z2 = random_fp(f, c.rng);
      std::vector<Fp> pt0{f.zero(), z2, f.one()};
      Fp a = quartic.coefficient_in(0, 2).evaluate(pt0);
      Fp b = quartic.coefficient_in(0, 1).evaluate(pt0);
      Fp k = quartic.coefficient_in(0, 0).evaluate(pt0);
      if (a.is_zero()) continue;
      auto r = field_sqrt(b * b - f.from_int(4) * a * k);
      if (!r) continue;
      Vec3<Fp> z{(-b + *r) / (f.from_int(2) * a), z2, f.one()};
      if (!quartic.evaluate({z[0], z[1], z[2]}).is_zero()) throw CertificationFailed("sampled point is not on Q8");
      return z;
    }
  };
  auto quartic_sample = sample_points(20, 200, q8_point, [&](const Vec3<Fp>& z, json& w) {
    auto m = mu_via_line_interpolation(8, z, c.rng);
    const auto& i = m.image.coords();
    w = {{"z", coords_json(z)}, {"mu", coords_json(i)}};
    return conic.evaluate({i[0], i[1], i[2]}).is_zero();
  });
  d = quartic_sample.to_json();
  d["p"] = c.opts.sample_prime;
  d["quartic_degree_in_z1"] = model.quartic.degree_in(0);
  c.check("quartic_to_conic", quartic_sample.all(20), d);

  // A line through a base point of mu meets it there, so mu restricted to
  // the line drops below the generic degree. The sqrt2 points need a prime
  // with 2 a square; 100049 = 1 mod 8.
  {
    const PrimeField& g = field_for(100049);
    auto sqrt2 = field_sqrt(g.from_int(2));
    auto line_degree = [&](const Vec3<Fp>& z) {
      int deg = 0;
      for (int line = 0; line < 2; ++line) deg = std::max(deg, mu_via_line_interpolation(8, z, c.rng).degree);
      return deg;
    };
    int generic = 0;
    for (int i = 0; i < 2; ++i) generic = std::max(generic, line_degree({random_fp(g, c.rng), random_fp(g, c.rng), g.one()}));
    json dd = {{"p", g.p}, {"generic_line_degree", generic}};
    bool all = true;
    for (const auto& p : model.indeterminacy) {
      std::vector<Fp> v;
      Fp u = p.minpoly.empty() ? g.zero() : *sqrt2;
      for (const auto& coord : p.coords) v.push_back(coord.evaluate<Fp>({u}, g));
      int deg = line_degree(vec3(v));
      dd[p.name] = deg;
      all = all && deg < generic;
    }
    c.check("indeterminacy_points", all, dd);
  }
}

// Basis of the kernel of a 2x4 integer matrix of rank 2.
std::vector<std::array<Rational, 4>> kernel_2x4(const std::array<std::array<int, 4>, 2>& rows) {
  RationalField Q;
  std::array<std::array<Rational, 4>, 2> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Q.from_int(rows[i][j]);
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < 4 && r < 2; ++col) {
    int piv = -1;
    for (int i = r; i < 2; ++i)
      if (!m[i][col].is_zero()) piv = i;
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][col].inv();
    for (auto& v : m[r]) v = v * inv;
    for (int i = 0; i < 2; ++i)
      if (i != r && !m[i][col].is_zero()) {
        Rational k = m[i][col];
        for (int j = 0; j < 4; ++j) m[i][j] = m[i][j] - k * m[r][j];
      }
    pivots.push_back(col);
    ++r;
  }
  std::vector<std::array<Rational, 4>> out;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::array<Rational, 4> v{Q.zero(), Q.zero(), Q.zero(), Q.zero()};
    v[free] = Q.one();
    for (int i = 0; i < r; ++i) v[pivots[i]] = -m[i][free];
    out.push_back(v);
  }
  return out;
}

// ---- aut7 -------------------------------------------------------------------

ProjPoint3<Rational> int_point(const std::array<int, 4>& v) {
  RationalField Q;
  return ProjPoint3<Rational>(std::array<Rational, 4>{Q.from_int(v[0]), Q.from_int(v[1]), Q.from_int(v[2]), Q.from_int(v[3])});
}

// Limit of the printed sigma quadruple at `point` along every catalogued line
// of Z7 through it: restrict to point + t v, strip the common power of t and
// set t = 0. nullopt when all four components vanish on the line.
std::vector<std::pair<std::string, std::optional<ProjPoint3<Rational>>>> sigma_limits_along_lines(
    int which, const std::array<int, 4>& point) {
  RationalField Q;
  auto t = MPoly<Rational>::variable(Q, 1, 0);
  const ProjPoint3<Rational> p = int_point(point);
  std::vector<std::pair<std::string, std::optional<ProjPoint3<Rational>>>> out;
  for (const auto& line : constants::lines_on_surface(7)) {
    bool through = true;
    for (const auto& form : line.forms) {
      int v = 0;
      for (int i = 0; i < 4; ++i) v += form[i] * point[i];
      through = through && v == 0;
    }
    if (!through) continue;
    std::array<Rational, 4> dir;
    for (const auto& k : kernel_2x4(line.forms))
      if (!proportional(k, p.coords())) dir = k;
    std::vector<MPoly<Rational>> y;
    for (int i = 0; i < 4; ++i) y.push_back(MPoly<Rational>::constant(Q, 1, p[i]) + t.scaled(dir[i]));
    std::array<UPoly<Rational>, 4> comp;
    int order = -1;
    for (int i = 0; i < 4; ++i) {
      comp[i] = constants::sigma_action(which)[i].substitute(y).to_upoly(0);
      if (comp[i].is_zero()) continue;
      int o = 0;
      while (comp[i].coeffs()[o].is_zero()) ++o;
      order = order < 0 ? o : std::min(order, o);
    }
    if (order < 0) {
      out.emplace_back(line.name, std::nullopt);
      continue;
    }
    std::array<Rational, 4> lim;
    for (int i = 0; i < 4; ++i) lim[i] = comp[i].coeff(order, Q.zero());
    out.emplace_back(line.name, ProjPoint3<Rational>(lim));
  }
  return out;
}

// The permutation the printed sigma2 quadruple realizes (see sigma2 check).
Permutation printed_sigma2_element() { return Permutation::parse_cycles(14, "(2,4,3,7,5,6)(9,11,10,14,12,13)"); }

void case_aut7(Ctx& c) {
  const Rank3Matroid& m7 = matroid_M7();
  c.check("sigma1_automorphism", is_automorphism(m7, sigma1()), {{"sigma1", sigma1().cycle_string()}});
  c.check("sigma2_automorphism", is_automorphism(m7, sigma2()), {{"sigma2", sigma2().cycle_string()}});
  auto group = group_closure({sigma1(), sigma2()});
  c.check("closure_order", group.order() == 42, {{"order", group.order()}});

  // Quartic(sigma(y)) is divisible by the quartic: sigma preserves Z7.
  const auto& q = constants::quartic(7);
  for (int which : {1, 2}) {
    const auto& act = constants::sigma_action(which);
    auto composed = q.substitute({act[0], act[1], act[2], act[3]});
    auto cof = exact_divide(composed, q);
    c.check("sigma" + std::to_string(which) + "_preserves_Z7", cof.has_value(),
            {{"composed_degree", composed.degree()}, {"cofactor_degree", cof ? cof->degree() : -1}});
  }

  // Orbit of (-6:-25/8:5:1) under the polynomial actions.
  c.guarded("orbit_42", [&] {
    RationalField Q;
    auto x = heptagon_point();
    ProjPoint3<Rational> start(std::array<Rational, 4>{x[0], x[1], x[2], Q.one()});
    std::map<std::string, ProjPoint3<Rational>> seen;
    std::vector<ProjPoint3<Rational>> todo{start.canonical()};
    seen.emplace(todo[0].to_string(), todo[0]);
    bool on_surface = true;
    while (!todo.empty() && seen.size() <= 1000) {
      auto p = todo.back();
      todo.pop_back();
      for (int which : {1, 2}) {
        auto y = sigma_polynomial_action(which, p).canonical();
        if (!vanishes(surface_eval(7, y))) on_surface = false;
        if (seen.emplace(y.to_string(), y).second) todo.push_back(y);
      }
    }
    c.check("orbit_42", seen.size() == 42 && on_surface, {{"orbit_size", seen.size()}, {"on_surface", on_surface}});
  });

  const PrimeField& f = field_for(c.opts.sample_prime);
  auto draw = [&] { return random_realizable_point(7, f, c.rng); };
  auto s1 = sample_points(20, 200, draw, [&](const ChartPoint<Fp>& x, json& w) {
    auto a = aut_action(7, sigma1(), x);
    auto b = dehomogenize(sigma_polynomial_action(1, homogenize(x, f)));
    w = {{"x", chart_json(x)}, {"permuted", chart_json(a)}, {"polynomial", chart_json(b)}};
    return chart_equal(a, b);
  });
  c.check("sigma1_polynomial_matches", s1.all(20), s1.to_json());

  // The printed sigma2 quadruple realizes a fixed element of the group.
  Permutation g2 = printed_sigma2_element();
  auto s2 = sample_points(20, 200, draw, [&](const ChartPoint<Fp>& x, json& w) {
    auto a = aut_action(7, g2, x);
    auto b = dehomogenize(sigma_polynomial_action(2, homogenize(x, f)));
    w = {{"x", chart_json(x)}, {"permuted", chart_json(a)}, {"polynomial", chart_json(b)}};
    return chart_equal(a, b);
  });
  json d = s2.to_json();
  d["element"] = g2.cycle_string();
  d["in_group"] = group.contains(g2);
  c.check("sigma2_polynomial_element", s2.all(20) && group.contains(g2), d);

  // Fixed singular points named in the text. The printed quadruples vanish
  // there, so the image is taken as the limit along each catalogued line of
  // Z7 through the point.
  for (auto [which, point] : {std::pair<int, std::array<int, 4>>{1, {0, 1, 0, 0}}, {2, {0, 1, 0, 1}}}) {
    json d = json::object();
    auto limits = sigma_limits_along_lines(which, point);
    bool all = !limits.empty();
    for (const auto& [line, y] : limits) {
      d[line] = y ? json(y->to_string()) : json("undefined on the whole line");
      if (y) all = all && *y == int_point(point);
    }
    std::string name = "sigma" + std::to_string(which) + "_fixes_" + int_point(point).to_string();
    c.check(name, all, d);
  }
}

// ---- commute7 ---------------------------------------------------------------

void case_commute7(Ctx& c) {
  const PrimeField& f = field_for(c.opts.sample_prime);
  auto draw = [&] { return random_realizable_point(7, f, c.rng); };
  for (auto [name, s] : {std::pair<std::string, Permutation>{"sigma1", sigma1()}, {"sigma2", sigma2()}}) {
    auto r = sample_points(20, 200, draw, [&](const ChartPoint<Fp>& x, json& w) {
      auto a = lambda_step(7, aut_action(7, s, x));
      auto b = aut_action(7, s, lambda_step(7, x));
      w = {{"x", chart_json(x)}, {"lambda_sigma", chart_json(a)}, {"sigma_lambda", chart_json(b)}};
      return chart_equal(a, b);
    });
    c.check("commutes_with_" + name, r.all(20), r.to_json());
  }
  auto base = sample_points(50, 500, draw, [&](const ChartPoint<Fp>& x, json& w) {
    Fp t = fibration_parameter(x);
    Fp t1 = fibration_parameter(lambda_step(7, x));
    if ((t + f.one()).is_zero()) throw IndeterminacyPoint("t = -1");
    Fp expect = -(t + f.one()).inv();
    w = {{"x", chart_json(x)}, {"t", scalar_json(t)}, {"t_lambda", scalar_json(t1)}, {"expected", scalar_json(expect)}};
    return t1 == expect;
  });
  c.check("base_action", base.all(50), base.to_json());
  auto s0 = sample_points(50, 500, draw, [&](const ChartPoint<Fp>& x, json& w) {
    w = {{"x", chart_json(x)}};
    return sigma0_base_check(x);
  });
  c.check("sigma0_lambda_fixes_t", s0.all(50), s0.to_json());
}

// ---- aut8 -------------------------------------------------------------------

void case_aut8(Ctx& c) {
  const Rank3Matroid& m8 = matroid_M8();
  auto inv = m8_involutions();
  json d = json::object();
  bool all = true;
  for (int i = 0; i < 3; ++i) {
    bool ok = is_automorphism(m8, inv[i]);
    d["s" + std::to_string(i + 1)] = {{"cycles", inv[i].cycle_string()}, {"automorphism", ok}};
    all = all && ok;
  }
  c.check("involutions_automorphisms", all, d);
  auto group = group_closure({inv[0], inv[1], inv[2]});
  c.check("closure_order", group.order() == 32, {{"order", group.order()}});
  Permutation s = m8_commuting_involution();
  c.check("s_automorphism", is_automorphism(m8, s), {{"s", s.cycle_string()}});

  const PrimeField& f = field_for(c.opts.sample_prime);
  auto r = sample_points(
      20, 200, [&] { return random_realizable_point(8, f, c.rng); },
      [&](const ChartPoint<Fp>& x, json& w) {
        auto a = lambda_step(8, aut_action(8, s, x));
        auto b = lambda_step(8, x);
        w = {{"x", chart_json(x)}, {"lambda_s", chart_json(a)}, {"lambda", chart_json(b)}};
        return chart_equal(a, b);
      });
  c.check("lambda_invariant_under_s", r.all(20), r.to_json());
}

// ---- tvectors7 / tvectors8 ----------------------------------------------------

void case_tvectors7(Ctx& c) {
  auto x = heptagon_point();
  auto r = checked_realization(7, x);
  auto t = singular_points(r.all()).t_vector();
  c.check("t_vector", t[2] == 28 && t[3] == 21 && t.size() == 2, t_vector_json(t));
  auto unl = lambda_operator(r.c0, {2}, {3});
  c.check("unlabeled_lambda_C0_is_C1", unl.unlabeled() == r.c1.unlabeled(), {{"lines", unl.size()}});
  c.check("labeled_lambda_C0_is_C1", labeled_lambda7(r.c0) == r.c1);
  auto c2 = labeled_lambda7(r.c1);
  c.check("C1_C2_realizes_M7", matroid_from_arrangement(r.c1.concat(c2)) == matroid_M7(),
          {{"C2", arrangement_json(c2)}});
}

void case_tvectors8(Ctx& c) {
  auto x = periodic_point();
  auto r = checked_realization(8, x);
  auto c2 = labeled_lambda8(r.c1);
  auto l24 = r.all().concat(c2);
  auto t = singular_points(l24).t_vector();
  c.check("L24_t_vector", l24.size() == 24 && t[2] == 24 && t[3] == 84, t_vector_json(t));
  auto unl = lambda_operator(r.c0, {2}, {3, 4});
  c.check("unlabeled_lambda_C0_is_C1", unl.unlabeled() == r.c1.unlabeled(), {{"lines", unl.size()}});
  c.check("labeled_lambda_C0_is_C1", labeled_lambda8(r.c0) == r.c1);
  c.check("C1_C2_realizes_M8", matroid_from_arrangement(r.c1.concat(c2)) == matroid_M8(),
          {{"C2", arrangement_json(c2)}});
}

// ---- periodic8 ----------------------------------------------------------------

void case_periodic8(Ctx& c) {
  auto x = periodic_point();
  json wx = {{"p", constants::kPeriodicPrime}, {"x", chart_json(x)}};
  c.check("on_surface", chart_eval(8, x).is_zero(), wx);
  auto y = lambda_step(8, x);
  c.check("fixed_point", chart_equal(x, y), {{"lambda", chart_json(y)}});
  auto o = orbit(8, x, 5);
  c.check("orbit_period_1", o.period && *o.period == 1, {{"termination", o.termination}});
  auto per = arrangement_period(8, x, 6);
  c.check("arrangement_period_3", per && *per == 3, {{"period", per ? json(*per) : json(nullptr)}});
  auto all = checked_realization(8, x).all();
  c.check("period_map_recovers_x", chart_equal(period_map(8, all), x));
}

// ---- degree7 / degree8 ----------------------------------------------------------

void case_degree(Ctx& c, int n) {
  DegreeHistogram h = degree_estimate(n, c.opts.scan_prime);
  json fibers = json::object();
  for (auto [size, count] : h.fibers) fibers[std::to_string(size)] = count;
  c.check("modal_fiber_size_4", h.modal_fiber_size() == 4,
          {{"p", h.p},
           {"domain_points", h.domain_points},
           {"undefined_points", h.undefined_points},
           {"fibers", fibers},
           {"modal", h.modal_fiber_size()},
           {"max", h.max_fiber_size()}});
}

// ---- multiplier7 / multiplier8 ----------------------------------------------------

void case_multiplier(Ctx& c, int n) {
  const PrimeField& f = field_for(c.opts.sample_prime);
  std::map<std::string, int> observed;
  auto r = sample_points(
      20, 200, [&] { return random_realizable_point(n, f, c.rng); },
      [&](const ChartPoint<Fp>& x, json& w) {
        Fp m = form_multiplier(n, x);
        observed[scalar_json(m)]++;
        w = {{"x", chart_json(x)}, {"multiplier", scalar_json(m)}};
        return m == f.from_int(-2);
      });
  json d = r.to_json();
  d["p"] = c.opts.sample_prime;
  d["observed"] = observed;
  c.check("multiplier_minus_2", r.all(20), d);
  auto ci = sample_points(
      5, 50, [&] { return random_realizable_point(n, f, c.rng); },
      [&](const ChartPoint<Fp>& x, json& w) {
        Fp a = form_multiplier(n, x, 0), b = form_multiplier(n, x, 1);
        w = {{"x", chart_json(x)}, {"implicit_x1", scalar_json(a)}, {"implicit_x2", scalar_json(b)}};
        return a == b;
      });
  c.check("chart_independent", ci.all(5), ci.to_json());
}

// ---- modular7 / modular8 -----------------------------------------------------------

json profile_json(const FiberProfile& p) {
  json e = json::array();
  for (const auto& x : p.entries)
    e.push_back({{"place", x.place.name}, {"order", x.order}, {"scaling", x.scaling}, {"c4_unit", x.c4_unit}});
  return {{"entries", e}, {"flattened", p.flattened()}, {"total", p.total()}, {"complete", p.complete}};
}

void invariant_identity_check(Ctx& c, const WeierstrassModel& e) {
  auto c4 = e.c4(), c6 = e.c6();
  c.check("c4_c6_identity_" + e.name, c4 * c4 * c4 - c6 * c6 == e.field.from_int(1728) * e.discriminant());
}

void case_modular7(Ctx& c) {
  const auto& e = weierstrass_e7();
  auto p = torsion_point_e7();
  auto ord = point_order(p, e, 12);
  c.check("torsion_order_7", on_curve(p, e) && ord && *ord == 7,
          {{"point", p.to_string()}, {"order", ord ? json(*ord) : json(nullptr)}});
  auto prof = fiber_profile(e, singular_places(7));
  bool c4_units = true;
  for (const auto& x : prof.entries) c4_units = c4_units && x.c4_unit;
  c.check("fiber_profile", prof.flattened() == std::vector<int>{7, 7, 7, 1, 1, 1} && prof.total() == 24 && prof.complete,
          profile_json(prof));
  c.check("c4_units", c4_units);
  invariant_identity_check(c, e);
  int vj = valuation(e.j_invariant(), place_at(Rational(0)));
  c.check("j_pole_order_7_at_0", vj == -7, {{"valuation", vj}});
}

void case_modular8(Ctx& c) {
  const auto& e = weierstrass_e8();
  auto prof = fiber_profile(e, singular_places(8));
  c.check("fiber_profile",
          prof.flattened() == std::vector<int>{8, 8, 4, 2, 1, 1} && prof.total() == 24 && prof.complete,
          profile_json(prof));
  bool c4_units = true;
  for (const auto& x : prof.entries) c4_units = c4_units && x.c4_unit;
  c.check("c4_units", c4_units);
  auto cm = cubic_model_check_8();
  c.check("cubic_model", cm.holds,
          {{"cofactor", cm.cofactor ? cm.cofactor->to_string(constants::cubic_vars()) : "none"}});
  // Negative control: flipping the sign of one term must break divisibility.
  RationalField Q;
  auto X = MPoly<Rational>::variable(Q, 3, 0), Y = MPoly<Rational>::variable(Q, 3, 1);
  auto wrong = constants::cubic_model8() - (X * Y).scaled(Q.from_int(2));
  c.check("cubic_model_negative_control", !cubic_model_check_8(wrong).holds);
  c.check("j_identity", j_identity_check_8());
  invariant_identity_check(c, e);
  invariant_identity_check(c, weierstrass_e8_prime());
}

// ---- matroids -----------------------------------------------------------------------

void case_matroids(Ctx& c) {
  c.check("M7_nonbases_21", matroid_M7().nonbasis_count() == 21, {{"count", matroid_M7().nonbasis_count()}});
  c.check("M8_nonbases_28", matroid_M8().nonbasis_count() == 28, {{"count", matroid_M8().nonbasis_count()}});
  // Family label i sits at heptagon position pos[i] in both blocks.
  {
    const auto& pos = heptagon_position();
    auto relabel = [&](int a) { return a <= 7 ? pos[a] : pos[a - 7] + 7; };
    const Rank3Matroid h = matroid_M7_heptagon(), m7 = matroid_M7();
    bool iso = m7.nonbasis_count() == h.nonbasis_count();
    for (const auto& t : m7.nonbases()) iso = iso && h.is_nonbasis(relabel(t[0]), relabel(t[1]), relabel(t[2]));
    c.check("M7_heptagon_relabeling", iso);
  }
  c.guarded("M7_at_heptagon_witness", [&] {
    auto r = parametrized_realization(7, heptagon_point());
    auto m = matroid_from_arrangement(r.all());
    c.check("M7_at_heptagon_witness", m == matroid_M7(),
            {{"extra", m.difference(matroid_M7()).size()}, {"missing", matroid_M7().difference(m).size()}});
  });
  const PrimeField& f = field_for(c.opts.sample_prime);
  for (int n : {7, 8}) {
    json pts = json::array();
    int ok = 0;
    for (int i = 0; i < 20; ++i) {
      try {
        auto x = random_realizable_point(n, f, c.rng, 5);
        pts.push_back(chart_json(x));
        ++ok;
      } catch (const DegenerateRealization& e) {
        pts.push_back({{"error", e.what()}});
      }
    }
    c.check("M" + std::to_string(n) + "_at_random_points", ok == 20,
            {{"p", c.opts.sample_prime}, {"realized", ok}, {"points", pts}});
  }
}

// ---- families -------------------------------------------------------------------------

// A quartic binary form vanishing at five distinct points of the line is zero.
bool line_on_surface(int n, const constants::SpaceLine& line) {
  auto k = kernel_2x4(line.forms);
  if (k.size() != 2) return false;
  RationalField Q;
  auto on = [&](const std::array<Rational, 4>& y) { return surface_eval(n, ProjPoint3<Rational>(y)).is_zero(); };
  if (!on(k[0])) return false;
  for (int s = 0; s < 4; ++s) {
    std::array<Rational, 4> y;
    for (int i = 0; i < 4; ++i) y[i] = Q.from_int(s) * k[0][i] + k[1][i];
    if (!on(y)) return false;
  }
  return true;
}

std::size_t brute_force_count(int n, std::uint64_t p) {
  const PrimeField& f = field_for(p);
  MPoly<Fp> q = constants::quartic(n).map_to<Fp>(f);
  std::size_t count = 0;
  // Canonical representatives: the first nonzero coordinate is 1.
  for (int lead = 0; lead < 4; ++lead) {
    std::uint64_t free = 3 - lead, total = 1;
    for (std::uint64_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Fp> y(4, f.zero());
      y[lead] = f.one();
      std::uint64_t v = idx;
      for (int j = lead + 1; j < 4; ++j, v /= p) y[j] = f.from_uint(v % p);
      if (q.evaluate(y).is_zero()) ++count;
    }
  }
  return count;
}

void case_families(Ctx& c) {
  RationalField Q;
  for (int n : {7, 8}) {
    const auto& q = constants::quartic(n);
    json d = json::object();
    bool all = true;
    for (const auto& sp : constants::singular_points(n)) {
      std::vector<Rational> y;
      for (int v : sp.y) y.push_back(Q.from_int(v));
      bool ok = q.evaluate(y).is_zero();
      for (int v = 0; v < 4; ++v) ok = ok && q.derivative(v).evaluate(y).is_zero();
      d[sp.name] = ok;
      all = all && ok;
    }
    c.check("singular_points_Z" + std::to_string(n), all && !constants::singular_points(n).empty(), d);

    json ld = json::object();
    bool lines_ok = true;
    for (const auto& line : constants::lines_on_surface(n)) {
      bool ok = line_on_surface(n, line);
      ld[line.name] = ok;
      lines_ok = lines_ok && ok;
    }
    c.check("lines_on_Z" + std::to_string(n), lines_ok, ld);
  }

  c.check("heptagon_witness_on_Z7", chart_eval(7, heptagon_point()).is_zero());

  // Points on the catalogued excluded curves are not realizations.
  {
    int members = 0, degenerate = 0;
    json bad;
    for (const auto& y : enumerate_surface_points(7, c.opts.scan_prime)) {
      if (excluded_locus_member(y).empty() || y[3].is_zero()) continue;
      ++members;
      try {
        checked_realization(7, dehomogenize(y));
        if (bad.is_null()) bad = {{"y", coords_json(y.coords())}, {"components", excluded_locus_member(y)}};
      } catch (const DegenerateRealization&) {
        ++degenerate;
      }
    }
    json d = {{"p", c.opts.scan_prime}, {"chart_points_on_excluded_curves", members}, {"degenerate", degenerate}};
    if (!bad.is_null()) d["first_failure"] = bad;
    c.check("excluded_curves_degenerate", members > 0 && degenerate == members, d);
  }

  // Fixed and period-two points of the text lie on Z7; base points on Z8.
  auto on_surface = [&](int n, const std::vector<constants::AlgebraicPoint>& pts, const std::string& name) {
    json d = json::object();
    bool all = true;
    for (const auto& p : pts) {
      bool ok = on_algebraic_point(p, [&](const auto& v) {
        using S = std::decay_t<decltype(v[0])>;
        return vanishes(surface_eval(n, ProjPoint3<S>(vec4(v))));
      });
      d[p.name] = ok;
      all = all && ok;
    }
    c.check(name, all, d);
  };
  on_surface(7, constants::special_points_z7(), "special_points_on_Z7");
  on_surface(8, constants::lambda8_base_points(), "lambda8_base_points_on_Z8");

  // The regular octagon with its mirrors is not a realization of M8.
  {
    const auto& oct = constants::lambda8_base_points().front();
    auto E = adjoin_root(RationalField{}, oct.minpoly);
    auto y = algebraic_coords<Ext<Rational>>(oct, E, E.generator());
    ChartPoint<Ext<Rational>> x{y[0] / y[3], y[1] / y[3], y[2] / y[3]};
    std::string outcome;
    bool ok = false;
    try {
      auto r = parametrized_realization(8, x);
      auto m = matroid_from_arrangement(r.all());
      ok = m != matroid_M8() && matroid_M8().difference(m).empty();
      outcome = "matroid with " + std::to_string(m.nonbasis_count()) + " non-bases";
    } catch (const DegenerateRealization& e) {
      ok = true;
      outcome = std::string("DegenerateRealization: ") + e.what();
    }
    c.check("octagon_not_realization", ok, {{"point", oct.name}, {"outcome", outcome}});
  }

  // At least 95% of random surface points give realizations.
  {
    const PrimeField& f = field_for(c.opts.sample_prime);
    json d = json::object();
    bool all = true;
    for (int n : {7, 8}) {
      int ok = 0;
      const int trials = 500;
      for (int i = 0; i < trials; ++i) {
        try {
          checked_realization(n, random_chart_point(n, f, c.rng));
          ++ok;
        } catch (const DegenerateRealization&) {
        }
      }
      d["n" + std::to_string(n)] = {{"realized", ok}, {"trials", trials}};
      all = all && ok * 100 >= trials * 95;
    }
    c.check("realization_rate", all, d);
  }

  // Point counts against a full scan of P^3.
  for (auto [n, p] : {std::pair<int, std::uint64_t>{7, 11}, {8, 13}}) {
    std::size_t enumerated = enumerate_surface_points(n, p).size();
    std::size_t brute = brute_force_count(n, p);
    c.check("point_count_Z" + std::to_string(n) + "_F" + std::to_string(p), enumerated == brute,
            {{"enumerated", enumerated}, {"brute_force", brute}});
  }
}

using CaseFn = std::function<void(Ctx&)>;

const std::map<std::string, CaseFn>& case_functions() {
  static const std::map<std::string, CaseFn> m = {
      {"semiconj7", case_semiconj7},
      {"branch7", [](Ctx& c) { case_branch(c, 7); }},
      {"branch8", [](Ctx& c) { case_branch(c, 8); }},
      {"degrees7", case_degrees7},
      {"mu8", case_mu8},
      {"aut7", case_aut7},
      {"aut8", case_aut8},
      {"commute7", case_commute7},
      {"tvectors7", case_tvectors7},
      {"tvectors8", case_tvectors8},
      {"periodic8", case_periodic8},
      {"degree7", [](Ctx& c) { case_degree(c, 7); }},
      {"degree8", [](Ctx& c) { case_degree(c, 8); }},
      {"multiplier7", [](Ctx& c) { case_multiplier(c, 7); }},
      {"multiplier8", [](Ctx& c) { case_multiplier(c, 8); }},
      {"modular7", case_modular7},
      {"modular8", case_modular8},
      {"matroids", case_matroids},
      {"families", case_families},
  };
  return m;
}

}  // namespace

VerificationReport run_case(const std::string& id, const RunOptions& opts) {
  const auto& fns = case_functions();
  auto it = fns.find(id);
  if (it == fns.end()) throw UnknownCase("unknown case '" + id + "'");
  VerificationReport rep;
  rep.id = id;
  rep.seed = opts.seed;
  for (const auto& info : case_catalog())
    if (info.id == id) rep.reference = info.reference;

  Ctx ctx{opts, std::mt19937_64(opts.seed ^ fnv1a(id)), {}};
  auto start = std::chrono::steady_clock::now();
  try {
    it->second(ctx);
    bool all = !ctx.checks.empty();
    for (const auto& c : ctx.checks) all = all && c.pass;
    rep.status = all ? "pass" : "fail";
  } catch (const DegenerateRealization& e) {
    rep.status = "skip", rep.message = std::string(e.kind()) + ": " + e.what();
  } catch (const DegenerateOperator& e) {
    rep.status = "skip", rep.message = std::string(e.kind()) + ": " + e.what();
  } catch (const NoLift& e) {
    rep.status = "skip", rep.message = std::string(e.kind()) + ": " + e.what();
  } catch (const Error& e) {
    rep.status = "fail", rep.message = std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    rep.status = "fail", rep.message = e.what();
  }
  rep.checks = std::move(ctx.checks);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> run_cases(const std::vector<std::string>& ids, const RunOptions& opts, int jobs) {
  for (const auto& id : ids)
    if (!case_functions().count(id)) throw UnknownCase("unknown case '" + id + "'");
  std::vector<VerificationReport> out(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) out[i] = run_case(ids[i], opts);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(ids.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool skip = false;
  for (const auto& r : reports) {
    if (r.status == "fail") return 1;
    if (r.status == "skip") skip = true;
  }
  return skip ? 2 : 0;
}

}  // namespace linedyn
