#include "disc_framing.hpp"

#include <array>
#include <set>

#include "errors.hpp"
#include "normal_forms.hpp"

namespace morincob {

namespace {

const VarList kVars4 = {"t1", "t2", "t3", "x"};
const VarList kVarsC = {"t2", "x"};
const VarList kVarsE = {"t2", "x", "eps"};
const VarList kVarsD = {"t2", "x", "delta"};

MultiPoly P4(const std::string& s) { return MultiPoly::parse(kVars4, s); }
MultiPoly PC(const std::string& s) { return MultiPoly::parse(kVarsC, s); }
MultiPoly PE(const std::string& s) { return MultiPoly::parse(kVarsE, s); }

std::vector<MultiPoly> parse_all(const VarList& vars, const std::vector<std::string>& ss) {
  std::vector<MultiPoly> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back(MultiPoly::parse(vars, s));
  return out;
}

// Normal vector of the image of the cusp normal form away from the singular
// set; its last two coordinates are the two corank minors, so it vanishes
// exactly on the singular set.
std::vector<MultiPoly> normal_vector() {
  return parse_all(kVars4, {"-x*(t3 + 3*x^2)", "-x^2*(t3 + 3*x^2)", "x*(t1 + 2*x*t2)",
                            "t3 + 3*x^2", "-(t1 + 2*x*t2)"});
}

// Parametrization of the singular set and its image.
std::vector<MultiPoly> singular_param() {
  return parse_all(kVarsC, {"-2*x*t2", "t2", "-3*x^2", "x"});
}

std::vector<MultiPoly> singular_image_param() {
  return parse_all(kVarsC, {"-2*x*t2", "t2", "-3*x^2", "-t2*x^2", "-2*x^3"});
}

// The curve p_eps through a singular point in the kernel direction, and the
// image curve q_delta with sigma2(p_eps) = sigma2(p_-eps) = q_{eps^2}.
std::vector<MultiPoly> p_eps(bool negate) {
  const char* e = negate ? "(-eps)" : "eps";
  return parse_all(kVarsE, {"-2*x*t2", "t2", std::string("-3*x^2 - ") + e + "^2",
                            std::string("x + ") + e});
}

std::vector<MultiPoly> q_delta() {
  return parse_all(kVarsD, {"-2*x*t2", "t2", "-3*x^2 - delta", "-t2*(x^2 - delta)",
                            "-2*x^3 + 2*delta*x"});
}

// The embedded disc spanning the singular image curve, with its frame.
std::vector<MultiPoly> disc_F() {
  return parse_all(kVarsC, {"-2*x*t2", "t2", "-3*x^2", "-t2*x^2", "2*x*(t2^2 - 1)"});
}

std::vector<MultiPoly> frame_v1() { return parse_all(kVarsC, {"0", "0", "-1", "t2", "2*x"}); }
std::vector<MultiPoly> frame_v2_curve() {
  return parse_all(kVarsC, {"-3*x^2", "-3*x^3", "x*t2", "3*x", "-t2"});
}
std::vector<MultiPoly> frame_v2_disc() {
  return parse_all(kVarsC, {"3 - 3*t2^2 - 6*x^2", "-3*x^3", "x*t2", "3*x", "-t2"});
}
std::vector<MultiPoly> frame_v3() {
  return parse_all(kVarsC, {"-4*x", "-7*x^2", "t2", "1", "0"});
}

PolyMatrix frame_matrix() {
  PolyMatrix m(kVarsC, 5, 5);
  const std::vector<std::vector<std::string>> rows = {
      {"-2*x", "1", "0", "-x^2", "4*x*t2"},
      {"t2", "0", "3*x", "x*t2", "1 - t2^2"},
      {"0", "0", "-1", "t2", "2*x"},
      {"3 - 3*t2^2 - 6*x^2", "-3*x^3", "x*t2", "3*x", "-t2"},
      {"-4*x", "-7*x^2", "t2", "1", "0"}};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = PC(rows[i][j]);
  return m;
}

MultiPoly det_expansion_expected() {
  return PC(
      "180*x^8 + 568*x^6*t2^2 + 323*x^4*t2^4 + 120*x^6 - 197*x^4*t2^2 + 8*x^2*t2^4 "
      "+ 3*t2^6 + 51*x^4 - 12*x^2*t2^2 - 2*t2^4 + 24*x^2 - 2*t2^2 + 3");
}

// Sum-of-squares regrouping: positive multiples of squares plus a remainder
// whose monomials all have even exponents and positive coefficients, plus 1.
struct SosCertificate {
  std::vector<std::pair<Rat, MultiPoly>> squares;
  MultiPoly remainder;
};

SosCertificate sos_certificate() {
  SosCertificate c;
  c.squares = {{Rat(50), PC("2*x^2*t2^2 - x^2")},
               {Rat(6), PC("x*t2^2 - x")},
               {Rat(2), PC("t2^3 - t2")},
               {Rat(2), PC("t2^2 - 1")}};
  c.remainder = PC(
      "180*x^8 + 568*x^6*t2^2 + 123*x^4*t2^4 + 120*x^6 + 3*x^4*t2^2 + 2*x^2*t2^4 "
      "+ t2^6 + x^4 + 18*x^2 + 1");
  return c;
}

// Normal form with t2-degree <= 1 modulo the ideal generated by
// t2^2 + x^2 - 1 (monic in t2^2, so iterated substitution t2^2 -> 1 - x^2
// is a complete reduction).
MultiPoly reduce_mod_circle(const MultiPoly& p) {
  MultiPoly out(kVarsC);
  MultiPoly one_minus_x2 = PC("1 - x^2");
  for (const auto& [e, c] : p.terms()) {
    unsigned t2e = e[0], xe = e[1];
    MultiPoly term(kVarsC);
    term.add_term({t2e % 2, xe}, c);
    out = out + term * one_minus_x2.pow(t2e / 2);
  }
  return out;
}

// --- check helpers ---------------------------------------------------------

void require_zero(CheckResult& r, const std::string& label, const MultiPoly& p) {
  if (!p.is_zero()) {
    r.pass = false;
    r.residuals.push_back(label + ": " + p.to_string());
  }
}

void require_equal(CheckResult& r, const std::string& label, const MultiPoly& got,
                   const MultiPoly& want) {
  require_zero(r, label, got - want);
}

CheckResult start(const std::string& name, const std::string& note) {
  CheckResult r;
  r.name = name;
  r.note = note;
  r.pass = true;
  return r;
}

std::vector<MultiPoly> substitute_all(const std::vector<MultiPoly>& ps,
                                      const std::vector<MultiPoly>& images) {
  std::vector<MultiPoly> out;
  out.reserve(ps.size());
  for (const MultiPoly& p : ps) out.push_back(p.substitute(images));
  return out;
}

}  // namespace

VerifyReport verify_disc_framing(const std::string& inject_defect) {
  if (!inject_defect.empty() && inject_defect != "det_expansion")
    throw ValidationError("unknown defect name '" + inject_defect + "'");

  VerifyReport rep;
  rep.suite = "appendix1";

  PolyMap sigma2 = morin_normal_form(2);
  PolyMatrix dsigma2 = sigma2.jacobian();

  {
    auto r = start("normal_form_jacobian",
                   "differential of the cusp normal form matches the 5x4 matrix");
    const std::vector<std::vector<std::string>> rows = {{"1", "0", "0", "0"},
                                                        {"0", "1", "0", "0"},
                                                        {"0", "0", "1", "0"},
                                                        {"x", "x^2", "0", "t1 + 2*x*t2"},
                                                        {"0", "0", "x", "t3 + 3*x^2"}};
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        require_equal(r, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                      dsigma2.at(i, j), P4(rows[i][j]));
    rep.checks.push_back(std::move(r));
  }

  auto n = normal_vector();
  {
    auto r = start("normal_vector_orthogonality",
                   "n(p) is orthogonal to all four columns of the differential");
    for (std::size_t j = 0; j < 4; ++j) {
      MultiPoly dot(kVars4);
      for (std::size_t i = 0; i < 5; ++i) dot = dot + n[i] * dsigma2.at(i, j);
      require_zero(r, "n . column " + std::to_string(j), dot);
    }
    rep.checks.push_back(std::move(r));
  }

  auto sing = singular_param();
  {
    auto r = start("singular_set_substitution",
                   "the parametrized surface kills both corank minors, the kernel "
                   "direction, and the normal vector (so n vanishes exactly there)");
    require_zero(r, "t1 + 2*x*t2 on the singular set", P4("t1 + 2*x*t2").substitute(sing));
    require_zero(r, "t3 + 3*x^2 on the singular set", P4("t3 + 3*x^2").substitute(sing));
    for (std::size_t i = 0; i < 5; ++i)
      require_zero(r, "d(sigma2) * e_x, coordinate " + std::to_string(i),
                   dsigma2.at(i, 3).substitute(sing));
    for (std::size_t i = 0; i < 5; ++i)
      require_zero(r, "n coordinate " + std::to_string(i), n[i].substitute(sing));
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("singular_image", "sigma2 of the singular set is the stated surface");
    auto image = substitute_all(sigma2.coords, sing);
    auto want = singular_image_param();
    for (std::size_t i = 0; i < 5; ++i)
      require_equal(r, "coordinate " + std::to_string(i), image[i], want[i]);
    rep.checks.push_back(std::move(r));
  }

  auto pe = p_eps(false);
  auto pm = p_eps(true);
  auto q = q_delta();
  std::vector<MultiPoly> q_eps2 = substitute_all(
      q, {MultiPoly::variable(kVarsE, 0), MultiPoly::variable(kVarsE, 1), PE("eps^2")});
  {
    auto r = start("double_point_curve",
                   "sigma2(p_eps) = sigma2(p_-eps) = q_{eps^2}: the two branches meet");
    auto se = substitute_all(sigma2.coords, pe);
    auto sm = substitute_all(sigma2.coords, pm);
    for (std::size_t i = 0; i < 5; ++i) {
      require_equal(r, "sigma2(p_eps) coordinate " + std::to_string(i), se[i], q_eps2[i]);
      require_equal(r, "sigma2(p_-eps) coordinate " + std::to_string(i), sm[i], q_eps2[i]);
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("kernel_field_and_v1",
                   "p_eps starts in the kernel direction; v1 is the tangent of q_delta");
    std::vector<MultiPoly> to_c = {MultiPoly::variable(kVarsC, 0),
                                   MultiPoly::variable(kVarsC, 1),
                                   MultiPoly::constant(kVarsC, 0)};
    const std::vector<std::string> e4 = {"0", "0", "0", "1"};
    for (std::size_t i = 0; i < 4; ++i)
      require_equal(r, "dp_eps/deps(0), coordinate " + std::to_string(i),
                    pe[i].derivative(2).substitute(to_c), PC(e4[i]));
    std::vector<MultiPoly> to_c_d = to_c;  // delta -> 0 as well
    auto v1 = frame_v1();
    for (std::size_t i = 0; i < 5; ++i)
      require_equal(r, "dq/ddelta(0), coordinate " + std::to_string(i),
                    q[i].derivative(2).substitute(to_c_d), v1[i]);
    rep.checks.push_back(std::move(r));
  }

  // n evaluated along the double point curve, and the two frame vectors it
  // produces in the limit.
  auto n_pe = substitute_all(n, pe);
  auto n_pm = substitute_all(n, pm);
  auto A = parse_all(kVarsE, {"-6*x^2 - 2*eps^2", "-6*x^3 - 10*x*eps^2", "2*x*t2", "6*x",
                              "-2*t2"});
  auto B = parse_all(kVarsE, {"-8*x", "-14*x^2 - 2*eps^2", "2*t2", "2", "0"});
  {
    auto r = start("normal_along_curve",
                   "n(p_{+-eps}) = +-eps*A + eps^2*B with the stated A and B");
    for (std::size_t i = 0; i < 5; ++i) {
      require_equal(r, "n(p_eps) coordinate " + std::to_string(i), n_pe[i],
                    PE("eps") * A[i] + PE("eps^2") * B[i]);
      require_equal(r, "n(p_-eps) coordinate " + std::to_string(i), n_pm[i],
                    -PE("eps") * A[i] + PE("eps^2") * B[i]);
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("normal_sum_difference",
                   "sum and difference of the two normals match the displayed values");
    for (std::size_t i = 0; i < 5; ++i) {
      require_equal(r, "sum coordinate " + std::to_string(i), n_pe[i] + n_pm[i],
                    PE("2*eps^2") * B[i]);
      require_equal(r, "difference coordinate " + std::to_string(i), n_pe[i] - n_pm[i],
                    PE("2*eps") * A[i]);
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("frame_vector_limits",
                   "the eps -> 0 directions of difference/(2 eps) and sum/(2 eps^2) are "
                   "v2 and v3 (each limit is exactly twice the frame vector)");
    std::vector<MultiPoly> to_c = {MultiPoly::variable(kVarsC, 0),
                                   MultiPoly::variable(kVarsC, 1),
                                   MultiPoly::constant(kVarsC, 0)};
    auto v2 = frame_v2_curve();
    auto v3 = frame_v3();
    for (std::size_t i = 0; i < 5; ++i) {
      auto dq = (n_pe[i] - n_pm[i]).divide_exact(PE("2*eps"));
      auto sq = (n_pe[i] + n_pm[i]).divide_exact(PE("2*eps^2"));
      if (!dq || !sq) {
        r.pass = false;
        r.residuals.push_back("coordinate " + std::to_string(i) +
                              ": not divisible by the expected power of eps");
        continue;
      }
      require_equal(r, "difference limit, coordinate " + std::to_string(i),
                    dq->substitute(to_c), v2[i].scaled(2));
      require_equal(r, "sum limit, coordinate " + std::to_string(i),
                    sq->substitute(to_c), v3[i].scaled(2));
    }
    rep.checks.push_back(std::move(r));
  }

  auto F = disc_F();
  {
    auto r = start("disc_boundary_agreement",
                   "F agrees with sigma2 on the singular set along the unit circle "
                   "(coordinates reduced mod t2^2 + x^2 - 1)");
    auto on_curve = singular_image_param();
    for (std::size_t i = 0; i < 5; ++i)
      require_zero(r, "coordinate " + std::to_string(i),
                   reduce_mod_circle(F[i] - on_curve[i]));
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("frame_boundary_agreement",
                   "the disc frame restricts to the curve frame on the unit circle");
    auto pairs = {std::make_pair(frame_v1(), frame_v1()),
                  std::make_pair(frame_v2_disc(), frame_v2_curve()),
                  std::make_pair(frame_v3(), frame_v3())};
    int vi = 1;
    for (const auto& [disc, curve] : pairs) {
      for (std::size_t i = 0; i < 5; ++i)
        require_zero(r, "v" + std::to_string(vi) + " coordinate " + std::to_string(i),
                     reduce_mod_circle(disc[i] - curve[i]));
      ++vi;
    }
    rep.checks.push_back(std::move(r));
  }

  PolyMatrix M = frame_matrix();
  {
    auto r = start("frame_matrix_rows",
                   "rows of M are dF/dt2, -1/2 dF/dx, v1, v2, v3, so det M != 0 is "
                   "exactly the linear independence needed");
    auto v1 = frame_v1();
    auto v2 = frame_v2_disc();
    auto v3 = frame_v3();
    for (std::size_t i = 0; i < 5; ++i) {
      require_equal(r, "dF/dt2 coordinate " + std::to_string(i), M.at(0, i),
                    F[i].derivative(0));
      require_zero(r, "dF/dx + 2*row2, coordinate " + std::to_string(i),
                   F[i].derivative(1) + M.at(1, i).scaled(2));
      require_equal(r, "v1 coordinate " + std::to_string(i), M.at(2, i), v1[i]);
      require_equal(r, "v2 coordinate " + std::to_string(i), M.at(3, i), v2[i]);
      require_equal(r, "v3 coordinate " + std::to_string(i), M.at(4, i), v3[i]);
    }
    rep.checks.push_back(std::move(r));
  }

  MultiPoly detM = M.det_cofactor();
  {
    auto r = start("determinant_expansion", "cofactor determinant of M equals the "
                                            "expanded polynomial; constant term 3");
    MultiPoly expect = det_expansion_expected();
    if (inject_defect == "det_expansion")
      expect = expect + MultiPoly::constant(kVarsC, 1);
    require_equal(r, "det M - expansion", detM, expect);
    Rat at0 = detM.eval({Rat(0), Rat(0)});
    if (at0 != 3) {
      r.pass = false;
      r.residuals.push_back("det M at the origin is " + rat_str(at0) + ", expected 3");
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("positivity_certificate",
                   "det M = 50 s1^2 + 6 s2^2 + 2 s3^2 + 2 s4^2 + (even positive "
                   "monomials) + 1 >= 1 everywhere");
    SosCertificate cert = sos_certificate();
    MultiPoly sum(kVarsC);
    for (const auto& [c, s] : cert.squares) {
      if (c <= 0) {
        r.pass = false;
        r.residuals.push_back("square coefficient not positive");
      }
      sum = sum + (s * s).scaled(c);
    }
    sum = sum + cert.remainder;
    require_equal(r, "det M - certificate", detM, sum);
    for (const auto& [e, c] : cert.remainder.terms()) {
      bool even = true;
      for (unsigned k : e) even = even && (k % 2 == 0);
      if (!even || c <= 0) {
        r.pass = false;
        r.residuals.push_back("remainder term is not an even-exponent positive monomial");
      }
    }
    if (cert.remainder.constant_term() < 1) {
      r.pass = false;
      r.residuals.push_back("certificate constant term below 1");
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("embedding_injectivity_sample",
                   "no collisions of F on a 100x100 rational grid (sampled sanity "
                   "check of injectivity, not a proof)");
    std::set<std::array<Rat, 5>> seen;
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 100; ++j) {
        std::vector<Rat> pt = {Rat(Int(i - 50), Int(25)), Rat(Int(j - 50), Int(25))};
        std::array<Rat, 5> val;
        for (std::size_t k = 0; k < 5; ++k) val[k] = F[k].eval(pt);
        if (!seen.insert(val).second) {
          r.pass = false;
          r.residuals.push_back("collision at t2=" + rat_str(pt[0]) + ", x=" + rat_str(pt[1]));
        }
      }
    rep.checks.push_back(std::move(r));
  }

  return rep;
}

}  // namespace morincob
