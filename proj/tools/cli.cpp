#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtchar/basis.hpp"
#include "qtchar/batch.hpp"
#include "qtchar/bosonic.hpp"
#include "qtchar/heightfunc.hpp"
#include "qtchar/inflate.hpp"
#include "qtchar/io.hpp"
#include "qtchar/qchar.hpp"
#include "qtchar/torus.hpp"

namespace {

using namespace qtchar;

nlohmann::json expansionJson(const StandardExpansion& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : e.coords)
    out.push_back({{"monomial", toJson(m)}, {"coeff", toJson(c)}});
  return out;
}

int runFund(int n, int i, int p, bool json) {
  Ring ring(n);
  const TorusElement chi = ring.fundamental(i, p);
  if (json) {
    std::cout << toJson(chi).dump() << "\n";
  } else {
    std::cout << "chi(Y[" << i << "," << p << "]) = " << chi.str() << "\n";
    std::cout << "monomials: " << chi.termCount() << "\n";
  }
  return 0;
}

int runCanon(int n, const std::string& mstr, bool json) {
  Ring ring(n);
  const YMonomial m = parseMonomial(n, mstr);
  const TorusElement body = ring.canonical(m);
  const StandardExpansion exp = ring.expandInStandard(body);
  if (json) {
    nlohmann::json out{{"rank", n},
                       {"top", toJson(m)},
                       {"body", toJson(body)},
                       {"expansion", expansionJson(exp)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "canonical(" << m.str() << ") = " << body.str() << "\n";
    std::cout << "expansion: " << exp.str() << "\n";
  }
  return 0;
}

int runInflate(int n, int nn, int c, int cc, std::vector<int> nuvals,
               const std::string& mstr, bool json) {
  const HeightFunction xi = HeightFunction::increasing(n, c);
  const HeightFunction xit = HeightFunction::increasing(nn, cc);
  const IncreasingMap nu(n, nn, std::move(nuvals));
  Ring src(n), dst(nn);
  const YMonomial m = parseMonomial(n, mstr);
  const YMonomial psim = psiDominant(xi, xit, nu, m);
  const TorusElement image = inflate(src, dst, xi, xit, nu, src.canonical(m));
  const StandardExpansion exp = dst.expandInStandard(image);
  if (json) {
    nlohmann::json out{{"rank", nn},
                       {"psi_m", toJson(psim)},
                       {"image", toJson(image)},
                       {"expansion", expansionJson(exp)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "psi(" << m.str() << ") = " << psim.str() << "\n";
    std::cout << "image = " << image.str() << "\n";
    std::cout << "expansion: " << exp.str() << "\n";
  }
  return 0;
}

bool report(bool ok, const std::string& what) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  return ok;
}

bool verifyPairing(int n, int kmax) {
  PairingTable pt(n);
  bool ok = true;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      for (int k = (i == j ? 1 : 0); k <= kmax; ++k)
        ok = ok && pt.pairingSymbol(i, j, k) == pt.pairingSymbolClosed(i, j, k);
  return report(ok, "pairing series vs closed form, n=" + std::to_string(n) +
                        ", k<=" + std::to_string(kmax));
}

bool verifyCharacters(int n) {
  Ring ring(n);
  bool ok = true;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = -2; j <= 2; ++j) {
      const int p = i + 2 * j;
      const TorusElement a = ring.fundamental(i, p);
      const TorusElement b = fundamentalQCharTableau(n, i, p);
      ok = ok && a == b;
      long dominant = 0;
      for (const auto& [m, c] : a.terms()) dominant += m.isDominant();
      ok = ok && dominant == 1;
    }
  return report(ok, "fundamental characters vs tableau oracle, n=" +
                        std::to_string(n));
}

bool verifyInflation(int n, int nn, int c, int cc, int pmin, int pmax,
                     int max_factors) {
  const HeightFunction xi = HeightFunction::increasing(n, c);
  const HeightFunction xit = HeightFunction::increasing(nn, cc);
  const std::vector<YMonomial> monomials =
      dominantMonomials(n, pmin, pmax, max_factors);
  bool all_ok = true;
  for (const IncreasingMap& nu : allIncreasingMaps(n, nn)) {
    Ring src(n), dst(nn);
    bool ok = true;
    for (const auto& [m, good] :
         inflationBatchParallel(src, dst, xi, xit, nu, monomials))
      ok = ok && good;
    // pairing preservation on the variable window
    std::vector<std::pair<int, int>> vars;
    for (int i = 1; i <= n - 1; ++i)
      for (int p = pmin; p <= pmax; ++p)
        if (((p - i) % 2 + 2) % 2 == 0) vars.emplace_back(i, p);
    for (const auto& [i, p] : vars)
      for (const auto& [j, s] : vars) {
        const auto a = psiVariable(xi, xit, nu, i, p);
        const auto b = psiVariable(xi, xit, nu, j, s);
        ok = ok && src.pairing().pairing(i, p, j, s) ==
                       dst.pairing().pairing(a.first, a.second, b.first,
                                             b.second);
      }
    all_ok = report(ok, "inflation " + std::to_string(n) + "->" +
                            std::to_string(nn) + ", nu=" + nu.str() + ", " +
                            std::to_string(monomials.size()) + " monomials") &&
             all_ok;
  }
  return all_ok;
}

bool verifyRelations(int n, int nn, int cc, int kmin, int kmax) {
  const HeightFunction xit = HeightFunction::increasing(nn, cc);
  Ring dst(nn);
  bool all_ok = true;
  for (const IncreasingMap& nu : allIncreasingMaps(n, nn)) {
    bool ok = true;
    for (int k = kmin; k <= kmax; ++k)
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
          const TorusElement ei = upsilonImage(dst, xit, nu, i, k);
          const TorusElement ej = upsilonImage(dst, xit, nu, j, k);
          ok = ok && holdsR1(dst, ei, ej, i, j);
          for (int kp = k + 1; kp <= kmax; ++kp)
            ok = ok && holdsR2(dst, ei, upsilonImage(dst, xit, nu, j, kp), n,
                               i, j, k, kp);
        }
    all_ok = report(ok, "relations " + std::to_string(n) + "->" +
                            std::to_string(nn) + ", nu=" + nu.str() +
                            ", levels " + std::to_string(kmin) + ".." +
                            std::to_string(kmax)) &&
             all_ok;
  }
  return all_ok;
}

bool verifyBritoChari(int n, int nn, const std::string& mstr, int pmin,
                      int pmax) {
  const HeightFunction xi = HeightFunction::increasing(n, 0);
  const HeightFunction xit = HeightFunction::increasing(nn, 0);
  const IncreasingMap nu = IncreasingMap::dilation(n, nn);
  const int d = nn / n;
  bool ok = true;
  for (int i = 1; i <= n - 1; ++i)
    for (int p = pmin; p <= pmax; ++p) {
      if (((p - i) % 2 + 2) % 2 != 0) continue;
      const auto [j, s] = psiVariable(xi, xit, nu, i, p);
      ok = ok && j == d * i && s == d * p;
    }
  ok = report(ok, "dilation psi identification " + std::to_string(n) + "->" +
                      std::to_string(nn));
  Ring src(n), dst(nn);
  const YMonomial m = parseMonomial(n, mstr);
  const TorusElement lhs =
      classicalDilationInflate(src, dst, src.canonical(m).evalAtOne());
  const TorusElement rhs =
      dst.canonical(psiDominant(xi, xit, nu, m)).evalAtOne();
  ok = report(lhs == rhs, "classical characters agree for m=" + m.str()) && ok;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic computation in quantum tori of type A"};
  app.require_subcommand(1);

  int n = 2, nn = 3, i = 1, p = 1, c = 0, cc = 0;
  int pmin = -3, pmax = 5, max_factors = 2, kmin = -1, kmax = 1;
  int pair_kmax = 30;
  std::string mstr = "1";
  std::string bc_m = "Y[1,1]Y[1,3]";
  std::vector<int> nuvals;
  bool json = false;

  CLI::App* fund = app.add_subcommand("fund", "fundamental q-character");
  fund->add_option("--n", n, "rank")->required();
  fund->add_option("--i", i, "color")->required();
  fund->add_option("--p", p, "spectral parameter")->required();
  fund->add_flag("--json", json, "machine-readable output");

  CLI::App* canon = app.add_subcommand("canon", "canonical basis element");
  canon->add_option("--n", n, "rank")->required();
  canon->add_option("--m", mstr, "dominant monomial, e.g. Y[1,1]Y[1,3]")
      ->required();
  canon->add_flag("--json", json, "machine-readable output");

  CLI::App* infl =
      app.add_subcommand("inflate", "quantum inflation of a canonical element");
  infl->add_option("--n", n, "source rank")->required();
  infl->add_option("--nn", nn, "target rank")->required();
  infl->add_option("--nu", nuvals, "values of nu, e.g. --nu 1,3")
      ->required()
      ->delimiter(',');
  infl->add_option("--c", c, "source height offset");
  infl->add_option("--cc", cc, "target height offset");
  infl->add_option("--m", mstr, "dominant monomial")->required();
  infl->add_flag("--json", json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  CLI::App* vpair = verify->add_subcommand(
      "pairing", "deformed Cartan series vs closed formula");
  vpair->add_option("--n", n, "rank");
  vpair->add_option("--kmax", pair_kmax, "largest separation");
  CLI::App* vchar = verify->add_subcommand(
      "characters", "fundamental characters vs tableau oracle");
  vchar->add_option("--n", n, "rank");
  CLI::App* vinfl = verify->add_subcommand(
      "inflation", "canonical basis preservation under inflation");
  vinfl->add_option("--n", n, "source rank");
  vinfl->add_option("--nn", nn, "target rank");
  vinfl->add_option("--c", c, "source height offset");
  vinfl->add_option("--cc", cc, "target height offset");
  vinfl->add_option("--pmin", pmin, "window lower bound");
  vinfl->add_option("--pmax", pmax, "window upper bound");
  vinfl->add_option("--max-factors", max_factors, "factors per monomial");
  CLI::App* vrel = verify->add_subcommand(
      "relations", "bosonic extension relations on root-vector images");
  vrel->add_option("--n", n, "source rank");
  vrel->add_option("--nn", nn, "target rank");
  vrel->add_option("--cc", cc, "target height offset");
  vrel->add_option("--kmin", kmin, "lowest level");
  vrel->add_option("--kmax", kmax, "highest level");
  CLI::App* vbc = verify->add_subcommand(
      "brito-chari", "dilation inflation at the classical limit");
  vbc->add_option("--n", n, "source rank");
  vbc->add_option("--nn", nn, "target rank (multiple of n)");
  vbc->add_option("--m", bc_m, "dominant monomial");
  vbc->add_option("--pmin", pmin, "window lower bound");
  vbc->add_option("--pmax", pmax, "window upper bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fund->parsed()) return runFund(n, i, p, json);
    if (canon->parsed()) return runCanon(n, mstr, json);
    if (infl->parsed()) return runInflate(n, nn, c, cc, nuvals, mstr, json);
    if (verify->parsed()) {
      bool ok = true;
      if (vpair->parsed()) ok = verifyPairing(n, pair_kmax);
      if (vchar->parsed()) ok = verifyCharacters(n);
      if (vinfl->parsed())
        ok = verifyInflation(n, nn, c, cc, pmin, pmax, max_factors);
      if (vrel->parsed()) ok = verifyRelations(n, nn, cc, kmin, kmax);
      if (vbc->parsed()) ok = verifyBritoChari(n, nn, bc_m, pmin, pmax);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
