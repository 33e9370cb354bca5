// Command line front end. Thin orchestration only: every computation
// lives in the library, this file parses flags, resolves inputs and
// prints results. Exit codes: 0 success, 1 domain or usage error,
// 2 enumeration budget exhausted.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldikit/bounds.hpp"
#include "ldikit/catalog.hpp"
#include "ldikit/codefile.hpp"
#include "ldikit/cv.hpp"
#include "ldikit/distance.hpp"
#include "ldikit/errors.hpp"
#include "ldikit/ldi.hpp"
#include "ldikit/linalg.hpp"
#include "ldikit/pauli.hpp"
#include "ldikit/statecheck.hpp"

namespace {

using ldikit::GeneratorMatrix;
using ldikit::Int;

/* A positional names either a file on disk or a catalog entry. */
GeneratorMatrix resolve_input(const std::string &spec) {
  std::error_code ec;
  if (std::filesystem::exists(spec, ec)) return ldikit::load_code_file(spec);
  return ldikit::catalog_lookup(spec).matrix;
}

/* Label for result rows: the basename without its .qec suffix. */
std::string input_label(const std::string &spec) {
  const auto slash = spec.find_last_of('/');
  std::string base =
      slash == std::string::npos ? spec : spec.substr(slash + 1);
  if (base.size() > 4 && base.compare(base.size() - 4, 4, ".qec") == 0)
    base.resize(base.size() - 4);
  return base;
}

Int pick_dimension(const GeneratorMatrix &m, long flag) {
  if (flag > 0) return Int(flag);
  if (m.dim.kind == ldikit::DimKind::Prime ||
      m.dim.kind == ldikit::DimKind::Modulo)
    return m.dim.modulus;
  throw std::invalid_argument(
      "the input carries no local dimension, pass --q");
}

const char *verdict_name(ldikit::ErrorClass c) {
  switch (c) {
    case ldikit::ErrorClass::Detectable: return "detectable";
    case ldikit::ErrorClass::InGroup: return "in_group";
    case ldikit::ErrorClass::Unavoidable: return "unavoidable";
    case ldikit::ErrorClass::Artifact: return "artifact";
  }
  return "detectable";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact tools for local dimension invariant stabilizer codes"};
  app.require_subcommand(1);

  int threads = 0; /* accepted for interface stability, single threaded */
  app.add_option("--threads", threads, "worker count hint");

  std::string canon_file;
  long canon_q = 0;
  auto *canon = app.add_subcommand(
      "canon", "row reduce over a prime field and print the result");
  canon->fallthrough();
  canon->add_option("--q", canon_q, "prime local dimension");
  canon->add_option("file", canon_file, "code file or catalog name")
      ->required();
  canon->callback([&] {
    const GeneratorMatrix m = resolve_input(canon_file);
    const auto c = ldikit::canonical_form(m, pick_dimension(m, canon_q));
    std::cout << ldikit::render_code_file(c.matrix);
  });

  std::string ldi_file, ldi_variant = "lower";
  long ldi_q = 0;
  auto *ldi = app.add_subcommand(
      "ldi", "rebuild the generators so all products vanish over Z");
  ldi->fallthrough();
  ldi->add_option("--q", ldi_q, "prime local dimension of the input");
  ldi->add_option("--variant", ldi_variant, "construction: lower or css")
      ->check(CLI::IsMember({"lower", "css"}));
  ldi->add_option("file", ldi_file, "code file or catalog name")->required();
  ldi->callback([&] {
    const GeneratorMatrix m = resolve_input(ldi_file);
    const auto variant = ldi_variant == "css"
                             ? ldikit::LdiVariant::Css
                             : ldikit::LdiVariant::LowerTriangular;
    const GeneratorMatrix out =
        ldikit::make_ldi(m, pick_dimension(m, ldi_q), variant);
    std::cout << ldikit::render_code_file(out);
  });

  std::string verify_file;
  auto *verify = app.add_subcommand(
      "verify", "check that all pairwise products vanish over Z");
  verify->fallthrough();
  verify->add_option("file", verify_file, "code file or catalog name")
      ->required();
  verify->callback([&] {
    const auto report = ldikit::verify_ldi(resolve_input(verify_file));
    if (report.is_ldi) {
      std::cout << "is_ldi=true B=" << report.B.get_str() << "\n";
    } else {
      std::cout << "is_ldi=false violations=" << report.violations.size()
                << " B=" << report.B.get_str() << "\n";
    }
  });

  std::string dist_file;
  std::vector<long> dist_ps;
  int dist_w = 0;
  uint64_t dist_budget = ldikit::kDefaultBudget;
  bool dist_csv = false;
  auto *dist = app.add_subcommand(
      "distance", "brute force code distance at chosen local dimensions");
  dist->fallthrough();
  dist->add_option("--p", dist_ps, "local dimension, repeatable")->required();
  dist->add_option("--w", dist_w, "largest weight to search")->required();
  dist->add_option("--budget", dist_budget, "candidate enumeration cap");
  dist->add_flag("--csv", dist_csv, "machine readable output");
  dist->add_option("file", dist_file, "code file or catalog name")
      ->required();
  dist->callback([&] {
    const GeneratorMatrix m = resolve_input(dist_file);
    const std::string label = input_label(dist_file);
    if (dist_csv) std::cout << "code,p,w_max,d,witness\n";
    for (long p : dist_ps) {
      const auto res = ldikit::distance_mod(m, Int(p), dist_w, dist_budget);
      const std::string d = res.d ? Int(*res.d).get_str() : "";
      const std::string wit =
          res.witness ? ldikit::phi_decode(*res.witness) : "";
      if (dist_csv) {
        std::cout << label << "," << p << "," << dist_w << "," << d << ","
                  << wit << "\n";
      } else if (res.d) {
        std::cout << "p=" << p << " d=" << d << " witness=" << wit << "\n";
      } else {
        std::cout << "p=" << p << " d=none searched_weight="
                  << res.searched_weight << "\n";
      }
    }
  });

  std::string dstar_file;
  int dstar_w = 0;
  uint64_t dstar_budget = ldikit::kDefaultBudget;
  auto *dstar = app.add_subcommand(
      "dstar", "least weight of an error invisible at every local dimension");
  dstar->fallthrough();
  dstar->add_option("--w", dstar_w, "largest weight to search")->required();
  dstar->add_option("--budget", dstar_budget, "support enumeration cap");
  dstar->add_option("file", dstar_file, "code file or catalog name")
      ->required();
  dstar->callback([&] {
    const auto res =
        ldikit::d_star(resolve_input(dstar_file), dstar_w, dstar_budget);
    if (res.d) {
      std::cout << "d=" << *res.d
                << " witness=" << ldikit::phi_decode(*res.witness) << "\n";
    } else {
      std::cout << "d=none searched_weight=" << res.searched_weight << "\n";
    }
  });

  std::string cls_file, cls_error;
  long cls_p = 0;
  auto *cls = app.add_subcommand(
      "classify", "sort an error into detectable, in_group, unavoidable or "
                  "artifact");
  cls->fallthrough();
  cls->add_option("--p", cls_p, "local dimension")->required();
  cls->add_option("--error", cls_error, "error as a Pauli string")
      ->required();
  cls->add_option("file", cls_file, "code file or catalog name")->required();
  cls->callback([&] {
    const GeneratorMatrix m = resolve_input(cls_file);
    const auto verdict =
        ldikit::classify_error(m, ldikit::phi_encode(cls_error, m.n),
                               Int(cls_p));
    std::cout << "class=" << verdict_name(verdict.tag) << " syndrome=";
    for (size_t i = 0; i < verdict.witness_syndrome.values.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << verdict.witness_syndrome.values[i].get_str();
    }
    std::cout << "\n";
  });

  std::string log_file;
  long log_p = 0;
  auto *logicals = app.add_subcommand(
      "logicals", "conjugate pairs spanning the commutant quotient mod p");
  logicals->fallthrough();
  logicals->add_option("--p", log_p, "prime local dimension")->required();
  logicals->add_option("file", log_file, "code file or catalog name")
      ->required();
  logicals->callback([&] {
    const auto ops =
        ldikit::logical_operators(resolve_input(log_file), Int(log_p));
    for (const auto &op : ops) std::cout << ldikit::phi_decode(op) << "\n";
  });

  long bounds_b = 0, bounds_q = 0;
  int bounds_d = 0;
  bool bounds_css = false;
  auto *bounds = app.add_subcommand(
      "bounds", "local dimension cutoffs above which artifacts cannot hide");
  bounds->fallthrough();
  bounds->add_option("--B", bounds_b, "largest entry magnitude")->required();
  bounds->add_option("--q", bounds_q, "local dimension of the source code")
      ->required();
  bounds->add_option("--d", bounds_d, "distance to protect")->required();
  bounds->add_flag("--css", bounds_css, "also apply the css cutoff");
  bounds->callback([&] {
    const Int hadamard = ldikit::pstar_hadamard(Int(bounds_b), bounds_d);
    const Int alternative =
        ldikit::pstar_alternative(Int(bounds_b), Int(bounds_q), bounds_d);
    Int best = hadamard < alternative ? hadamard : alternative;
    std::cout << "hadamard=" << hadamard.get_str()
              << " alternative=" << alternative.get_str();
    if (bounds_css) {
      const Int css = ldikit::pstar_css(Int(bounds_b), bounds_d);
      if (css < best) best = css;
      std::cout << " css=" << css.get_str();
    }
    std::cout << " best=" << best.get_str()
              << " rotor_ok=" << (best <= 6 ? "true" : "false") << "\n";
  });

  std::string null_file;
  auto *nulls = app.add_subcommand(
      "nullifiers", "render the generators as analog quadrature sums");
  nulls->fallthrough();
  nulls->add_option("file", null_file, "code file or catalog name")
      ->required();
  nulls->callback([&] {
    for (const auto &n : ldikit::to_nullifiers(resolve_input(null_file)))
      std::cout << n.rendered << "\n";
  });

  std::string dps_file;
  int dps_box = 0, dps_w = 0;
  uint64_t dps_budget = ldikit::kDefaultBudget;
  auto *dps = app.add_subcommand(
      "dps", "shortest phase space displacement with zero integer syndrome");
  dps->fallthrough();
  dps->add_option("--box", dps_box, "largest entry magnitude to try")
      ->required();
  dps->add_option("--w", dps_w, "largest weight to search")->required();
  dps->add_option("--budget", dps_budget, "candidate enumeration cap");
  dps->add_option("file", dps_file, "code file or catalog name")->required();
  dps->callback([&] {
    const auto res = ldikit::phase_space_distance(resolve_input(dps_file),
                                                  dps_box, dps_w, dps_budget);
    std::cout << "d_ps=" << res.d_ps << " norm_sq=" << res.norm_sq.get_str()
              << " witness=" << ldikit::phi_decode(res.witness) << "\n";
  });

  std::string cat_name;
  auto *cat = app.add_subcommand(
      "catalog", "list the built in codes, or print one as a code file");
  cat->fallthrough();
  cat->add_option("name", cat_name, "catalog entry to print");
  cat->callback([&] {
    if (cat_name.empty()) {
      for (const auto &name : ldikit::catalog_names())
        std::cout << name << "\n";
      return;
    }
    const auto entry = ldikit::catalog_lookup(cat_name);
    std::istringstream notes(entry.notes);
    for (std::string line; std::getline(notes, line);)
      std::cout << "# " << line << "\n";
    std::cout << ldikit::render_code_file(entry.matrix);
  });

  std::string rank_file;
  std::vector<long> rank_ms;
  auto *rank = app.add_subcommand(
      "rank", "generator matrix rank over chosen moduli");
  rank->fallthrough();
  rank->add_option("--m", rank_ms, "modulus, repeatable")->required();
  rank->add_option("file", rank_file, "code file or catalog name")
      ->required();
  rank->callback([&] {
    const GeneratorMatrix m = resolve_input(rank_file);
    for (long modulus : rank_ms)
      std::cout << "m=" << modulus
                << " rank=" << ldikit::rank_mod(m, Int(modulus)) << "\n";
  });

  std::string stab_file;
  long stab_q = 0;
  auto *stab = app.add_subcommand(
      "stabilize", "build the joint fixed state of the generators");
  stab->fallthrough();
  stab->add_option("--q", stab_q, "local dimension")->required();
  stab->add_option("file", stab_file, "code file or catalog name")
      ->required();
  stab->callback([&] {
    const GeneratorMatrix m = resolve_input(stab_file);
    const auto state = ldikit::stabilized_state(m, stab_q);
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
      const auto amp = state.amplitudes[i];
      if (std::abs(amp) < 1e-12) continue;
      std::cout << "amp[" << i << "]=" << amp.real();
      if (amp.imag() != 0.0)
        std::cout << (amp.imag() > 0 ? "+" : "") << amp.imag() << "i";
      std::cout << "\n";
    }
    bool all = true;
    for (const auto &row : m.rows)
      if (!ldikit::stabilizes(state, row)) all = false;
    std::cout << "rows_stabilize=" << (all ? "true" : "false") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const ldikit::BudgetExceeded &e) {
    std::cerr << "budget exceeded: needs " << e.required << ", cap "
              << e.budget << "\n";
    return 2;
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
