// hforest: command-line front end for the hidden-forest library.
//
// Exit codes: 0 success, 1 not found, 2 usage error, 3 inconsistent
// congruence system.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hforest/arith.hpp"
#include "hforest/checkpoint.hpp"
#include "hforest/errors.hpp"
#include "hforest/forest.hpp"
#include "hforest/json_io.hpp"
#include "hforest/matrixlab.hpp"
#include "hforest/search.hpp"
#include "hforest/visibility.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;
constexpr int kInconsistent = 3;

hf::Natural parse_natural(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError("expected a non-negative decimal integer, got '" + s + "'");
  }
  return hf::Natural(s);
}

std::uint64_t parse_u64(const std::string& s) { return hf::to_u64(parse_natural(s)); }

// "LO:HI" with arbitrary 64-bit decimal bounds.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("expected LO:HI, got '" + s + "'");
  }
  auto lo = parse_u64(s.substr(0, colon));
  auto hi = parse_u64(s.substr(colon + 1));
  if (lo < 1 || lo > hi) throw CLI::ValidationError("need 1 <= LO <= HI in '" + s + "'");
  return {lo, hi};
}

// "A..B" inclusive run of consecutive integers.
std::vector<hf::Natural> parse_run(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_natural(s)};
  hf::Natural a = parse_natural(s.substr(0, dots));
  hf::Natural b = parse_natural(s.substr(dots + 2));
  if (b < a) throw CLI::ValidationError("descending run '" + s + "'");
  std::vector<hf::Natural> out;
  for (hf::Natural v = a; v <= b; ++v) out.push_back(v);
  return out;
}

hf::EntryMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hf::Error("cannot read matrix file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return hf::matrix_from_text(buf.str());
}

void print_forest(const hf::Forest& f, const std::string& format) {
  if (format == "text") {
    std::cout << f.dimension << "-D forest, side " << f.side << ", corner (";
    for (std::size_t i = 0; i < f.corner.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << hf::str(f.corner[i]);
    }
    std::cout << "), distance " << f.distance();
    if (f.modulus) std::cout << ", modulus " << hf::str(*f.modulus);
    std::cout << '\n';
  } else {
    std::cout << hf::forest_to_json(f) << '\n';
  }
}

struct Global {
  std::string format = "json";
  unsigned threads = 1;
  std::string checkpoint;
  std::uint64_t progress_interval = 0;

  hf::SearchOptions search_options(const std::string& campaign) const {
    hf::SearchOptions o;
    o.threads = threads;
    o.campaign_id = campaign;
    if (!checkpoint.empty()) o.checkpoint_path = checkpoint;
    o.progress_interval = progress_interval;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hidden-forest toolkit: construct, search for, and verify blocks of"
               " lattice points invisible from the origin"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--format", g.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for searches/counting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--checkpoint", g.checkpoint, "Checkpoint file for resumable searches");
  app.add_option("--progress-interval", g.progress_interval,
                 "Progress line to stderr every N windows/segments (0 = silent)");

  int rc = kOk;

  // visible X Y [Z...]
  std::vector<std::string> vis_coords;
  auto* c_visible = app.add_subcommand("visible", "Is a lattice point visible from the origin?");
  c_visible->add_option("coords", vis_coords, "Coordinates (2 or more)")->expected(2, -1);
  c_visible->callback([&] {
    std::vector<hf::Natural> p;
    for (const auto& s : vis_coords) p.push_back(parse_natural(s));
    std::cout << (hf::is_visible(p) ? "visible" : "invisible") << '\n';
  });

  // density --side N --dim D
  std::uint64_t den_side = 0;
  unsigned den_dim = 2;
  auto* c_density = app.add_subcommand(
      "density", "Exact count of visible points in the box [1,N]^d vs 1/zeta(d)");
  c_density->add_option("--side", den_side, "Box side N")->required();
  c_density->add_option("--dim", den_dim, "Dimension d >= 2")->capture_default_str();
  c_density->callback([&] {
    auto r = hf::count_visible_in_box(den_side, den_dim, g.threads);
    if (g.format == "text") {
      std::printf("%s of %s visible, ratio %.6f, 1/zeta(%u) = %.6f, error %.2e\n",
                  hf::str(r.visible_count).c_str(), hf::str(r.total_count).c_str(),
                  r.ratio(), r.dimension, r.reference, r.abs_error());
    } else {
      std::cout << hf::density_report_to_json(r) << '\n';
    }
  });

  // prime-matrix N
  std::size_t pm_n = 0;
  auto* c_pm = app.add_subcommand("prime-matrix", "The n x n matrix of the first n^2 primes");
  c_pm->add_option("n", pm_n, "Side length")->required()->check(CLI::PositiveNumber);
  c_pm->callback([&] { std::cout << hf::matrix_to_text(hf::prime_matrix(pm_n)); });

  // forest --matrix FILE | --prime N | --optimal N
  std::string forest_file;
  std::size_t forest_prime = 0, forest_optimal = 0;
  auto* c_forest = app.add_subcommand(
      "forest", "Place a hidden forest from a matrix via congruence solving");
  auto* fo1 = c_forest->add_option("--matrix", forest_file, "Matrix file (text format)");
  auto* fo2 = c_forest->add_option("--prime", forest_prime, "Use the n x n prime matrix");
  auto* fo3 = c_forest->add_option("--optimal", forest_optimal, "Use the optimal n x n gcd-matrix");
  fo1->excludes(fo2)->excludes(fo3);
  fo2->excludes(fo3);
  c_forest->callback([&] {
    hf::EntryMatrix m;
    if (!forest_file.empty()) {
      m = load_matrix(forest_file);
    } else if (forest_prime > 0) {
      m = hf::prime_matrix(forest_prime);
    } else if (forest_optimal > 0) {
      m = hf::optimal_gcd_matrix(forest_optimal).matrix;
    } else {
      throw CLI::ValidationError("forest needs one of --matrix, --prime, --optimal");
    }
    print_forest(hf::forest_from_matrix(hf::qp_from_matrix(m)), g.format);
  });

  // qp --matrix FILE
  std::string qp_file;
  auto* c_qp = app.add_subcommand("qp", "Reduce a matrix to quasiprime form");
  c_qp->add_option("--matrix", qp_file, "Matrix file (text format)")->required();
  c_qp->callback([&] { std::cout << hf::matrix_to_text(hf::qp_from_matrix(load_matrix(qp_file)).mat); });

  // verify --corner X,Y[,Z...] --side N
  std::string verify_corner;
  std::size_t verify_side = 0;
  auto* c_verify = app.add_subcommand("verify", "Check that a block is fully hidden");
  c_verify->add_option("--corner", verify_corner, "Comma-separated corner coordinates")->required();
  c_verify->add_option("--side", verify_side, "Side length")->required()->check(CLI::PositiveNumber);
  c_verify->callback([&] {
    std::vector<hf::Natural> corner;
    std::stringstream ss(verify_corner);
    std::string tok;
    while (std::getline(ss, tok, ',')) corner.push_back(parse_natural(tok));
    if (corner.empty()) throw CLI::ValidationError("empty --corner");
    if (hf::verify_hidden(corner, verify_side)) {
      std::cout << "hidden\n";
    } else {
      std::cout << "not hidden\n";
      rc = kNotFound;
    }
  });

  // closest --side N --region LO:HI [--half-quadrant]
  std::size_t cl_side = 0;
  std::string cl_region;
  bool cl_half = false;
  auto* c_closest = app.add_subcommand(
      "closest", "Exhaustive scan for the hidden n x n block with the closest corner");
  c_closest->add_option("--side", cl_side, "Block side n")->required()->check(CLI::PositiveNumber);
  c_closest->add_option("--region", cl_region, "Corner search square LO:HI (both axes)")->required();
  c_closest->add_flag("--half-quadrant", cl_half, "Only corners with x < y");
  c_closest->callback([&] {
    auto [lo, hi] = parse_range(cl_region);
    hf::ScanRegion region{lo, hi, lo, hi, cl_half};
    auto best = hf::scan_closest_forest(cl_side, region, g.search_options("closest"));
    if (!best) {
      std::cout << "no hidden block in region\n";
      rc = kNotFound;
      return;
    }
    print_forest(*best, g.format);
  });

  // strong-run --len N --min-factors K [--start S] [--limit L]
  unsigned sr_len = 0, sr_k = 0;
  std::string sr_start = "2", sr_limit = "1000000000";
  auto* c_strong = app.add_subcommand(
      "strong-run", "Smallest run of n consecutive integers with >= k distinct prime factors each");
  c_strong->add_option("--len", sr_len, "Run length n")->required()->check(CLI::PositiveNumber);
  c_strong->add_option("--min-factors", sr_k, "Distinct prime factors k")->required()->check(CLI::PositiveNumber);
  c_strong->add_option("--start", sr_start, "Search from this value")->capture_default_str();
  c_strong->add_option("--limit", sr_limit, "Give up past this value")->capture_default_str();
  c_strong->callback([&] {
    auto m = hf::strongly_composite_run(sr_len, sr_k, parse_u64(sr_start), parse_u64(sr_limit),
                                        g.search_options("strong-run"));
    if (!m) {
      std::cout << "none up to " << sr_limit << '\n';
      rc = kNotFound;
      return;
    }
    std::cout << hf::str(*m) << '\n';
  });

  // companion --xs A..B --len N [--start S] [--limit L]
  std::string co_xs, co_start = "2", co_limit = "1000000000";
  unsigned co_len = 0;
  auto* c_comp = app.add_subcommand(
      "companion", "Smallest y-run whose members all share a factor with every given x");
  c_comp->add_option("--xs", co_xs, "x-run A..B (or a single value)")->required();
  c_comp->add_option("--len", co_len, "y-run length n")->required()->check(CLI::PositiveNumber);
  c_comp->add_option("--start", co_start, "Search from this value")->capture_default_str();
  c_comp->add_option("--limit", co_limit, "Give up past this value")->capture_default_str();
  c_comp->callback([&] {
    auto y = hf::companion_block_search(parse_run(co_xs), co_len, parse_u64(co_start),
                                        parse_u64(co_limit), g.search_options("companion"));
    if (!y) {
      std::cout << "none up to " << co_limit << '\n';
      rc = kNotFound;
      return;
    }
    std::cout << hf::str(*y) << '\n';
  });

  // enumerate5x5
  auto* c_enum = app.add_subcommand(
      "enumerate5x5",
      "Enumerate every quasiprime instantiation of the 5x5 pattern built from the first"
      " run of 5 consecutive integers with 5 distinct prime factors each");
  c_enum->callback([&] {
    // First 5-run of 5-strongly-composite integers; the pattern's candidate
    // sets are recomputed from their factorizations and asserted against the
    // known sets to guard transcription drift.
    std::vector<hf::Natural> xs;
    for (unsigned long v = 129963314; v <= 129963318; ++v) xs.emplace_back(v);
    auto pattern = hf::make_five_run_pattern(xs);
    const std::vector<std::vector<unsigned long>> expected = {
        {13, 37, 53, 2549}, {5, 31, 269, 1039}, {7, 97, 109, 439},
        {11, 17, 23, 41, 67}, {89, 199, 1223}};
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<hf::Natural> want(expected[i].begin(), expected[i].end());
      if (pattern.groups[i].candidates != want) {
        throw hf::Error("candidate set drift in group " + pattern.groups[i].name);
      }
    }
    auto res = hf::enumerate_qp_campaign(pattern, nullptr, g.search_options("enumerate5x5"));
    std::cout << "instantiations: " << hf::str(res.count) << '\n';
    std::cout << "x-corner solutions:";
    for (const auto& x : res.x_solutions) std::cout << ' ' << hf::str(x);
    std::cout << '\n' << "minimal y-corner forest:\n";
    print_forest(res.min_y_forest, g.format);
    std::cout << "achieved by:\n" << hf::matrix_to_text(res.argmin_matrix.mat);
  });

  // hypercube --dim D
  unsigned hc_dim = 3;
  auto* c_hyper = app.add_subcommand(
      "hypercube", "2^d-point hidden block from primes on the corners of a d-cube");
  c_hyper->add_option("--dim", hc_dim, "Dimension d")->capture_default_str();
  c_hyper->callback([&] { print_forest(hf::hypercube_forest(hf::canonical_cube(hc_dim)), g.format); });

  // ggcd B R S
  std::string gg_b, gg_r, gg_s;
  auto* c_ggcd = app.add_subcommand("ggcd", "Generalized gcd: max k with k | r and k^b | s");
  c_ggcd->add_option("b", gg_b, "Exponent b >= 1")->required();
  c_ggcd->add_option("r", gg_r, "First argument")->required();
  c_ggcd->add_option("s", gg_s, "Second argument")->required();
  c_ggcd->callback([&] {
    auto b = static_cast<unsigned>(parse_u64(gg_b));
    std::cout << hf::str(hf::ggcd(b, parse_natural(gg_r), parse_natural(gg_s))) << '\n';
  });

  // stride --den B --exp N
  std::string st_den;
  unsigned st_exp = 1;
  auto* c_stride = app.add_subcommand(
      "stride", "x-stride of lattice points on the curve (a/b) x^n, with gcd(a, rad(b)) = 1");
  c_stride->add_option("--den", st_den, "Denominator b")->required();
  c_stride->add_option("--exp", st_exp, "Exponent n")->capture_default_str();
  c_stride->callback([&] {
    std::cout << hf::str(hf::curve_visible_stride(hf::factorize(parse_natural(st_den)), st_exp))
              << '\n';
  });

  // plot-data --side N --dim 2
  std::uint64_t pd_side = 0;
  unsigned pd_dim = 2;
  auto* c_plot = app.add_subcommand("plot-data", "TSV visibility raster: x<TAB>y<TAB>0|1");
  c_plot->add_option("--side", pd_side, "Box side N")->required()->check(CLI::PositiveNumber);
  c_plot->add_option("--dim", pd_dim, "Dimension (2 only)")->capture_default_str();
  c_plot->callback([&] {
    if (pd_dim != 2) throw CLI::ValidationError("plot-data supports --dim 2 only");
    for (std::uint64_t x = 1; x <= pd_side; ++x) {
      for (std::uint64_t y = 1; y <= pd_side; ++y) {
        std::uint64_t a = x, b = y;
        while (b) {
          std::uint64_t t = a % b;
          a = b;
          b = t;
        }
        std::printf("%llu\t%llu\t%d\n", static_cast<unsigned long long>(x),
                    static_cast<unsigned long long>(y), a == 1 ? 1 : 0);
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? kOk : kUsage;
  } catch (const hf::InconsistentSystem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return rc;
}
