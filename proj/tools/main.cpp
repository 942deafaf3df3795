#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringcover/census.hpp"
#include "ringcover/covering.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/families.hpp"
#include "ringcover/io.hpp"
#include "ringcover/iso.hpp"
#include "ringcover/lattice.hpp"
#include "ringcover/quotient.hpp"
#include "ringcover/ring.hpp"

using namespace ringcover;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + out_path + "'");
  out << text;
}

FiniteRing load_ring(const std::string& path, std::size_t max_order) {
  return validate_presentation(parse_presentation(slurp(path), max_order), max_order);
}

std::vector<elem_t> parse_elements(const std::string& csv, std::size_t n) {
  std::vector<elem_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("element index '" + tok + "' is not a number");
    }
    if (pos != tok.size()) throw ParseError("element index '" + tok + "' is not a number");
    if (v >= n)
      throw ParseError("element index " + tok + " out of range for a ring of order " +
                       std::to_string(n));
    out.push_back(static_cast<elem_t>(v));
  }
  return out;
}

std::vector<std::uint32_t> parse_orders(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("shape entry '" + tok + "' is not a number");
    }
    if (pos != tok.size()) throw ParseError("shape entry '" + tok + "' is not a number");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

struct Checks {
  std::ostringstream report;
  int failures = 0;

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    report << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) report << " (" << detail << ")";
    report << "\n";
    if (!ok) ++failures;
  }
};

std::string profile_text(const CoveringProfile& p) {
  return "(" + to_string(p.sigma_add) + "," + to_string(p.sigma) + "," + to_string(p.eta_left) +
         "," + to_string(p.eta_right) + "," + to_string(p.eta) + ")";
}

void verify_families(Checks& v) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const ExtNat fin(p + 1), inf = ExtNat::inf();
    const std::string sp = " p=" + std::to_string(p);
    const CoveringProfile want[4] = {
        {fin, fin, fin, fin, fin},
        {fin, fin, fin, inf, inf},
        {fin, fin, inf, fin, inf},
        {fin, fin, fin, fin, inf},
    };
    const Family fams[4] = {Family::R1, Family::R2, Family::R3, Family::R4};
    for (int i = 0; i < 4; ++i) {
      const CoveringProfile got = profile(build_family(fams[i], p));
      v.check(got == want[i], to_string(fams[i]) + " profile" + sp,
              "got " + profile_text(got) + " want " + profile_text(want[i]));
    }
  }
}

void verify_matrix_rings(Checks& v) {
  const auto px = profile(build_named(NamedRing::X));
  v.check(px.eta == ExtNat(3) && px.eta_left == ExtNat(3) && px.eta_right == ExtNat(3),
          "X all ideal values 3", profile_text(px));
  const auto py = profile(build_named(NamedRing::Y));
  v.check(py.eta_left == ExtNat(3) && py.eta_right.is_inf() && py.eta.is_inf(),
          "Y left 3, right and two-sided inf", profile_text(py));
  const auto pz = profile(build_named(NamedRing::Z));
  v.check(pz.eta_right == ExtNat(3) && pz.eta_left.is_inf() && pz.eta.is_inf(),
          "Z right 3, left and two-sided inf", profile_text(pz));
  for (NamedRing nr : {NamedRing::V, NamedRing::W}) {
    const FiniteRing r = build_named(nr);
    const auto pr = profile(r);
    v.check(r.identity().has_value(), to_string(nr) + " has an identity");
    v.check(pr.eta_left.is_inf() && pr.eta_right.is_inf() && pr.eta.is_inf(),
            to_string(nr) + " ideal values all inf", profile_text(pr));
  }
  v.check(is_isomorphic(build_named(NamedRing::Y), build_family(Family::R2, 2)).has_value(),
          "Y isomorphic to R2 at p=2");
  v.check(is_isomorphic(build_named(NamedRing::Z), build_family(Family::R3, 2)).has_value(),
          "Z isomorphic to R3 at p=2");
}

void verify_tables(Checks& v, std::size_t order, std::size_t workers) {
  struct Want {
    ExtNat sigma, eta_left, eta_right, eta;
    std::size_t count;
  };
  const ExtNat inf = ExtNat::inf();
  std::vector<Want> want;
  if (order == 4)
    want = {{ExtNat(3), ExtNat(3), ExtNat(3), ExtNat(3), 1},
            {ExtNat(3), ExtNat(3), inf, inf, 1},
            {ExtNat(3), inf, ExtNat(3), inf, 1},
            {ExtNat(3), inf, inf, inf, 1}};
  else if (order == 9)
    want = {{ExtNat(4), ExtNat(4), ExtNat(4), ExtNat(4), 1},
            {ExtNat(4), ExtNat(4), inf, inf, 1},
            {ExtNat(4), inf, ExtNat(4), inf, 1}};
  else if (order == 8)
    want = {{ExtNat(3), ExtNat(3), ExtNat(3), ExtNat(3), 17},
            {ExtNat(3), ExtNat(3), ExtNat(3), inf, 1},
            {ExtNat(3), ExtNat(3), inf, inf, 5},
            {ExtNat(3), inf, ExtNat(3), inf, 5},
            {ExtNat(3), inf, inf, inf, 6}};
  else {
    v.check(false, "census table order " + std::to_string(order),
            "expected values known for orders 4, 8, 9 only");
    return;
  }

  const CensusResult result = census_order(order, workers);
  const std::vector<ProfileRow> rows = profile_table(result);
  bool match = rows.size() == want.size();
  for (std::size_t i = 0; match && i < rows.size(); ++i)
    match = rows[i].sigma == want[i].sigma && rows[i].eta_left == want[i].eta_left &&
            rows[i].eta_right == want[i].eta_right && rows[i].eta == want[i].eta &&
            rows[i].count == want[i].count;
  std::string got;
  for (const auto& row : rows)
    got += "(" + to_string(row.sigma) + "," + to_string(row.eta_left) + "," +
           to_string(row.eta_right) + "," + to_string(row.eta) + ")x" +
           std::to_string(row.count) + " ";
  v.check(match, "order " + std::to_string(order) + " coverable profile rows", "got " + got);
  if (order == 8)
    v.check(result.classes.size() >= 50, "order 8 total class count >= 50",
            "got " + std::to_string(result.classes.size()));
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"finite-ring covering-number toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t workers = 1;
  std::string out_path;
  app.add_option("--format", format_name, "output format: json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--max-order", max_order, "element-count limit for ring construction");
  app.add_option("--workers", workers, "worker threads for census enumeration");
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  int exit_code = 0;

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "covering profile of a presented ring");
  std::string profile_file;
  bool no_witness = false;
  profile_cmd->add_option("file", profile_file, "presentation JSON file")->required();
  profile_cmd->add_flag("--no-witness", no_witness, "omit witness covers from the report");
  profile_cmd->callback([&] {
    const FiniteRing ring = load_ring(profile_file, max_order);
    const ProfileResult res = profile_with_witnesses(ring);
    emit(render_profile(ring, res, format_from_string(format_name), !no_witness), out_path);
  });

  // family
  auto* family_cmd =
      app.add_subcommand("family", "covering profile of a built-in ring family member");
  std::string family_name;
  std::uint32_t family_p = 0;
  family_cmd->add_option("name", family_name, "R1, R2, R3, R4, X, Y, Z, V, W, M2Z2, M2Z4")
      ->required();
  family_cmd->add_option("--p", family_p, "prime parameter for R1..R4");
  family_cmd->callback([&] {
    FiniteRing ring = [&] {
      if (family_name.size() == 2 && family_name[0] == 'R' && family_name[1] >= '1' &&
          family_name[1] <= '4') {
        if (family_p == 0) throw ParseError("family " + family_name + " requires --p");
        return build_family(family_from_string(family_name), family_p, max_order);
      }
      if (family_p != 0)
        throw ParseError("--p applies only to the parametric families R1..R4");
      return build_named(named_ring_from_string(family_name));
    }();
    const ProfileResult res = profile_with_witnesses(ring);
    emit(render_profile(ring, res, format_from_string(format_name), !no_witness), out_path);
  });

  // census
  auto* census_cmd = app.add_subcommand("census", "classify all rings of an order or shape");
  std::size_t census_order_arg = 0;
  std::string census_shape;
  std::string census_mode = "pruned";
  census_cmd->add_option("--order", census_order_arg, "census every shape of this order (<= 9)");
  census_cmd->add_option("--shape", census_shape, "census one shape, e.g. 2,2,2");
  census_cmd->add_option("--mode", census_mode, "enumeration mode: pruned or full")
      ->check(CLI::IsMember({"pruned", "full"}));
  census_cmd->callback([&] {
    const EnumerationMode mode =
        census_mode == "full" ? EnumerationMode::FullScan : EnumerationMode::Pruned;
    if ((census_order_arg == 0) == census_shape.empty())
      throw ParseError("census requires exactly one of --order or --shape");
    CensusResult result;
    if (census_order_arg != 0) {
      if (census_order_arg > 9) {
        long double space = 0.0L;
        for (const auto& shape : shapes_of_order(census_order_arg))
          space += census_space(shape);
        std::ostringstream estimate;
        estimate << std::setprecision(4) << static_cast<double>(space);
        throw SpaceTooLargeError(space, "census order " + std::to_string(census_order_arg) +
                                            " exceeds the cap of 9 (raw candidate space ~" +
                                            estimate.str() + ")");
      }
      result = census_order(census_order_arg, workers, mode);
    } else {
      AbelianGroupShape shape(parse_orders(census_shape), max_order);
      result = census(CensusSpec{shape, workers, mode, false});
    }
    emit(render_census(result, format_from_string(format_name)), out_path);
  });

  // quotient
  auto* quotient_cmd =
      app.add_subcommand("quotient", "factor ring by the two-sided ideal generated by elements");
  std::string quotient_file, quotient_seed;
  quotient_cmd->add_option("file", quotient_file, "presentation JSON file")->required();
  quotient_cmd->add_option("--ideal", quotient_seed, "generating elements, e.g. 1,3")->required();
  quotient_cmd->callback([&] {
    const FiniteRing ring = load_ring(quotient_file, max_order);
    const SubsetMask ideal = generated_member(ring, parse_elements(quotient_seed, ring.size()),
                                              MemberClass::TwoSidedIdeal);
    const FactorRing q = factor_ring(ring, ideal);
    emit(render_presentation(q.ring.presentation(), format_from_string(format_name)), out_path);
  });

  // product
  auto* product_cmd = app.add_subcommand("product", "direct product of two presented rings");
  std::string product_file_a, product_file_b;
  product_cmd->add_option("left", product_file_a, "presentation JSON file")->required();
  product_cmd->add_option("right", product_file_b, "presentation JSON file")->required();
  product_cmd->callback([&] {
    const FiniteRing a = load_ring(product_file_a, max_order);
    const FiniteRing b = load_ring(product_file_b, max_order);
    const FiniteRing prod = direct_product(a, b, max_order);
    emit(render_presentation(prod.presentation(), format_from_string(format_name)), out_path);
  });

  // isomorphic
  auto* iso_cmd = app.add_subcommand("isomorphic", "ring isomorphism test with witness");
  std::string iso_file_a, iso_file_b;
  iso_cmd->add_option("left", iso_file_a, "presentation JSON file")->required();
  iso_cmd->add_option("right", iso_file_b, "presentation JSON file")->required();
  iso_cmd->callback([&] {
    const FiniteRing a = load_ring(iso_file_a, max_order);
    const FiniteRing b = load_ring(iso_file_b, max_order);
    emit(render_iso(is_isomorphic(a, b), format_from_string(format_name)), out_path);
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in result checks");
  std::string suite = "all";
  std::size_t verify_order = 0;
  verify_cmd->add_option("suite", suite, "all, theorem, corollary, or tables")
      ->check(CLI::IsMember({"all", "theorem", "corollary", "tables"}));
  verify_cmd->add_option("--order", verify_order, "restrict the tables suite to one order");
  verify_cmd->callback([&] {
    Checks v;
    if (suite == "all" || suite == "theorem") verify_families(v);
    if (suite == "all" || suite == "corollary") verify_matrix_rings(v);
    if (suite == "all" || suite == "tables") {
      if (verify_order != 0)
        verify_tables(v, verify_order, workers);
      else
        for (std::size_t ord : {4, 9, 8}) verify_tables(v, ord, workers);
    }
    emit(v.report.str(), out_path);
    if (v.failures > 0) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return exit_code;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IllDefinedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NonAssociativeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotAnIdealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotASubgroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SpaceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RingError& e) {  // ParseError, NotPrimeError, other input faults
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
