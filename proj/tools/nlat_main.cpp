#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nlat/classify.hpp"
#include "nlat/degtyarev.hpp"
#include "nlat/isometry.hpp"
#include "nlat/lattice.hpp"
#include "nlat/scenario.hpp"
#include "nlat/suite.hpp"

namespace {

// "1,0,-1;0,2,0" -> two classes. Digits (with an optional leading '-') only.
std::vector<std::vector<nlat::Int>> parse_classes(const std::string& text) {
  std::vector<std::vector<nlat::Int>> classes;
  std::stringstream outer(text);
  std::string chunk;
  while (std::getline(outer, chunk, ';')) {
    std::vector<nlat::Int> v;
    std::stringstream inner(chunk);
    std::string coord;
    while (std::getline(inner, coord, ',')) {
      std::string digits;
      for (char ch : coord)
        if (!std::isspace(static_cast<unsigned char>(ch))) digits += ch;
      bool ok = !digits.empty();
      for (std::size_t i = 0; i < digits.size(); ++i) {
        bool sign = i == 0 && digits[i] == '-' && digits.size() > 1;
        if (!sign && !std::isdigit(static_cast<unsigned char>(digits[i]))) ok = false;
      }
      if (!ok)
        throw std::invalid_argument("--twist: bad coordinate '" + coord + "'");
      v.push_back(nlat::Int(digits));
    }
    if (v.empty()) throw std::invalid_argument("--twist: empty class");
    classes.push_back(std::move(v));
  }
  if (classes.empty())
    throw std::invalid_argument("--twist: needs at least one class");
  return classes;
}

int cmd_lattice_info(const std::string& expr) {
  nlat::FormExpr form = nlat::parse_form(expr);
  nlat::Lattice l = nlat::standard_lattice(form);
  std::cout << "form: " << form.str() << "\n";
  std::cout << "invariants: " << nlat::to_string(nlat::invariants(l)) << "\n";
  nlat::DiscriminantGroup d = nlat::discriminant_group(l);
  std::cout << "discriminant group: ";
  if (d.invariant_factors.empty()) {
    std::cout << "trivial";
  } else {
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
      if (i) std::cout << " x ";
      std::cout << "Z/" << d.invariant_factors[i].str();
    }
    std::cout << " (order " << d.order().str() << ")";
  }
  std::cout << "\n";
  return 0;
}

int cmd_classify(long long rank, long long sig, const std::string& parity) {
  nlat::ClassDescriptor d = nlat::classify_indefinite(
      rank, sig, parity == "even" ? nlat::Parity::Even : nlat::Parity::Odd);
  std::cout << "parity: " << nlat::to_string(d.parity) << "\n";
  std::cout << "normal form: " << d.normal_form.str() << "\n";
  std::cout << "invariants: "
            << nlat::to_string(nlat::invariants(nlat::standard_lattice(d.normal_form)))
            << "\n";
  return 0;
}

int cmd_action(const std::string& expr, const std::string& twist) {
  nlat::FormExpr form = nlat::parse_form(expr);
  nlat::Lattice l = nlat::standard_lattice(form);
  std::vector<std::vector<nlat::Int>> classes = parse_classes(twist);
  nlat::Isometry f = nlat::multi_twist_operator(l, classes);

  std::cout << "lattice: " << form.str() << "  ["
            << nlat::to_string(nlat::invariants(l)) << "]\n";
  std::cout << "classes: " << classes.size() << "\n";
  std::cout << "matrix:\n" << f.matrix.str() << "\n";
  std::cout << "preserves spin structures: " << (f.preserves_spin ? "yes" : "no")
            << "\n";
  std::cout << "fixed sublattice rank: " << nlat::fixed_sublattice(f).rank()
            << "\n";
  nlat::EquivariantSig s = nlat::involution_signatures(f);
  std::cout << "equivariant signature: b_f+ = " << s.b_f_plus
            << ", b_f- = " << s.b_f_minus << ", sigma_f = " << s.sigma_f << "\n";
  return 0;
}

int cmd_obstruct(const std::string& path, bool as_paper, bool force_json) {
  std::ifstream in(path);
  if (!in) throw nlat::ScenarioError("cannot read scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  nlat::Scenario s = nlat::parse_scenario(buf.str());
  if (as_paper) s.as_paper = true;
  if (force_json) s.format = "json";
  nlat::ScenarioResult r = nlat::run_scenario(s);
  std::cout << (s.format == "json" ? nlat::scenario_json(s, r)
                                   : nlat::scenario_text(s, r));
  return 0;
}

int cmd_degtyarev(bool json) {
  nlat::EigenlatticeCertificate c = nlat::build_certificate();
  nlat::CertificateReport r = nlat::verify_certificate(c);
  std::cout << (json ? nlat::certificate_json(c, r) : nlat::certificate_text(c, r));
  return r.all_pass() ? 0 : 1;
}

int cmd_suite(bool json) {
  std::vector<nlat::SuiteRow> rows = nlat::paper_suite();
  std::cout << (json ? nlat::suite_json(rows) : nlat::suite_text(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral lattices, 4-manifold records and realization obstructions"};
  app.require_subcommand(1);

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice computations");
  lattice_cmd->require_subcommand(1);
  auto* info_cmd = lattice_cmd->add_subcommand(
      "info", "invariants and discriminant group of a form expression");
  std::string info_expr;
  info_cmd->add_option("expr", info_expr, "form expression, e.g. \"2*E8 + 3*U\"")
      ->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "normal form of an indefinite unimodular class");
  long long cl_rank = 0;
  long long cl_sig = 0;
  std::string cl_parity;
  classify_cmd->add_option("--rank", cl_rank, "rank")->required();
  classify_cmd->add_option("--sig", cl_sig, "signature")->required();
  classify_cmd->add_option("--parity", cl_parity, "even or odd")
      ->required()
      ->check(CLI::IsMember({"even", "odd"}));

  auto* action_cmd =
      app.add_subcommand("action", "homological action of a multi-twist");
  std::string act_lattice;
  std::string act_twist;
  action_cmd->add_option("--lattice", act_lattice, "form expression")->required();
  action_cmd
      ->add_option("--twist", act_twist,
                   "classes: coordinates comma-separated, classes semicolon-separated")
      ->required();

  auto* obstruct_cmd = app.add_subcommand("obstruct", "run a scenario file");
  std::string scenario_path;
  bool as_paper = false;
  bool obstruct_json = false;
  obstruct_cmd->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  obstruct_cmd->add_flag("--as-paper", as_paper,
                         "waive failed non-boundary hypotheses, recording each waiver");
  obstruct_cmd->add_flag("--json", obstruct_json, "force JSON output");

  auto* deg_cmd = app.add_subcommand(
      "degtyarev", "build and verify the eigenlattice certificate");
  bool deg_json = false;
  deg_cmd->add_flag("--json", deg_json, "JSON output");

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the worked example table");
  bool suite_json = false;
  suite_cmd->add_flag("--json", suite_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(lattice_cmd)) return cmd_lattice_info(info_expr);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(cl_rank, cl_sig, cl_parity);
    if (app.got_subcommand(action_cmd)) return cmd_action(act_lattice, act_twist);
    if (app.got_subcommand(obstruct_cmd))
      return cmd_obstruct(scenario_path, as_paper, obstruct_json);
    if (app.got_subcommand(deg_cmd)) return cmd_degtyarev(deg_json);
    if (app.got_subcommand(suite_cmd)) return cmd_suite(suite_json);
  } catch (const nlat::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
