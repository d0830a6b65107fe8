// eprop: command-line front end for the surjection prop, its partition
// quotient, and the Ext-dimension calculator.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eprop/ext_karoubi.hpp"
#include "eprop/group_algebra.hpp"
#include "eprop/partition_cat.hpp"
#include "eprop/prop_scom.hpp"
#include "eprop/verify.hpp"

namespace {

using nlohmann::json;
using namespace eprop;

struct CommonFlags {
  std::string format = "text";
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool allow_csv = false) {
  const std::string choices = allow_csv ? "text|json|csv" : "text|json";
  cmd->add_option("--format", flags.format, "Output format (" + choices + ")")
      ->check(allow_csv ? CLI::IsMember({"text", "json", "csv"})
                        : CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", flags.jobs, "Worker thread count")->check(CLI::PositiveNumber);
}

const char* basis_name(BasisTag tag) { return tag == BasisTag::nu ? "nu" : "mu"; }

void print_e(const EMorphism& x, const CommonFlags& flags) {
  if (flags.format == "json") {
    json terms = json::array();
    for (const auto& [k, c] : x.value().terms())
      terms.push_back({{"key", k.str()}, {"coeff", format_rational(c)}});
    json out = {{"m", x.domain()}, {"n", x.codomain()}, {"degree", x.degree()}, {"terms", terms}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "E(" << x.domain() << "," << x.codomain() << "), degree " << x.degree()
            << ", basis " << basis_name(x.tag()) << "\n";
  if (x.is_zero()) std::cout << "  0\n";
  for (const auto& [k, c] : x.value().terms())
    std::cout << "  " << format_rational(c) << " " << basis_name(x.tag()) << "[" << k.str()
              << "]\n";
}

void print_lambda(const LambdaMorphism& x, const CommonFlags& flags) {
  if (flags.format == "json") {
    json terms = json::array();
    for (const auto& [k, c] : x.value().terms())
      terms.push_back({{"key", k.str()}, {"coeff", format_rational(c)}});
    json out = {{"m", x.domain()}, {"n", x.codomain()}, {"degree", x.degree()}, {"terms", terms}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "E_Lambda(" << x.domain() << "," << x.codomain() << "), degree " << x.degree()
            << "\n";
  if (x.is_zero()) std::cout << "  0\n";
  for (const auto& [k, c] : x.value().terms())
    std::cout << "  " << format_rational(c) << " rho[" << k.str() << "]\n";
}

void print_group(const GroupAlgebraElement& a, const CommonFlags& flags) {
  if (flags.format == "json") {
    json terms = json::array();
    for (const auto& [k, c] : a.value().terms())
      terms.push_back({{"key", k.str()}, {"coeff", format_rational(c)}});
    json out = {{"n", a.arity()}, {"terms", terms}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "K[S_" << a.arity() << "]\n";
  for (const auto& [k, c] : a.value().terms())
    std::cout << "  " << format_rational(c) << " [" << k.str() << "]\n";
}

BasisTag parse_basis(const std::string& name) {
  if (name == "nu") return BasisTag::nu;
  if (name == "mu") return BasisTag::mu;
  throw CLI::ValidationError("--basis must be nu or mu");
}

Permutation parse_perm_or_id(const std::string& text, int size) {
  if (text == "id") return Permutation::identity(size);
  return Permutation::parse(text);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in the surjection prop and its partition quotient"};
  app.require_subcommand(1);

  // compose
  auto compose_flags = std::make_shared<CommonFlags>();
  auto compose_basis = std::make_shared<std::string>("nu");
  auto compose_f = std::make_shared<std::string>();
  auto compose_h = std::make_shared<std::string>();
  auto* cmd_compose = app.add_subcommand("compose", "Compose two basis morphisms f <> h");
  cmd_compose->set_help_flag("--help", "Print this help message and exit");
  cmd_compose->add_option("--basis", *compose_basis, "Generator system (nu|mu)")
      ->check(CLI::IsMember({"nu", "mu"}));
  cmd_compose->add_option("--f", *compose_f, "Outer surjection, e.g. 1,2,2")->required();
  cmd_compose->add_option("--h", *compose_h, "Inner surjection, e.g. 1,1,2,3")->required();
  add_common(cmd_compose, *compose_flags);
  cmd_compose->callback([=] {
    const BasisTag tag = parse_basis(*compose_basis);
    const auto x = EMorphism::basis(tag, Surjection::parse(*compose_f));
    const auto y = EMorphism::basis(tag, Surjection::parse(*compose_h));
    print_e(tag == BasisTag::nu ? nu_compose(x, y) : mu_compose(x, y), *compose_flags);
  });

  // tensor
  auto tensor_flags = std::make_shared<CommonFlags>();
  auto tensor_basis = std::make_shared<std::string>("nu");
  auto tensor_f = std::make_shared<std::string>();
  auto tensor_g = std::make_shared<std::string>();
  auto* cmd_tensor = app.add_subcommand("tensor", "Tensor two basis morphisms f (x) g");
  cmd_tensor->add_option("--basis", *tensor_basis, "Generator system (nu|mu)")
      ->check(CLI::IsMember({"nu", "mu"}));
  cmd_tensor->add_option("--f", *tensor_f, "Left surjection")->required();
  cmd_tensor->add_option("--g", *tensor_g, "Right surjection")->required();
  add_common(cmd_tensor, *tensor_flags);
  cmd_tensor->callback([=] {
    const BasisTag tag = parse_basis(*tensor_basis);
    const auto x = EMorphism::basis(tag, Surjection::parse(*tensor_f));
    const auto y = EMorphism::basis(tag, Surjection::parse(*tensor_g));
    print_e(tag == BasisTag::nu ? nu_tensor(x, y) : mu_tensor(x, y), *tensor_flags);
  });

  // act
  auto act_flags = std::make_shared<CommonFlags>();
  auto act_basis = std::make_shared<std::string>("nu");
  auto act_f = std::make_shared<std::string>();
  auto act_left = std::make_shared<std::string>("id");
  auto act_right = std::make_shared<std::string>("id");
  auto* cmd_act = app.add_subcommand("act", "Two-sided symmetric group action sigma.f.tau");
  cmd_act->add_option("--basis", *act_basis, "Generator system (nu|mu)")
      ->check(CLI::IsMember({"nu", "mu"}));
  cmd_act->add_option("--f", *act_f, "Surjection")->required();
  cmd_act->add_option("--left", *act_left, "Permutation of the codomain, or id");
  cmd_act->add_option("--right", *act_right, "Permutation of the domain, or id");
  add_common(cmd_act, *act_flags);
  cmd_act->callback([=] {
    const BasisTag tag = parse_basis(*act_basis);
    const Surjection f = Surjection::parse(*act_f);
    const Permutation s = parse_perm_or_id(*act_left, f.codomain_size());
    const Permutation t = parse_perm_or_id(*act_right, f.domain_size());
    const auto x = EMorphism::basis(tag, f);
    print_e(tag == BasisTag::nu ? nu_act(s, x, t) : mu_right_act(mu_left_act(s, x), t),
            *act_flags);
  });

  // sandwich
  auto sw_flags = std::make_shared<CommonFlags>();
  auto sw_left = std::make_shared<std::string>();
  auto sw_right = std::make_shared<std::string>();
  auto sw_f = std::make_shared<std::string>();
  auto* cmd_sw = app.add_subcommand("sandwich", "e_mu . nu_f . e_lambda with Young idempotents");
  cmd_sw->add_option("--left-idem", *sw_left, "Partition of the codomain arity")->required();
  cmd_sw->add_option("--right-idem", *sw_right, "Partition of the domain arity")->required();
  cmd_sw->add_option("--f", *sw_f, "Surjection")->required();
  add_common(cmd_sw, *sw_flags);
  cmd_sw->callback([=] {
    const Surjection f = Surjection::parse(*sw_f);
    const Partition mu = Partition::parse(*sw_left);
    const Partition lambda = Partition::parse(*sw_right);
    if (mu.sum() != f.codomain_size() || lambda.sum() != f.domain_size())
      throw CLI::ValidationError("idempotent partitions must match the arities of --f");
    print_e(sandwich(young_idempotent(mu), EMorphism::basis(BasisTag::nu, f),
                     young_idempotent(lambda)),
            *sw_flags);
  });

  // idempotent
  auto idem_flags = std::make_shared<CommonFlags>();
  auto idem_lambda = std::make_shared<std::string>();
  auto* cmd_idem = app.add_subcommand("idempotent", "Young idempotent e_lambda in K[S_n]");
  cmd_idem->add_option("--lambda", *idem_lambda, "Partition, e.g. 2+1")->required();
  add_common(cmd_idem, *idem_flags);
  cmd_idem->callback(
      [=] { print_group(young_idempotent(Partition::parse(*idem_lambda)), *idem_flags); });

  // lambda-compose
  auto lc_flags = std::make_shared<CommonFlags>();
  auto lc_l = std::make_shared<std::string>();
  auto lc_mu = std::make_shared<std::string>();
  auto* cmd_lc = app.add_subcommand("lambda-compose", "rho_l * rho_mu in the partition quotient");
  cmd_lc->add_option("--l", *lc_l, "Outer partition")->required();
  cmd_lc->add_option("--mu", *lc_mu, "Inner partition")->required();
  add_common(cmd_lc, *lc_flags);
  cmd_lc->callback([=] {
    const auto x = LambdaMorphism::basis(Partition::parse(*lc_l));
    const auto y = LambdaMorphism::basis(Partition::parse(*lc_mu));
    print_lambda(star_compose(x, y, lc_flags->jobs), *lc_flags);
  });

  // lambda-tensor
  auto lt_flags = std::make_shared<CommonFlags>();
  auto lt_l = std::make_shared<std::string>();
  auto lt_mu = std::make_shared<std::string>();
  auto* cmd_lt = app.add_subcommand("lambda-tensor", "rho_l (.) rho_mu monoidal product");
  cmd_lt->add_option("--l", *lt_l, "Left partition")->required();
  cmd_lt->add_option("--mu", *lt_mu, "Right partition")->required();
  add_common(cmd_lt, *lt_flags);
  cmd_lt->callback([=] {
    const auto x = LambdaMorphism::basis(Partition::parse(*lt_l));
    const auto y = LambdaMorphism::basis(Partition::parse(*lt_mu));
    print_lambda(odot_tensor(x, y), *lt_flags);
  });

  // pmn
  auto pmn_flags = std::make_shared<CommonFlags>();
  auto pmn_m = std::make_shared<int>(0);
  auto pmn_n = std::make_shared<int>(0);
  auto* cmd_pmn = app.add_subcommand("pmn", "The element P_{m,n}");
  cmd_pmn->add_option("--m", *pmn_m, "Domain arity")->required()->check(CLI::PositiveNumber);
  cmd_pmn->add_option("--n", *pmn_n, "Codomain arity")->required()->check(CLI::PositiveNumber);
  add_common(cmd_pmn, *pmn_flags);
  cmd_pmn->callback([=] {
    if (*pmn_n > *pmn_m) throw CLI::ValidationError("pmn requires n <= m");
    print_lambda(p_element(*pmn_m, *pmn_n), *pmn_flags);
  });

  // ext-dim
  auto ed_flags = std::make_shared<CommonFlags>();
  auto ed_mu = std::make_shared<std::string>();
  auto ed_lambda = std::make_shared<std::string>();
  auto* cmd_ed = app.add_subcommand("ext-dim", "dim Ext^{m-n}(S_mu, S_lambda)");
  cmd_ed->add_option("--mu", *ed_mu, "Partition of n")->required();
  cmd_ed->add_option("--lambda", *ed_lambda, "Partition of m")->required();
  add_common(cmd_ed, *ed_flags);
  cmd_ed->callback([=] {
    const ExtQuery q{Partition::parse(*ed_mu), Partition::parse(*ed_lambda)};
    const auto r = ext_dim(q, ExtBounds::from_env(), ed_flags->jobs);
    if (ed_flags->format == "json") {
      json out = {{"mu", q.mu.str()},
                  {"lambda", q.lambda.str()},
                  {"degree", r.degree},
                  {"dimension", r.dimension}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "dim Ext^" << r.degree << "(S_(" << q.mu.str() << "), S_(" << q.lambda.str()
                << ")) = " << r.dimension << "\n";
    }
  });

  // ext-table
  auto et_flags = std::make_shared<CommonFlags>();
  auto et_family = std::make_shared<std::string>("simple-simple");
  auto et_max_m = std::make_shared<int>(4);
  auto et_max_n = std::make_shared<int>(4);
  auto* cmd_et = app.add_subcommand("ext-table", "Table of Ext dimensions");
  cmd_et->add_option("--family", *et_family, "simple-simple|exterior|tensor-symmetric")
      ->check(CLI::IsMember({"simple-simple", "exterior", "tensor-symmetric"}));
  cmd_et->add_option("--max-m", *et_max_m, "Largest domain arity")->check(CLI::PositiveNumber);
  cmd_et->add_option("--max-n", *et_max_n, "Largest codomain arity")->check(CLI::PositiveNumber);
  add_common(cmd_et, *et_flags, /*allow_csv=*/true);
  cmd_et->callback([=] {
    ExtFamily family = ExtFamily::simple_simple;
    if (*et_family == "exterior") family = ExtFamily::exterior;
    if (*et_family == "tensor-symmetric") family = ExtFamily::tensor_symmetric;
    const auto table =
        ext_table(*et_max_m, *et_max_n, family, ExtBounds::from_env(), et_flags->jobs);
    if (et_flags->format == "json") {
      json out = json::array();
      for (const auto& row : table)
        out.push_back({{"mu", row.mu},
                       {"lambda", row.lambda},
                       {"m", row.m},
                       {"n", row.n},
                       {"degree", row.degree},
                       {"dimension", row.dimension}});
      std::cout << out.dump() << "\n";
    } else if (et_flags->format == "csv") {
      std::cout << "mu,lambda,m,n,degree,dimension\n";
      for (const auto& row : table)
        std::cout << row.mu << "," << row.lambda << "," << row.m << "," << row.n << ","
                  << row.degree << "," << row.dimension << "\n";
    } else {
      for (const auto& row : table)
        std::cout << "dim Ext^" << row.degree << "(" << row.mu << ", " << row.lambda
                  << ") = " << row.dimension << "\n";
    }
  });

  // verify
  auto vf_flags = std::make_shared<CommonFlags>();
  auto vf_suite = std::make_shared<std::string>();
  auto vf_max = std::make_shared<int>(0);
  auto vf_failed = std::make_shared<bool>(false);
  auto* cmd_vf = app.add_subcommand("verify", "Run a verification suite");
  cmd_vf->add_option("--suite", *vf_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  cmd_vf->add_option("--max", *vf_max, "Size bound override (0 = suite default)");
  add_common(cmd_vf, *vf_flags);
  cmd_vf->callback([=] {
    const auto result = run_verify_suite(*vf_suite, *vf_max, vf_flags->jobs);
    if (vf_flags->format == "json") {
      json checks = json::array();
      for (const auto& c : result.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
      json out = {{"suite", result.suite}, {"passed", result.passed()}, {"checks", checks}};
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& c : result.checks)
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << "\n";
      std::cout << "suite " << result.suite << ": " << (result.passed() ? "PASSED" : "FAILED")
                << "\n";
    }
    *vf_failed = !result.passed();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return *vf_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
