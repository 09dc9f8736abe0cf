#include "satake/cli.hpp"

#include "commands.hpp"
#include "satake/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace satake::cli {

namespace {

using Handler = std::function<Json(const Options&)>;

struct Leaf {
  CLI::App* app;
  Handler handler;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "Preset root datum (SL2, PGL2, GL2, SL3, PGL3, Sp4, SO5, G2, or AxB)");
  sub->add_option("--datum", o.datum_file, "Root datum JSON file; overrides --group")->check(CLI::ExistingFile);
  sub->add_flag("--table", o.table, "Human-readable table instead of JSON");
  sub->add_flag("--json", "JSON output (default)");
}

Json error_json(const std::string& msg, const std::string& kind) { return {{"error", msg}, {"kind", kind}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Combinatorics of the geometric Satake correspondence", "satake"};
  app.require_subcommand(1);
  std::vector<Leaf> leaves;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    add_common(sub, o);
    leaves.push_back({sub, std::move(h)});
    return sub;
  };
  auto mu = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--mu", o.mu, "Dominant coweight, comma separated");
    if (required) opt->required();
  };
  auto q_opt = [&](CLI::App* s) {
    s->add_option("--q", o.q, "Field size")->each([&](const std::string&) { o.has_q = true; });
  };

  {
    auto* s = leaf(&app, "rootdata", "Describe a root datum", cmd_rootdata);
    mu(s, false);
  }
  {
    auto* s = leaf(&app, "galleries", "Minimal gallery and combinatorial galleries of type mu", cmd_galleries);
    mu(s);
    s->add_option("--seed", o.seed, "Choice of minimal gallery");
    s->add_option("--limit", o.limit, "Maximal number of galleries listed per component");
    s->add_flag("--contributing-only", o.contributing_only, "Only galleries with nonempty cells");
  }
  {
    auto* s = leaf(&app, "mv-cells", "Cells of a semi-infinite orbit intersected with Gr^mu", cmd_mv_cells);
    mu(s);
    s->add_option("--nu", o.nu, "Weight; all weights when omitted");
    s->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    s->add_option("--seed", o.seed, "Choice of minimal gallery");
  }
  {
    auto* s = leaf(&app, "deodhar", "Deodhar cells of a Richardson intersection", cmd_deodhar);
    s->add_option("--word", o.word, "Reduced word of y, 1-based (e for the identity)")->required();
    s->add_option("--x", o.x, "Word of x, 1-based (e for the identity)")->required();
    s->add_option("--parabolic", o.parabolic, "Generators of the parabolic, 1-based");
    q_opt(s);
    s->add_flag("--oracle", o.oracle, "Also count points by flag enumeration (needs --q)");
  }
  CLI::App* hecke = app.add_subcommand("hecke", "Generic spherical Hecke algebra");
  hecke->require_subcommand(1);
  {
    auto* s = leaf(hecke, "mul", "Product T_mu T_lambda", cmd_hecke_mul);
    mu(s);
    s->add_option("--lambda", o.lambda, "Second coweight")->required();
    s = leaf(hecke, "basis", "Expansion of f_mu in the T basis", cmd_hecke_basis);
    mu(s);
    s->add_flag("--oracle", o.oracle, "Compare with lattice-count interpolation");
  }
  CLI::App* satake = app.add_subcommand("satake", "Satake transform");
  satake->require_subcommand(1);
  {
    auto* s = leaf(satake, "diagram", "Check the Satake diagram on generators and products", cmd_satake_diagram);
    q_opt(s);
    s->add_option("--max-height", o.max_height, "Bound on <2rho, mu>");
    s = leaf(satake, "transform", "Satake transform of T_mu", cmd_satake_transform);
    mu(s);
    q_opt(s);
  }
  CLI::App* vinberg = app.add_subcommand("vinberg", "Graded representations and the Vinberg monoid");
  vinberg->require_subcommand(1);
  {
    auto* s = leaf(vinberg, "check", "Does IC_mu with a Tate twist extend to the Vinberg monoid", cmd_vinberg_check);
    mu(s);
    s->add_option("--twist", o.twist, "Tate twist; negative values are effective");
    s = leaf(vinberg, "psi", "Image of T_mu in the graded Grothendieck ring", cmd_vinberg_psi);
    mu(s);
  }
  CLI::App* oracle = app.add_subcommand("oracle", "Finite-field point counts");
  oracle->require_subcommand(1);
  {
    auto* s = leaf(oracle, "conv", "Convolution counts N_{mu,lambda}^nu(q)", cmd_oracle_conv);
    mu(s);
    s->add_option("--lambda", o.lambda, "Second coweight")->required();
    s->add_option("--nu", o.nu, "Target; all targets when omitted");
    s->add_option("--seed", o.seed, "Base point choice");
    q_opt(s);
    s = leaf(oracle, "schubert", "|Gr^mu(F_q)|", cmd_oracle_schubert);
    mu(s);
    q_opt(s);
    s = leaf(oracle, "semiinfinite", "|S_nu cap Gr^mu (F_q)|", cmd_oracle_semiinfinite);
    mu(s);
    s->add_option("--nu", o.nu, "Weight")->required();
    s->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    q_opt(s);
    s = leaf(oracle, "flag", "Richardson point count by flag enumeration", cmd_oracle_flag);
    s->add_option("--y", o.y, "Word of y, 1-based")->required();
    s->add_option("--x", o.x, "Word of x, 1-based")->required();
    s->add_option("--parabolic", o.parabolic, "Generators of the parabolic, 1-based");
    q_opt(s);
  }
  CLI::App* report = app.add_subcommand("report", "Reproduce worked examples");
  report->require_subcommand(1);
  {
    auto* s = leaf(report, "pgl2", "Verify the PGL2 example", cmd_report_pgl2);
    s->add_option("--max-mu", o.max_height, "Largest mu");
    s->add_option("--q-list", o.q_list, "Field sizes for oracle checks");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json(e.what(), "usage").dump(2) << '\n';
    return kExitInvalid;
  }

  const auto it = std::find_if(leaves.begin(), leaves.end(), [](const Leaf& l) { return l.app->parsed(); });
  if (it == leaves.end()) {
    out << error_json("no command given", "usage").dump(2) << '\n';
    return kExitInvalid;
  }
  try {
    const Json result = it->handler(o);
    if (o.table)
      print_table(result, out);
    else
      out << result.dump(2) << '\n';
    if (result.contains("ok") && result["ok"].is_boolean() && !result["ok"].get<bool>()) return kExitInvalid;
    return kExitOk;
  } catch (const ValidationError& e) {
    out << error_json(e.what(), "validation").dump(2) << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    out << error_json(e.what(), "budget").dump(2) << '\n';
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    out << error_json(e.what(), "validation").dump(2) << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    out << error_json(e.what(), "validation").dump(2) << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    out << error_json(e.what(), "internal").dump(2) << '\n';
    return kExitInternal;
  }
}

}  // namespace satake::cli
