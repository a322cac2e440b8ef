#ifndef SEMICOV_CLI_HPP
#define SEMICOV_CLI_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semicov/coe.hpp"
#include "semicov/export.hpp"
#include "semicov/family.hpp"
#include "semicov/numerical_semigroup.hpp"
#include "semicov/oracle.hpp"
#include "semicov/theta.hpp"

namespace semicov::cli {

namespace detail {

inline void require_format(const std::string& format,
                           std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string msg = "--format must be one of:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw CLI::ValidationError("format", msg);
}

inline void print_semigroup(const NumericalSemigroup& s,
                            const std::string& format, std::ostream& out) {
  if (format == "msg")
    out << join(s.msg()) << "\n";
  else
    out << to_json(s).dump() << "\n";
}

inline void print_tree(const FamilyTree& tree, const std::string& format,
                       std::ostream& out) {
  if (format == "count")
    out << tree.nodes.size() << "\n";
  else if (format == "dot")
    to_dot(tree, out);
  else
    out << to_json(tree).dump() << "\n";
}

inline bool sets_equal(std::vector<NumericalSemigroup> a,
                       std::vector<NumericalSemigroup> b) {
  std::sort(a.begin(), a.end(), member_less);
  std::sort(b.begin(), b.end(), member_less);
  return a == b;
}

inline int oracle_verify(int max_genus, int max_frobenius, std::ostream& out) {
  int failures = 0;
  int theta_checked = 0;
  for (const auto& delta : oracle::universe_up_to_genus(max_genus)) {
    ++theta_checked;
    if (!sets_equal(enumerate_theta(delta).members(),
                    oracle::brute_oversemigroups(delta))) {
      out << "MISMATCH theta base " << delta.describe() << "\n";
      ++failures;
    }
  }
  out << "theta: " << theta_checked << " base semigroups (genus <= "
      << max_genus << "), "
      << (failures ? "mismatches found" : "all enumerations match the oracle")
      << "\n";
  int coe_checked = 0;
  for (int f = 1; f <= max_frobenius; f += 2) {
    ++coe_checked;
    if (!sets_equal(enumerate_coe(f).members(), oracle::brute_coe(f))) {
      out << "MISMATCH coe F=" << f << "\n";
      ++failures;
    }
  }
  out << "coe: " << coe_checked << " Frobenius values (odd F <= "
      << max_frobenius << "), "
      << (failures ? "mismatches found" : "all enumerations match the oracle")
      << "\n";
  return failures ? 1 : 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests.  Results go to out,
// diagnostics to err; returns 0 on success, 1 on a domain error, 2 on a
// usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"numerical semigroup invariants and semi-covariety "
               "enumeration"};
  app.name("semicov");
  app.require_subcommand(1);

  std::vector<int> gens;
  std::vector<int> set_values;
  std::vector<int> member_gens;
  int frobenius = -1;
  std::string format = "json";
  std::size_t max_members = 100000;
  int max_genus = 8;
  int max_frobenius = 13;
  int exit_code = 0;

  auto add_gens = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--gens", gens,
                                "comma-separated generators of a semigroup")
                    ->delimiter(',');
    if (required) opt->required();
    return opt;
  };
  auto add_set = [&](CLI::App* cmd) {
    return cmd->add_option("--set", set_values, "comma-separated set elements")
        ->delimiter(',');
  };
  auto add_member = [&](CLI::App* cmd) {
    return cmd
        ->add_option("--member", member_gens,
                     "generators of the family member to inspect")
        ->delimiter(',')
        ->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    return cmd->add_option("--format", format,
                           "output format (json|dot|count|msg)");
  };
  auto add_limit = [&](CLI::App* cmd) {
    return cmd
        ->add_option("--max-members", max_members,
                     "abort enumeration beyond this many members")
        ->envname("SEMICOV_MAX_MEMBERS");
  };
  auto add_frobenius = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--frobenius", frobenius,
                                "Frobenius number of the coe family");
    if (required) opt->required();
    return opt;
  };

  // ns
  auto* ns = app.add_subcommand("ns", "single-semigroup invariants");
  ns->require_subcommand(1);
  auto* ns_info = ns->add_subcommand("info", "invariants of <gens>");
  add_gens(ns_info);
  add_format(ns_info);
  ns_info->callback([&] {
    detail::require_format(format, {"json", "msg"});
    detail::print_semigroup(NumericalSemigroup::from_generators(gens), format,
                            out);
  });

  // theta
  auto* theta = app.add_subcommand(
      "theta", "the family of semigroups containing a fixed one");
  theta->require_subcommand(1);

  auto* theta_enum = theta->add_subcommand("enumerate", "list the family");
  add_gens(theta_enum);
  add_format(theta_enum);
  add_limit(theta_enum);
  theta_enum->callback([&] {
    detail::require_format(format, {"json", "dot", "count"});
    detail::print_tree(
        enumerate_theta(NumericalSemigroup::from_generators(gens),
                        max_members),
        format, out);
  });

  auto* theta_close =
      theta->add_subcommand("closure", "least member containing --set");
  add_gens(theta_close);
  add_set(theta_close);
  add_format(theta_close);
  theta_close->callback([&] {
    detail::require_format(format, {"json", "msg"});
    detail::print_semigroup(
        theta_closure(NumericalSemigroup::from_generators(gens), set_values),
        format, out);
  });

  auto* theta_msg_cmd = theta->add_subcommand(
      "msg", "minimal family generators of a member");
  add_gens(theta_msg_cmd);
  add_member(theta_msg_cmd);
  add_format(theta_msg_cmd);
  theta_msg_cmd->callback([&] {
    detail::require_format(format, {"json", "msg"});
    const auto result =
        theta_msg(NumericalSemigroup::from_generators(gens),
                  NumericalSemigroup::from_generators(member_gens));
    if (format == "msg")
      out << join(result) << "\n";
    else
      out << json(result).dump() << "\n";
  });

  auto* theta_rank1_cmd =
      theta->add_subcommand("rank1", "members generated by a single gap");
  add_gens(theta_rank1_cmd);
  add_format(theta_rank1_cmd);
  theta_rank1_cmd->callback([&] {
    detail::require_format(format, {"json", "count"});
    const auto pairs =
        theta_rank1(NumericalSemigroup::from_generators(gens));
    if (format == "count") {
      out << pairs.size() << "\n";
      return;
    }
    json items = json::array();
    for (const auto& [x, sg] : pairs)
      items.push_back(json{{"x", x}, {"semigroup", to_json(sg)}});
    out << json{{"count", pairs.size()}, {"items", std::move(items)}}.dump()
        << "\n";
  });

  // coe
  auto* coe = app.add_subcommand(
      "coe", "coe-semigroups with a fixed Frobenius number");
  coe->require_subcommand(1);

  auto* coe_enum = coe->add_subcommand("enumerate", "list the family");
  add_frobenius(coe_enum);
  add_format(coe_enum);
  add_limit(coe_enum);
  coe_enum->callback([&] {
    detail::require_format(format, {"json", "dot", "count"});
    detail::print_tree(enumerate_coe(frobenius, max_members), format, out);
  });

  auto* coe_close =
      coe->add_subcommand("closure", "least member containing --set");
  add_frobenius(coe_close);
  add_set(coe_close);
  add_format(coe_close);
  coe_close->callback([&] {
    detail::require_format(format, {"json", "msg"});
    detail::print_semigroup(coe_closure(frobenius, set_values), format, out);
  });

  auto* coe_msg_cmd =
      coe->add_subcommand("msg", "minimal family generators of a member");
  add_frobenius(coe_msg_cmd);
  add_member(coe_msg_cmd);
  add_format(coe_msg_cmd);
  coe_msg_cmd->callback([&] {
    detail::require_format(format, {"json", "msg"});
    const auto result = coe_msg(
        frobenius, NumericalSemigroup::from_generators(member_gens));
    if (format == "msg")
      out << join(result) << "\n";
    else
      out << json(result).dump() << "\n";
  });

  auto* coe_rank1_cmd =
      coe->add_subcommand("rank1", "members generated by a single element");
  add_frobenius(coe_rank1_cmd);
  add_format(coe_rank1_cmd);
  coe_rank1_cmd->callback([&] {
    detail::require_format(format, {"json", "count"});
    const auto members = coe_rank1(frobenius);
    if (format == "count") {
      out << members.size() << "\n";
      return;
    }
    json list = json::array();
    for (const auto& sg : members) list.push_back(to_json(sg));
    out << json{{"count", members.size()}, {"members", std::move(list)}}.dump()
        << "\n";
  });

  auto* coe_check =
      coe->add_subcommand("check", "is <gens> a coe-semigroup?");
  add_gens(coe_check);
  coe_check->callback([&] {
    out << (is_coe(NumericalSemigroup::from_generators(gens)) ? "true"
                                                              : "false")
        << "\n";
  });

  // tree: DOT export for either family
  auto* tree_cmd = app.add_subcommand("tree", "DOT export of a family tree");
  auto* tree_gens = add_gens(tree_cmd, false);
  auto* tree_f = add_frobenius(tree_cmd, false);
  add_limit(tree_cmd);
  tree_gens->excludes(tree_f);
  tree_cmd->callback([&] {
    if (!gens.empty())
      to_dot(enumerate_theta(NumericalSemigroup::from_generators(gens),
                             max_members),
             out);
    else if (frobenius >= 0)
      to_dot(enumerate_coe(frobenius, max_members), out);
    else
      throw CLI::ValidationError("tree", "pass --gens or --frobenius");
  });

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force verification suites");
  oracle_cmd->require_subcommand(1);
  auto* verify = oracle_cmd->add_subcommand(
      "verify", "compare fast enumeration against exhaustive search");
  verify->add_option("--max-genus", max_genus,
                     "check theta bases up to this genus");
  verify->add_option("--max-frobenius", max_frobenius,
                     "check coe families up to this Frobenius number");
  verify->callback(
      [&] { exit_code = detail::oracle_verify(max_genus, max_frobenius, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error[" << e.code_str() << "]: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace semicov::cli

#endif  // SEMICOV_CLI_HPP
