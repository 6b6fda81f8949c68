// bcalc: command-line front end for the B calculus.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bcalc/catalog.hpp"
#include "bcalc/error.hpp"
#include "bcalc/lambda_pair.hpp"
#include "bcalc/parse.hpp"
#include "bcalc/print.hpp"
#include "bcalc/reduction.hpp"
#include "bcalc/sequent.hpp"
#include "bcalc/typing.hpp"

namespace {

enum Exit { kOk = 0, kTypeError = 1, kSyntaxError = 2, kBudget = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TypeArgs {
  std::string a = "A", b = "B", c = "C";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--A", a, "type argument A")->capture_default_str();
    cmd->add_option("--B", b, "type argument B")->capture_default_str();
    cmd->add_option("--C", c, "type argument C")->capture_default_str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  using namespace bcalc;

  CLI::App app{"Affine lambda calculus with pairs and break"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "input file, or - for stdin")->required(); };

  auto* check_cmd = app.add_subcommand("check", "print the type of a term");
  add_file(check_cmd);

  auto* infer_cmd = app.add_subcommand("infer", "print the principal type of an unannotated term");
  add_file(infer_cmd);

  bool trace = false, blconv = false;
  std::size_t max_steps = 100000;
  std::string strategy = "first";
  auto* norm_cmd = app.add_subcommand("normalize", "reduce a term to normal form");
  add_file(norm_cmd);
  norm_cmd->add_flag("--trace", trace, "print every step");
  norm_cmd->add_option("--max-steps", max_steps, "step budget")->capture_default_str();
  norm_cmd->add_flag("--experimental-blconv", blconv, "enable the b-l-conv rule");
  norm_cmd->add_option("--strategy", strategy, "redex choice")
      ->check(CLI::IsMember({"first", "last"}))
      ->capture_default_str();

  auto* translate_cmd = app.add_subcommand("translate", "print the lambda-pair image of a term");
  add_file(translate_cmd);

  std::string axiom;
  TypeArgs axiom_types;
  auto* axioms_cmd = app.add_subcommand("axioms", "print the inhabitant of an axiom");
  axioms_cmd->add_option("id", axiom, "B1, B2, B3, B4, B5a or B5b")->required();
  axiom_types.add_to(axioms_cmd);

  std::string entry;
  TypeArgs entry_types;
  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog term; lists names without an argument");
  catalog_cmd->add_option("name", entry, "catalog entry");
  entry_types.add_to(catalog_cmd);

  auto* sequent_cmd = app.add_subcommand("sequent", "sequent calculus tools");
  sequent_cmd->require_subcommand(1);
  auto* seq_check = sequent_cmd->add_subcommand("check", "validate a derivation and print its end sequent");
  add_file(seq_check);
  auto* seq_cut = sequent_cmd->add_subcommand("cutelim", "print a cut-free derivation of the same sequent");
  add_file(seq_cut);
  auto* seq_from = sequent_cmd->add_subcommand("fromterm", "print the derivation of a term");
  add_file(seq_from);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) {
      std::cout << print_type(check(parse_term(read_input(file)))) << "\n";
    } else if (*infer_cmd) {
      TypeScheme s = infer_principal(parse_untyped_term(read_input(file)));
      std::cout << print_scheme(s) << "\n";
      for (auto& [name, t] : s.context) std::cout << name << " : " << print_type(t) << "\n";
    } else if (*norm_cmd) {
      Term t = parse_term(read_input(file));
      check(t);
      auto result = normalize(t, max_steps, strategy == "last" ? Strategy::Last : Strategy::First,
                              ReductionOptions{.experimental_blconv = blconv});
      if (trace) write_trace(std::cout, result.trace);
      std::cout << print_term(result.normal_form) << "\n";
    } else if (*translate_cmd) {
      Term t = parse_term(read_input(file));
      check(t);
      std::cout << print_lterm(star_translate(t)) << "\n";
    } else if (*axioms_cmd) {
      auto id = parse_axiom_id(axiom);
      if (!id) throw UsageError("unknown axiom " + axiom);
      std::cout << print_term(axiom_term(*id, parse_type(axiom_types.a), parse_type(axiom_types.b),
                                         parse_type(axiom_types.c)))
                << "\n";
    } else if (*catalog_cmd) {
      if (entry.empty()) {
        for (auto& n : catalog_names()) std::cout << n << "\n";
        for (auto id : all_axioms()) std::cout << axiom_name(id) << "\n";
      } else {
        auto t = catalog_term(entry, parse_type(entry_types.a), parse_type(entry_types.b), parse_type(entry_types.c));
        if (!t) throw UsageError("unknown catalog entry " + entry);
        std::cout << print_term(*t) << "\n";
      }
    } else if (*seq_check) {
      std::cout << print_sequent(check_derivation(parse_derivation(read_input(file)))) << "\n";
    } else if (*seq_cut) {
      std::cout << print_derivation(eliminate_cuts(parse_derivation(read_input(file)))) << "\n";
    } else if (*seq_from) {
      std::cout << print_derivation(nd_to_sequent(parse_term(read_input(file)))) << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kSyntaxError;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kTypeError;
  } catch (const InferenceError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kTypeError;
  } catch (const ReductionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ReductionError::Kind::StepBudgetExceeded ? kBudget : kTypeError;
  } catch (const DerivationError& e) {
    std::cerr << "derivation error: " << e.what() << "\n";
    return e.kind() == DerivationError::Kind::BudgetExceeded ? kBudget : kTypeError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTypeError;
  }
  return kOk;
}
